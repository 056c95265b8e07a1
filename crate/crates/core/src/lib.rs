//! Redactable signatures over type-3 pairings for verifiable credentials.
//!
//! An issuer signs an ordered list of credential attributes once. The holder
//! can later derive, using nothing but the issuer's public key, a valid
//! signature on any non-empty subset of those attributes; everything else is
//! redacted. A verifier checks the derived signature with two pairing
//! equations. The signature stays a fixed four elements regardless of how
//! many attributes the credential has or how many were kept, while the
//! public key grows linearly with the attribute count.
//!
//! The crate is organized around a [`group::PairingBackend`] abstraction:
//!
//! * [`Bls12Backend`] — the production backend on BLS12-381 with compressed
//!   point encodings.
//! * [`MockBackend`] — an exponent-tracking group over a small prime field.
//!   Every element carries its discrete log, so protocol equations can be
//!   checked against plain integer arithmetic in tests.
//!
//! On top of the backend sit the signature schemes ([`ps`] for the
//! multi-message base scheme, [`rss`] for the redactable scheme), a
//! credential codec bridging W3C-style credential documents to scalar
//! vectors ([`credential`]), and a measurement harness ([`bench`]).

pub mod bench;
pub mod credential;
pub mod error;
pub mod group;
pub mod ps;
pub mod rss;
mod wire;

pub use error::Error;
pub use group::bls::Bls12Backend;
pub use group::mock::MockBackend;
pub use group::{BackendDescriptor, GroupElement, PairingBackend, Scalar, TargetElement};
pub use wire::peek_descriptor;

/// RSS key and signature types on the production BLS12-381 backend.
pub type BlsRssSecretKey = rss::RssSecretKey<Bls12Backend>;
pub type BlsRssPublicKey = rss::RssPublicKey<Bls12Backend>;
pub type BlsRssSignature = rss::RssSignature<Bls12Backend>;
pub type BlsPsSecretKey = ps::PsSecretKey<Bls12Backend>;
pub type BlsPsPublicKey = ps::PsPublicKey<Bls12Backend>;
pub type BlsPsSignature = ps::PsSignature<Bls12Backend>;

/// RSS key and signature types on the exponent-tracking mock backend.
pub type MockRssSecretKey = rss::RssSecretKey<MockBackend>;
pub type MockRssPublicKey = rss::RssPublicKey<MockBackend>;
pub type MockRssSignature = rss::RssSignature<MockBackend>;
pub type MockPsSecretKey = ps::PsSecretKey<MockBackend>;
pub type MockPsPublicKey = ps::PsPublicKey<MockBackend>;
pub type MockPsSignature = ps::PsSignature<MockBackend>;
