//! Abstract type-3 bilinear group.
//!
//! A [`PairingBackend`] supplies three groups `G1`, `G2`, `GT` of prime
//! order `p`, the scalar field `Z_p`, and a bilinear map
//! `e: G1 × G2 → GT` with the usual properties:
//!
//! * `e(g^a, g̃^b) = e(g, g̃)^(a·b)` for all scalars `a`, `b`;
//! * `e(g, g̃) ≠ 1_GT` whenever `g ≠ 1_G1` and `g̃ ≠ 1_G2`;
//! * `e` is efficiently computable.
//!
//! Group notation is multiplicative throughout: [`GroupElement::mul`] is the
//! group operation and [`GroupElement::pow`] is exponentiation by a scalar,
//! matching the way the schemes in [`crate::ps`] and [`crate::rss`] are
//! usually written.
//!
//! Backends are selected at the type level, so mixing elements of two
//! backends inside one computation cannot compile. Mismatches are still
//! possible at the serialization boundary — a key file written under one
//! backend and read under another — which is why every serialized artifact
//! embeds the [`BackendDescriptor`] of its backend and decoding checks it.
//!
//! Randomness is always injected via [`rand_core::RngCore`]; nothing in this
//! crate reaches for ambient entropy.

pub mod bls;
pub mod mock;

use std::fmt::Debug;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha512};

use crate::error::{Error, Result};

/// An element of the scalar field `Z_p`.
pub trait Scalar: Clone + PartialEq + Eq + Debug + Send + Sync + Sized + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(value: u64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn invert(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;

    /// Uniformly random scalar. Deterministic under a seeded `rng`.
    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self;

    /// Length of the canonical byte encoding.
    fn encoded_len() -> usize;

    /// Canonical byte encoding; endianness is fixed per backend and
    /// documented there.
    fn to_bytes(&self) -> Vec<u8>;

    /// Inverse of [`Scalar::to_bytes`]. Rejects non-canonical input.
    fn from_bytes(bytes: &[u8]) -> Result<Self>;
}

/// An element of a source group (`G1` or `G2`).
pub trait GroupElement: Clone + PartialEq + Eq + Debug + Send + Sync + Sized + 'static {
    type Scalar: Scalar;

    /// The group identity `1_G`.
    fn identity() -> Self;
    fn is_identity(&self) -> bool;

    /// A fixed generator of the group.
    fn generator() -> Self;

    /// The group operation.
    fn mul(&self, rhs: &Self) -> Self;

    /// Exponentiation by a scalar.
    fn pow(&self, exp: &Self::Scalar) -> Self;

    /// Uniformly random element (may be the identity with probability 1/p).
    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self;

    /// Length of the canonical byte encoding.
    fn encoded_len() -> usize;

    fn to_bytes(&self) -> Vec<u8>;

    /// Inverse of [`GroupElement::to_bytes`]. Rejects encodings that are not
    /// canonical or not in the group.
    fn from_bytes(bytes: &[u8]) -> Result<Self>;
}

/// An element of the pairing target group `GT`.
///
/// Target elements only ever appear as intermediate verification values, so
/// unlike the source groups they carry no byte encoding.
pub trait TargetElement: Clone + PartialEq + Eq + Debug + Send + Sync + Sized + 'static {
    type Scalar: Scalar;

    fn identity() -> Self;
    fn is_identity(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn pow(&self, exp: &Self::Scalar) -> Self;
}

/// A complete type-3 bilinear group instantiation.
pub trait PairingBackend: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Scalar: Scalar;
    type G1: GroupElement<Scalar = Self::Scalar>;
    type G2: GroupElement<Scalar = Self::Scalar>;
    type Gt: TargetElement<Scalar = Self::Scalar>;

    /// Stable backend name, embedded in every serialized artifact.
    const NAME: &'static str;

    /// Descriptor embedded in serialized keys and signatures so that a
    /// decoder can detect material produced under a different backend.
    fn descriptor() -> BackendDescriptor;

    /// The bilinear map `e(a, b)`.
    fn pairing(a: &Self::G1, b: &Self::G2) -> Self::Gt;

    /// Deterministic hash into `Z_p \ {0}` with domain separation.
    ///
    /// All backends share the same framing (see [`hash_block`]) and differ
    /// only in how the 64-byte digest is reduced into their field. A zero
    /// result is rejected by re-hashing with an incremented counter.
    fn hash_to_scalar(domain_tag: &[u8], payload: &[u8]) -> Self::Scalar;
}

/// Identifies a backend's parameter set inside serialized material.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackendDescriptor {
    /// Stable backend name, e.g. `bls12-381`.
    pub name: String,
    /// Group order `p`, big-endian, minimal length.
    pub group_order_be: Vec<u8>,
    /// Byte length of a canonical G1 encoding.
    pub g1_encoded_len: u32,
    /// Byte length of a canonical G2 encoding.
    pub g2_encoded_len: u32,
}

impl BackendDescriptor {
    /// Scalar encodings always span the same number of bytes as the group
    /// order they reduce into.
    pub fn scalar_encoded_len(&self) -> usize {
        self.group_order_be.len()
    }
}

/// Shared digest framing for [`PairingBackend::hash_to_scalar`]:
/// `SHA-512( len(tag) as u16 BE ‖ tag ‖ counter as u32 BE ‖ payload )`.
///
/// The length prefix keeps distinct `(tag, payload)` pairs from colliding;
/// the counter implements rejection of zero outputs.
pub(crate) fn hash_block(domain_tag: &[u8], counter: u32, payload: &[u8]) -> [u8; 64] {
    debug_assert!(domain_tag.len() <= u16::MAX as usize, "domain tag too long");
    let mut hasher = Sha512::new();
    hasher.update((domain_tag.len() as u16).to_be_bytes());
    hasher.update(domain_tag);
    hasher.update(counter.to_be_bytes());
    hasher.update(payload);
    hasher.finalize().into()
}

/// Samples a uniformly random non-identity element, resampling the
/// negligible identity draw.
pub fn random_non_identity<G: GroupElement, R: RngCore + ?Sized>(rng: &mut R) -> G {
    loop {
        let candidate = G::random(rng);
        if !candidate.is_identity() {
            return candidate;
        }
    }
}

/// Samples a uniformly random nonzero scalar.
pub fn random_nonzero_scalar<S: Scalar, R: RngCore + ?Sized>(rng: &mut R) -> S {
    loop {
        let candidate = S::random(rng);
        if !candidate.is_zero() {
            return candidate;
        }
    }
}

/// `base^1, base^2, ..., base^count` (consecutive powers, starting at the
/// first power).
pub(crate) fn scalar_powers<S: Scalar>(base: &S, count: usize) -> Vec<S> {
    let mut powers = Vec::with_capacity(count);
    let mut acc = base.clone();
    for _ in 0..count {
        powers.push(acc.clone());
        acc = acc.mul(base);
    }
    powers
}

/// Checks a decoded descriptor against the backend doing the decoding.
pub(crate) fn check_descriptor<B: PairingBackend>(found: &BackendDescriptor) -> Result<()> {
    let expected = B::descriptor();
    if *found != expected {
        return Err(Error::Compatibility {
            expected: expected.name,
            found: found.name.clone(),
        });
    }
    Ok(())
}
