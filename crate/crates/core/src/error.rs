//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition
    /// (zero message count, length mismatch, index out of range, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Serialized material was produced under a different group backend
    /// than the one trying to consume it.
    #[error("backend mismatch: expected `{expected}`, found `{found}`")]
    Compatibility { expected: String, found: String },

    /// Byte-level decoding failure: bad magic, truncated input, an element
    /// that is not a canonical encoding, and similar.
    #[error("malformed encoding: {0}")]
    Encoding(String),

    /// Credential document problems: duplicate attribute paths, unsupported
    /// leaf values, empty attribute sets, unresolvable redaction policies.
    #[error("credential codec: {0}")]
    Codec(String),

    /// A signature failed to verify where a valid one is a precondition.
    #[error("signature invalid for the supplied message")]
    SignatureInvalid,

    /// An internal invariant was violated. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
