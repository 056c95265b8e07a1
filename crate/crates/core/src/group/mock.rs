//! Exponent-tracking mock backend.
//!
//! Elements of all three groups carry their discrete logarithm with respect
//! to a fixed generator of a cyclic group of prime order
//! `p = 2^31 − 1`. The group operation adds logs, exponentiation multiplies
//! a log by a scalar, and the pairing multiplies the two logs:
//!
//! ```text
//! e(g^a, g̃^b) = gt^(a·b mod p)
//! ```
//!
//! That makes every protocol equation checkable by plain integer arithmetic
//! — the tracked exponent of any computed element must equal the same
//! computation performed directly on exponents mod `p` — which is what the
//! oracle tests in this crate do. It offers no security whatsoever and
//! exists purely as a test instrument.
//!
//! Encodings: scalars and G1 are 4 bytes big-endian; G2 is 8 bytes
//! big-endian (high half zero). The distinct G1/G2 widths keep layout
//! mistakes visible in serialized-size tests.

use std::fmt;

use rand_core::RngCore;

use super::{hash_block, BackendDescriptor, GroupElement, PairingBackend, Scalar, TargetElement};
use crate::error::{Error, Result};

/// Order of the mock groups and of the mock scalar field: the Mersenne
/// prime `2^31 − 1`.
pub const MOCK_GROUP_ORDER: u64 = 2_147_483_647;

fn reduce(value: u64) -> u64 {
    value % MOCK_GROUP_ORDER
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOCK_GROUP_ORDER as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base = reduce(base);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Exponent-tracking backend over a 31-bit prime-order group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MockBackend;

/// Element of `Z_p` for the mock order `p`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct MockScalar(u64);

/// `g^log` for the fixed G1 generator `g`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct MockG1 {
    log: u64,
}

/// `g̃^log` for the fixed G2 generator `g̃`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct MockG2 {
    log: u64,
}

/// `gt^log` where `gt = e(g, g̃)`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct MockGt {
    log: u64,
}

impl MockScalar {
    pub fn new(value: u64) -> Self {
        MockScalar(reduce(value))
    }

    /// The tracked field value.
    pub fn value(&self) -> u64 {
        self.0
    }
}

impl MockG1 {
    pub fn from_log(log: u64) -> Self {
        MockG1 { log: reduce(log) }
    }

    /// The tracked discrete logarithm.
    pub fn log(&self) -> u64 {
        self.log
    }
}

impl MockG2 {
    pub fn from_log(log: u64) -> Self {
        MockG2 { log: reduce(log) }
    }

    pub fn log(&self) -> u64 {
        self.log
    }
}

impl MockGt {
    pub fn from_log(log: u64) -> Self {
        MockGt { log: reduce(log) }
    }

    pub fn log(&self) -> u64 {
        self.log
    }
}

impl fmt::Debug for MockScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MockScalar({})", self.0)
    }
}

impl fmt::Debug for MockG1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{}", self.log)
    }
}

impl fmt::Debug for MockG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g̃^{}", self.log)
    }
}

impl fmt::Debug for MockGt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gt^{}", self.log)
    }
}

impl Scalar for MockScalar {
    fn zero() -> Self {
        MockScalar(0)
    }

    fn one() -> Self {
        MockScalar(1)
    }

    fn from_u64(value: u64) -> Self {
        MockScalar::new(value)
    }

    fn add(&self, rhs: &Self) -> Self {
        MockScalar(reduce(self.0 + rhs.0))
    }

    fn sub(&self, rhs: &Self) -> Self {
        MockScalar(reduce(self.0 + MOCK_GROUP_ORDER - rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        MockScalar(mul_mod(self.0, rhs.0))
    }

    fn invert(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2) mod p.
            Some(MockScalar(pow_mod(self.0, MOCK_GROUP_ORDER - 2)))
        }
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        MockScalar(reduce(rng.next_u64()))
    }

    fn encoded_len() -> usize {
        4
    }

    fn to_bytes(&self) -> Vec<u8> {
        (self.0 as u32).to_be_bytes().to_vec()
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: [u8; 4] = bytes
            .try_into()
            .map_err(|_| Error::Encoding(format!("mock scalar wants 4 bytes, got {}", bytes.len())))?;
        let value = u32::from_be_bytes(arr) as u64;
        if value >= MOCK_GROUP_ORDER {
            return Err(Error::Encoding("mock scalar out of field range".into()));
        }
        Ok(MockScalar(value))
    }
}

macro_rules! mock_group_element {
    ($ty:ident, $len:expr, $label:literal) => {
        impl GroupElement for $ty {
            type Scalar = MockScalar;

            fn identity() -> Self {
                $ty::from_log(0)
            }

            fn is_identity(&self) -> bool {
                self.log == 0
            }

            fn generator() -> Self {
                $ty::from_log(1)
            }

            fn mul(&self, rhs: &Self) -> Self {
                $ty::from_log(reduce(self.log + rhs.log))
            }

            fn pow(&self, exp: &Self::Scalar) -> Self {
                $ty::from_log(mul_mod(self.log, exp.value()))
            }

            fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
                $ty::from_log(reduce(rng.next_u64()))
            }

            fn encoded_len() -> usize {
                $len
            }

            fn to_bytes(&self) -> Vec<u8> {
                let mut buf = vec![0u8; $len];
                buf[$len - 4..].copy_from_slice(&(self.log as u32).to_be_bytes());
                buf
            }

            fn from_bytes(bytes: &[u8]) -> Result<Self> {
                if bytes.len() != $len {
                    return Err(Error::Encoding(format!(
                        concat!($label, " wants {} bytes, got {}"),
                        $len,
                        bytes.len()
                    )));
                }
                if bytes[..$len - 4].iter().any(|&b| b != 0) {
                    return Err(Error::Encoding(concat!($label, " has nonzero padding").into()));
                }
                let arr: [u8; 4] = bytes[$len - 4..].try_into().expect("length checked");
                let log = u32::from_be_bytes(arr) as u64;
                if log >= MOCK_GROUP_ORDER {
                    return Err(Error::Encoding(concat!($label, " log out of range").into()));
                }
                Ok($ty::from_log(log))
            }
        }
    };
}

mock_group_element!(MockG1, 4, "mock G1");
mock_group_element!(MockG2, 8, "mock G2");

impl TargetElement for MockGt {
    type Scalar = MockScalar;

    fn identity() -> Self {
        MockGt::from_log(0)
    }

    fn is_identity(&self) -> bool {
        self.log == 0
    }

    fn mul(&self, rhs: &Self) -> Self {
        MockGt::from_log(reduce(self.log + rhs.log))
    }

    fn pow(&self, exp: &Self::Scalar) -> Self {
        MockGt::from_log(mul_mod(self.log, exp.value()))
    }
}

impl PairingBackend for MockBackend {
    type Scalar = MockScalar;
    type G1 = MockG1;
    type G2 = MockG2;
    type Gt = MockGt;

    const NAME: &'static str = "mock-exp";

    fn descriptor() -> BackendDescriptor {
        BackendDescriptor {
            name: Self::NAME.to_string(),
            group_order_be: (MOCK_GROUP_ORDER as u32).to_be_bytes().to_vec(),
            g1_encoded_len: 4,
            g2_encoded_len: 8,
        }
    }

    fn pairing(a: &Self::G1, b: &Self::G2) -> Self::Gt {
        MockGt::from_log(mul_mod(a.log, b.log))
    }

    fn hash_to_scalar(domain_tag: &[u8], payload: &[u8]) -> Self::Scalar {
        for counter in 0u32.. {
            let digest = hash_block(domain_tag, counter, payload);
            let wide = u128::from_be_bytes(digest[..16].try_into().expect("16 bytes"));
            let value = (wide % MOCK_GROUP_ORDER as u128) as u64;
            if value != 0 {
                return MockScalar(value);
            }
        }
        unreachable!("SHA-512 cannot keep reducing to zero")
    }
}
