//! Production backend on the BLS12-381 curve (~128-bit security).
//!
//! Encodings:
//! * scalars — 32 bytes, little-endian, canonical (values `< p` only);
//! * G1 — 48 bytes, compressed point, big-endian field elements per the
//!   usual BLS12-381 serialization with flag bits in the top byte;
//! * G2 — 96 bytes, compressed point, same conventions.
//!
//! Decoding performs full curve and subgroup membership checks, so a value
//! that round-trips is guaranteed to be a canonical encoding of a group
//! element.
//!
//! The curve arithmetic itself comes from the `bls12_381` crate; this module
//! only adapts it to the [`PairingBackend`] contract.

use std::fmt;

use bls12_381::{G1Affine, G1Projective, G2Affine, G2Projective, Gt};
use ff::Field;
use group::Group;
use rand_core::RngCore;

use super::{hash_block, BackendDescriptor, GroupElement, PairingBackend, Scalar, TargetElement};
use crate::error::{Error, Result};

/// BLS12-381 group order (the scalar field modulus), big-endian.
const GROUP_ORDER_BE: [u8; 32] = [
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8,
    0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00,
    0x00, 0x01,
];

/// Type-3 pairing backend over BLS12-381.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bls12Backend;

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct BlsScalar(pub(crate) bls12_381::Scalar);

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct BlsG1(pub(crate) G1Projective);

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct BlsG2(pub(crate) G2Projective);

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct BlsGt(pub(crate) Gt);

impl fmt::Debug for BlsScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlsScalar({})", encode_hex(&self.to_bytes()))
    }
}

impl fmt::Debug for BlsG1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlsG1({})", encode_hex(&self.to_bytes()))
    }
}

impl fmt::Debug for BlsG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlsG2({})", encode_hex(&self.to_bytes()))
    }
}

impl fmt::Debug for BlsGt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BlsGt(..)")
    }
}

fn encode_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Scalar for BlsScalar {
    fn zero() -> Self {
        BlsScalar(bls12_381::Scalar::zero())
    }

    fn one() -> Self {
        BlsScalar(bls12_381::Scalar::one())
    }

    fn from_u64(value: u64) -> Self {
        BlsScalar(bls12_381::Scalar::from(value))
    }

    fn add(&self, rhs: &Self) -> Self {
        BlsScalar(self.0 + rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        BlsScalar(self.0 - rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        BlsScalar(self.0 * rhs.0)
    }

    fn invert(&self) -> Option<Self> {
        Option::<bls12_381::Scalar>::from(self.0.invert()).map(BlsScalar)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero().into()
    }

    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        BlsScalar(<bls12_381::Scalar as Field>::random(&mut *rng))
    }

    fn encoded_len() -> usize {
        32
    }

    fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes().to_vec()
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: [u8; 32] = bytes
            .try_into()
            .map_err(|_| Error::Encoding(format!("scalar wants 32 bytes, got {}", bytes.len())))?;
        Option::<bls12_381::Scalar>::from(bls12_381::Scalar::from_bytes(&arr))
            .map(BlsScalar)
            .ok_or_else(|| Error::Encoding("non-canonical scalar encoding".into()))
    }
}

impl GroupElement for BlsG1 {
    type Scalar = BlsScalar;

    fn identity() -> Self {
        BlsG1(G1Projective::identity())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity().into()
    }

    fn generator() -> Self {
        BlsG1(G1Projective::generator())
    }

    fn mul(&self, rhs: &Self) -> Self {
        BlsG1(self.0 + rhs.0)
    }

    fn pow(&self, exp: &Self::Scalar) -> Self {
        BlsG1(self.0 * exp.0)
    }

    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        BlsG1(G1Projective::random(&mut *rng))
    }

    fn encoded_len() -> usize {
        48
    }

    fn to_bytes(&self) -> Vec<u8> {
        G1Affine::from(self.0).to_compressed().to_vec()
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: [u8; 48] = bytes
            .try_into()
            .map_err(|_| Error::Encoding(format!("G1 wants 48 bytes, got {}", bytes.len())))?;
        Option::<G1Affine>::from(G1Affine::from_compressed(&arr))
            .map(|p| BlsG1(G1Projective::from(p)))
            .ok_or_else(|| Error::Encoding("invalid G1 point encoding".into()))
    }
}

impl GroupElement for BlsG2 {
    type Scalar = BlsScalar;

    fn identity() -> Self {
        BlsG2(G2Projective::identity())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity().into()
    }

    fn generator() -> Self {
        BlsG2(G2Projective::generator())
    }

    fn mul(&self, rhs: &Self) -> Self {
        BlsG2(self.0 + rhs.0)
    }

    fn pow(&self, exp: &Self::Scalar) -> Self {
        BlsG2(self.0 * exp.0)
    }

    fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        BlsG2(G2Projective::random(&mut *rng))
    }

    fn encoded_len() -> usize {
        96
    }

    fn to_bytes(&self) -> Vec<u8> {
        G2Affine::from(self.0).to_compressed().to_vec()
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let arr: [u8; 96] = bytes
            .try_into()
            .map_err(|_| Error::Encoding(format!("G2 wants 96 bytes, got {}", bytes.len())))?;
        Option::<G2Affine>::from(G2Affine::from_compressed(&arr))
            .map(|p| BlsG2(G2Projective::from(p)))
            .ok_or_else(|| Error::Encoding("invalid G2 point encoding".into()))
    }
}

impl TargetElement for BlsGt {
    type Scalar = BlsScalar;

    fn identity() -> Self {
        BlsGt(Gt::identity())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity().into()
    }

    fn mul(&self, rhs: &Self) -> Self {
        BlsGt(self.0 + rhs.0)
    }

    fn pow(&self, exp: &Self::Scalar) -> Self {
        BlsGt(self.0 * exp.0)
    }
}

impl PairingBackend for Bls12Backend {
    type Scalar = BlsScalar;
    type G1 = BlsG1;
    type G2 = BlsG2;
    type Gt = BlsGt;

    const NAME: &'static str = "bls12-381";

    fn descriptor() -> BackendDescriptor {
        BackendDescriptor {
            name: Self::NAME.to_string(),
            group_order_be: GROUP_ORDER_BE.to_vec(),
            g1_encoded_len: 48,
            g2_encoded_len: 96,
        }
    }

    fn pairing(a: &Self::G1, b: &Self::G2) -> Self::Gt {
        BlsGt(bls12_381::pairing(
            &G1Affine::from(a.0),
            &G2Affine::from(b.0),
        ))
    }

    fn hash_to_scalar(domain_tag: &[u8], payload: &[u8]) -> Self::Scalar {
        for counter in 0u32.. {
            let digest = hash_block(domain_tag, counter, payload);
            let scalar = bls12_381::Scalar::from_bytes_wide(&digest);
            if !bool::from(scalar.is_zero()) {
                return BlsScalar(scalar);
            }
        }
        unreachable!("SHA-512 cannot keep reducing to zero")
    }
}
