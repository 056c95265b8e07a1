//! Multi-message Pointcheval–Sanders signatures.
//!
//! Keys cover a fixed message count `r`. A signature is the pair
//! `(σ₁, σ₂) = (h, h^(x + Σ_j y_j·m_j))` for a random non-identity
//! `h ∈ G1`, and verifies through the single pairing equation
//!
//! ```text
//! σ₁ ≠ 1_G1   and   e(σ₁, X̃ · Π_j Ỹ_j^(m_j)) = e(σ₂, g̃)
//! ```
//!
//! Signatures are re-randomizable: `(σ₁^s, σ₂^s)` verifies for any
//! nonzero `s`, yielding an unlinkable-looking signature on the same
//! message — see [`PsSignature::randomized`].

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::group::{random_non_identity, GroupElement, PairingBackend, Scalar};
use crate::wire::{ObjectKind, Reader, Writer};

/// Secret key `(x, y_1, ..., y_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsSecretKey<B: PairingBackend> {
    x: B::Scalar,
    ys: Vec<B::Scalar>,
}

/// Public key `(g̃, X̃, Ỹ_1, ..., Ỹ_r)` with `X̃ = g̃^x`, `Ỹ_j = g̃^(y_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsPublicKey<B: PairingBackend> {
    g2: B::G2,
    x_tilde: B::G2,
    y_tildes: Vec<B::G2>,
}

/// Signature `(σ₁, σ₂)` on a vector of `r` message scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsSignature<B: PairingBackend> {
    sigma1: B::G1,
    sigma2: B::G1,
}

/// Generates a key pair for `message_count` messages.
pub fn keygen<B: PairingBackend, R: RngCore + ?Sized>(
    message_count: usize,
    rng: &mut R,
) -> Result<(PsSecretKey<B>, PsPublicKey<B>)> {
    if message_count == 0 {
        return Err(Error::InvalidParameter("message count must be at least 1".into()));
    }
    let x = B::Scalar::random(rng);
    let ys: Vec<B::Scalar> = (0..message_count).map(|_| B::Scalar::random(rng)).collect();
    let sk = PsSecretKey { x, ys };
    let g2: B::G2 = random_non_identity(rng);
    let pk = sk.public_key(&g2);
    Ok((sk, pk))
}

impl<B: PairingBackend> PsSecretKey<B> {
    /// Assembles a key from its raw scalars (key import).
    pub fn from_parts(x: B::Scalar, ys: Vec<B::Scalar>) -> Result<Self> {
        if ys.is_empty() {
            return Err(Error::InvalidParameter("message count must be at least 1".into()));
        }
        Ok(PsSecretKey { x, ys })
    }

    /// The public key under generator `g2`; `g2` must not be the identity.
    pub fn public_key(&self, g2: &B::G2) -> PsPublicKey<B> {
        assert!(!g2.is_identity(), "public key generator must not be the identity");
        PsPublicKey {
            g2: g2.clone(),
            x_tilde: g2.pow(&self.x),
            y_tildes: self.ys.iter().map(|y| g2.pow(y)).collect(),
        }
    }

    pub fn message_count(&self) -> usize {
        self.ys.len()
    }

    pub fn x(&self) -> &B::Scalar {
        &self.x
    }

    pub fn ys(&self) -> &[B::Scalar] {
        &self.ys
    }

    /// Signs a message vector of exactly `message_count` scalars.
    pub fn sign<R: RngCore + ?Sized>(
        &self,
        messages: &[B::Scalar],
        rng: &mut R,
    ) -> Result<PsSignature<B>> {
        if messages.len() != self.ys.len() {
            return Err(Error::InvalidParameter(format!(
                "message vector has {} entries, key covers {}",
                messages.len(),
                self.ys.len()
            )));
        }
        let h: B::G1 = random_non_identity(rng);
        let mut exponent = self.x.clone();
        for (y, m) in self.ys.iter().zip(messages) {
            exponent = exponent.add(&y.mul(m));
        }
        Ok(PsSignature {
            sigma2: h.pow(&exponent),
            sigma1: h,
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(ObjectKind::PsSecretKey, &B::descriptor(), self.ys.len() as u32);
        w.bytes(&self.x.to_bytes());
        for y in &self.ys {
            w.bytes(&y.to_bytes());
        }
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let n = r.header::<B>(ObjectKind::PsSecretKey)? as usize;
        if n == 0 {
            return Err(Error::Encoding("PS secret key with zero messages".into()));
        }
        let scalar_len = B::Scalar::encoded_len();
        let x = B::Scalar::from_bytes(r.take(scalar_len)?)?;
        let ys = (0..n)
            .map(|_| B::Scalar::from_bytes(r.take(scalar_len)?))
            .collect::<Result<Vec<_>>>()?;
        r.expect_end()?;
        Ok(PsSecretKey { x, ys })
    }
}

impl<B: PairingBackend> PsPublicKey<B> {
    pub fn message_count(&self) -> usize {
        self.y_tildes.len()
    }

    pub fn g2(&self) -> &B::G2 {
        &self.g2
    }

    pub fn x_tilde(&self) -> &B::G2 {
        &self.x_tilde
    }

    pub fn y_tildes(&self) -> &[B::G2] {
        &self.y_tildes
    }

    /// Checks the pairing equation. `Ok(false)` means the signature does not
    /// verify; errors are reserved for structurally invalid calls.
    pub fn verify(&self, messages: &[B::Scalar], sig: &PsSignature<B>) -> Result<bool> {
        if messages.len() != self.y_tildes.len() {
            return Err(Error::InvalidParameter(format!(
                "message vector has {} entries, key covers {}",
                messages.len(),
                self.y_tildes.len()
            )));
        }
        if sig.sigma1.is_identity() {
            return Ok(false);
        }
        let mut rhs_g2 = self.x_tilde.clone();
        for (y_tilde, m) in self.y_tildes.iter().zip(messages) {
            rhs_g2 = rhs_g2.mul(&y_tilde.pow(m));
        }
        let lhs = B::pairing(&sig.sigma1, &rhs_g2);
        let rhs = B::pairing(&sig.sigma2, &self.g2);
        Ok(lhs == rhs)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(
            ObjectKind::PsPublicKey,
            &B::descriptor(),
            self.y_tildes.len() as u32,
        );
        w.bytes(&self.g2.to_bytes());
        w.bytes(&self.x_tilde.to_bytes());
        for y_tilde in &self.y_tildes {
            w.bytes(&y_tilde.to_bytes());
        }
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let n = r.header::<B>(ObjectKind::PsPublicKey)? as usize;
        if n == 0 {
            return Err(Error::Encoding("PS public key with zero messages".into()));
        }
        let g2_len = B::G2::encoded_len();
        let g2 = B::G2::from_bytes(r.take(g2_len)?)?;
        let x_tilde = B::G2::from_bytes(r.take(g2_len)?)?;
        let y_tildes = (0..n)
            .map(|_| B::G2::from_bytes(r.take(g2_len)?))
            .collect::<Result<Vec<_>>>()?;
        r.expect_end()?;
        if g2.is_identity() {
            return Err(Error::Encoding("PS public key generator is the identity".into()));
        }
        Ok(PsPublicKey { g2, x_tilde, y_tildes })
    }
}

impl<B: PairingBackend> PsSignature<B> {
    pub fn from_parts(sigma1: B::G1, sigma2: B::G1) -> Self {
        PsSignature { sigma1, sigma2 }
    }

    pub fn sigma1(&self) -> &B::G1 {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &B::G1 {
        &self.sigma2
    }

    /// Re-randomizes the signature: `(σ₁^s, σ₂^s)` for a random nonzero `s`
    /// is a fresh-looking valid signature on the same message.
    pub fn randomized<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self {
        let s = crate::group::random_nonzero_scalar::<B::Scalar, R>(rng);
        PsSignature {
            sigma1: self.sigma1.pow(&s),
            sigma2: self.sigma2.pow(&s),
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(ObjectKind::PsSignature, &B::descriptor(), 0);
        w.bytes(&self.sigma1.to_bytes());
        w.bytes(&self.sigma2.to_bytes());
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.header::<B>(ObjectKind::PsSignature)?;
        let g1_len = B::G1::encoded_len();
        let sigma1 = B::G1::from_bytes(r.take(g1_len)?)?;
        let sigma2 = B::G1::from_bytes(r.take(g1_len)?)?;
        r.expect_end()?;
        Ok(PsSignature { sigma1, sigma2 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::mock::{MockBackend, MockG1, MockG2, MockScalar, MOCK_GROUP_ORDER};
    use crate::Bls12Backend;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn seeded(seed: u64) -> StdRng {
        StdRng::seed_from_u64(seed)
    }

    fn mock_scalars(values: &[u64]) -> Vec<MockScalar> {
        values.iter().map(|&v| MockScalar::new(v)).collect()
    }

    // Independent integer arithmetic for the exponent oracle.
    fn mod_mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % MOCK_GROUP_ORDER as u128) as u64
    }

    #[test]
    fn keygen_exponents_match_secrets() {
        let mut rng = seeded(7);
        let (sk, pk) = keygen::<MockBackend, _>(2, &mut rng).unwrap();
        let g2_log = pk.g2().log();
        assert_eq!(pk.x_tilde().log(), mod_mul(g2_log, sk.x().value()));
        for (y_tilde, y) in pk.y_tildes().iter().zip(sk.ys()) {
            assert_eq!(y_tilde.log(), mod_mul(g2_log, y.value()));
        }
    }

    #[test]
    fn keygen_length_contract() {
        let mut rng = seeded(1);
        let (sk, pk) = keygen::<MockBackend, _>(1, &mut rng).unwrap();
        assert_eq!(sk.message_count(), 1);
        assert_eq!(pk.message_count(), 1);
    }

    #[test]
    fn keygen_zero_messages_rejected() {
        let mut rng = seeded(1);
        let err = keygen::<MockBackend, _>(0, &mut rng).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn keygen_different_seeds_differ() {
        let (_, pk_a) = keygen::<MockBackend, _>(2, &mut seeded(1)).unwrap();
        let (_, pk_b) = keygen::<MockBackend, _>(2, &mut seeded(2)).unwrap();
        assert_ne!(pk_a.x_tilde(), pk_b.x_tilde());
    }

    #[test]
    fn sign_exponent_oracle() {
        // x=3, y=(2,5), m=(7,4): the signing exponent is 3 + 2·7 + 5·4 = 37.
        let sk = PsSecretKey::<MockBackend>::from_parts(MockScalar::new(3), mock_scalars(&[2, 5]))
            .unwrap();
        let mut rng = seeded(11);
        let sig = sk.sign(&mock_scalars(&[7, 4]), &mut rng).unwrap();
        let h_log = sig.sigma1().log();
        assert_eq!(sig.sigma2().log(), mod_mul(h_log, 37));

        // Forcing h = g (log 1) pins σ₂ to exactly 37.
        let forced = PsSignature::<MockBackend>::from_parts(
            MockG1::from_log(1),
            MockG1::from_log(1).pow(&MockScalar::new(37)),
        );
        assert_eq!(forced.sigma2().log(), 37);
        let pk = sk.public_key(&MockG2::from_log(1));
        assert!(pk.verify(&mock_scalars(&[7, 4]), &forced).unwrap());
    }

    #[test]
    fn sign_length_mismatch_rejected() {
        let mut rng = seeded(3);
        let (sk, _) = keygen::<MockBackend, _>(2, &mut rng).unwrap();
        let err = sk.sign(&mock_scalars(&[1]), &mut rng).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn sign_verify_roundtrip_and_random_h() {
        let mut rng = seeded(5);
        let (sk, pk) = keygen::<MockBackend, _>(3, &mut rng).unwrap();
        let msg = mock_scalars(&[10, 20, 30]);
        let sig_a = sk.sign(&msg, &mut seeded(100)).unwrap();
        let sig_b = sk.sign(&msg, &mut seeded(200)).unwrap();
        assert_ne!(sig_a.sigma1(), sig_b.sigma1(), "h is randomized per signature");
        assert!(pk.verify(&msg, &sig_a).unwrap());
        assert!(pk.verify(&msg, &sig_b).unwrap());
    }

    #[test]
    fn verify_rejects_perturbed_message() {
        let mut rng = seeded(9);
        let (sk, pk) = keygen::<MockBackend, _>(2, &mut rng).unwrap();
        let msg = mock_scalars(&[7, 4]);
        let sig = sk.sign(&msg, &mut rng).unwrap();
        let mut tampered = msg.clone();
        tampered[0] = tampered[0].add(&MockScalar::one());
        assert!(!pk.verify(&tampered, &sig).unwrap());
    }

    #[test]
    fn verify_rejects_identity_sigma1() {
        let mut rng = seeded(13);
        let (sk, pk) = keygen::<MockBackend, _>(2, &mut rng).unwrap();
        let msg = mock_scalars(&[7, 4]);
        let sig = sk.sign(&msg, &mut rng).unwrap();
        // Identity σ₁ must be rejected no matter what σ₂ claims.
        let forged =
            PsSignature::<MockBackend>::from_parts(MockG1::identity(), sig.sigma2().clone());
        assert!(!pk.verify(&msg, &forged).unwrap());
        let forged_id =
            PsSignature::<MockBackend>::from_parts(MockG1::identity(), MockG1::identity());
        assert!(!pk.verify(&msg, &forged_id).unwrap());
    }

    #[test]
    fn rerandomized_signature_verifies() {
        let mut rng = seeded(17);
        let (sk, pk) = keygen::<Bls12Backend, _>(2, &mut rng).unwrap();
        let msg: Vec<_> = (1..=2u64)
            .map(crate::group::bls::BlsScalar::from_u64)
            .collect();
        let sig = sk.sign(&msg, &mut rng).unwrap();
        let rerandomized = sig.randomized(&mut rng);
        assert_ne!(rerandomized.sigma1(), sig.sigma1());
        assert!(pk.verify(&msg, &rerandomized).unwrap());
    }

    #[test]
    fn wire_roundtrip() {
        let mut rng = seeded(23);
        let (sk, pk) = keygen::<MockBackend, _>(3, &mut rng).unwrap();
        let sig = sk.sign(&mock_scalars(&[1, 2, 3]), &mut rng).unwrap();
        assert_eq!(PsSecretKey::<MockBackend>::from_bytes(&sk.to_bytes()).unwrap(), sk);
        assert_eq!(PsPublicKey::<MockBackend>::from_bytes(&pk.to_bytes()).unwrap(), pk);
        assert_eq!(PsSignature::<MockBackend>::from_bytes(&sig.to_bytes()).unwrap(), sig);
    }

    #[test]
    fn wire_rejects_backend_mismatch() {
        let mut rng = seeded(29);
        let (sk, _) = keygen::<MockBackend, _>(2, &mut rng).unwrap();
        let err = PsSecretKey::<Bls12Backend>::from_bytes(&sk.to_bytes()).unwrap_err();
        assert!(matches!(err, Error::Compatibility { .. }));
    }
}
