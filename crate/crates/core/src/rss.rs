//! Redactable signature scheme.
//!
//! The scheme extends [`crate::ps`] so that a signature on `n` message
//! scalars can be turned — by anyone holding the public key — into a valid
//! signature on any non-empty subset of them.
//!
//! Key generation samples a single pair `(x, y)` and publishes powers of
//! `y` in both source groups:
//!
//! ```text
//! sk = (x, y)
//! pk = (H, g, g̃, {Y_i = g^(y^i)} for i ∈ [1,n] ∪ [n+2,2n],
//!       X̃ = g̃^x, {Ỹ_i = g̃^(y^i)} for i ∈ [1,n])
//! ```
//!
//! The missing index `n+1` is the security-critical gap: `g^(y^(n+1))`
//! never appears in the key, and the derivation below is arranged so it is
//! never needed.
//!
//! A fresh signature is `(σ₁, σ₁^(x + Σ y^i·m_i), 1_G1, 1_G2)`. Derivation
//! for a retained index set `I` re-randomizes `(σ₁, σ₂)` with scalars
//! `(r, t)`, folds the redacted messages `j ∈ Ī` into
//! `σ̃ = g̃^t · Π Ỹ_j^(m_j)`, and commits to `I` through hash scalars
//! `c_i = H(σ₁ ‖ σ₂ ‖ σ̃ ‖ I ‖ i)` that enter
//! `σ₃ = Π_{i∈I} [Y_{n+1−i}^t · Π_{j∈Ī} Y_{n+1−i+j}^(m_j)]^(c_i)`.
//!
//! Verification of `{m_i}_{i∈I}` rejects `σ₁ = 1_G1` and then checks
//!
//! ```text
//! e(σ₁, X̃ · σ̃ · Π_{i∈I} Ỹ_i^(m_i)) = e(σ₂, g̃)
//! e(σ₃, g̃) = e(Π_{i∈I} Y_{n+1−i}^(c_i), σ̃)
//! ```
//!
//! with the `c_i` recomputed from the signature, so a derived signature is
//! bound to the exact index set it was produced for. The signature is four
//! elements regardless of `n` or `|I|`; only the public key grows with `n`.

use std::collections::BTreeMap;

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::group::{
    random_non_identity, random_nonzero_scalar, scalar_powers, GroupElement, PairingBackend,
    Scalar,
};
use crate::wire::{ObjectKind, Reader, Writer};

/// Domain tag under which the `c_i` commitment scalars are hashed. Stored
/// in every public key so issuer and verifier agree by construction.
pub const DEFAULT_HASH_ID: &str = "rss:c:v1";

/// Retained (disclosed) message positions: a non-empty subset of `[1, n]`,
/// kept sorted and duplicate-free. Indices are 1-based as in the scheme
/// description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    indices: Vec<u32>,
    n: u32,
}

impl IndexSet {
    /// Validates and normalizes a set of retained indices against message
    /// length `n`. Rejects empty sets, duplicates, and indices outside
    /// `[1, n]`.
    pub fn new(n: u32, indices: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("message length must be at least 1".into()));
        }
        let mut indices: Vec<u32> = indices.into_iter().collect();
        indices.sort_unstable();
        if indices.is_empty() {
            return Err(Error::InvalidParameter("retained index set must not be empty".into()));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate retained index".into()));
        }
        if indices[0] == 0 || *indices.last().expect("non-empty") > n {
            return Err(Error::InvalidParameter(format!(
                "retained indices must lie in [1, {n}]"
            )));
        }
        Ok(IndexSet { indices, n })
    }

    /// The full set `[1, n]` (nothing redacted).
    pub fn full(n: u32) -> Result<Self> {
        IndexSet::new(n, 1..=n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Retained indices, ascending.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sets
    }

    pub fn is_full(&self) -> bool {
        self.indices.len() == self.n as usize
    }

    pub fn contains(&self, index: u32) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// The redacted complement `Ī = [1, n] \ I`, ascending.
    pub fn complement(&self) -> Vec<u32> {
        (1..=self.n).filter(|i| !self.contains(*i)).collect()
    }
}

/// Secret key `(x, y)` for messages of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RssSecretKey<B: PairingBackend> {
    x: B::Scalar,
    y: B::Scalar,
    n: u32,
}

/// Public key with the gap-indexed G1 vector; see the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RssPublicKey<B: PairingBackend> {
    hash_id: String,
    g: B::G1,
    g2: B::G2,
    /// `Y_i` for `i ∈ [1,n] ∪ [n+2,2n]` in ascending index order
    /// (`2n − 1` elements; index `n+1` is deliberately absent).
    y_g1: Vec<B::G1>,
    x_tilde: B::G2,
    /// `Ỹ_i` for `i ∈ [1,n]`.
    y_tildes: Vec<B::G2>,
    n: u32,
}

/// Signature `(σ₁, σ₂, σ₃, σ̃)`. Fresh signatures carry
/// `σ₃ = 1_G1, σ̃ = 1_G2`; derived ones do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RssSignature<B: PairingBackend> {
    sigma1: B::G1,
    sigma2: B::G1,
    sigma3: B::G1,
    sigma_tilde: B::G2,
}

/// Generates a key pair for messages of length `n`.
pub fn keygen<B: PairingBackend, R: RngCore + ?Sized>(
    n: u32,
    rng: &mut R,
) -> Result<(RssSecretKey<B>, RssPublicKey<B>)> {
    let sk = RssSecretKey::generate(n, rng)?;
    let pk = sk.public_key(rng);
    Ok((sk, pk))
}

/// Builds a key pair from fixed generators and scalars. Test and import
/// path; `keygen` is the normal entry point.
pub(crate) fn keygen_with<B: PairingBackend>(
    g: B::G1,
    g2: B::G2,
    x: B::Scalar,
    y: B::Scalar,
    n: u32,
) -> Result<(RssSecretKey<B>, RssPublicKey<B>)> {
    let sk = RssSecretKey::from_parts(x, y, n)?;
    if g.is_identity() || g2.is_identity() {
        return Err(Error::InvalidParameter("generators must not be the identity".into()));
    }
    let pk = sk.public_key_with_generators(g, g2);
    Ok((sk, pk))
}

impl<B: PairingBackend> RssSecretKey<B> {
    /// Samples `(x, y)` for message length `n`; `y` is resampled if the
    /// negligible zero draw comes up (zero `y` would collapse the key
    /// vector to identities).
    pub fn generate<R: RngCore + ?Sized>(n: u32, rng: &mut R) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("message length must be at least 1".into()));
        }
        let x = B::Scalar::random(rng);
        let y = random_nonzero_scalar::<B::Scalar, R>(rng);
        Ok(RssSecretKey { x, y, n })
    }

    pub fn from_parts(x: B::Scalar, y: B::Scalar, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("message length must be at least 1".into()));
        }
        if y.is_zero() {
            return Err(Error::InvalidParameter("y must be nonzero".into()));
        }
        Ok(RssSecretKey { x, y, n })
    }

    /// Publishes the key: samples fresh generators and computes the powers
    /// of `y` in both groups.
    pub fn public_key<R: RngCore + ?Sized>(&self, rng: &mut R) -> RssPublicKey<B> {
        let g: B::G1 = random_non_identity(rng);
        let g2: B::G2 = random_non_identity(rng);
        self.public_key_with_generators(g, g2)
    }

    fn public_key_with_generators(&self, g: B::G1, g2: B::G2) -> RssPublicKey<B> {
        let n = self.n as usize;
        // y^1 .. y^(2n); slots [0, n) and [n+1, 2n) are published, slot n
        // (paper index n+1) is the gap.
        let powers = scalar_powers(&self.y, 2 * n);
        let mut y_g1 = Vec::with_capacity(2 * n - 1);
        for (slot, power) in powers.iter().enumerate() {
            if slot == n {
                continue;
            }
            y_g1.push(g.pow(power));
        }
        let y_tildes = powers[..n].iter().map(|p| g2.pow(p)).collect();
        RssPublicKey {
            hash_id: DEFAULT_HASH_ID.to_string(),
            x_tilde: g2.pow(&self.x),
            g,
            g2,
            y_g1,
            y_tildes,
            n: self.n,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn x(&self) -> &B::Scalar {
        &self.x
    }

    pub fn y(&self) -> &B::Scalar {
        &self.y
    }

    /// Signs `n` message scalars: `σ₂ = σ₁^(x + Σ_{i=1}^n y^i·m_i)` for a
    /// random non-identity `σ₁`, with `σ₃` and `σ̃` set to the identities.
    pub fn sign<R: RngCore + ?Sized>(
        &self,
        messages: &[B::Scalar],
        rng: &mut R,
    ) -> Result<RssSignature<B>> {
        let sigma1: B::G1 = random_non_identity(rng);
        self.sign_with_base(messages, sigma1)
    }

    pub(crate) fn sign_with_base(
        &self,
        messages: &[B::Scalar],
        sigma1: B::G1,
    ) -> Result<RssSignature<B>> {
        if messages.len() != self.n as usize {
            return Err(Error::InvalidParameter(format!(
                "message vector has {} entries, key covers {}",
                messages.len(),
                self.n
            )));
        }
        let mut exponent = self.x.clone();
        let mut y_power = self.y.clone();
        for m in messages {
            exponent = exponent.add(&y_power.mul(m));
            y_power = y_power.mul(&self.y);
        }
        Ok(RssSignature {
            sigma2: sigma1.pow(&exponent),
            sigma1,
            sigma3: B::G1::identity(),
            sigma_tilde: B::G2::identity(),
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(ObjectKind::RssSecretKey, &B::descriptor(), self.n);
        w.bytes(&self.x.to_bytes());
        w.bytes(&self.y.to_bytes());
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let n = r.header::<B>(ObjectKind::RssSecretKey)?;
        let scalar_len = B::Scalar::encoded_len();
        let x = B::Scalar::from_bytes(r.take(scalar_len)?)?;
        let y = B::Scalar::from_bytes(r.take(scalar_len)?)?;
        r.expect_end()?;
        RssSecretKey::from_parts(x, y, n).map_err(|e| Error::Encoding(e.to_string()))
    }
}

impl<B: PairingBackend> RssPublicKey<B> {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Domain tag under which this key's `c_i` scalars are hashed.
    pub fn hash_id(&self) -> &str {
        &self.hash_id
    }

    pub fn g(&self) -> &B::G1 {
        &self.g
    }

    pub fn g2(&self) -> &B::G2 {
        &self.g2
    }

    pub fn x_tilde(&self) -> &B::G2 {
        &self.x_tilde
    }

    /// `Ỹ_i` for `i ∈ [1,n]`, ascending.
    pub fn y_tildes(&self) -> &[B::G2] {
        &self.y_tildes
    }

    /// `Y_i` for a 1-based index in `[1,n] ∪ [n+2,2n]`. Asking for the gap
    /// index `n+1` is a bug in the caller and reported as an internal
    /// error; the derivation below can never produce it because
    /// `n+1−i+j = n+1` would need `j = i`, impossible for `j ∈ Ī, i ∈ I`.
    pub fn y_g1_at(&self, index: u32) -> Result<&B::G1> {
        let n = self.n;
        let slot = if (1..=n).contains(&index) {
            index - 1
        } else if (n + 2..=2 * n).contains(&index) {
            index - 2
        } else if index == n + 1 {
            return Err(Error::Internal(format!("gap index {index} requested from key vector")));
        } else {
            return Err(Error::InvalidParameter(format!(
                "index {index} outside [1,{n}] ∪ [{},{}]",
                n + 2,
                2 * n
            )));
        };
        Ok(&self.y_g1[slot as usize])
    }

    /// Holder-side derivation of a signature on the retained set `keep`.
    /// Needs the fresh signature, the full message vector, and this public
    /// key — never the secret key.
    pub fn derive<R: RngCore + ?Sized>(
        &self,
        sig: &RssSignature<B>,
        messages: &[B::Scalar],
        keep: &IndexSet,
        rng: &mut R,
    ) -> Result<RssSignature<B>> {
        let r = random_nonzero_scalar::<B::Scalar, R>(rng);
        let t = random_nonzero_scalar::<B::Scalar, R>(rng);
        self.derive_with_scalars(sig, messages, keep, &r, &t)
    }

    pub(crate) fn derive_with_scalars(
        &self,
        sig: &RssSignature<B>,
        messages: &[B::Scalar],
        keep: &IndexSet,
        r: &B::Scalar,
        t: &B::Scalar,
    ) -> Result<RssSignature<B>> {
        if messages.len() != self.n as usize {
            return Err(Error::InvalidParameter(format!(
                "message vector has {} entries, key covers {}",
                messages.len(),
                self.n
            )));
        }
        if keep.n() != self.n {
            return Err(Error::InvalidParameter(format!(
                "index set is over [1,{}], key covers [1,{}]",
                keep.n(),
                self.n
            )));
        }
        if !sig.is_fresh() {
            return Err(Error::InvalidParameter(
                "derivation consumes a fresh signature, not an already-derived one".into(),
            ));
        }

        let redacted = keep.complement();
        let message_at = |j: u32| &messages[(j - 1) as usize];

        let sigma1 = sig.sigma1.pow(r);
        let sigma2 = sig.sigma2.pow(r).mul(&sigma1.pow(t));
        let mut sigma_tilde = self.g2.pow(t);
        for &j in &redacted {
            sigma_tilde = sigma_tilde.mul(&self.y_tildes[(j - 1) as usize].pow(message_at(j)));
        }

        let commitments = self.commitment_scalars(&sigma1, &sigma2, &sigma_tilde, keep);
        let mut sigma3 = B::G1::identity();
        for (&i, c_i) in keep.indices().iter().zip(&commitments) {
            let mut factor = self.y_g1_at(self.n + 1 - i)?.pow(t);
            for &j in &redacted {
                factor = factor.mul(&self.y_g1_at(self.n + 1 - i + j)?.pow(message_at(j)));
            }
            sigma3 = sigma3.mul(&factor.pow(c_i));
        }

        Ok(RssSignature {
            sigma1,
            sigma2,
            sigma3,
            sigma_tilde,
        })
    }

    /// Verifies a signature on the disclosed scalars, keyed by their
    /// 1-based positions. `Ok(false)` is a cryptographic reject; errors are
    /// reserved for structurally invalid calls (indices outside `[1, n]`,
    /// empty disclosure).
    pub fn verify(
        &self,
        sig: &RssSignature<B>,
        disclosed: &BTreeMap<u32, B::Scalar>,
    ) -> Result<bool> {
        let keep = IndexSet::new(self.n, disclosed.keys().copied())?;
        if sig.sigma1.is_identity() {
            return Ok(false);
        }
        // A fresh-form signature (σ̃ = 1) must carry σ₃ = 1 as well;
        // equation 2 degenerates for it and would otherwise accept junk σ₃.
        if sig.sigma_tilde.is_identity() && !sig.sigma3.is_identity() {
            return Ok(false);
        }

        let mut acc_g2 = self.x_tilde.mul(&sig.sigma_tilde);
        for (&i, m) in disclosed {
            acc_g2 = acc_g2.mul(&self.y_tildes[(i - 1) as usize].pow(m));
        }
        if B::pairing(&sig.sigma1, &acc_g2) != B::pairing(&sig.sigma2, &self.g2) {
            return Ok(false);
        }

        let commitments = self.commitment_scalars(&sig.sigma1, &sig.sigma2, &sig.sigma_tilde, &keep);
        let mut acc_g1 = B::G1::identity();
        for (&i, c_i) in keep.indices().iter().zip(&commitments) {
            acc_g1 = acc_g1.mul(&self.y_g1_at(self.n + 1 - i)?.pow(c_i));
        }
        Ok(B::pairing(&sig.sigma3, &self.g2) == B::pairing(&acc_g1, &sig.sigma_tilde))
    }

    /// `c_i = H(σ₁ ‖ σ₂ ‖ σ̃ ‖ I ‖ i)` for each retained `i`, in index
    /// order. The payload is the fixed-length element encodings, then the
    /// index set as a u32 BE count followed by u32 BE indices ascending,
    /// then `i` as u32 BE; the key's `hash_id` is the domain tag.
    fn commitment_scalars(
        &self,
        sigma1: &B::G1,
        sigma2: &B::G1,
        sigma_tilde: &B::G2,
        keep: &IndexSet,
    ) -> Vec<B::Scalar> {
        let mut common = sigma1.to_bytes();
        common.extend_from_slice(&sigma2.to_bytes());
        common.extend_from_slice(&sigma_tilde.to_bytes());
        common.extend_from_slice(&(keep.len() as u32).to_be_bytes());
        for &index in keep.indices() {
            common.extend_from_slice(&index.to_be_bytes());
        }
        keep.indices()
            .iter()
            .map(|&i| {
                let mut payload = common.clone();
                payload.extend_from_slice(&i.to_be_bytes());
                B::hash_to_scalar(self.hash_id.as_bytes(), &payload)
            })
            .collect()
    }

    /// Serialized length, from the documented layout (and equal to
    /// `to_bytes().len()`): affine in `n`.
    pub fn encoded_len(&self) -> usize {
        let d = B::descriptor();
        crate::wire::header_len(&d)
            + 2
            + self.hash_id.len()
            + (2 * self.n as usize) * B::G1::encoded_len()
            + (2 + self.n as usize) * B::G2::encoded_len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(ObjectKind::RssPublicKey, &B::descriptor(), self.n);
        w.block16(self.hash_id.as_bytes());
        w.bytes(&self.g.to_bytes());
        w.bytes(&self.g2.to_bytes());
        for y in &self.y_g1 {
            w.bytes(&y.to_bytes());
        }
        w.bytes(&self.x_tilde.to_bytes());
        for y_tilde in &self.y_tildes {
            w.bytes(&y_tilde.to_bytes());
        }
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let n = r.header::<B>(ObjectKind::RssPublicKey)?;
        if n == 0 {
            return Err(Error::Encoding("RSS public key with zero messages".into()));
        }
        let hash_id = String::from_utf8(r.block16()?.to_vec())
            .map_err(|_| Error::Encoding("hash id is not UTF-8".into()))?;
        let g1_len = B::G1::encoded_len();
        let g2_len = B::G2::encoded_len();
        let g = B::G1::from_bytes(r.take(g1_len)?)?;
        let g2 = B::G2::from_bytes(r.take(g2_len)?)?;
        let y_g1 = (0..2 * n as usize - 1)
            .map(|_| B::G1::from_bytes(r.take(g1_len)?))
            .collect::<Result<Vec<_>>>()?;
        let x_tilde = B::G2::from_bytes(r.take(g2_len)?)?;
        let y_tildes = (0..n as usize)
            .map(|_| B::G2::from_bytes(r.take(g2_len)?))
            .collect::<Result<Vec<_>>>()?;
        r.expect_end()?;
        if g.is_identity() || g2.is_identity() {
            return Err(Error::Encoding("public key generator is the identity".into()));
        }
        Ok(RssPublicKey {
            hash_id,
            g,
            g2,
            y_g1,
            x_tilde,
            y_tildes,
            n,
        })
    }
}

impl<B: PairingBackend> RssSignature<B> {
    pub fn from_parts(sigma1: B::G1, sigma2: B::G1, sigma3: B::G1, sigma_tilde: B::G2) -> Self {
        RssSignature {
            sigma1,
            sigma2,
            sigma3,
            sigma_tilde,
        }
    }

    pub fn sigma1(&self) -> &B::G1 {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &B::G1 {
        &self.sigma2
    }

    pub fn sigma3(&self) -> &B::G1 {
        &self.sigma3
    }

    pub fn sigma_tilde(&self) -> &B::G2 {
        &self.sigma_tilde
    }

    /// Whether this is a fresh (never-derived) signature.
    pub fn is_fresh(&self) -> bool {
        self.sigma3.is_identity() && self.sigma_tilde.is_identity()
    }

    /// Serialized length: header plus `3·|G1| + |G2|`, independent of the
    /// message length and of how many indices were retained.
    pub fn encoded_len() -> usize {
        let d = B::descriptor();
        crate::wire::header_len(&d) + 3 * B::G1::encoded_len() + B::G2::encoded_len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::header(ObjectKind::RssSignature, &B::descriptor(), 0);
        w.bytes(&self.sigma1.to_bytes());
        w.bytes(&self.sigma2.to_bytes());
        w.bytes(&self.sigma3.to_bytes());
        w.bytes(&self.sigma_tilde.to_bytes());
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.header::<B>(ObjectKind::RssSignature)?;
        let g1_len = B::G1::encoded_len();
        let sigma1 = B::G1::from_bytes(r.take(g1_len)?)?;
        let sigma2 = B::G1::from_bytes(r.take(g1_len)?)?;
        let sigma3 = B::G1::from_bytes(r.take(g1_len)?)?;
        let sigma_tilde = B::G2::from_bytes(r.take(B::G2::encoded_len())?)?;
        r.expect_end()?;
        Ok(RssSignature {
            sigma1,
            sigma2,
            sigma3,
            sigma_tilde,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::mock::{MockBackend, MockG1, MockG2, MockScalar, MOCK_GROUP_ORDER};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    type Sk = RssSecretKey<MockBackend>;
    type Pk = RssPublicKey<MockBackend>;
    type Sig = RssSignature<MockBackend>;

    fn seeded(seed: u64) -> StdRng {
        StdRng::seed_from_u64(seed)
    }

    fn mock_scalars(values: &[u64]) -> Vec<MockScalar> {
        values.iter().map(|&v| MockScalar::new(v)).collect()
    }

    fn mod_mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % MOCK_GROUP_ORDER as u128) as u64
    }

    /// Key pair over unit generators (g = g^1, g̃ = g̃^1) so tracked
    /// exponents equal the algebraic exponents directly.
    fn unit_keypair(x: u64, y: u64, n: u32) -> (Sk, Pk) {
        keygen_with::<MockBackend>(
            MockG1::from_log(1),
            MockG2::from_log(1),
            MockScalar::new(x),
            MockScalar::new(y),
            n,
        )
        .unwrap()
    }

    fn disclosed_map(messages: &[MockScalar], keep: &IndexSet) -> BTreeMap<u32, MockScalar> {
        keep.indices()
            .iter()
            .map(|&i| (i, messages[(i - 1) as usize]))
            .collect()
    }

    #[test]
    fn index_set_validation() {
        let set = IndexSet::new(5, [5, 1, 3]).unwrap();
        assert_eq!(set.indices(), &[1, 3, 5]);
        assert_eq!(set.complement(), vec![2, 4]);
        assert!(IndexSet::new(5, []).is_err());
        assert!(IndexSet::new(5, [0]).is_err());
        assert!(IndexSet::new(5, [6]).is_err());
        assert!(IndexSet::new(5, [2, 2]).is_err());
        assert!(IndexSet::full(3).unwrap().is_full());
    }

    #[test]
    fn keygen_publishes_gap_indexed_vector() {
        // n = 2 → Y defined at {1, 2, 4}, Ỹ at {1, 2}.
        let (_, pk) = unit_keypair(3, 5, 2);
        assert_eq!(pk.y_tildes().len(), 2);
        assert!(pk.y_g1_at(1).is_ok());
        assert!(pk.y_g1_at(2).is_ok());
        assert!(pk.y_g1_at(4).is_ok());
        assert!(matches!(pk.y_g1_at(3), Err(Error::Internal(_))));
        assert!(matches!(pk.y_g1_at(5), Err(Error::InvalidParameter(_))));

        // y = 5: tracked exponents are the powers of y, with Y_4 = g^(5^4).
        assert_eq!(pk.y_g1_at(1).unwrap().log(), 5);
        assert_eq!(pk.y_g1_at(2).unwrap().log(), 25);
        assert_eq!(pk.y_g1_at(4).unwrap().log(), 625);
        assert_eq!(pk.y_tildes()[1].log(), 25);
        assert_eq!(pk.x_tilde().log(), 3);
    }

    #[test]
    fn keygen_zero_length_rejected() {
        assert!(matches!(
            keygen::<MockBackend, _>(0, &mut seeded(1)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(Sk::from_parts(MockScalar::new(1), MockScalar::zero(), 3).is_err());
    }

    #[test]
    fn keygen_exponents_match_oracle() {
        let mut rng = seeded(42);
        let (sk, pk) = keygen::<MockBackend, _>(3, &mut rng).unwrap();
        let g_log = pk.g().log();
        let g2_log = pk.g2().log();
        let y = sk.y().value();
        let mut y_power = 1u64;
        for i in 1..=6u32 {
            y_power = mod_mul(y_power, y);
            if i == 4 {
                continue; // the n+1 gap
            }
            if i <= 3 {
                assert_eq!(pk.y_tildes()[(i - 1) as usize].log(), mod_mul(g2_log, y_power));
            }
            assert_eq!(pk.y_g1_at(i).unwrap().log(), mod_mul(g_log, y_power));
        }
        assert_eq!(pk.x_tilde().log(), mod_mul(g2_log, sk.x().value()));
    }

    #[test]
    fn public_key_size_grows_linearly() {
        let mut rng = seeded(7);
        let (_, pk3) = keygen::<MockBackend, _>(3, &mut rng).unwrap();
        let (_, pk6) = keygen::<MockBackend, _>(6, &mut rng).unwrap();
        let g1_len = MockG1::encoded_len();
        let g2_len = MockG2::encoded_len();
        assert_eq!(pk3.to_bytes().len(), pk3.encoded_len());
        assert_eq!(pk6.to_bytes().len(), pk6.encoded_len());
        // Doubling n adds 2n G1 elements and n G2 elements.
        assert_eq!(
            pk6.encoded_len() - pk3.encoded_len(),
            6 * g1_len + 3 * g2_len
        );
    }

    #[test]
    fn sign_exponent_oracle() {
        // x=3, y=5, m=(7,4): exponent is 3 + 5·7 + 25·4 = 138.
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let sig = sk.sign_with_base(&messages, MockG1::from_log(1)).unwrap();
        assert_eq!(sig.sigma2().log(), 138);
        assert!(sig.is_fresh());

        // Random σ₁: the relation σ₂ = σ₁^138 still holds on exponents.
        let sig = sk.sign(&messages, &mut seeded(3)).unwrap();
        assert_eq!(sig.sigma2().log(), mod_mul(sig.sigma1().log(), 138));

        let keep = IndexSet::full(2).unwrap();
        assert!(pk.verify(&sig, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn sign_length_mismatch_rejected() {
        let (sk, _) = unit_keypair(3, 5, 2);
        assert!(matches!(
            sk.sign(&mock_scalars(&[1]), &mut seeded(1)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn fresh_signatures_are_randomized() {
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let sig_a = sk.sign(&messages, &mut seeded(1)).unwrap();
        let sig_b = sk.sign(&messages, &mut seeded(2)).unwrap();
        assert_ne!(sig_a.sigma1(), sig_b.sigma1());
        let keep = IndexSet::full(2).unwrap();
        assert!(pk.verify(&sig_a, &disclosed_map(&messages, &keep)).unwrap());
        assert!(pk.verify(&sig_b, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn derive_matches_symbolic_expansion() {
        // n=2, y=5, m=(7,4), I={1}, r=1, t=0:
        //   σ̃' = Ỹ₂^4            → exponent 25·4 = 100
        //   σ₃' = [Y₄^4]^c₁       → exponent 5⁴·4·c₁ = 2500·c₁
        // and equation 2 balances: e(σ₃', g̃) = 2500·c₁ = e(Y₂^c₁, σ̃').
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let fresh = sk.sign_with_base(&messages, MockG1::from_log(1)).unwrap();
        let keep = IndexSet::new(2, [1]).unwrap();
        let derived = pk
            .derive_with_scalars(&fresh, &messages, &keep, &MockScalar::one(), &MockScalar::zero())
            .unwrap();

        assert_eq!(derived.sigma_tilde().log(), 100);
        let c1 = pk
            .commitment_scalars(
                derived.sigma1(),
                derived.sigma2(),
                derived.sigma_tilde(),
                &keep,
            )[0]
            .value();
        assert_eq!(derived.sigma3().log(), mod_mul(2500, c1));

        let lhs = MockBackend::pairing(derived.sigma3(), pk.g2()).log();
        let rhs = MockBackend::pairing(&pk.y_g1_at(2).unwrap().pow(&MockScalar::new(c1)), derived.sigma_tilde())
            .log();
        assert_eq!(lhs, mod_mul(2500, c1));
        assert_eq!(lhs, rhs);

        assert!(pk.verify(&derived, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn derive_keep_all_verifies() {
        let (sk, pk) = unit_keypair(9, 11, 4);
        let messages = mock_scalars(&[3, 1, 4, 1]);
        let fresh = sk.sign(&messages, &mut seeded(5)).unwrap();
        let keep = IndexSet::full(4).unwrap();
        let derived = pk.derive(&fresh, &messages, &keep, &mut seeded(6)).unwrap();
        assert!(!derived.is_fresh());
        assert!(pk.verify(&derived, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn derive_requires_fresh_signature() {
        let (sk, pk) = unit_keypair(9, 11, 3);
        let messages = mock_scalars(&[3, 1, 4]);
        let fresh = sk.sign(&messages, &mut seeded(5)).unwrap();
        let keep = IndexSet::new(3, [1, 2]).unwrap();
        let derived = pk.derive(&fresh, &messages, &keep, &mut seeded(6)).unwrap();
        assert!(matches!(
            pk.derive(&derived, &messages, &keep, &mut seeded(7)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn derivations_are_rerandomized() {
        let (sk, pk) = unit_keypair(2, 7, 3);
        let messages = mock_scalars(&[10, 20, 30]);
        let fresh = sk.sign(&messages, &mut seeded(1)).unwrap();
        let keep = IndexSet::new(3, [2]).unwrap();
        let a = pk.derive(&fresh, &messages, &keep, &mut seeded(100)).unwrap();
        let b = pk.derive(&fresh, &messages, &keep, &mut seeded(200)).unwrap();
        assert_ne!(a.to_bytes(), b.to_bytes());
        assert!(pk.verify(&a, &disclosed_map(&messages, &keep)).unwrap());
        assert!(pk.verify(&b, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn verify_six_attribute_redaction() {
        // Keep {1, 5} of n = 6 — the shape of redacting a credential down
        // to two fields.
        let mut rng = seeded(33);
        let (sk, pk) = keygen::<MockBackend, _>(6, &mut rng).unwrap();
        let messages = mock_scalars(&[11, 22, 33, 44, 55, 66]);
        let fresh = sk.sign(&messages, &mut rng).unwrap();
        let keep = IndexSet::new(6, [1, 5]).unwrap();
        let derived = pk.derive(&fresh, &messages, &keep, &mut rng).unwrap();
        assert!(pk.verify(&derived, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn verify_rejects_tampered_disclosure() {
        let mut rng = seeded(44);
        let (sk, pk) = keygen::<MockBackend, _>(4, &mut rng).unwrap();
        let messages = mock_scalars(&[5, 6, 7, 8]);
        let fresh = sk.sign(&messages, &mut rng).unwrap();
        let keep = IndexSet::new(4, [2, 3]).unwrap();
        let derived = pk.derive(&fresh, &messages, &keep, &mut rng).unwrap();

        let mut tampered = disclosed_map(&messages, &keep);
        tampered.insert(2, MockScalar::new(999));
        assert!(!pk.verify(&derived, &tampered).unwrap());
    }

    #[test]
    fn verify_rejects_different_claimed_index_set() {
        let mut rng = seeded(55);
        let (sk, pk) = keygen::<MockBackend, _>(4, &mut rng).unwrap();
        let messages = mock_scalars(&[5, 6, 7, 8]);
        let fresh = sk.sign(&messages, &mut rng).unwrap();
        let keep = IndexSet::new(4, [1, 2]).unwrap();
        let derived = pk.derive(&fresh, &messages, &keep, &mut rng).unwrap();

        // Presenting the same signature under a smaller claimed set: the
        // c_i commitment to I breaks equation 2 even with honest scalars.
        let subset = IndexSet::new(4, [1]).unwrap();
        assert!(!pk.verify(&derived, &disclosed_map(&messages, &subset)).unwrap());
    }

    #[test]
    fn verify_rejects_junk_sigma3_on_fresh_form() {
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let fresh = sk.sign(&messages, &mut seeded(9)).unwrap();
        let junk = Sig::from_parts(
            fresh.sigma1().clone(),
            fresh.sigma2().clone(),
            MockG1::from_log(123),
            MockG2::identity(),
        );
        let keep = IndexSet::full(2).unwrap();
        assert!(!pk.verify(&junk, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn verify_rejects_identity_sigma1() {
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let fresh = sk.sign(&messages, &mut seeded(9)).unwrap();
        let forged = Sig::from_parts(
            MockG1::identity(),
            fresh.sigma2().clone(),
            MockG1::identity(),
            MockG2::identity(),
        );
        let keep = IndexSet::full(2).unwrap();
        assert!(!pk.verify(&forged, &disclosed_map(&messages, &keep)).unwrap());
    }

    #[test]
    fn verify_rejects_out_of_range_index() {
        let (sk, pk) = unit_keypair(3, 5, 2);
        let messages = mock_scalars(&[7, 4]);
        let sig = sk.sign(&messages, &mut seeded(9)).unwrap();
        let mut disclosed = BTreeMap::new();
        disclosed.insert(3u32, MockScalar::new(1));
        assert!(matches!(pk.verify(&sig, &disclosed), Err(Error::InvalidParameter(_))));
        let empty = BTreeMap::new();
        assert!(matches!(pk.verify(&sig, &empty), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn signature_size_constant_in_n() {
        let mut rng = seeded(60);
        for n in [2u32, 10] {
            let (sk, pk) = keygen::<MockBackend, _>(n, &mut rng).unwrap();
            let messages = mock_scalars(&(1..=n as u64).collect::<Vec<_>>());
            let fresh = sk.sign(&messages, &mut rng).unwrap();
            let keep = IndexSet::new(n, [1]).unwrap();
            let derived = pk.derive(&fresh, &messages, &keep, &mut rng).unwrap();
            assert_eq!(fresh.to_bytes().len(), Sig::encoded_len());
            assert_eq!(derived.to_bytes().len(), Sig::encoded_len());
        }
    }

    #[test]
    fn wire_roundtrip_and_mismatch() {
        let mut rng = seeded(70);
        let (sk, pk) = keygen::<MockBackend, _>(3, &mut rng).unwrap();
        let messages = mock_scalars(&[1, 2, 3]);
        let sig = sk.sign(&messages, &mut rng).unwrap();

        assert_eq!(Sk::from_bytes(&sk.to_bytes()).unwrap(), sk);
        assert_eq!(Pk::from_bytes(&pk.to_bytes()).unwrap(), pk);
        assert_eq!(Sig::from_bytes(&sig.to_bytes()).unwrap(), sig);

        assert!(matches!(
            RssPublicKey::<crate::Bls12Backend>::from_bytes(&pk.to_bytes()),
            Err(Error::Compatibility { .. })
        ));
        assert!(matches!(
            Pk::from_bytes(&pk.to_bytes()[..20]),
            Err(Error::Encoding(_))
        ));
    }
}
