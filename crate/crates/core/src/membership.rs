//! Exact decision procedures for `m ∈ S(α)` and `m ∈ S̄(α)`, and the
//! seven-sum verification of candidate triples.
//!
//! Each membership query is a single integer square root: `m = ⌊αn²⌋` for
//! `α = p/q` iff `n²` lies in `[⌈qm/p⌉, ⌊(q(m+1)−1)/p⌋]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{domain, precondition, Result};
use crate::exact::{self, serde_big, square_in_range, square_in_range_u128, Rational};

/// Which rounding produces the set: `Floor` gives `S(α)`, `Ceil` gives `S̄(α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bracket {
    Floor,
    Ceil,
}

impl Bracket {
    /// `⌊αn²⌋` or `⌈αn²⌉`.
    pub fn apply(self, alpha: &Rational, n: &BigInt) -> Result<BigInt> {
        match self {
            Bracket::Floor => exact::floor_mul_sq(alpha, n),
            Bracket::Ceil => exact::ceil_mul_sq(alpha, n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipWitness {
    pub member: bool,
    /// Smallest `n` realizing the value, when one exists.
    #[serde(with = "serde_big::option")]
    pub witness: Option<BigInt>,
}

impl MembershipWitness {
    fn from_option(witness: Option<BigInt>) -> Self {
        MembershipWitness { member: witness.is_some(), witness }
    }
}

fn check_query(alpha: &Rational, m: &BigInt) -> Result<()> {
    if !alpha.is_positive() {
        return domain(format!("alpha must be positive, got {alpha}"));
    }
    if !m.is_positive() {
        return domain(format!("membership is only defined for m ≥ 1, got {m}"));
    }
    Ok(())
}

/// Decides `m ∈ S(α)`. For `m ≥ 1` the side condition `n ≥ α^(-1/2)` holds
/// automatically, since `αn² ≥ m ≥ 1`.
pub fn in_s(alpha: &Rational, m: &BigInt) -> Result<MembershipWitness> {
    check_query(alpha, m)?;
    let (p, q) = (alpha.numer(), alpha.denom());
    let lo = (q * m).div_ceil(p);
    let hi = (q * (m + 1u32) - 1u32).div_floor(p);
    Ok(MembershipWitness::from_option(square_in_range(&lo, &hi)))
}

/// Decides `m ∈ S̄(α)`: some `n ≥ 1` with `n² ∈ [⌊q(m−1)/p⌋+1, ⌊qm/p⌋]`.
pub fn in_sbar(alpha: &Rational, m: &BigInt) -> Result<MembershipWitness> {
    check_query(alpha, m)?;
    let (p, q) = (alpha.numer(), alpha.denom());
    let lo = (q * (m - 1u32)).div_floor(p) + 1u32;
    let hi = (q * m).div_floor(p);
    let lo = lo.max(BigInt::one());
    Ok(MembershipWitness::from_option(square_in_range(&lo, &hi)))
}

pub fn in_set(bracket: Bracket, alpha: &Rational, m: &BigInt) -> Result<MembershipWitness> {
    match bracket {
        Bracket::Floor => in_s(alpha, m),
        Bracket::Ceil => in_sbar(alpha, m),
    }
}

/// `n ≥ α^(-1/2)`, checked exactly as `p·n² ≥ q`.
pub fn is_admissible(alpha: &Rational, n: &BigInt) -> bool {
    n.is_positive() && alpha.numer() * n * n >= *alpha.denom()
}

/// Witness indices `n₁ ≤ n₂ ≤ n₃`; construction sorts its input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTriple(#[serde(with = "serde_big::triple")] pub [BigInt; 3]);

impl IndexTriple {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        let mut v = [a.into(), b.into(), c.into()];
        v.sort();
        IndexTriple(v)
    }

    pub fn from_u64(t: [u64; 3]) -> Self {
        IndexTriple::new(t[0], t[1], t[2])
    }

    pub fn to_u64(&self) -> Option<[u64; 3]> {
        Some([self.0[0].to_u64()?, self.0[1].to_u64()?, self.0[2].to_u64()?])
    }
}

/// Values `k ≤ ℓ ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValueTriple(#[serde(with = "serde_big::triple")] pub [BigInt; 3]);

impl ValueTriple {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        let mut v = [a.into(), b.into(), c.into()];
        v.sort();
        ValueTriple(v)
    }

    /// `k, ℓ, m, k+ℓ, ℓ+m, m+k, k+ℓ+m` with their labels.
    pub fn seven_sums(&self) -> [(&'static str, BigInt); 7] {
        let [k, l, m] = &self.0;
        [
            ("k", k.clone()),
            ("l", l.clone()),
            ("m", m.clone()),
            ("k+l", k + l),
            ("l+m", l + m),
            ("m+k", m + k),
            ("k+l+m", k + l + m),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumCheck {
    pub label: String,
    #[serde(with = "serde_big")]
    pub value: BigInt,
    pub membership: MembershipWitness,
}

/// The seven membership checks for one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub bracket: Bracket,
    pub indices: Option<IndexTriple>,
    pub values: ValueTriple,
    pub checks: Vec<SumCheck>,
    /// True iff all seven sums are members.
    pub verified: bool,
}

impl VerificationRecord {
    pub fn failing(&self) -> impl Iterator<Item = &SumCheck> {
        self.checks.iter().filter(|c| !c.membership.member)
    }

    /// The six checks other than `k+ℓ+m` (the face-diagonal analog).
    pub fn pairs_verified(&self) -> bool {
        self.checks.iter().take(6).all(|c| c.membership.member)
    }
}

/// Checks all seven sums of a value triple. Non-positive values are
/// reported as non-members rather than rejected.
pub fn verify_values(
    alpha: &Rational,
    bracket: Bracket,
    values: ValueTriple,
    indices: Option<IndexTriple>,
) -> Result<VerificationRecord> {
    if !alpha.is_positive() {
        return domain(format!("alpha must be positive, got {alpha}"));
    }
    let mut checks = Vec::with_capacity(7);
    for (label, value) in values.seven_sums() {
        let membership = if value.is_positive() {
            in_set(bracket, alpha, &value)?
        } else {
            MembershipWitness { member: false, witness: None }
        };
        checks.push(SumCheck { label: label.to_string(), value, membership });
    }
    let verified = checks.iter().all(|c| c.membership.member);
    Ok(VerificationRecord { bracket, indices, values, checks, verified })
}

/// Verifies `(⌊αn₁²⌋, ⌊αn₂²⌋, ⌊αn₃²⌋) ∈ T(α)`. Every index must satisfy
/// `n ≥ α^(-1/2)`.
pub fn verify_t_tuple(alpha: &Rational, idx: &IndexTriple) -> Result<VerificationRecord> {
    for n in &idx.0 {
        if !is_admissible(alpha, n) {
            return precondition(format!("index {n} is below alpha^(-1/2) for alpha = {alpha}"));
        }
    }
    verify_indices(alpha, Bracket::Floor, idx)
}

/// Ceiling analogue of [`verify_t_tuple`]; indices need only be positive.
pub fn verify_tbar_tuple(alpha: &Rational, idx: &IndexTriple) -> Result<VerificationRecord> {
    for n in &idx.0 {
        if !n.is_positive() {
            return precondition(format!("index {n} must be positive"));
        }
    }
    verify_indices(alpha, Bracket::Ceil, idx)
}

pub(crate) fn verify_indices(alpha: &Rational, bracket: Bracket, idx: &IndexTriple) -> Result<VerificationRecord> {
    let [a, b, c] = &idx.0;
    let values = ValueTriple::new(bracket.apply(alpha, a)?, bracket.apply(alpha, b)?, bracket.apply(alpha, c)?);
    verify_values(alpha, bracket, values, Some(idx.clone()))
}

/// Machine-word form of `α = p/q` for the enumeration hot loops.
///
/// All products are formed in `u128`; callers bound their inputs so that
/// values stay below 2⁶⁴ (see [`FastAlpha::value`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastAlpha {
    pub p: u64,
    pub q: u64,
}

impl FastAlpha {
    pub fn from_rational(alpha: &Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return domain(format!("alpha must be positive, got {alpha}"));
        }
        match alpha.to_u64_pair() {
            Some((p, q)) => Ok(FastAlpha { p, q }),
            None => domain(format!("alpha {alpha} does not fit machine words")),
        }
    }

    /// `⌊αn²⌋` or `⌈αn²⌉`, or `None` if the result exceeds `u64`.
    pub fn value(self, bracket: Bracket, n: u64) -> Option<u64> {
        let num = (self.p as u128).checked_mul((n as u128) * (n as u128))?;
        let q = self.q as u128;
        let v = match bracket {
            Bracket::Floor => num / q,
            Bracket::Ceil => num.div_ceil(q),
        };
        v.to_u64()
    }

    /// Smallest admissible witness: `⌈α^(-1/2)⌉` for floor, `1` for ceiling.
    pub fn min_index(self, bracket: Bracket) -> u64 {
        match bracket {
            Bracket::Ceil => 1,
            Bracket::Floor => {
                // smallest n with p·n² ≥ q
                let mut n = exact::isqrt_u128((self.q / self.p.max(1)) as u128).max(1);
                while (self.p as u128) * (n as u128) * (n as u128) < self.q as u128 {
                    n += 1;
                }
                while n > 1 && (self.p as u128) * ((n - 1) as u128) * ((n - 1) as u128) >= self.q as u128 {
                    n -= 1;
                }
                n
            }
        }
    }

    /// Smallest witness for `m ≥ 1`, if `m` is in the set.
    pub fn witness(self, bracket: Bracket, m: u64) -> Option<u64> {
        if m == 0 {
            return None;
        }
        let (p, q, m) = (self.p as u128, self.q as u128, m as u128);
        let (lo, hi) = match bracket {
            Bracket::Floor => ((q * m).div_ceil(p), (q * (m + 1) - 1) / p),
            Bracket::Ceil => ((q * (m - 1)) / p + 1, (q * m) / p),
        };
        square_in_range_u128(lo.max(1), hi)
    }

    pub fn contains(self, bracket: Bracket, m: u64) -> bool {
        self.witness(bracket, m).is_some()
    }
}

/// Largest cache (in bits) the enumerators will allocate.
pub const CACHE_LIMIT_BITS: u64 = 1 << 35;

/// A bit vector of `S(α) ∩ [1, limit]` (or `S̄(α)`), immutable after
/// construction.
#[derive(Clone, Debug)]
pub struct MembershipCache {
    limit: u64,
    words: Vec<u64>,
}

impl MembershipCache {
    /// Builds the cache, or returns `None` when `limit` exceeds
    /// [`CACHE_LIMIT_BITS`].
    pub fn build(alpha: FastAlpha, bracket: Bracket, limit: u64) -> Option<Self> {
        if limit > CACHE_LIMIT_BITS {
            return None;
        }
        let mut words = vec![0u64; (limit as usize >> 6) + 1];
        let mut n = alpha.min_index(bracket);
        while let Some(v) = alpha.value(bracket, n) {
            if v > limit {
                break;
            }
            if v >= 1 {
                words[(v >> 6) as usize] |= 1 << (v & 63);
            }
            n += 1;
        }
        Some(MembershipCache { limit, words })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn bytes(&self) -> usize {
        self.words.len() * 8
    }

    /// Membership for `1 ≤ m ≤ limit`.
    #[inline]
    pub fn contains(&self, m: u64) -> bool {
        debug_assert!(m <= self.limit);
        self.words[(m >> 6) as usize] >> (m & 63) & 1 == 1
    }
}
