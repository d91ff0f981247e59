//! Pell-number constructions of triples in `T(α)` and `T̄(α)`.
//!
//! Every generator is a candidate generator: it computes the index triple
//! its construction prescribes and then runs the full seven-sum oracle, so
//! the returned [`CandidateTuple`] always carries an honest
//! [`VerificationRecord`].

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, precondition, Result};
use crate::exact::{ceil_sqrt2_times, frac_part, Rational};
use crate::fixed;
use crate::membership::{self, Bracket, IndexTriple, ValueTriple, VerificationRecord};
use crate::pell::{pell, r_of};

/// Which construction produced a candidate, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Source {
    /// `y = P_{2rn}`, `r = r(q)`.
    Floor { q: u64, r: u64, n: u64 },
    /// `y = P_{2n}` for `n` in the A-set of a region.
    FloorRegion { s: Rational, t: Rational, n: u64 },
    /// `α = p/P_q`, `y = P_{qn−1}`.
    CeilOdd { q: u64, p: u64, n: u64 },
    /// `y = P_{rn−2}`, `r = r(q)`, `4 | n`.
    CeilIntervals { q: u64, r: u64, n: u64 },
    /// `y = P_{2n}` with fractional parts in `B₁ ∩ B₂ ∩ B₃`.
    CeilRegion { s: Rational, t: Rational, n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTuple {
    pub alpha: Rational,
    pub source: Source,
    pub indices: IndexTriple,
    pub values: ValueTriple,
    pub record: VerificationRecord,
}

impl CandidateTuple {
    pub fn verified(&self) -> bool {
        self.record.verified
    }
}

/// The region `0 < s < t < 1` together with `a = max(0, (1−t)/2 − s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub s: Rational,
    pub t: Rational,
}

impl RegionSpec {
    pub fn new(s: Rational, t: Rational) -> Result<Self> {
        if !(s.is_positive() && s < t && t < Rational::one()) {
            return domain(format!("region needs 0 < s < t < 1, got s = {s}, t = {t}"));
        }
        Ok(RegionSpec { s, t })
    }

    fn half_gap(&self) -> Rational {
        // (1 − t)/2
        (Rational::one() - self.t.clone()) * Rational::new(1, 2).expect("nonzero")
    }

    pub fn a(&self) -> Rational {
        let v = self.half_gap() - self.s.clone();
        if v.is_positive() {
            v
        } else {
            Rational::zero()
        }
    }

    pub fn contains_closed(&self, alpha: &Rational) -> bool {
        &self.s <= alpha && alpha <= &self.t
    }
}

fn check_unit_interval(alpha: &Rational) -> Result<()> {
    if !(alpha.is_positive() && *alpha < Rational::one()) {
        return domain(format!("alpha must lie in (0, 1), got {alpha}"));
    }
    Ok(())
}

/// `(y, y, y²/2 − 1)` for even `y`.
fn pell_indices(y: &BigInt, minus_one: bool) -> IndexTriple {
    let half = (y * y) >> 1u32;
    let third = if minus_one { half - 1u32 } else { half };
    IndexTriple::new(y.clone(), y.clone(), third)
}

/// Verifies a candidate without rejecting inadmissible indices: an index
/// below `α^(-1/2)` yields a value that is not in `S(α)`, which the record
/// reports as a failed check.
fn candidate(alpha: &Rational, bracket: Bracket, source: Source, indices: IndexTriple) -> Result<CandidateTuple> {
    let record = membership::verify_indices(alpha, bracket, &indices)?;
    Ok(CandidateTuple { alpha: alpha.clone(), source, values: record.values.clone(), indices, record })
}

/// The rational-`α` floor family: `y = P_{2rn}` with `r = r(q)` and indices
/// `(y, y, y²/2 − 1)`. Always verifies for canonical `p/q ∈ (0,1)`, `n ≥ 1`.
pub fn floor_family(alpha: &Rational, n: u64) -> Result<CandidateTuple> {
    check_unit_interval(alpha)?;
    if n == 0 {
        return domain("n must be at least 1");
    }
    let q =
        alpha.denom().to_u64().ok_or_else(|| crate::Error::Domain(format!("denominator of {alpha} is too large")))?;
    let r = r_of(q);
    let y = pell((2 * r * n) as usize);
    let idx = pell_indices(&y, true);
    candidate(alpha, Bracket::Floor, Source::Floor { q, r, n }, idx)
}

/// `⌊ln(16x) / (4⌈√2·q⌉·ln(1+√2))⌋`.
///
/// Evaluated in fixed point starting at 128 bits; when the quotient lands
/// within 2⁻⁶⁴ of an integer the precision is doubled until it does not.
pub fn lower_bound_formula(q: u64, x: &Rational) -> Result<u64> {
    if q == 0 {
        return domain("q must be at least 1");
    }
    if *x <= Rational::one() {
        return domain(format!("x must exceed 1, got {x}"));
    }
    let c = 4 * ceil_sqrt2_times(q);
    let arg = x.mul_int(&BigInt::from(16));
    let mut bits = 128u32;
    loop {
        let num = fixed::ln(&arg, bits)?;
        let den = fixed::ln_one_plus_sqrt2(bits) * c;
        let quotient = (num << bits) / den; // fixed point at `bits`
        let floor = &quotient >> bits;
        let frac = &quotient - (&floor << bits);
        let margin = BigInt::one() << (bits - 64);
        let unit = BigInt::one() << bits;
        if (frac > margin && frac < &unit - &margin) || bits >= 1 << 14 {
            return floor.to_u64().ok_or_else(|| crate::Error::Domain("lower bound out of range".into()));
        }
        bits *= 2;
    }
}

/// `δ(α, W) = (1 − {αW})/W`: every `β ∈ [α, α+δ)` has `⌊βW⌋ = ⌊αW⌋`.
pub fn stability_delta(alpha: &Rational, w: &BigInt) -> Result<Rational> {
    if !alpha.is_positive() || w <= &BigInt::zero() {
        return domain("alpha and W must be positive");
    }
    let frac = frac_part(alpha, w);
    (Rational::one() - frac).div(&Rational::integer(w.clone()))
}

/// `({α·P₂ₙ⁴/4}, {α·P₂ₙ²})`.
pub fn pell_fractional_parts(alpha: &Rational, n: u64) -> (Rational, Rational) {
    let y = pell(2 * n as usize);
    let y2 = &y * &y;
    let quarter_y4 = (&y2 * &y2) >> 2u32; // 4 | y² since y is even
    (frac_part(alpha, &quarter_y4), frac_part(alpha, &y2))
}

/// Membership of `n` in the A-set: `({αP₂ₙ⁴/4}, {αP₂ₙ²}) ∈ [a, (1−t)/2] × [0, (1−t)/2]`.
pub fn a_set_member(alpha: &Rational, region: &RegionSpec, n: u64) -> Result<bool> {
    if !region.contains_closed(alpha) {
        return domain(format!("alpha = {alpha} is outside [{}, {}]", region.s, region.t));
    }
    if n == 0 {
        return domain("n must be at least 1");
    }
    let (u, v) = pell_fractional_parts(alpha, n);
    let top = region.half_gap();
    Ok(region.a() <= u && u <= top && v <= top)
}

/// The almost-all floor family: indices `(P₂ₙ, P₂ₙ, P₂ₙ²/2 − 1)` for `n` in
/// the A-set.
///
/// Requires `α` strictly inside `(s, t)`, `n ≥ 2`, and admissible indices
/// on top of A-set membership; under these conditions the candidate always
/// verifies.
pub fn floor_family_a(alpha: &Rational, region: &RegionSpec, n: u64) -> Result<CandidateTuple> {
    if !a_set_member(alpha, region, n)? {
        return precondition(format!("n = {n} is not in the A-set for alpha = {alpha}"));
    }
    if alpha <= &region.s || alpha >= &region.t {
        return precondition(format!("alpha = {alpha} must lie strictly inside (s, t)"));
    }
    if n < 2 {
        return precondition("n = 1 gives the index 1, below alpha^(-1/2)");
    }
    let y = pell(2 * n as usize);
    let idx = pell_indices(&y, true);
    if !idx.0.iter().all(|i| membership::is_admissible(alpha, i)) {
        return precondition(format!("P_{} is below alpha^(-1/2)", 2 * n));
    }
    let source = Source::FloorRegion { s: region.s.clone(), t: region.t.clone(), n };
    candidate(alpha, Bracket::Floor, source, idx)
}

/// `α = p/P_q` with indices `(P_{qn−1}, P_{qn−1}, P_{qn−1}²/2 − 1)` and
/// ceiling values, for odd `q`, odd `n` and `0 < p < (4/9)P_q`.
///
/// The record may be unverified; small parameters do fail.
pub fn ceil_family_odd(q: u64, p: u64, n: u64) -> Result<CandidateTuple> {
    if q.is_multiple_of(2) || n.is_multiple_of(2) {
        return domain(format!("q = {q} and n = {n} must both be odd"));
    }
    let pq = pell(q as usize);
    if p == 0 || BigInt::from(9 * p as u128) >= &pq * 4u32 {
        return domain(format!("p = {p} must satisfy 0 < p < (4/9)·P_{q} = (4/9)·{pq}"));
    }
    let alpha = Rational::new(p, pq)?;
    let y = pell((q * n - 1) as usize);
    let idx = pell_indices(&y, true);
    candidate(&alpha, Bracket::Ceil, Source::CeilOdd { q, p, n }, idx)
}

fn delta(x: Rational) -> Rational {
    if x.is_integer() {
        Rational::one()
    } else {
        x.fract()
    }
}

/// `(1 − α + δ(9α) − 2δ(4α), 1 − 3α + δ(16α) − δ(9α) − δ(4α))` where
/// `δ(x) = {x}` for non-integers and `1` for integers.
pub fn delta_conditions(alpha: &Rational) -> Result<(Rational, Rational)> {
    check_unit_interval(alpha)?;
    let times = |k: i64| alpha.mul_int(&BigInt::from(k));
    let (d4, d9, d16) = (delta(times(4)), delta(times(9)), delta(times(16)));
    let one = Rational::one();
    let first = one.clone() - alpha.clone() + d9.clone() - d4.clone() - d4.clone();
    let second = one - times(3) + d16 - d9 - d4;
    Ok((first, second))
}

/// Exact membership in `(1/8, 3/16] ∪ (1/3, 3/8] ∪ (5/9, 9/16]`.
pub fn in_ceil_interval_union(alpha: &Rational) -> bool {
    let r = |p: i64, q: i64| Rational::new(p, q).expect("nonzero");
    [(r(1, 8), r(3, 16)), (r(1, 3), r(3, 8)), (r(5, 9), r(9, 16))].iter().any(|(lo, hi)| lo < alpha && alpha <= hi)
}

/// Ceiling family for `α` in the interval union: `y = P_{rn−2}`,
/// `r = r(q)`, indices `(y, y, y²/2)`, `4 | n`.
pub fn ceil_family_intervals(alpha: &Rational, n: u64) -> Result<CandidateTuple> {
    if !in_ceil_interval_union(alpha) {
        return domain(format!("alpha = {alpha} is outside (1/8,3/16] ∪ (1/3,3/8] ∪ (5/9,9/16]"));
    }
    let zero = Rational::zero();
    let (d1, d2) = delta_conditions(alpha)?;
    assert!(d1 == zero && d2 == zero, "interval test and delta conditions disagree at {alpha}");
    if n == 0 || !n.is_multiple_of(4) {
        return domain(format!("n = {n} must be a positive multiple of 4"));
    }
    let q =
        alpha.denom().to_u64().ok_or_else(|| crate::Error::Domain(format!("denominator of {alpha} is too large")))?;
    let r = r_of(q);
    let y = pell((r * n - 2) as usize);
    let idx = pell_indices(&y, false);
    candidate(alpha, Bracket::Ceil, Source::CeilIntervals { q, r, n }, idx)
}

/// `(u, v) ∈ B₁ ∩ B₂ ∩ B₃ ∩ (0,1)²`, all inequalities strict.
pub fn region_b(region: &RegionSpec, u: &Rational, v: &Rational) -> bool {
    let one = Rational::one();
    let two = Rational::integer(2);
    let half = Rational::new(1, 2).expect("nonzero");
    let (s, t) = (&region.s, &region.t);
    let in_unit = |w: &Rational| w.is_positive() && *w < one;
    let b1 = (one.clone() - s.clone()) * half.clone() < *u && *u < (two.clone() - t.clone()) * half;
    let sum = u + v;
    let b2 = one.clone() - s.clone() < sum && sum < two - t.clone();
    let diff = u - v;
    let b3 = *t < diff && diff < one.clone() + s.clone();
    in_unit(u) && in_unit(v) && b1 && b2 && b3
}

/// Ceiling family on `B₁ ∩ B₂ ∩ B₃`: indices `(P₂ₙ, P₂ₙ, P₂ₙ²/2 − 1)` when
/// `({αP₂ₙ²}, {αP₂ₙ⁴/4})` lies in the region.
pub fn ceil_family_region(alpha: &Rational, region: &RegionSpec, n: u64) -> Result<CandidateTuple> {
    if !region.contains_closed(alpha) {
        return domain(format!("alpha = {alpha} is outside [{}, {}]", region.s, region.t));
    }
    if n == 0 {
        return domain("n must be at least 1");
    }
    let (quarter, square) = pell_fractional_parts(alpha, n);
    if !region_b(region, &square, &quarter) {
        return precondition(format!("n = {n}: fractional parts ({square}, {quarter}) are outside the region"));
    }
    let y = pell(2 * n as usize);
    let idx = pell_indices(&y, true);
    let source = Source::CeilRegion { s: region.s.clone(), t: region.t.clone(), n };
    candidate(alpha, Bracket::Ceil, source, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn idx_u64(c: &CandidateTuple) -> [u64; 3] {
        c.indices.to_u64().unwrap()
    }

    fn vals(c: &CandidateTuple) -> Vec<BigInt> {
        c.values.0.to_vec()
    }

    #[test]
    fn floor_family_examples() {
        let c = floor_family(&r(1, 2), 1).unwrap();
        assert_eq!(idx_u64(&c), [12, 12, 71]);
        assert_eq!(vals(&c), vec![b(72), b(72), b(2520)]);
        assert!(c.verified());

        let c = floor_family(&r(1, 3), 1).unwrap();
        assert_eq!(idx_u64(&c), [408, 408, 83231]);
        assert_eq!(vals(&c), vec![b(55488), b(55488), b(2_309_133_120)]);
        assert!(c.verified());

        let c = floor_family(&r(1, 2), 2).unwrap();
        assert_eq!(idx_u64(&c), [408, 408, 83231]);
        assert!(c.verified());

        assert!(floor_family(&r(1, 1), 1).is_err());
        assert!(floor_family(&r(3, 2), 1).is_err());
    }

    #[test]
    fn floor_family_small_denominators() {
        for q in 2..=20i64 {
            for p in 1..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                for n in 1..=3 {
                    let c = floor_family(&r(p, q), n).unwrap();
                    assert!(c.verified(), "{p}/{q}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        // ln(160000)/(12 ln(1+√2)) ≈ 1.133
        assert_eq!(lower_bound_formula(2, &Rational::integer(10_000)).unwrap(), 1);
        // ln(740800)/(60 ln(1+√2)) ≈ 0.256
        assert_eq!(lower_bound_formula(10, &Rational::integer(46_300)).unwrap(), 0);
        let just_above_one = r(1_000_001, 1_000_000);
        assert_eq!(lower_bound_formula(1, &just_above_one).unwrap(), 0);
        assert!(lower_bound_formula(1, &Rational::one()).is_err());
    }

    #[test]
    fn lower_bound_agrees_with_float_away_from_boundaries() {
        let l = (1.0 + 2f64.sqrt()).ln();
        for q in 1..30u64 {
            for x in [2u64, 10, 1000, 10_000, 1 << 30, u64::MAX / 32] {
                let c = 4 * ceil_sqrt2_times(q);
                let v = (16.0 * x as f64).ln() / (c as f64 * l);
                if (v - v.round()).abs() > 1e-9 {
                    let got = lower_bound_formula(q, &Rational::integer(x)).unwrap();
                    assert_eq!(got, v.floor() as u64, "q = {q}, x = {x}");
                }
            }
        }
    }

    #[test]
    fn stability_delta_examples() {
        assert_eq!(stability_delta(&r(1, 2), &b(10)).unwrap(), r(1, 10));
        assert_eq!(stability_delta(&r(1, 3), &b(10)).unwrap(), r(1, 15));
        assert_eq!(stability_delta(&r(1, 2), &b(9)).unwrap(), r(1, 18));
        assert!(stability_delta(&r(0, 1), &b(9)).is_err());
    }

    #[test]
    fn stability_delta_contract() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let q: i64 = rng.gen_range(1..10_000);
            let alpha = r(rng.gen_range(1..3 * q), q);
            let w = b(rng.gen_range(1..1_000_000));
            let delta = stability_delta(&alpha, &w).unwrap();
            // β = α + θ·δ with θ ∈ [0, 1)
            let den: i64 = rng.gen_range(1..1000);
            let theta = r(rng.gen_range(0..den), den);
            let beta = alpha.clone() + theta * delta;
            assert_eq!(beta.mul_int(&w).floor(), alpha.mul_int(&w).floor());
        }
    }

    #[test]
    fn a_set_examples() {
        let region = RegionSpec::new(r(1, 10), r(1, 2)).unwrap();
        assert_eq!(region.a(), r(3, 20));
        assert!(!a_set_member(&r(1, 2), &region, 1).unwrap());
        assert!(!a_set_member(&r(5, 13), &region, 1).unwrap());
        assert_eq!(pell_fractional_parts(&r(5, 13), 1).1, r(7, 13));
        assert!(a_set_member(&r(3, 5), &region, 1).is_err());
        assert!(matches!(floor_family_a(&r(1, 2), &region, 1), Err(crate::Error::Precondition(_))));
        // a = 0 when t ≥ 1 − 2s
        assert_eq!(RegionSpec::new(r(1, 4), r(3, 4)).unwrap().a(), Rational::zero());
        assert!(RegionSpec::new(r(1, 2), r(1, 2)).is_err());
        assert!(RegionSpec::new(r(0, 1), r(1, 2)).is_err());
    }

    #[test]
    fn a_set_integral_second_coordinate_fails_when_a_positive() {
        // α = 1/6: 6 | P₂ₙ² whenever 3 | P₂ₙ (n = 2: P₄ = 12), then both parts are 0
        let region = RegionSpec::new(r(1, 10), r(1, 2)).unwrap();
        let alpha = r(1, 6);
        let (u, v) = pell_fractional_parts(&alpha, 2);
        assert_eq!((u, v), (Rational::zero(), Rational::zero()));
        assert!(!a_set_member(&alpha, &region, 2).unwrap());
    }

    #[test]
    fn boundary_alpha_equal_to_t_can_fail() {
        // α = t = 1/3, n = 1: the closed box admits the point but ⌊αx²⌋ ≠ 2⌊αy²⌋
        let region = RegionSpec::new(r(1, 10), r(1, 3)).unwrap();
        assert!(a_set_member(&r(1, 3), &region, 1).unwrap());
        assert!(floor_family_a(&r(1, 3), &region, 1).is_err());
    }

    #[test]
    fn ceil_odd_examples() {
        let c = ceil_family_odd(5, 4, 1).unwrap();
        assert_eq!(idx_u64(&c), [12, 12, 71]);
        assert_eq!(vals(&c), vec![b(20), b(20), b(696)]);
        assert!(c.verified());

        let c = ceil_family_odd(3, 1, 1).unwrap();
        assert_eq!(idx_u64(&c), [1, 2, 2]);
        assert_eq!(vals(&c), vec![b(1), b(1), b(1)]);
        assert!(!c.verified());
        assert!(c.record.failing().count() >= 1);

        let c = ceil_family_odd(3, 2, 1).unwrap();
        assert!(!c.verified());
        assert!(c.record.failing().any(|f| f.value == b(3)));

        assert!(ceil_family_odd(4, 1, 1).is_err());
        assert!(ceil_family_odd(5, 1, 2).is_err());
        assert!(ceil_family_odd(3, 3, 1).is_err()); // 27 ≥ 20
        assert!(ceil_family_odd(1, 1, 1).is_err());
        assert!(ceil_family_odd(5, 0, 1).is_err());
    }

    #[test]
    fn delta_condition_examples() {
        assert_eq!(delta_conditions(&r(3, 8)).unwrap(), (Rational::zero(), Rational::zero()));
        assert_eq!(delta_conditions(&r(1, 2)).unwrap().0, r(-1, 1));
        assert_eq!(delta_conditions(&r(3, 16)).unwrap(), (Rational::zero(), Rational::zero()));
    }

    #[test]
    fn interval_union_implies_delta_conditions() {
        for q in 1..=120i64 {
            for p in 1..q {
                let alpha = r(p, q);
                if in_ceil_interval_union(&alpha) {
                    let (d1, d2) = delta_conditions(&alpha).unwrap();
                    assert!(d1.is_zero() && d2.is_zero(), "{alpha}");
                }
            }
        }
    }

    #[test]
    fn ceil_intervals_examples() {
        let c = ceil_family_intervals(&r(3, 8), 4).unwrap();
        let y = pell(30);
        assert_eq!(c.indices, IndexTriple::new(y.clone(), y.clone(), (&y * &y) >> 1u32));
        assert_eq!(c.source, Source::CeilIntervals { q: 8, r: 8, n: 4 });
        assert!(c.verified());
        // 1/6 lies in (1/8, 3/16]
        let c = ceil_family_intervals(&r(1, 6), 4).unwrap();
        assert_eq!(c.source, Source::CeilIntervals { q: 6, r: r_of(6), n: 4 });
        assert!(c.verified());
        assert!(ceil_family_intervals(&r(1, 5), 4).is_err());
        assert!(ceil_family_intervals(&r(1, 8), 4).is_err());
        assert!(ceil_family_intervals(&r(3, 8), 2).is_err());
        let c = ceil_family_intervals(&r(9, 16), 4).unwrap();
        assert_eq!(c.source, Source::CeilIntervals { q: 16, r: r_of(16), n: 4 });
        assert!(c.verified());
    }

    #[test]
    fn region_b_examples() {
        let region = RegionSpec::new(r(1, 5), r(2, 5)).unwrap();
        assert!(region_b(&region, &r(7, 10), &r(1, 5)));
        assert!(!region_b(&region, &r(1, 10), &r(1, 10)));
        // u − v = t exactly: B₃ is open
        assert!(!region_b(&region, &r(7, 10), &r(3, 10)));
        // u on the lower B₁ edge (1 − s)/2 = 2/5
        assert!(!region_b(&region, &r(2, 5), &r(0, 1)));
    }

    fn random_alpha_in(s: &Rational, t: &Rational, num: u64, den: u64) -> Rational {
        // s + (t − s)·num/den with 0 < num < den
        s.clone() + (t.clone() - s.clone()) * Rational::new(num, den).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn floor_family_a_never_unverified(num in 1u64..1_000_000, extra in 1u64..1_000_000) {
            let region = RegionSpec::new(r(1, 10), r(1, 2)).unwrap();
            let alpha = random_alpha_in(&region.s, &region.t, num, num + extra);
            for n in 1..=12 {
                match floor_family_a(&alpha, &region, n) {
                    Ok(c) => prop_assert!(c.verified(), "alpha = {}, n = {}", alpha, n),
                    Err(crate::Error::Precondition(_)) => {}
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
            }
        }

        #[test]
        fn ceil_family_region_never_unverified(num in 1u64..1_000_000, extra in 1u64..1_000_000) {
            let region = RegionSpec::new(r(1, 5), r(2, 5)).unwrap();
            let alpha = random_alpha_in(&region.s, &region.t, num, num + extra);
            for n in 1..=12 {
                match ceil_family_region(&alpha, &region, n) {
                    Ok(c) => prop_assert!(c.verified(), "alpha = {}, n = {}", alpha, n),
                    Err(crate::Error::Precondition(_)) => {}
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
            }
        }
    }

    #[test]
    fn region_families_do_fire() {
        // make sure the property tests above are not vacuous
        let region = RegionSpec::new(r(1, 10), r(1, 2)).unwrap();
        let mut fired = 0;
        for k in 1..200u64 {
            let alpha = random_alpha_in(&region.s, &region.t, k * 7919 % 1000 + 1, 1001);
            for n in 2..=12 {
                if floor_family_a(&alpha, &region, n).is_ok() {
                    fired += 1;
                }
            }
        }
        assert!(fired > 0);
        let region = RegionSpec::new(r(1, 5), r(2, 5)).unwrap();
        let mut fired = 0;
        for k in 1..200u64 {
            let alpha = random_alpha_in(&region.s, &region.t, k * 7919 % 1000 + 1, 1001);
            for n in 1..=12 {
                if ceil_family_region(&alpha, &region, n).is_ok() {
                    fired += 1;
                }
            }
        }
        assert!(fired > 0);
    }
}
