//! Exhaustive enumeration of `T≤x(α)` and its ceiling analogue.
//!
//! The search is two-phase. First every ordered pair `n₁ ≤ n₂ ≤ x` is tested
//! for `⌊αn₁²⌋ + ⌊αn₂²⌋ ∈ S(α)`, giving for each `n₁` the sorted list of its
//! partners. Then, for each compatible pair `(n₁, n₂)`, the partner lists of
//! `n₁` and `n₂` are intersected and the triple sum is checked. Both phases
//! split the outer index range into independent rows and keep row order, so
//! the output does not depend on the number of workers.

pub mod abox;
pub mod factor;
pub mod vsearch;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exact::Rational;
use crate::membership::{self, Bracket, FastAlpha, IndexTriple, MembershipCache};
use crate::par::{self, Parallelism};

pub use abox::{divisor_sum_profile, enum_a_box, enum_a_box_with_cap, ABoxResult, ProfileRow};
pub use factor::{factorize, factorize_u64, tau, tau_plus};
pub use vsearch::enum_v;

/// Index triple in machine words, `n₁ ≤ n₂ ≤ n₃`.
pub type SmallTriple = [u64; 3];

#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    pub parallelism: Parallelism,
    /// Upper bound on the membership cache plus the pair relation.
    pub memory_limit_bytes: u64,
    /// Build the bit-vector cache of the set when it fits.
    pub use_cache: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { parallelism: Parallelism::Parallel, memory_limit_bytes: 2 << 30, use_cache: true }
    }
}

/// One distinct value triple with the smallest `x` at which it enters
/// `T≤x(α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueEntry {
    pub values: SmallTriple,
    pub first_x: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    pub pairs_scanned: u64,
    pub compatible_pairs: u64,
    pub triple_candidates: u64,
    pub cache_bytes: u64,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumReport {
    pub alpha: Rational,
    pub bracket: Bracket,
    pub x: u64,
    /// The witness view (`U≤x(α)`), sorted.
    pub index_triples: Vec<SmallTriple>,
    /// The value view (`T≤x(α)`), deduplicated and sorted by value.
    pub value_triples: Vec<ValueEntry>,
    pub stats: EnumStats,
}

impl EnumReport {
    /// `#T≤y(α)` for any `y ≤ x`.
    pub fn count_at(&self, y: u64) -> usize {
        self.value_triples.iter().filter(|v| v.first_x <= y).count()
    }

    /// `#U≤y(α)` for any `y ≤ x`.
    pub fn index_count_at(&self, y: u64) -> usize {
        self.index_triples.iter().filter(|t| t[2] <= y).count()
    }

    /// `(x, #T≤x)` at every jump of the step function, ascending.
    pub fn step_function(&self) -> Vec<(u64, usize)> {
        let mut firsts: Vec<u64> = self.value_triples.iter().map(|v| v.first_x).collect();
        firsts.sort_unstable();
        let mut steps: Vec<(u64, usize)> = Vec::new();
        for (i, x) in firsts.into_iter().enumerate() {
            match steps.last_mut() {
                Some(last) if last.0 == x => last.1 = i + 1,
                _ => steps.push((x, i + 1)),
            }
        }
        steps
    }

    /// Re-verifies every index triple with the big-integer oracle.
    pub fn recheck(&self) -> Result<bool> {
        for t in &self.index_triples {
            let rec = membership::verify_indices(&self.alpha, self.bracket, &IndexTriple::from_u64(*t))?;
            if !rec.verified {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Enumerates `T≤x(α)` for `α ∈ (0, 1]`.
pub fn enum_t(alpha: &Rational, x: u64) -> Result<EnumReport> {
    enum_with(alpha, Bracket::Floor, x, EnumConfig::default())
}

/// Enumerates the ceiling analogue `T̄≤x(α)`.
pub fn enum_tbar(alpha: &Rational, x: u64) -> Result<EnumReport> {
    enum_with(alpha, Bracket::Ceil, x, EnumConfig::default())
}

enum Oracle {
    Cached(MembershipCache),
    Direct(FastAlpha, Bracket),
}

impl Oracle {
    #[inline]
    fn contains(&self, m: u64) -> bool {
        match self {
            Oracle::Cached(c) => c.contains(m),
            Oracle::Direct(a, b) => a.contains(*b, m),
        }
    }
}

fn intersect_from(a: &[u32], b: &[u32], mut visit: impl FnMut(u32)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                visit(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

pub fn enum_with(alpha: &Rational, bracket: Bracket, x: u64, cfg: EnumConfig) -> Result<EnumReport> {
    let start = Instant::now();
    if !alpha.is_positive() || *alpha > Rational::one() {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    if x < 2 {
        return domain(format!("x must be at least 2, got {x}"));
    }
    if x > u32::MAX as u64 {
        return Err(Error::Resource(format!("x = {x} exceeds the 32-bit index range")));
    }
    let fast = FastAlpha::from_rational(alpha)?;
    let n0 = fast.min_index(bracket);
    if n0 > x {
        return domain(format!("x = {x} is below the smallest admissible index {n0}"));
    }

    let rows_total = x - n0 + 1;
    let baseline_bytes = rows_total * (8 + 24);
    if baseline_bytes > cfg.memory_limit_bytes {
        return Err(Error::Resource(format!(
            "value table and pair rows need {baseline_bytes} bytes beyond the {} byte limit",
            cfg.memory_limit_bytes
        )));
    }

    // values[i] is the bracket of α·(n0+i)²
    let mut values = Vec::with_capacity((x - n0 + 1) as usize);
    for n in n0..=x {
        match fast.value(bracket, n) {
            Some(v) => values.push(v),
            None => return Err(Error::Resource(format!("value at n = {n} overflows 64 bits"))),
        }
    }
    let vmax = *values.last().expect("nonempty range");
    let limit = vmax.checked_mul(3).ok_or_else(|| Error::Resource("triple sums overflow 64 bits".into()))?;

    let cache_bytes = limit / 8 + 8;
    let oracle = if cfg.use_cache && cache_bytes <= cfg.memory_limit_bytes {
        MembershipCache::build(fast, bracket, limit).map(Oracle::Cached)
    } else {
        None
    }
    .unwrap_or(Oracle::Direct(fast, bracket));
    let cache_bytes = match &oracle {
        Oracle::Cached(c) => c.bytes() as u64,
        Oracle::Direct(..) => 0,
    };

    let value_of = |n: u64| values[(n - n0) as usize];

    // Phase 1: partner lists (n₂ ≥ n₁).
    let partners: Vec<Vec<u32>> = par::map_range(cfg.parallelism, n0, x + 1, |n1| {
        let v1 = value_of(n1);
        let row = &values[(n1 - n0) as usize..];
        row.iter()
            .enumerate()
            .filter(|&(_, &v2)| oracle.contains(v1 + v2))
            .map(|(i, _)| (n1 + i as u64) as u32)
            .collect()
    });
    let compatible: u64 = partners.iter().map(|p| p.len() as u64).sum();
    let relation_bytes = compatible * 4 + partners.len() as u64 * 24;
    if cache_bytes + relation_bytes > cfg.memory_limit_bytes {
        return Err(Error::Resource(format!(
            "pair relation needs {relation_bytes} bytes beyond the {} byte limit",
            cfg.memory_limit_bytes
        )));
    }
    let row = |n: u64| &partners[(n - n0) as usize];

    // Phase 2: close triangles and test the triple sum.
    let rows: Vec<(Vec<SmallTriple>, u64)> = par::map_range(cfg.parallelism, n0, x + 1, |n1| {
        let mut found = Vec::new();
        let mut candidates = 0u64;
        let p1 = row(n1);
        for (pos, &n2) in p1.iter().enumerate() {
            let n2 = n2 as u64;
            let s12 = value_of(n1) + value_of(n2);
            intersect_from(&p1[pos..], row(n2), |n3| {
                candidates += 1;
                let n3 = n3 as u64;
                if oracle.contains(s12 + value_of(n3)) {
                    found.push([n1, n2, n3]);
                }
            });
        }
        (found, candidates)
    });

    let mut index_triples = Vec::new();
    let mut triple_candidates = 0;
    for (found, c) in rows {
        index_triples.extend(found);
        triple_candidates += c;
    }
    index_triples.sort_unstable();

    let mut by_value: BTreeMap<SmallTriple, u64> = BTreeMap::new();
    for t in &index_triples {
        let v = [value_of(t[0]), value_of(t[1]), value_of(t[2])];
        let e = by_value.entry(v).or_insert(t[2]);
        *e = (*e).min(t[2]);
    }
    let value_triples = by_value.into_iter().map(|(values, first_x)| ValueEntry { values, first_x }).collect();

    let pairs = x - n0 + 1;
    Ok(EnumReport {
        alpha: alpha.clone(),
        bracket,
        x,
        index_triples,
        value_triples,
        stats: EnumStats {
            pairs_scanned: pairs * (pairs + 1) / 2,
            compatible_pairs: compatible,
            triple_candidates,
            cache_bytes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

/// Pair-relation membership, exposed for symmetry checks.
pub fn pair_compatible(alpha: &Rational, bracket: Bracket, a: u64, b: u64) -> Result<bool> {
    let fast = FastAlpha::from_rational(alpha)?;
    let (va, vb) = match (fast.value(bracket, a), fast.value(bracket, b)) {
        (Some(va), Some(vb)) => (va, vb),
        _ => return Err(Error::Resource("value overflows 64 bits".into())),
    };
    Ok(fast.contains(bracket, va + vb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn small_floor_runs() {
        let rep = enum_t(&r(1, 2), 100).unwrap();
        assert_eq!(rep.index_triples, vec![[3, 3, 3], [5, 5, 11], [12, 12, 71], [23, 29, 29]]);
        assert!(rep.recheck().unwrap());
        assert_eq!(rep.count_at(11), 2);
        assert_eq!(rep.step_function(), vec![(3, 1), (11, 2), (29, 3), (71, 4)]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let alpha = r(1, 10);
        let seq = enum_with(
            &alpha,
            Bracket::Floor,
            600,
            EnumConfig { parallelism: Parallelism::Sequential, ..Default::default() },
        )
        .unwrap();
        let par = enum_with(&alpha, Bracket::Floor, 600, EnumConfig::default()).unwrap();
        assert_eq!(seq.index_triples, par.index_triples);
        assert_eq!(seq.value_triples, par.value_triples);
    }

    #[test]
    fn cache_and_direct_oracle_agree() {
        let alpha = r(11, 20);
        let cached = enum_with(&alpha, Bracket::Floor, 400, EnumConfig::default()).unwrap();
        let direct =
            enum_with(&alpha, Bracket::Floor, 400, EnumConfig { use_cache: false, ..Default::default() }).unwrap();
        assert_eq!(cached.index_triples, direct.index_triples);
        assert_eq!(direct.stats.cache_bytes, 0);
    }

    #[test]
    fn ceiling_runs() {
        let rep = enum_tbar(&r(4, 29), 100).unwrap();
        assert!(rep.index_triples.contains(&[12, 12, 71]));
        assert!(rep.recheck().unwrap());
        assert!(enum_tbar(&r(1, 1), 1000).unwrap().index_triples.is_empty());
        let rep = enum_tbar(&r(1, 5), 10).unwrap();
        assert!(!rep.index_triples.contains(&[1, 2, 2]));
    }

    #[test]
    fn memory_guard_is_loud() {
        let cfg = EnumConfig { memory_limit_bytes: 1000, ..Default::default() };
        let err = enum_with(&r(1, 2), Bracket::Floor, 2000, cfg).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn domain_errors() {
        assert!(enum_t(&r(3, 2), 10).is_err());
        assert!(enum_t(&r(0, 1), 10).is_err());
        assert!(enum_t(&r(1, 2), 1).is_err());
        // α = 1/100 needs n ≥ 10
        assert!(enum_t(&r(1, 100), 9).is_err());
    }

    #[test]
    fn pair_relation_is_symmetric() {
        let alpha = r(3, 5);
        for a in 2..60 {
            for b in 2..60 {
                assert_eq!(
                    pair_compatible(&alpha, Bracket::Floor, a, b).unwrap(),
                    pair_compatible(&alpha, Bracket::Floor, b, a).unwrap()
                );
            }
        }
    }

    #[test]
    fn step_function_is_monotone() {
        let rep = enum_t(&r(1, 10), 3000).unwrap();
        let steps = rep.step_function();
        assert!(steps.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
        assert_eq!(steps.last().map(|s| s.1), Some(rep.value_triples.len()));
        assert!(rep.value_triples.len() <= rep.index_triples.len());
        for &(x, c) in &steps {
            assert_eq!(rep.count_at(x), c);
            assert!(rep.count_at(x - 1) < c);
        }
    }
}
