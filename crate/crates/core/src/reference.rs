//! Brute-force reference enumeration, independent of the fast path in
//! [`crate::enumerate`] apart from the big-integer membership oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::enumerate::{EnumReport, EnumStats, SmallTriple, ValueEntry};
use crate::error::{domain, Error, Result};
use crate::exact::Rational;
use crate::membership::{in_set, is_admissible, verify_indices, Bracket, IndexTriple};

pub const MAX_X: u64 = 300;

/// `T≤x(α)` by a triple loop over `n₁ ≤ n₂ ≤ n₃ ≤ x`; `x ≤ 300`.
pub fn reference_enum_t(alpha: &Rational, x: u64) -> Result<EnumReport> {
    reference_enum(alpha, Bracket::Floor, x)
}

pub fn reference_enum(alpha: &Rational, bracket: Bracket, x: u64) -> Result<EnumReport> {
    if x > MAX_X {
        return Err(Error::Resource(format!("reference enumeration is limited to x ≤ {MAX_X}, got {x}")));
    }
    if !alpha.is_positive() || *alpha > Rational::one() {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    let ns: Vec<u64> =
        (1..=x).filter(|&n| bracket == Bracket::Ceil || is_admissible(alpha, &BigInt::from(n))).collect();
    let value: Vec<BigInt> = ns.iter().map(|&n| bracket.apply(alpha, &BigInt::from(n))).collect::<Result<_>>()?;

    // pair[i][j] for i ≤ j
    let mut pair = vec![vec![false; ns.len()]; ns.len()];
    for i in 0..ns.len() {
        for j in i..ns.len() {
            pair[i][j] = in_set(bracket, alpha, &(&value[i] + &value[j]))?.member;
        }
    }

    let mut index_triples: Vec<SmallTriple> = Vec::new();
    for i in 0..ns.len() {
        for j in i..ns.len() {
            if !pair[i][j] {
                continue;
            }
            for k in j..ns.len() {
                if !(pair[j][k] && pair[i][k]) {
                    continue;
                }
                let idx = IndexTriple::from_u64([ns[i], ns[j], ns[k]]);
                if verify_indices(alpha, bracket, &idx)?.verified {
                    index_triples.push([ns[i], ns[j], ns[k]]);
                }
            }
        }
    }

    let mut first: BTreeMap<SmallTriple, u64> = BTreeMap::new();
    for t in &index_triples {
        let v = t.map(|n| bracket.apply(alpha, &BigInt::from(n)).ok().and_then(|v| v.to_u64()).expect("small value"));
        let e = first.entry(v).or_insert(t[2]);
        *e = (*e).min(t[2]);
    }
    Ok(EnumReport {
        alpha: alpha.clone(),
        bracket,
        x,
        index_triples,
        value_triples: first.into_iter().map(|(values, first_x)| ValueEntry { values, first_x }).collect(),
        stats: EnumStats::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enum_t, enum_tbar};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn matches_fast_path() {
        for (alpha, x) in [(r(1, 2), 300), (r(1, 10), 50), (r(11, 20), 120), (r(1, 1), 300)] {
            let slow = reference_enum_t(&alpha, x).unwrap();
            let fast = enum_t(&alpha, x).unwrap();
            assert_eq!(slow.index_triples, fast.index_triples, "alpha = {alpha}");
            assert_eq!(slow.value_triples, fast.value_triples, "alpha = {alpha}");
        }
        assert!(reference_enum_t(&r(1, 1), 300).unwrap().index_triples.is_empty());
    }

    #[test]
    fn ceiling_matches_fast_path() {
        for alpha in [r(1, 1), r(3, 8), r(2, 5)] {
            let slow = reference_enum(&alpha, Bracket::Ceil, 100).unwrap();
            let fast = enum_tbar(&alpha, 100).unwrap();
            assert_eq!(slow.index_triples, fast.index_triples, "alpha = {alpha}");
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(reference_enum_t(&r(1, 2), 301), Err(Error::Resource(_))));
    }
}
