//! The "variant brick" search `V(x)`: triples `2 ≤ n₁ ≤ n₂ ≤ n₃ ≤ x` with
//! `n₁²+n₂²−1`, `n₁²+n₃²−1`, `n₂²+n₃²−1` and `n₁²+n₂²+n₃²−2` all squares.
//!
//! Partners of `n` are found from divisor pairs `d·e = n² − 1` with
//! `d ≡ e (mod 2)`: then `m = (e − d)/2` satisfies
//! `m² + n² − 1 = ((e + d)/2)²`.

use super::factor::{divisors, factorize_u64, merge_factors};
use super::SmallTriple;
use crate::exact::is_square_u128;
use crate::par::{self, Parallelism};

/// All `m ∈ [2, n]` with `m² + n² − 1` a perfect square, ascending.
pub fn partners_below(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let f = merge_factors(&factorize_u64(n - 1), &factorize_u64(n + 1));
    let big_n = (n as u128) * (n as u128) - 1;
    let mut out: Vec<u64> = divisors(&f)
        .into_iter()
        .filter_map(|d| {
            let d = d as u128;
            if d * d > big_n {
                return None;
            }
            let e = big_n / d;
            if !(e - d).is_multiple_of(2) {
                return None;
            }
            let m = ((e - d) / 2) as u64;
            (2..=n).contains(&m).then_some(m)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `V(x)`, sorted.
pub fn enum_v(x: u64) -> Vec<SmallTriple> {
    enum_v_with(x, Parallelism::Parallel)
}

pub fn enum_v_with(x: u64, par: Parallelism) -> Vec<SmallTriple> {
    if x < 2 {
        return Vec::new();
    }
    // partners[n] for n in 0..=x
    let partners: Vec<Vec<u64>> = par::map_range(par, 0, x + 1, partners_below);
    let rows: Vec<Vec<SmallTriple>> = par::map_range(par, 2, x + 1, |n3| {
        let p3 = &partners[n3 as usize];
        let mut found = Vec::new();
        for (i, &n2) in p3.iter().enumerate() {
            let p2 = &partners[n2 as usize];
            for &n1 in &p3[..=i] {
                if p2.binary_search(&n1).is_err() {
                    continue;
                }
                let s = (n1 as u128).pow(2) + (n2 as u128).pow(2) + (n3 as u128).pow(2) - 2;
                if is_square_u128(s) {
                    found.push([n1, n2, n3]);
                }
            }
        }
        found
    });
    let mut out: Vec<SmallTriple> = rows.into_iter().flatten().collect();
    out.sort_unstable();
    out
}
