//! The shifted-square box sets `A(x, a₁, a₂, a₃)`: tuples `(k, ℓ, m) ∈ [1,x]³`
//! with `k²+ℓ² = y²+a₁`, `k²+m² = z²+a₂`, `m²+ℓ² = w²+a₃` for some
//! `y, z, w ≥ 1`, and the divisor-sum profile that bounds their size.

use serde::{Deserialize, Serialize};

use super::factor::{divisors, factorize_u64, tau_plus_u64};
use super::SmallTriple;
use crate::error::{domain, Result};
use crate::exact::isqrt_u128;

pub const DEFAULT_SHIFT_CAP: i64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABoxResult {
    pub count: usize,
    /// Ordered tuples `(k, ℓ, m)`, sorted.
    pub tuples: Vec<SmallTriple>,
}

/// All `ℓ ∈ [1, x]` with `k² + ℓ² − a = y²` for some `y ≥ 1`.
///
/// Writing `(y − ℓ)(y + ℓ) = k² − a`, the candidates come from the divisor
/// pairs of `|k² − a|`.
fn shifted_partners(k: u64, a: i64, x: u64) -> Vec<u64> {
    let n = (k as i128) * (k as i128) - a as i128;
    if n == 0 {
        // y = ℓ for every ℓ
        return (1..=x).collect();
    }
    let mag = n.unsigned_abs();
    let mag64 = u64::try_from(mag).expect("k² − a fits 64 bits");
    let mut out: Vec<u64> = divisors(&factorize_u64(mag64))
        .into_iter()
        .filter_map(|d| {
            let d = d as u128;
            let e = mag / d;
            if d >= e || !(e - d).is_multiple_of(2) {
                return None;
            }
            // n > 0: y − ℓ = d, y + ℓ = e.  n < 0: ℓ − y = d, ℓ + y = e.
            let l = if n > 0 { (e - d) / 2 } else { (e + d) / 2 };
            let l = u64::try_from(l).ok()?;
            (1..=x).contains(&l).then_some(l)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn is_positive_square(v: i128) -> bool {
    if v <= 0 {
        return false;
    }
    let s = isqrt_u128(v as u128) as i128;
    s * s == v
}

/// `#A(x, a₁, a₂, a₃)` and its members, with `|aᵢ| ≤ 64`.
pub fn enum_a_box(x: u64, a1: i64, a2: i64, a3: i64) -> Result<ABoxResult> {
    enum_a_box_with_cap(x, [a1, a2, a3], DEFAULT_SHIFT_CAP)
}

pub fn enum_a_box_with_cap(x: u64, shifts: [i64; 3], cap: i64) -> Result<ABoxResult> {
    if shifts.iter().any(|a| a.abs() > cap) {
        return domain(format!("shifts {shifts:?} exceed the cap {cap}"));
    }
    if x > 1 << 31 {
        return domain(format!("x = {x} is beyond the supported range"));
    }
    let [a1, a2, a3] = shifts;
    let mut tuples = Vec::new();
    for k in 1..=x {
        let ls = shifted_partners(k, a1, x);
        if ls.is_empty() {
            continue;
        }
        let ms = shifted_partners(k, a2, x);
        for &l in &ls {
            for &m in &ms {
                let w2 = (l as i128).pow(2) + (m as i128).pow(2) - a3 as i128;
                if is_positive_square(w2) {
                    tuples.push([k, l, m]);
                }
            }
        }
    }
    tuples.sort_unstable();
    Ok(ABoxResult { count: tuples.len(), tuples })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub x: u64,
    /// `Σ τ(k²−a₁)·τ(k²−a₂)` over `2 ≤ k ≤ x`, `k² ∉ {a₁, a₂}`.
    pub sum: u128,
    /// `x·(ln x)^15`.
    pub bound: f64,
    pub ratio: f64,
}

/// Partial divisor sums along the grid `2, 4, 8, …` and the endpoint `x`.
pub fn divisor_sum_profile(x: u64, a1: i64, a2: i64) -> Result<Vec<ProfileRow>> {
    if x < 2 {
        return domain(format!("profile needs x ≥ 2, got {x}"));
    }
    let mut grid = Vec::new();
    let mut g = 2u64;
    while g < x {
        grid.push(g);
        g *= 2;
    }
    grid.push(x);

    let tau = |v: i128| 2 * tau_plus_u64(u64::try_from(v.unsigned_abs()).expect("fits 64 bits")) as u128;
    let mut rows = Vec::with_capacity(grid.len());
    let mut sum = 0u128;
    let mut next = grid.iter().peekable();
    for k in 2..=x {
        let k2 = (k as i128) * (k as i128);
        if k2 != a1 as i128 && k2 != a2 as i128 {
            sum += tau(k2 - a1 as i128) * tau(k2 - a2 as i128);
        }
        if next.peek() == Some(&&k) {
            next.next();
            let bound = (k as f64) * (k as f64).ln().powi(15);
            rows.push(ProfileRow { x: k, sum, bound, ratio: sum as f64 / bound });
        }
    }
    Ok(rows)
}
