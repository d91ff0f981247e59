//! Equidistribution of the Pell-indexed fractional parts
//! `(u_n, v_n) = ({α·P₂ₙ⁴/4}, {α·P₂ₙ²})`.
//!
//! For `α = p/q` both coordinates depend only on `P₂ₙ mod 2q`, so the
//! sequence is generated with a modular Pell recurrence and never forms the
//! (exponentially long) Pell numbers themselves.

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::construct::RegionSpec;
use crate::error::{domain, Result};
use crate::exact::{isqrt, Rational};
use crate::fixed;

/// Largest `N` accepted by [`frac_sequence`].
pub const MAX_POINTS: u64 = 1_000_000;

/// Working precision of [`weyl_sum`].
pub const WEYL_BITS: u32 = 160;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracPoint2 {
    pub n: u64,
    pub u: Rational,
    pub v: Rational,
}

/// `(u_n, v_n)` for `1 ≤ n ≤ N`.
pub fn frac_sequence(alpha: &Rational, n_max: u64) -> Result<Vec<FracPoint2>> {
    if !alpha.is_positive() {
        return domain(format!("alpha must be positive, got {alpha}"));
    }
    if n_max == 0 || n_max > MAX_POINTS {
        return domain(format!("N must lie in [1, {MAX_POINTS}], got {n_max}"));
    }
    let (p, q) = (alpha.numer(), alpha.denom());
    let modulus: BigInt = q << 1u32;
    // (P_{2n}, P_{2n+1}) mod 2q, starting from (P_0, P_1)
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        for _ in 0..2 {
            let next = ((&b << 1u32) + &a).mod_floor(&modulus);
            a = std::mem::replace(&mut b, next);
        }
        // P_{2n} = 2w, so P²  = 4w² and P⁴/4 = 4w⁴ modulo q
        let w = &a >> 1u32;
        let w2 = (&w * &w).mod_floor(q);
        let quarter = (((&w2 * &w2) << 2u32) * p).mod_floor(q);
        let square = ((w2 << 2u32) * p).mod_floor(q);
        out.push(FracPoint2 { n, u: Rational::new(quarter, q.clone())?, v: Rational::new(square, q.clone())? });
    }
    Ok(out)
}

/// `|N⁻¹ Σ e(h₁u_n + h₂v_n)|`, accumulated in fixed point at
/// [`WEYL_BITS`] bits and rounded to `f64` at the end.
pub fn weyl_sum(h1: i64, h2: i64, alpha: &Rational, n_max: u64) -> Result<f64> {
    if h1 == 0 && h2 == 0 {
        return domain("frequency (0, 0) is excluded");
    }
    let points = frac_sequence(alpha, n_max)?;
    let (bh1, bh2) = (BigInt::from(h1), BigInt::from(h2));
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for pt in &points {
        let theta = pt.u.mul_int(&bh1) + pt.v.mul_int(&bh2);
        let (c, s) = fixed::cos_sin_2pi(&theta, WEYL_BITS);
        re += c;
        im += s;
    }
    let norm = isqrt(&(&re * &re + &im * &im))?;
    Ok(fixed::to_f64(&norm, WEYL_BITS) / n_max as f64)
}

/// Half-open box `[u_lo, u_hi) × [v_lo, v_hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalBox {
    pub u_lo: Rational,
    pub u_hi: Rational,
    pub v_lo: Rational,
    pub v_hi: Rational,
}

impl RationalBox {
    pub fn new(u_lo: Rational, u_hi: Rational, v_lo: Rational, v_hi: Rational) -> Result<Self> {
        let outside = |r: &Rational| *r < Rational::zero() || *r > Rational::one();
        if [&u_lo, &u_hi, &v_lo, &v_hi].into_iter().any(outside) || u_lo > u_hi || v_lo > v_hi {
            return domain("box corners must satisfy 0 ≤ lo ≤ hi ≤ 1");
        }
        Ok(RationalBox { u_lo, u_hi, v_lo, v_hi })
    }

    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        &self.u_lo <= u && u < &self.u_hi && &self.v_lo <= v && v < &self.v_hi
    }

    pub fn area(&self) -> Rational {
        (self.u_hi.clone() - self.u_lo.clone()) * (self.v_hi.clone() - self.v_lo.clone())
    }
}

/// Exact `count / N` of points in the box.
pub fn box_frequency(alpha: &Rational, region: &RationalBox, n_max: u64) -> Result<Rational> {
    let points = frac_sequence(alpha, n_max)?;
    let count = points.iter().filter(|pt| region.contains(&pt.u, &pt.v)).count();
    Rational::new(count as u64, n_max)
}

/// The predicted A-set density `((1−t)/2)·((1−t)/2 − a)`.
pub fn predicted_density_a(region: &RegionSpec) -> Rational {
    let half_gap = (Rational::one() - region.t.clone()) * Rational::new(1, 2).expect("nonzero");
    half_gap.clone() * (half_gap - region.a())
}

/// `(#{n ≤ N : n in the A-set} / N, predicted density)`.
pub fn density_a(alpha: &Rational, region: &RegionSpec, n_max: u64) -> Result<(Rational, Rational)> {
    if !region.contains_closed(alpha) {
        return domain(format!("alpha = {alpha} is outside [{}, {}]", region.s, region.t));
    }
    let top = (Rational::one() - region.t.clone()) * Rational::new(1, 2)?;
    let a = region.a();
    let hits = frac_sequence(alpha, n_max)?.iter().filter(|pt| a <= pt.u && pt.u <= top && pt.v <= top).count();
    Ok((Rational::new(hits as u64, n_max)?, predicted_density_a(region)))
}

/// A uniformly drawn rational in the open interval `(lo, hi)` whose reduced
/// denominator has at least 64 bits.
pub fn random_alpha<R: Rng + ?Sized>(rng: &mut R, lo: &Rational, hi: &Rational) -> Result<Rational> {
    if lo >= hi {
        return domain(format!("empty interval ({lo}, {hi})"));
    }
    let min_den = BigInt::one() << 64u32;
    loop {
        let den = &min_den + rng.gen_bigint_range(&BigInt::zero(), &min_den);
        let a = lo.mul_int(&den).floor() + 1;
        let b = hi.mul_int(&den).ceil();
        if a >= b {
            continue;
        }
        let num = rng.gen_bigint_range(&a, &b);
        let alpha = Rational::new(num, den)?;
        if alpha.denom() >= &min_den && &alpha > lo && &alpha < hi {
            return Ok(alpha);
        }
    }
}

/// `|N⁻¹ Σ e(h·(u, v))|` evaluated naively in `f64`; a cross-check only.
pub fn weyl_sum_f64(h1: i64, h2: i64, points: &[FracPoint2]) -> f64 {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for pt in points {
        let theta = (pt.u.mul_int(&BigInt::from(h1)) + pt.v.mul_int(&BigInt::from(h2))).fract();
        let angle = std::f64::consts::TAU * theta.to_f64();
        re += angle.cos();
        im += angle.sin();
    }
    (re * re + im * im).sqrt() / points.len() as f64
}
