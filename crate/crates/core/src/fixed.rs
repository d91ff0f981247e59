//! Binary fixed-point evaluation of the few transcendental quantities the
//! crate needs: natural logarithms, `ln(1+√2)`, `π`, and `e(θ) = exp(2πiθ)`
//! for rational `θ`.
//!
//! A fixed-point value `v` at precision `bits` stands for `v / 2^bits`.
//! Every public function returns a result within `2^-bits` of the true value
//! (times a small constant). Internally `GUARD` extra bits are carried and
//! truncated at the end.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};
use crate::exact::{isqrt, Rational};

const GUARD: u32 = 32;

fn one(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn round_shift(v: BigInt, by: u32) -> BigInt {
    if by == 0 {
        return v;
    }
    (v + (BigInt::one() << (by - 1))) >> by
}

/// Shift toward zero, so that series terms of either sign reach zero.
fn shr_trunc(v: BigInt, bits: u32) -> BigInt {
    if v.is_negative() {
        -((-v) >> bits)
    } else {
        v >> bits
    }
}

/// `atanh(z)` for fixed-point `|z| ≤ 1/2`.
fn atanh_fixed(z: &BigInt, bits: u32) -> BigInt {
    let z2 = (z * z) >> bits;
    let mut power = z.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !power.is_zero() {
        sum += &power / k;
        power = shr_trunc(power * &z2, bits);
        k += 2;
    }
    sum
}

/// `atan(1/n)` for integer `n ≥ 2`.
fn atan_inv_fixed(n: u32, bits: u32) -> BigInt {
    let n2 = BigInt::from(n) * n;
    let mut power = one(bits) / n;
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    let mut sign = true;
    while !power.is_zero() {
        let term = &power / k;
        if sign {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        k += 2;
        sign = !sign;
    }
    sum
}

fn ln2_inner(bits: u32) -> BigInt {
    // ln 2 = 2 atanh(1/3)
    atanh_fixed(&(one(bits) / 3u32), bits) << 1
}

fn pi_inner(bits: u32) -> BigInt {
    // Machin: π = 16 atan(1/5) − 4 atan(1/239)
    (atan_inv_fixed(5, bits) << 4) - (atan_inv_fixed(239, bits) << 2)
}

/// `π` at the given precision.
pub fn pi(bits: u32) -> BigInt {
    round_shift(pi_inner(bits + GUARD), GUARD)
}

fn ln_inner(x: &Rational, w: u32) -> BigInt {
    let (num, den) = (x.numer(), x.denom());
    // x = m·2^k with m ∈ [1/2, 2)
    let k = num.bits() as i64 - den.bits() as i64;
    let m_fixed = if k >= 0 { (num << w) / (den << k as u32) } else { (num << (w + (-k) as u32)) / den };
    let unit = one(w);
    let z = ((&m_fixed - &unit) << w) / (&m_fixed + &unit);
    let ln_m = atanh_fixed(&z, w) << 1;
    ln_m + ln2_inner(w) * k
}

/// `ln x` for rational `x > 0`.
pub fn ln(x: &Rational, bits: u32) -> Result<BigInt> {
    if !x.is_positive() {
        return domain(format!("logarithm of non-positive {x}"));
    }
    Ok(round_shift(ln_inner(x, bits + GUARD), GUARD))
}

fn ln_one_plus_sqrt2_inner(w: u32) -> BigInt {
    // √2 to 2w bits, then 1+√2 as an exact rational approximant
    let s = isqrt(&(BigInt::from(2) << (2 * w))).expect("positive");
    let approx = Rational::new(s + one(w), one(w)).expect("nonzero");
    ln_inner(&approx, w)
}

/// `ln(1 + √2)`, the logarithm of the Pell growth constant.
pub fn ln_one_plus_sqrt2(bits: u32) -> BigInt {
    round_shift(ln_one_plus_sqrt2_inner(bits + GUARD), GUARD)
}

/// `√2` at the given precision.
pub fn sqrt2(bits: u32) -> BigInt {
    isqrt(&(BigInt::from(2) << (2 * bits))).expect("positive")
}

/// `(cos 2πθ, sin 2πθ)` for rational `θ`, in fixed point.
pub fn cos_sin_2pi(theta: &Rational, bits: u32) -> (BigInt, BigInt) {
    let w = bits + GUARD;
    // reduce θ to [-1/2, 1/2)
    let half = Rational::new(1, 2).expect("nonzero");
    let reduced = (theta + &half).fract() - half;
    let theta_fixed = (reduced.numer() << w) / reduced.denom();
    let angle = (theta_fixed * (pi_inner(w) << 1)) >> w;
    let x2 = (&angle * &angle) >> w;
    // Taylor series; |angle| ≤ π keeps the largest term below 2^4.
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = one(w); // x^k / k!
    let mut k = 0u32;
    loop {
        let c_term = term.clone();
        let s_term = shr_trunc(&term * &angle, w);
        let s_term: BigInt = s_term / (k + 1);
        if c_term.is_zero() && s_term.is_zero() {
            break;
        }
        if (k / 2).is_multiple_of(2) {
            cos += &c_term;
            sin += &s_term;
        } else {
            cos -= &c_term;
            sin -= &s_term;
        }
        term = ((term * &x2) >> w) / ((k + 1) * (k + 2));
        k += 2;
    }
    (round_shift(cos, GUARD), round_shift(sin, GUARD))
}

/// Converts a fixed-point value to `f64` (reporting only).
pub fn to_f64(v: &BigInt, bits: u32) -> f64 {
    let shift = v.bits().saturating_sub(60) as u32;
    let top = v >> shift;
    let top: i64 = top.try_into().unwrap_or(0);
    let sign_fix = if v.is_negative() && top == 0 { -0.0 } else { 0.0 };
    (top as f64) * 2f64.powi(shift as i32 - bits as i32) + sign_fix
}
