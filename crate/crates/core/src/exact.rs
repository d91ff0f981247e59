//! Arithmetic substrate: exact rationals, integer square roots and exact
//! floor/ceiling evaluation of `α·n²`.
//!
//! Everything here works on arbitrary-precision integers. The `*_u64`
//! helpers are fast paths used by the enumerators; they use checked
//! arithmetic and report overflow instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// An exact rational number in canonical form: `den > 0` and
/// `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

/// Builds `p/q` in canonical form. Fails when `q = 0`.
pub fn mk_rational(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let (p, q) = (p.into(), q.into());
    if q.is_zero() {
        return domain("zero denominator");
    }
    Ok(Rational(BigRational::new(p, q)))
}

impl Rational {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        mk_rational(p, q)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// The positive denominator; for `α ∈ (0,1)` this is `d(α)`.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Mathematical floor (toward −∞).
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// `⌈x⌉ = −⌊−x⌋`.
    pub fn ceil(&self) -> BigInt {
        -((-self.numer()).div_floor(self.denom()))
    }

    /// Fractional part `{x} = x − ⌊x⌋ ∈ [0, 1)`.
    pub fn fract(&self) -> Rational {
        let r = self.numer().mod_floor(self.denom());
        Rational(BigRational::new_raw(r, self.denom().clone()))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return domain("reciprocal of zero");
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn div(&self, other: &Rational) -> Result<Rational> {
        if other.is_zero() {
            return domain("division by zero");
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn mul_int(&self, n: &BigInt) -> Rational {
        Rational(&self.0 * BigRational::from_integer(n.clone()))
    }

    /// Lossy conversion for reporting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `(p, q)` as machine integers when both fit in `u64` and `p ≥ 0`.
    pub fn to_u64_pair(&self) -> Option<(u64, u64)> {
        Some((self.numer().to_u64()?, self.denom().to_u64()?))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Accepts `p/q`, a bare integer, or an exact decimal such as `0.55`
/// (read as `55/100` and normalized). Never goes through floating point.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an exact fraction: {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return mk_rational(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let neg = int.trim_start().starts_with('-');
            let digits = frac.len() as u32;
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let int_part: BigInt = if int.is_empty() || int == "-" || int == "+" {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| bad())?
            };
            let scale = BigInt::from(10u32).pow(digits);
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let mag = int_part.abs() * &scale + frac_part;
            let num = if neg { -mag } else { mag };
            return mk_rational(num, scale);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::integer(n))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer square root: the `s` with `s² ≤ n < (s+1)²`.
///
/// Newton iteration from a power-of-two upper bound, followed by a
/// two-sided correction. Values below 2¹²⁸ take the machine-word path.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return domain("isqrt of a negative number");
    }
    if let Some(small) = n.to_u128() {
        return Ok(BigInt::from(isqrt_u128(small)));
    }
    let bits = n.bits();
    // 2^ceil(bits/2) > sqrt(n), so the iteration decreases monotonically.
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    loop {
        let next = &x + 1u32;
        if &next * &next <= *n {
            x = next;
        } else {
            break;
        }
    }
    Ok(x)
}

/// Machine-word integer square root with exact correction of the float seed.
pub fn isqrt_u128(n: u128) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut s = (n as f64).sqrt() as u128;
    s = s.min(u64::MAX as u128);
    while s * s > n {
        s -= 1;
    }
    while let Some(sq) = (s + 1).checked_mul(s + 1) {
        if sq <= n {
            s += 1;
        } else {
            break;
        }
    }
    s as u64
}

pub fn isqrt_u64(n: u64) -> u64 {
    isqrt_u128(n as u128)
}

pub fn is_square_u128(n: u128) -> bool {
    let s = isqrt_u128(n) as u128;
    s * s == n
}

fn require_positive(alpha: &Rational) -> Result<()> {
    if !alpha.is_positive() {
        return domain(format!("alpha must be positive, got {alpha}"));
    }
    Ok(())
}

/// `⌊α·n²⌋` computed exactly as `⌊num·n² / den⌋`.
pub fn floor_mul_sq(alpha: &Rational, n: &BigInt) -> Result<BigInt> {
    require_positive(alpha)?;
    Ok((alpha.numer() * n * n).div_floor(alpha.denom()))
}

/// `⌈α·n²⌉ = −⌊−α·n²⌋`.
pub fn ceil_mul_sq(alpha: &Rational, n: &BigInt) -> Result<BigInt> {
    require_positive(alpha)?;
    Ok(-((-(alpha.numer() * n * n)).div_floor(alpha.denom())))
}

/// The exact fractional part `{α·N}`.
pub fn frac_part(alpha: &Rational, n: &BigInt) -> Rational {
    alpha.mul_int(n).fract()
}

/// The smallest `s ≥ 0` with `lo ≤ s² ≤ hi`, if any. No scanning: one
/// integer square root decides it.
pub fn square_in_range(lo: &BigInt, hi: &BigInt) -> Option<BigInt> {
    if lo > hi || hi.sign() == Sign::Minus {
        return None;
    }
    let lo = if lo.is_negative() { BigInt::zero() } else { lo.clone() };
    let mut s = isqrt(&lo).expect("non-negative");
    if &s * &s < lo {
        s += 1u32;
    }
    (&s * &s <= *hi).then_some(s)
}

/// Machine-word variant of [`square_in_range`].
pub fn square_in_range_u128(lo: u128, hi: u128) -> Option<u64> {
    if lo > hi {
        return None;
    }
    let mut s = isqrt_u128(lo) as u128;
    if s * s < lo {
        s += 1;
    }
    (s * s <= hi).then_some(s as u64)
}

/// `⌈√2·q⌉`, computed exactly (`2q²` is never a perfect square for `q ≥ 1`).
pub fn ceil_sqrt2_times(q: u64) -> u64 {
    assert!(q >= 1);
    let two_q2 = 2 * (q as u128) * (q as u128);
    isqrt_u128(two_q2 - 1) + 1
}

/// Serde helpers that write big integers as decimal strings.
pub mod serde_big {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.serialize_some(&v.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            let s = Option::<String>::deserialize(d)?;
            s.map(|s| s.parse().map_err(serde::de::Error::custom)).transpose()
        }
    }

    pub mod triple {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt; 3], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(3))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigInt; 3], D::Error> {
            let v = <[String; 3]>::deserialize(d)?;
            let parse = |s: &String| s.parse::<BigInt>().map_err(serde::de::Error::custom);
            Ok([parse(&v[0])?, parse(&v[1])?, parse(&v[2])?])
        }
    }
}
