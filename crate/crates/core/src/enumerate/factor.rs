//! Integer factorization and divisor counting.
//!
//! Trial division by the primes below 2¹⁶, then a deterministic
//! Miller–Rabin test for 64-bit cofactors and Pollard's rho with Brent's
//! cycle detection for the composite ones. Wider inputs use the same
//! pipeline on big integers with a strong probable-prime test; every
//! factorization is checked by multiplying the factors back together.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

const TRIAL_LIMIT: u32 = 1 << 16;

/// The primes below 2¹⁶.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// One nontrivial factor of an odd composite `n`, by Brent's variant of
/// Pollard's rho.
fn brent_rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1..u64::MAX {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let (mut x, mut ys, mut g);
        const BLOCK: u64 = 128;
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            loop {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BLOCK;
                if k >= r || g != 1 {
                    break;
                }
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            // backtrack one step at a time
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausted all increments")
}

fn push_factors_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = brent_rho_u64(n);
    push_factors_u64(d, out);
    push_factors_u64(n / d, out);
}

/// Prime factorization of `n ≥ 1` as sorted `(prime, exponent)` pairs.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize_u64 needs n ≥ 1");
    let original = n;
    let mut primes = Vec::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            primes.push(p);
            n /= p;
        }
    }
    if n > 1 {
        if n < (TRIAL_LIMIT as u64) * (TRIAL_LIMIT as u64) {
            primes.push(n);
        } else {
            push_factors_u64(n, &mut primes);
        }
    }
    primes.sort_unstable();
    let product: u128 = primes.iter().map(|&p| p as u128).product();
    assert_eq!(product, original as u128, "factorization of {original} does not multiply back");
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors, ascending.
pub fn divisors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Merges two factorizations (the factorization of a product).
pub fn merge_factors(a: &[(u64, u32)], b: &[(u64, u32)]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    let mut merged: Vec<(u64, u32)> = Vec::with_capacity(out.len());
    for (p, e) in out {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    merged
}

fn big_pow_mod_is_probable_prime(n: &BigInt) -> bool {
    // strong probable-prime test to the first 24 prime bases
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in small_primes().iter().take(24) {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn brent_rho_big(n: &BigInt) -> BigInt {
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigInt::from(2), 1u64, BigInt::one());
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = BigInt::one();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1;
    }
}

fn push_factors_big(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factorize_u64(small) {
            out.extend(std::iter::repeat_n(BigInt::from(p), e as usize));
        }
        return;
    }
    if big_pow_mod_is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = brent_rho_big(&n);
    let rest = &n / &d;
    push_factors_big(d, out);
    push_factors_big(rest, out);
}

/// Complete prime factorization of `n ≥ 2` as a sorted multiset.
pub fn factorize(n: &BigInt) -> Result<Vec<BigInt>> {
    if n < &BigInt::from(2) {
        return domain(format!("factorize needs n ≥ 2, got {n}"));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    for &p in small_primes() {
        let p = BigInt::from(p);
        if &p * &p > rest {
            break;
        }
        loop {
            let (quot, rem) = rest.div_rem(&p);
            if !rem.is_zero() {
                break;
            }
            out.push(p.clone());
            rest = quot;
        }
    }
    push_factors_big(rest, &mut out);
    out.sort();
    let product: BigInt = out.iter().product();
    assert_eq!(&product, n, "factorization does not multiply back");
    Ok(out)
}

/// Number of positive divisors of `n ≠ 0`.
pub fn tau_plus(n: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return domain("divisor count of zero");
    }
    let m = n.abs();
    if m.is_one() {
        return Ok(1);
    }
    if let Some(small) = m.to_u64() {
        return Ok(tau_plus_u64(small));
    }
    let primes = factorize(&m)?;
    let mut count = 1u64;
    let mut i = 0;
    while i < primes.len() {
        let mut j = i;
        while j < primes.len() && primes[j] == primes[i] {
            j += 1;
        }
        count *= (j - i) as u64 + 1;
        i = j;
    }
    Ok(count)
}

/// Number of positive and negative divisors: `τ(n) = 2τ₊(n)`.
pub fn tau(n: &BigInt) -> Result<u64> {
    Ok(2 * tau_plus(n)?)
}

pub fn tau_plus_u64(n: u64) -> u64 {
    assert!(n >= 1);
    factorize_u64(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&b(166_464)).unwrap();
        let mut want = vec![b(2); 6];
        want.extend([b(3), b(3), b(17), b(17)]);
        assert_eq!(f, want);
        assert_eq!(factorize(&b(2)).unwrap(), vec![b(2)]);
        assert_eq!(factorize(&b(1369)).unwrap(), vec![b(37), b(37)]);
        assert!(factorize(&b(1)).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_plus(&b(12)).unwrap(), 6);
        assert_eq!(tau(&b(1)).unwrap(), 2);
        assert_eq!(tau_plus(&b(49)).unwrap(), 3);
        assert_eq!(tau(&b(-12)).unwrap(), 12);
        assert!(tau_plus(&b(0)).is_err());
    }

    #[test]
    fn hard_64_bit_inputs() {
        // product of two primes just below 2³²
        let p = 4_294_967_291u64;
        let q = 4_294_967_279u64;
        assert!(is_prime_u64(p) && is_prime_u64(q));
        assert_eq!(factorize_u64(p * q), vec![(q, 1), (p, 1)]);
        assert_eq!(
            factorize_u64(u64::MAX),
            vec![(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6_700_417, 1)]
        );
        // Carmichael number
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn wide_inputs() {
        // (2³¹−1)(2⁸⁹−1), both Mersenne primes
        let m31: BigInt = (b(1) << 31u32) - 1;
        let m61: BigInt = (b(1) << 61u32) - 1;
        let m89: BigInt = (b(1) << 89u32) - 1;
        let f = factorize(&(&m31 * &m89)).unwrap();
        assert_eq!(f, vec![m31, m89]);
        // a semiprime with two ~40-bit factors forces the big-integer rho
        let next_prime = |mut n: u64| {
            while !is_prime_u64(n) {
                n += 1;
            }
            n
        };
        let p = next_prime(1 << 40);
        let q = next_prime(p + 1);
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let n = &p * &q * &m61;
        assert_eq!(factorize(&n).unwrap(), vec![p, q, m61]);
    }

    #[test]
    fn divisors_listing() {
        assert_eq!(divisors(&factorize_u64(12)), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&factorize_u64(1)), vec![1]);
        let m = merge_factors(&factorize_u64(28), &factorize_u64(30));
        assert_eq!(m, factorize_u64(840));
    }

    proptest! {
        #[test]
        fn tau_matches_trial_division(n in 1u64..50_000) {
            let brute = (1..=n).filter(|d| n % d == 0).count() as u64;
            prop_assert_eq!(tau_plus_u64(n), brute);
        }

        #[test]
        fn factors_multiply_back(n in 2u64..u64::MAX) {
            let f = factorize_u64(n);
            let prod: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            prop_assert_eq!(prod, n as u128);
            for (p, _) in f {
                prop_assert!(is_prime_u64(p));
            }
        }
    }
}
