//! Pell numbers `P₀ = 0, P₁ = 1, P_{n+1} = 2P_n + P_{n−1}`, their companions
//! `G_n = P_{n+1} − P_n`, and the divisibility index `r(q)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::ceil_sqrt2_times;

/// A memo table of Pell numbers that grows on demand.
///
/// Reads take a shared lock; extension takes the write lock once per
/// growth step, so concurrent callers see a consistent prefix.
#[derive(Debug)]
pub struct PellTable {
    values: RwLock<Vec<BigInt>>,
}

impl Default for PellTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PellTable {
    pub fn new() -> Self {
        PellTable { values: RwLock::new(vec![BigInt::zero(), BigInt::one()]) }
    }

    /// The process-wide table.
    pub fn global() -> &'static PellTable {
        static TABLE: OnceLock<PellTable> = OnceLock::new();
        TABLE.get_or_init(PellTable::new)
    }

    pub fn get(&self, n: usize) -> BigInt {
        {
            let v = self.values.read().expect("pell table poisoned");
            if let Some(p) = v.get(n) {
                return p.clone();
            }
        }
        let mut v = self.values.write().expect("pell table poisoned");
        while v.len() <= n {
            let k = v.len();
            let next = (&v[k - 1] << 1u32) + &v[k - 2];
            v.push(next);
        }
        v[n].clone()
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("pell table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `P_n`, memoized in the global table.
pub fn pell(n: usize) -> BigInt {
    PellTable::global().get(n)
}

/// `G_n = P_{n+1} − P_n`; satisfies `G_n² − 2P_n² = (−1)ⁿ`.
pub fn half_companion(n: usize) -> BigInt {
    pell(n + 1) - pell(n)
}

/// `P_{m+1}P_n + P_m P_{n−1}`, which equals `P_{m+n}`.
pub fn addition_law(m: usize, n: usize) -> BigInt {
    assert!(n >= 1, "addition law needs n ≥ 1");
    pell(m + 1) * pell(n) + pell(m) * pell(n - 1)
}

/// The smallest `r ≥ 2` with `q | P_r`.
///
/// Runs the recurrence modulo `q`; the result never exceeds `⌈√2·q⌉`, which
/// is asserted.
pub fn r_of(q: u64) -> u64 {
    assert!(q >= 1, "r(q) needs q ≥ 1");
    let bound = ceil_sqrt2_times(q);
    let q128 = q as u128;
    let (mut prev, mut cur) = (0u128, 1u128 % q128);
    let mut r = 1u64;
    loop {
        let next = (2 * cur + prev) % q128;
        prev = cur;
        cur = next;
        r += 1;
        if cur == 0 {
            break;
        }
        assert!(r <= bound, "no r ≤ ⌈√2·{q}⌉ with {q} | P_r");
    }
    assert!(r <= bound);
    r
}

/// `2^bits · (φⁿ − (−φ)⁻ⁿ) / (2√2)` with `φ = 1 + √2`, evaluated in fixed
/// point and truncated to `bits`.
///
/// The working precision grows with `n` (φⁿ has about `1.28·n` bits), so
/// the absolute error stays below `2^(−bits + 8)`. Used to check the
/// closed form against the recurrence.
pub fn binet_fixed(n: u32, bits: u32) -> BigInt {
    let w = bits + 96 + n.div_ceil(3) * 4;
    let unit = BigInt::one() << w;
    let s2 = crate::fixed::sqrt2(w);
    let phi = &unit + &s2;
    let mut phi_n = unit.clone();
    for _ in 0..n {
        phi_n = (phi_n * &phi) >> w;
    }
    // (−φ)⁻ⁿ = (−1)ⁿ (√2 − 1)ⁿ
    let inv = &s2 - &unit;
    let mut inv_n = unit.clone();
    for _ in 0..n {
        inv_n = (inv_n * &inv) >> w;
    }
    let numer = if n.is_multiple_of(2) { phi_n - inv_n } else { phi_n + inv_n };
    let value = (numer << w) / (s2 << 1u32);
    value >> (w - bits)
}
