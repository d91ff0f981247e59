//! Generalized brackets, homogeneous integer polynomials and the multiplier
//! scan for bracketed systems `⟦αf_j⟧(n·x) = 0`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exact::Rational;
use crate::membership::{self, Bracket, IndexTriple, VerificationRecord};
use crate::par::{self, Parallelism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    Floor,
    Ceiling,
    /// Nearest integer, ties rounded up.
    Nearest,
}

impl BracketKind {
    pub const ALL: [BracketKind; 3] = [BracketKind::Floor, BracketKind::Ceiling, BracketKind::Nearest];

    /// `⟦x⟧`.
    pub fn apply(self, x: &Rational) -> BigInt {
        match self {
            BracketKind::Floor => x.floor(),
            BracketKind::Ceiling => x.ceil(),
            BracketKind::Nearest => (x.clone() + Rational::new(1, 2).expect("nonzero")).floor(),
        }
    }
}

impl std::str::FromStr for BracketKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "floor" => Ok(BracketKind::Floor),
            "ceiling" | "ceil" => Ok(BracketKind::Ceiling),
            "nearest" => Ok(BracketKind::Nearest),
            _ => Err(crate::Error::Parse(format!("unknown bracket kind {s:?}"))),
        }
    }
}

/// `η(x) = |x − ⟦x⟧|`.
pub fn eta(kind: BracketKind, x: &Rational) -> Rational {
    (x.clone() - Rational::integer(kind.apply(x))).abs()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "crate::exact::serde_big")]
    pub coeff: BigInt,
    pub exponents: Vec<u32>,
}

/// A homogeneous polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomPoly {
    terms: Vec<Term>,
    arity: usize,
    degree: u32,
}

impl HomPoly {
    pub fn new(terms: Vec<(i64, Vec<u32>)>) -> Result<Self> {
        let terms: Vec<Term> = terms
            .into_iter()
            .filter(|(c, _)| *c != 0)
            .map(|(c, e)| Term { coeff: BigInt::from(c), exponents: e })
            .collect();
        let Some(first) = terms.first() else {
            return domain("polynomial has no nonzero coefficient");
        };
        let arity = first.exponents.len();
        let degree: u32 = first.exponents.iter().sum();
        for t in &terms {
            if t.exponents.len() != arity {
                return domain("terms have different arities");
            }
            if t.exponents.iter().sum::<u32>() != degree {
                return domain(format!(
                    "polynomial is not homogeneous: degrees {degree} and {}",
                    t.exponents.iter().sum::<u32>()
                ));
            }
        }
        Ok(HomPoly { terms, arity, degree })
    }

    /// `Σ xᵢ² ·sign` shorthand: `+1` entries are added, `−1` subtracted.
    pub fn signed_squares(signs: &[i64]) -> Result<Self> {
        let r = signs.len();
        let terms = signs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut e = vec![0; r];
                e[i] = 2;
                (c, e)
            })
            .collect();
        HomPoly::new(terms)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn check_point(&self, point: &[BigInt]) -> Result<()> {
        if point.len() != self.arity {
            return domain(format!("point has {} coordinates, polynomial has arity {}", point.len(), self.arity));
        }
        Ok(())
    }

    fn monomials<'a>(&'a self, point: &'a [BigInt]) -> impl Iterator<Item = (&'a BigInt, BigInt)> + 'a {
        self.terms.iter().map(move |t| {
            let mono = t.exponents.iter().zip(point).fold(BigInt::from(1), |acc, (&e, x)| acc * x.pow(e));
            (&t.coeff, mono)
        })
    }

    /// Exact `f(point)`.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        self.check_point(point)?;
        Ok(self.monomials(point).map(|(c, m)| c * m).sum())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.iter().map(|t| t.coeff.abs()).max().unwrap_or_default()
    }
}

/// `⟦αf⟧(point) = Σ a_ν·⟦α·x^ν⟧`.
pub fn bracket_poly_eval(f: &HomPoly, alpha: &Rational, point: &[BigInt], kind: BracketKind) -> Result<BigInt> {
    f.check_point(point)?;
    Ok(f.monomials(point).map(|(c, m)| c * kind.apply(&alpha.mul_int(&m))).sum())
}

/// `Σ |a_ν|·η(α·x^ν)`, the total rounding error of [`bracket_poly_eval`].
pub fn bracket_error(f: &HomPoly, alpha: &Rational, point: &[BigInt], kind: BracketKind) -> Result<Rational> {
    f.check_point(point)?;
    Ok(f.monomials(point).fold(Rational::zero(), |acc, (c, m)| acc + eta(kind, &alpha.mul_int(&m)).mul_int(&c.abs())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub multipliers: Vec<u64>,
    pub n_max: u64,
    pub density: Rational,
}

fn scale(witness: &[BigInt], n: u64) -> Vec<BigInt> {
    witness.iter().map(|x| x * n).collect()
}

fn check_hypothesis(system: &[HomPoly], witness: &[BigInt]) -> Result<()> {
    if system.is_empty() {
        return domain("the system is empty");
    }
    for (j, f) in system.iter().enumerate() {
        let v = f.eval(witness)?;
        if !v.is_zero() {
            return domain(format!("f_{} does not vanish at the witness (value {v})", j + 1));
        }
    }
    Ok(())
}

/// All `n ≤ N` with `⟦αf_j⟧(n·witness) = 0` for every `j`.
pub fn scan_multipliers(
    system: &[HomPoly],
    witness: &[BigInt],
    alpha: &Rational,
    n_max: u64,
    kind: BracketKind,
) -> Result<ScanResult> {
    scan_multipliers_with(system, witness, alpha, n_max, kind, Parallelism::Parallel)
}

pub fn scan_multipliers_with(
    system: &[HomPoly],
    witness: &[BigInt],
    alpha: &Rational,
    n_max: u64,
    kind: BracketKind,
    par: Parallelism,
) -> Result<ScanResult> {
    check_hypothesis(system, witness)?;
    if n_max == 0 {
        return domain("N must be at least 1");
    }
    let hits = par::map_range(par, 1, n_max + 1, |n| {
        let point = scale(witness, n);
        system.iter().all(|f| bracket_poly_eval(f, alpha, &point, kind).is_ok_and(|v| v.is_zero()))
    });
    let multipliers: Vec<u64> = (1..=n_max).zip(hits).filter_map(|(n, hit)| hit.then_some(n)).collect();
    let density = Rational::new(multipliers.len() as u64, n_max)?;
    Ok(ScanResult { multipliers, n_max, density })
}

/// `x₁²+x₂²−x₄²`, `x₁²+x₃²−x₅²`, `x₂²+x₃²−x₆²`.
pub fn euler_brick_system() -> Vec<HomPoly> {
    [[1, 1, 0, -1, 0, 0], [1, 0, 1, 0, -1, 0], [0, 1, 1, 0, 0, -1]]
        .iter()
        .map(|s| HomPoly::signed_squares(s).expect("valid system"))
        .collect()
}

/// The smallest Euler brick with its face diagonals.
pub fn euler_brick_witness() -> Vec<BigInt> {
    [240, 117, 44, 267, 244, 125].into_iter().map(BigInt::from).collect()
}

/// Edges `(k, ℓ, m)`, face diagonals `(a, b, c)` and, for a full
/// certificate, the space diagonal `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickCertificate {
    pub edges: [u64; 3],
    pub faces: [u64; 3],
    pub space: Option<u64>,
}

impl BrickCertificate {
    /// Accepts 6 components (face sub-system) or 7 (perfect brick).
    ///
    /// The last two face diagonals may also be given in the order
    /// `(√(k²+m²), √(ℓ²+m²))`, as in the usual listing
    /// `(240, 117, 44, 267, 244, 125)`; they are swapped into place.
    pub fn from_slice(v: &[u64]) -> Result<Self> {
        let mut cert = match v {
            [k, l, m, a, b, c] => BrickCertificate { edges: [*k, *l, *m], faces: [*a, *b, *c], space: None },
            [k, l, m, a, b, c, d] => BrickCertificate { edges: [*k, *l, *m], faces: [*a, *b, *c], space: Some(*d) },
            _ => return domain(format!("a certificate has 6 or 7 components, got {}", v.len())),
        };
        let sq = |x: u64| (x as u128) * (x as u128);
        let [k, l, m] = cert.edges.map(sq);
        let [_, b, c] = cert.faces.map(sq);
        if l + m != b && l + m == c && m + k == b {
            cert.faces.swap(1, 2);
        }
        Ok(cert)
    }

    /// The variables in the order `(k, ℓ, m, a, b, c[, d])`.
    pub fn point(&self) -> Vec<BigInt> {
        self.edges.iter().chain(&self.faces).chain(self.space.iter()).map(|&x| BigInt::from(x)).collect()
    }

    /// `k²+ℓ²−a²`, `ℓ²+m²−b²`, `m²+k²−c²` and, if present, `k²+ℓ²+m²−d²`.
    pub fn system(&self) -> Vec<(&'static str, HomPoly)> {
        let full = self.space.is_some();
        let width = if full { 7 } else { 6 };
        let mut rows: Vec<(&'static str, Vec<i64>)> = vec![
            ("k^2 + l^2 = a^2", vec![1, 1, 0, -1, 0, 0]),
            ("l^2 + m^2 = b^2", vec![0, 1, 1, 0, -1, 0]),
            ("m^2 + k^2 = c^2", vec![1, 0, 1, 0, 0, -1]),
        ];
        if full {
            rows.push(("k^2 + l^2 + m^2 = d^2", vec![1, 1, 1, 0, 0, 0, -1]));
        }
        rows.into_iter()
            .map(|(name, mut s)| {
                s.resize(width, 0);
                (name, HomPoly::signed_squares(&s).expect("valid system"))
            })
            .collect()
    }

    pub fn check(&self) -> Result<()> {
        let point = self.point();
        for (name, f) in self.system() {
            if !f.eval(&point)?.is_zero() {
                return domain(format!("certificate fails {name}"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeRecord {
    pub n: u64,
    pub indices: IndexTriple,
    pub record: VerificationRecord,
}

/// For every `n ≤ N` at which the bracketed certificate system vanishes,
/// the floor triple of `(nk, nℓ, nm)` and its verification record.
///
/// With a face-only certificate the three pair sums are forced and the
/// record is expected to satisfy [`VerificationRecord::pairs_verified`];
/// with a full certificate it is expected to verify outright.
pub fn t_alpha_bridge(cert: &BrickCertificate, alpha: &Rational, n_max: u64) -> Result<Vec<BridgeRecord>> {
    cert.check()?;
    if !alpha.is_positive() {
        return domain(format!("alpha must be positive, got {alpha}"));
    }
    let system: Vec<HomPoly> = cert.system().into_iter().map(|(_, f)| f).collect();
    let scan = scan_multipliers(&system, &cert.point(), alpha, n_max, BracketKind::Floor)?;
    let mut out = Vec::new();
    for n in scan.multipliers {
        let [k, l, m] = cert.edges.map(|e| BigInt::from(e) * n);
        if ![&k, &l, &m].iter().all(|i| membership::is_admissible(alpha, i)) {
            continue;
        }
        let indices = IndexTriple::new(k, l, m);
        let record = membership::verify_indices(alpha, Bracket::Floor, &indices)?;
        out.push(BridgeRecord { n, indices, record });
    }
    Ok(out)
}
