//! Exact arithmetic, constructions and exhaustive searches for Diophantine
//! systems over the floor and ceiling analogs of the squares,
//! `S(α) = {⌊αn²⌋ : n ≥ α^(-1/2)}` and `S̄(α) = {⌈αn²⌉ : n ≥ 1}`.
//!
//! A triple `(k, ℓ, m)` with `k ≤ ℓ ≤ m` belongs to `T(α)` when all of
//! `k, ℓ, m, k+ℓ, ℓ+m, m+k, k+ℓ+m` lie in `S(α)`. The crate provides exact
//! membership oracles, Pell-number constructions of such triples, exhaustive
//! enumeration of `T≤x(α)`, equidistribution experiments on Pell-indexed
//! fractional parts, and multiplier scans for homogeneous bracket equations.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default); every result is identical to the sequential path.

pub mod construct;
pub mod enumerate;
pub mod equidist;
pub mod error;
pub mod exact;
pub mod fit;
pub mod fixed;
pub mod golden;
pub mod homog;
pub mod membership;
pub mod par;
pub mod pell;
pub mod reference;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use exact::Rational;
pub use membership::{Bracket, IndexTriple, MembershipWitness, ValueTriple, VerificationRecord};
