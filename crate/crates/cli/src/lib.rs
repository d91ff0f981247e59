//! Command implementations behind the `floorsq` binary.
//!
//! Each subcommand is a plain function returning a serializable report, so
//! the acceptance suite can call the same code the binary runs.

pub mod commands;
pub mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

pub use commands::*;
pub use output::{CliError, ExitKind, Rendered};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "floorsq", version, about = "Diophantine triples over floor and ceiling analogs of the squares")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the parallel loops.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Record wall time in the manifest (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Index triples of U≤x(α) for the Table 1 slopes, checked against the embedded copy.
    Table1 {
        /// Run a single row.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        x: u64,
    },
    /// Step function (x, #T≤x(α)) at every jump plus the endpoints.
    Figure(AlphaX),
    /// Least-squares fit of #T≤x(α) to λ·ln x + κ.
    Fit {
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        x: Option<u64>,
        /// Two-column (x, count) step data instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SampleArg::Both)]
        sample: SampleArg,
        #[arg(long)]
        bar: bool,
    },
    /// The search V(x).
    Vsearch {
        #[arg(long, default_value_t = 46_300)]
        x: u64,
    },
    /// Pell-number constructions.
    Construct(ConstructArgs),
    /// Exhaustive enumeration of T≤x(α), shifted-square boxes and divisor profiles.
    Enum(EnumArgs),
    /// Multiplier scans for bracketed homogeneous systems.
    Homog(HomogArgs),
    /// Fractional parts ({αP₂ₙ⁴/4}, {αP₂ₙ²}): Weyl sums and box counts.
    Equidist(EquidistArgs),
    /// Seven-sum verification of one index triple.
    Verify {
        #[arg(long)]
        alpha: String,
        /// Three comma-separated indices.
        #[arg(long, value_delimiter = ',')]
        idx: Vec<String>,
        #[arg(long)]
        bar: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct AlphaX {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub x: u64,
    /// Ceiling mode.
    #[arg(long)]
    pub bar: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SampleArg {
    Dense,
    Jumps,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Floor,
    FloorA,
    CeilOdd,
    CeilIntervals,
    CeilRegion,
}

#[derive(Args, Debug, Clone)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub n: u64,
    /// Pell index for the odd ceiling family.
    #[arg(long)]
    pub q: Option<u64>,
    /// Numerator for the odd ceiling family.
    #[arg(long)]
    pub p: Option<u64>,
    /// Region bounds for the region families.
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct EnumArgs {
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub x: u64,
    #[arg(long)]
    pub bar: bool,
    /// Count A(x, a₁, a₂, a₃) instead.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub abox: Option<Vec<i64>>,
    /// Divisor-sum profile for shifts a₁, a₂ instead.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub profile: Option<Vec<i64>>,
    /// Memory budget for the enumeration, in MiB.
    #[arg(long, default_value_t = 2048)]
    pub memory_mib: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    EulerBrick,
    Pythagorean,
}

#[derive(Args, Debug, Clone)]
pub struct HomogArgs {
    #[arg(long)]
    pub alpha: String,
    /// Largest multiplier N.
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value = "floor")]
    pub kind: String,
    #[arg(long, value_enum, default_value_t = SystemArg::EulerBrick)]
    pub system: SystemArg,
    /// Comma-separated witness; defaults to the system's standard one.
    #[arg(long, value_delimiter = ',')]
    pub witness: Option<Vec<String>>,
    /// Emit T(α) candidates from a brick certificate (k,ℓ,m,a,b,c[,d]).
    #[arg(long, value_delimiter = ',')]
    pub bridge: Option<Vec<u64>>,
}

#[derive(Args, Debug, Clone)]
pub struct EquidistArgs {
    /// Fixed α; otherwise `--count` random α are drawn from `--seed`.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Number of points N.
    #[arg(long, default_value_t = 200)]
    pub n: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub h1: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub h2: i64,
    /// Box u_lo,u_hi,v_lo,v_hi.
    #[arg(long, value_delimiter = ',', default_values_t = ["0".to_string(), "1/2".to_string(), "0".to_string(), "1/2".to_string()])]
    pub r#box: Vec<String>,
    /// Range for random α.
    #[arg(long, default_value = "1/10")]
    pub lo: String,
    #[arg(long, default_value = "9/10")]
    pub hi: String,
    /// Emit the point sequence (first α only) instead of statistics.
    #[arg(long)]
    pub points: bool,
}
