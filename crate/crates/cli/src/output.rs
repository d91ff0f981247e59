//! Exit codes, the run manifest and JSON/CSV rendering.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitKind {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    Resource = 3,
}

impl ExitKind {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: ExitKind::Usage, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<floorsq::Error> for CliError {
    fn from(e: floorsq::Error) -> Self {
        let kind = match e {
            floorsq::Error::Resource(_) => ExitKind::Resource,
            _ => ExitKind::Usage,
        };
        CliError { kind, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub subcommand: String,
    pub parameters: BTreeMap<String, String>,
    pub versions: BTreeMap<String, String>,
    pub workers: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl RunManifest {
    pub fn new(subcommand: &str, parameters: BTreeMap<String, String>, workers: usize) -> Self {
        let versions = BTreeMap::from([
            ("floorsq".to_string(), floorsq::VERSION.to_string()),
            ("floorsq-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ]);
        RunManifest {
            schema_version: SCHEMA_VERSION,
            subcommand: subcommand.to_string(),
            parameters,
            versions,
            workers,
            wall_time_ms: None,
        }
    }
}

/// A finished command: JSON (always available), optional CSV, exit status
/// and a human-readable note for stderr.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub json: String,
    pub csv: Option<String>,
    pub exit: ExitKind,
    pub note: Option<String>,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    manifest: &'a RunManifest,
    result: &'a T,
}

pub fn render<T: Serialize>(manifest: &RunManifest, result: &T, csv: Option<String>) -> CliResult<Rendered> {
    let json = serde_json::to_string_pretty(&Envelope { manifest, result })
        .map_err(|e| CliError::usage(format!("serialization failed: {e}")))?;
    Ok(Rendered { json: json + "\n", csv, exit: ExitKind::Ok, note: None })
}

/// Two-column headerless CSV.
pub fn csv_pairs<A: fmt::Display, B: fmt::Display>(rows: impl IntoIterator<Item = (A, B)>) -> String {
    let mut out = String::new();
    for (a, b) in rows {
        out.push_str(&format!("{a},{b}\n"));
    }
    out
}

/// Rounds to 12 decimals so that emitted floats are stable text.
pub fn fixed12(v: f64) -> f64 {
    (v * 1e12).round() / 1e12
}
