//! Embedded golden data: the Table 1 index triples and the `V(46300)` list.
//!
//! The files are compiled in and checked against fixed SHA-256 digests on
//! load, so an edited copy is rejected instead of silently trusted.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::enumerate::SmallTriple;
use crate::error::{Error, Result};
use crate::exact::Rational;

const TABLE1_JSON: &str = include_str!("../data/table1.json");
const TABLE1_SHA256: &str = "51add5f6bbf3fe82d91f7d23e1dcc290cc4d5b017993dfac53f8304f1a035239";
const V46300_JSON: &str = include_str!("../data/v46300.json");
const V46300_SHA256: &str = "33a23ce89c224dd79ba8d58b4313b0b026da1f79e2ef750bc564495370c3a5d3";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub alpha: Rational,
    pub count: usize,
    pub triples: Vec<[String; 3]>,
}

impl GoldenRow {
    pub fn triples_u64(&self) -> Result<Vec<SmallTriple>> {
        parse_triples(&self.triples)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1 {
    pub id: String,
    pub source: String,
    pub x: String,
    pub rows: Vec<GoldenRow>,
}

impl Table1 {
    pub fn x(&self) -> u64 {
        self.x.parse().expect("checksummed golden file")
    }

    pub fn row(&self, alpha: &Rational) -> Option<&GoldenRow> {
        self.rows.iter().find(|r| &r.alpha == alpha)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VList {
    pub id: String,
    pub source: String,
    pub x: String,
    pub triples: Vec<[String; 3]>,
}

impl VList {
    pub fn x(&self) -> u64 {
        self.x.parse().expect("checksummed golden file")
    }

    pub fn triples_u64(&self) -> Result<Vec<SmallTriple>> {
        parse_triples(&self.triples)
    }
}

fn parse_triples(v: &[[String; 3]]) -> Result<Vec<SmallTriple>> {
    v.iter()
        .map(|t| {
            let mut out = [0u64; 3];
            for (o, s) in out.iter_mut().zip(t) {
                *o = s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?} in golden data")))?;
            }
            Ok(out)
        })
        .collect()
}

fn checked(name: &str, text: &str, digest: &str) -> Result<()> {
    let got = hex::encode(Sha256::digest(text.as_bytes()));
    if got != digest {
        return Err(Error::Parse(format!("golden file {name} has checksum {got}, expected {digest}")));
    }
    Ok(())
}

pub fn table1() -> Result<Table1> {
    checked("table1.json", TABLE1_JSON, TABLE1_SHA256)?;
    serde_json::from_str(TABLE1_JSON).map_err(|e| Error::Parse(e.to_string()))
}

pub fn v46300() -> Result<VList> {
    checked("v46300.json", V46300_JSON, V46300_SHA256)?;
    serde_json::from_str(V46300_JSON).map_err(|e| Error::Parse(e.to_string()))
}
