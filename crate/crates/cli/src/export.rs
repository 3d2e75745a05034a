//! CSV and JSON renderings of a [`StatTable`].
//!
//! CSV columns are `n, p, N0, M0, ospt, u0, …, u{m_max}`. JSON is a single
//! object `{"meta": …, "tables": …}` with every integer written as a decimal
//! string; `meta.checksum` is the SHA-256 of the serialized `tables` object.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;
use unimodal_core::stats::StatTable;
use unimodal_core::RankTable;

pub const FORMAT_NAME: &str = "unimodal-stat-table";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub format: String,
    pub version: u32,
    pub n_max: usize,
    pub m_max: usize,
    pub checksum: String,
}

/// Columns indexed by `n`; `u[m][n]` for `0 ≤ m ≤ m_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub p: Vec<String>,
    #[serde(rename = "N0")]
    pub n0: Vec<String>,
    #[serde(rename = "M0")]
    pub m0: Vec<String>,
    pub ospt: Vec<String>,
    pub q_minus1: Vec<String>,
    pub u: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub meta: Meta,
    pub tables: Tables,
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("not a table document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(
        "unsupported format {found:?} version {version} (expected {FORMAT_NAME:?} version {FORMAT_VERSION})"
    )]
    Version { found: String, version: u32 },
    #[error("checksum mismatch: stored {stored}, computed {computed}")]
    Checksum { stored: String, computed: String },
    #[error("bad integer {0:?}")]
    Integer(String),
    #[error("column lengths disagree with n_max = {n_max}, m_max = {m_max}")]
    Shape { n_max: usize, m_max: usize },
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn checksum(tables: &Tables) -> String {
    let bytes = serde_json::to_vec(tables).expect("string tables serialize");
    hex::encode(Sha256::digest(&bytes))
}

/// The document for the prefix `m ≤ m_max` of `table`.
pub fn document(table: &StatTable, m_max: usize) -> Document {
    let m_max = m_max.min(table.m_max());
    let u = (0..=m_max as i64).map(|m| strings(table.u.row(m).expect("row inside the table"))).collect();
    let tables = Tables {
        p: strings(&table.p),
        n0: strings(&table.n0),
        m0: strings(&table.m0),
        ospt: strings(&table.ospt),
        q_minus1: strings(&table.q_minus1),
        u,
    };
    let meta = Meta {
        format: FORMAT_NAME.into(),
        version: FORMAT_VERSION,
        n_max: table.n_max,
        m_max,
        checksum: checksum(&tables),
    };
    Document { meta, tables }
}

pub fn to_json(table: &StatTable, m_max: usize) -> String {
    let mut s = serde_json::to_string_pretty(&document(table, m_max)).expect("document serializes");
    s.push('\n');
    s
}

fn parse_column(col: &[String]) -> Result<Vec<BigInt>, DecodeError> {
    col.iter().map(|s| s.parse::<BigInt>().map_err(|_| DecodeError::Integer(s.clone()))).collect()
}

/// Parses and validates a JSON document back into a table.
pub fn from_json(text: &str) -> Result<StatTable, DecodeError> {
    let doc: Document = serde_json::from_str(text)?;
    let Meta { format, version, n_max, m_max, checksum: stored } = doc.meta;
    if format != FORMAT_NAME || version != FORMAT_VERSION {
        return Err(DecodeError::Version { found: format, version });
    }
    let computed = checksum(&doc.tables);
    if computed != stored {
        return Err(DecodeError::Checksum { stored, computed });
    }
    let t = doc.tables;
    let shape = DecodeError::Shape { n_max, m_max };
    if t.u.len() != m_max + 1 || t.u.iter().any(|r| r.len() != n_max + 1) || m_max < 1 {
        return Err(shape);
    }
    let u = RankTable::from_rows(n_max, t.u.iter().map(|r| parse_column(r)).collect::<Result<_, _>>()?);
    StatTable::from_columns(
        parse_column(&t.p)?,
        parse_column(&t.n0)?,
        parse_column(&t.m0)?,
        parse_column(&t.ospt)?,
        parse_column(&t.q_minus1)?,
        u,
    )
    .filter(|s| s.n_max == n_max)
    .ok_or(shape)
}

/// CSV with a header row and one row per `n = 0, …, n_max`.
pub fn to_csv(table: &StatTable, m_max: usize) -> String {
    let m_max = m_max.min(table.m_max());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = ["n", "p", "N0", "M0", "ospt"].iter().map(|s| s.to_string()).collect();
    header.extend((0..=m_max).map(|m| format!("u{m}")));
    w.write_record(&header).expect("in-memory write");
    for n in 0..=table.n_max {
        let mut row = vec![
            n.to_string(),
            table.p[n].to_string(),
            table.n0[n].to_string(),
            table.m0[n].to_string(),
            table.ospt[n].to_string(),
        ];
        row.extend((0..=m_max as i64).map(|m| table.u(m, n).to_string()));
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii digits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let t = StatTable::compute(30, 3);
        let back = from_json(&to_json(&t, 3)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn tampering_is_detected() {
        let t = StatTable::compute(10, 2);
        let text = to_json(&t, 2).replacen("\"42\"", "\"43\"", 1);
        assert!(matches!(from_json(&text), Err(DecodeError::Checksum { .. })));
    }

    #[test]
    fn csv_shape() {
        let t = StatTable::compute(20, 3);
        let s = to_csv(&t, 3);
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines.len(), 22);
        assert_eq!(lines[0], "n,p,N0,M0,ospt,u0,u1,u2,u3");
    }
}
