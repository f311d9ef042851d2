//! Matrix and certificate file formats.
//!
//! Text format: first line `N`, then `N` lines of `N` space-separated 0/1
//! entries. The canonical writer emits ASCII with LF line endings and single
//! spaces; writing and re-reading is byte-identical.
//!
//! Structured format: a JSON object with `size`, row-major `entries`, and
//! optional `labels` and `ceiling`. Certificates are JSON objects holding
//! `h`, `k` (with `rows`, `cols`, `entries`) and `lag`; entries may be
//! numbers or decimal strings.

use crate::certificates::SeCertificate;
use crate::intlin::IntMatrix;
use crate::markov::{BinMatrix, MarkovError};
use crate::suspension::{CeilingFunction, SuspensionError};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Value(String),
}

impl ParseError {
    fn value(e: impl std::fmt::Display) -> Self {
        ParseError::Value(e.to_string())
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

impl From<MarkovError> for ParseError {
    fn from(e: MarkovError) -> Self {
        ParseError::Value(e.to_string())
    }
}

impl From<SuspensionError> for ParseError {
    fn from(e: SuspensionError) -> Self {
        ParseError::Value(e.to_string())
    }
}

/// A parsed matrix file: the matrix plus an optional embedded ceiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: BinMatrix,
    pub ceiling: Option<CeilingFunction>,
}

pub fn read_matrix_file(path: &Path) -> Result<MatrixDocument, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_matrix(&text)
}

/// Format is sniffed from the first non-whitespace byte: `{` means JSON.
pub fn parse_matrix(text: &str) -> Result<MatrixDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_matrix_json(text)
    } else {
        parse_matrix_text(text)
    }
}

pub fn parse_matrix_text(text: &str) -> Result<MatrixDocument, ParseError> {
    let mut lines = text.lines().enumerate();
    let (header_idx, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::Syntax {
            line: 1,
            column: 1,
            message: "empty file, expected a size line".into(),
        })?;
    let size: usize = header.trim().parse().map_err(|_| ParseError::Syntax {
        line: header_idx + 1,
        column: 1,
        message: format!("expected a positive size, found {:?}", header.trim()),
    })?;
    if size == 0 {
        return Err(ParseError::Syntax {
            line: header_idx + 1,
            column: 1,
            message: "matrix size must be at least 1".into(),
        });
    }
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(size);
    for _ in 0..size {
        let (idx, line) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| ParseError::Syntax {
                line: header_idx + 1,
                column: 1,
                message: format!("expected {size} rows, found {}", rows.len()),
            })?;
        let mut row = Vec::with_capacity(size);
        for (col, token) in line.split_whitespace().enumerate() {
            match token {
                "0" => row.push(0),
                "1" => row.push(1),
                other => {
                    return Err(ParseError::Syntax {
                        line: idx + 1,
                        column: col + 1,
                        message: format!("invalid entry {other:?}, expected 0 or 1"),
                    })
                }
            }
        }
        if row.len() != size {
            return Err(ParseError::Syntax {
                line: idx + 1,
                column: row.len() + 1,
                message: format!("expected {size} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((idx, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(ParseError::Syntax {
            line: idx + 1,
            column: 1,
            message: "trailing content after the matrix".into(),
        });
    }
    Ok(MatrixDocument {
        matrix: BinMatrix::from_rows(rows)?,
        ceiling: None,
    })
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    size: usize,
    entries: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ceiling: Option<Vec<u32>>,
}

pub fn parse_matrix_json(text: &str) -> Result<MatrixDocument, ParseError> {
    let raw: MatrixJson = serde_json::from_str(text)?;
    if raw.entries.len() != raw.size * raw.size {
        return Err(ParseError::Value(format!(
            "{} entries do not fill a {}x{} matrix",
            raw.entries.len(),
            raw.size,
            raw.size
        )));
    }
    let rows: Vec<Vec<u8>> = raw
        .entries
        .chunks(raw.size.max(1))
        .map(|c| c.to_vec())
        .collect();
    let mut matrix = BinMatrix::from_rows(rows)?;
    if let Some(labels) = raw.labels {
        matrix = matrix.with_labels(labels)?;
    }
    let ceiling = match raw.ceiling {
        Some(values) => {
            if values.len() != raw.size {
                return Err(ParseError::Value(format!(
                    "ceiling has {} values for {} states",
                    values.len(),
                    raw.size
                )));
            }
            Some(CeilingFunction::new(values)?)
        }
        None => None,
    };
    Ok(MatrixDocument { matrix, ceiling })
}

/// Canonical text form: ASCII, LF endings, single-space separation.
pub fn write_matrix_text(m: &BinMatrix) -> String {
    let n = m.size();
    let mut out = String::new();
    writeln!(out, "{n}").unwrap();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push(if m.entry(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Canonical JSON form: compact, fixed field order, trailing newline.
pub fn write_matrix_json(m: &BinMatrix, ceiling: Option<&CeilingFunction>) -> String {
    let raw = MatrixJson {
        size: m.size(),
        entries: m.entries_u8(),
        labels: m.labels().map(|l| l.to_vec()),
        ceiling: ceiling.map(|c| c.values().to_vec()),
    };
    let mut s = serde_json::to_string(&raw).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntLit {
    Num(i64),
    Str(String),
}

#[derive(Serialize, Deserialize)]
struct IntMatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<IntLit>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    h: IntMatrixJson,
    k: IntMatrixJson,
    lag: u32,
}

fn int_matrix_from_json(raw: IntMatrixJson) -> Result<IntMatrix, ParseError> {
    let mut entries = Vec::with_capacity(raw.entries.len());
    for e in raw.entries {
        entries.push(match e {
            IntLit::Num(n) => BigInt::from(n),
            IntLit::Str(s) => BigInt::from_str(s.trim()).map_err(ParseError::value)?,
        });
    }
    IntMatrix::new(raw.rows, raw.cols, entries).map_err(ParseError::value)
}

fn int_matrix_to_json(m: &IntMatrix) -> IntMatrixJson {
    IntMatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m
            .entries()
            .iter()
            .map(|e| match i64::try_from(e.clone()) {
                Ok(n) => IntLit::Num(n),
                Err(_) => IntLit::Str(e.to_string()),
            })
            .collect(),
    }
}

pub fn read_certificate_file(path: &Path) -> Result<SeCertificate, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_certificate_json(&text)
}

pub fn parse_certificate_json(text: &str) -> Result<SeCertificate, ParseError> {
    let raw: CertificateJson = serde_json::from_str(text)?;
    if raw.lag == 0 {
        return Err(ParseError::Value("certificate lag must be positive".into()));
    }
    Ok(SeCertificate {
        h: int_matrix_from_json(raw.h)?,
        k: int_matrix_from_json(raw.k)?,
        lag: raw.lag,
    })
}

pub fn write_certificate_json(cert: &SeCertificate) -> String {
    let raw = CertificateJson {
        h: int_matrix_to_json(&cert.h),
        k: int_matrix_to_json(&cert.k),
        lag: cert.lag,
    };
    let mut s = serde_json::to_string(&raw).expect("serializable");
    s.push('\n');
    s
}
