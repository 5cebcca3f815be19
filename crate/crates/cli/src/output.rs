//! JSON, CSV and plain-text renderings of command results.

use std::fmt::Write as _;

use num_complex::Complex64;
use pentapow::DenseMatrix;
use serde::{Deserialize, Serialize};

use crate::literal::format_complex;

pub const SCHEMA_VERSION: &str = "1";

/// `{re, im}` pair with negative zero normalised away.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self { re: clean(z.re), im: clean(z.im) }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub route: String,
    pub elapsed_ns: u128,
}

/// Power matrix document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub n: usize,
    pub r: u64,
    pub a: ComplexJson,
    pub b: ComplexJson,
    pub rows: Vec<Vec<ComplexJson>>,
    pub meta: Meta,
}

impl OutputDocument {
    pub fn new(n: usize, r: u64, a: Complex64, b: Complex64, m: &DenseMatrix, route: &str, elapsed_ns: u128) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            n,
            r,
            a: a.into(),
            b: b.into(),
            rows: m.rows().map(|row| row.iter().map(|&z| z.into()).collect()).collect(),
            meta: Meta { route: route.to_string(), elapsed_ns },
        }
    }

    pub fn matrix(&self) -> DenseMatrix {
        let rows = self.rows.iter().map(|r| r.iter().map(|&z| z.into()).collect()).collect();
        DenseMatrix::from_rows(rows).expect("document rows are square")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenEntry {
    pub index: usize,
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenDocument {
    pub schema_version: String,
    pub n: usize,
    pub a: ComplexJson,
    pub b: ComplexJson,
    pub parity: String,
    pub eigenvalues: Vec<EigenEntry>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn num(x: f64) -> String {
    format!("{}", clean(x))
}

/// One header row, then `re,im` column pairs per matrix entry.
pub fn matrix_csv(m: &DenseMatrix) -> String {
    let n = m.order();
    let mut out = String::new();
    let header: Vec<String> = (1..=n).map(|j| format!("c{j}_re,c{j}_im")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|z| format!("{},{}", num(z.re), num(z.im))).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Rounds to ten decimals and drops components below `1e-12 * scale`, for
/// display only.
fn display_round(z: Complex64, scale: f64) -> Complex64 {
    let floor = 1e-12 * scale.max(1.0);
    let round = |x: f64| if x.abs() <= floor { 0.0 } else { (x * 1e10).round() / 1e10 };
    Complex64::new(round(z.re), round(z.im))
}

pub fn matrix_pretty(m: &DenseMatrix) -> String {
    let scale = m.max_modulus();
    let cells: Vec<Vec<String>> =
        m.rows().map(|row| row.iter().map(|&z| format_complex(display_round(z, scale))).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  "));
    }
    out
}

pub fn eigen_csv(doc: &EigenDocument) -> String {
    let mut out = String::from("index,re,im,multiplicity\n");
    for e in &doc.eigenvalues {
        let _ = writeln!(out, "{},{},{},{}", e.index, num(e.re), num(e.im), e.multiplicity);
    }
    out
}

pub fn eigen_pretty(doc: &EigenDocument) -> String {
    let mut out = String::new();
    for e in &doc.eigenvalues {
        let _ = writeln!(
            out,
            "{:>3}  {}  (x{})",
            e.index,
            format_complex(display_round(Complex64::new(e.re, e.im), 1.0)),
            e.multiplicity
        );
    }
    out
}
