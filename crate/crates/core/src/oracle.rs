//! Brute-force dense complex linear algebra used as ground truth.
//!
//! Nothing in here knows about eigenvalues or Chebyshev polynomials: powers are
//! computed by repeated multiplication and determinants by LU factorization,
//! so results from this module can be trusted to check the closed forms.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::chebyshev::fibonacci_poly;
use crate::{complex_pow, ComplexScalar, Error, MatrixSpec, Result};

/// Row-major square complex matrix. Indices are 0-based.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<ComplexScalar>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![ComplexScalar::new(0.0, 0.0); order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = ComplexScalar::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ComplexScalar>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::OrderMismatch { lhs: order, rhs: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { order, entries })
    }

    pub fn diagonal(values: &[ComplexScalar]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[ComplexScalar] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    /// Largest entry modulus.
    pub fn max_modulus(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| crate::is_finite(*z))
    }

    pub fn scale(&self, s: ComplexScalar) -> Self {
        Self { order: self.order, entries: self.entries.iter().map(|z| z * s).collect() }
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<Self> {
        check_orders(self, other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| x - y).collect();
        Ok(Self { order: self.order, entries })
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = ComplexScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.entries[i * self.order + j]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}x{})", self.order, self.order)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|z| format!("{:.6}{:+.6}i", z.re, z.im)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn check_orders(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<()> {
    if lhs.order != rhs.order {
        return Err(Error::OrderMismatch { lhs: lhs.order, rhs: rhs.order });
    }
    Ok(())
}

/// Result of comparing a candidate matrix against a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_abs_deviation: f64,
    /// `max_abs_deviation / max(1, reference scale)`.
    pub max_rel_deviation: f64,
    /// 0-based `(row, column)` of the largest deviation.
    pub worst_index: (usize, usize),
    pub passed: bool,
    pub tolerance_used: f64,
}

/// The band matrix: `a` at offset `+2`, `b` at offset `-2`.
pub fn build_dense(spec: &MatrixSpec) -> DenseMatrix {
    let n = spec.n();
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n.saturating_sub(2) {
        m[(i, i + 2)] = spec.a();
        m[(i + 2, i)] = spec.b();
    }
    m
}

pub fn mat_mul(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<DenseMatrix> {
    check_orders(lhs, rhs)?;
    let n = lhs.order;
    let mut out = DenseMatrix::zeros(n);
    // i-k-j order keeps the inner loop on contiguous rows
    for i in 0..n {
        let lrow = lhs.row(i);
        let orow = &mut out.entries[i * n..(i + 1) * n];
        for (k, &lik) in lrow.iter().enumerate() {
            if lik.re == 0.0 && lik.im == 0.0 {
                continue;
            }
            for (o, &rkj) in orow.iter_mut().zip(rhs.row(k)) {
                *o += lik * rkj;
            }
        }
    }
    Ok(out)
}

/// `A^r` by binary exponentiation of the dense matrix.
pub fn naive_power(spec: &MatrixSpec, r: u64) -> DenseMatrix {
    dense_power(&build_dense(spec), r)
}

pub fn dense_power(base: &DenseMatrix, mut r: u64) -> DenseMatrix {
    let mut acc = DenseMatrix::identity(base.order);
    let mut sq = base.clone();
    while r > 0 {
        if r & 1 == 1 {
            acc = mat_mul(&acc, &sq).expect("same order");
        }
        r >>= 1;
        if r > 0 {
            sq = mat_mul(&sq, &sq).expect("same order");
        }
    }
    acc
}

/// Determinant via LU with partial pivoting on modulus.
pub fn determinant(m: &DenseMatrix) -> ComplexScalar {
    let n = m.order;
    let mut lu = m.entries.clone();
    let mut det = ComplexScalar::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&x, &y| lu[x * n + col].norm().total_cmp(&lu[y * n + col].norm()))
            .expect("nonempty range");
        let pivot = lu[pivot_row * n + col];
        if pivot.norm() == 0.0 {
            return ComplexScalar::new(0.0, 0.0);
        }
        if pivot_row != col {
            for k in 0..n {
                lu.swap(col * n + k, pivot_row * n + k);
            }
            det = -det;
        }
        det *= pivot;
        for row in col + 1..n {
            let factor = lu[row * n + col] / pivot;
            if factor.norm() == 0.0 {
                continue;
            }
            for k in col + 1..n {
                let u = lu[col * n + k];
                lu[row * n + k] -= factor * u;
            }
        }
    }
    det
}

/// `lam * I - A` for the spec's band matrix.
pub fn shifted(spec: &MatrixSpec, lam: ComplexScalar) -> DenseMatrix {
    let mut m = build_dense(spec).scale(ComplexScalar::new(-1.0, 0.0));
    for i in 0..spec.n() {
        m[(i, i)] += lam;
    }
    m
}

pub fn compare(candidate: &DenseMatrix, reference: &DenseMatrix, rel_tol: f64) -> Result<VerificationReport> {
    check_orders(candidate, reference)?;
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::BadTolerance(rel_tol));
    }
    let n = reference.order;
    let mut max_abs = 0.0f64;
    let mut worst = 0usize;
    for (idx, (c, r)) in candidate.entries.iter().zip(&reference.entries).enumerate() {
        let d = (c - r).norm();
        // NaN deviations must register as failures
        if d > max_abs || d.is_nan() {
            max_abs = d;
            worst = idx;
            if d.is_nan() {
                break;
            }
        }
    }
    let scale = reference.max_modulus().max(1.0);
    let passed = max_abs <= rel_tol * scale;
    Ok(VerificationReport {
        max_abs_deviation: max_abs,
        max_rel_deviation: max_abs / scale,
        worst_index: (worst.checked_div(n).unwrap_or(0), worst.checked_rem(n).unwrap_or(0)),
        passed,
        tolerance_used: rel_tol,
    })
}

/// Outcome of checking `det(A_{4t}) = (i F_2(x))^{2t}` with `a = x`, `b = i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorollaryCheck {
    pub n: usize,
    pub lu_determinant: ComplexScalar,
    pub formula_value: ComplexScalar,
    pub report: VerificationReport,
}

pub const COROLLARY_TOLERANCE: f64 = 1e-9;

pub fn determinant_corollary_check(t: usize, x: ComplexScalar) -> Result<CorollaryCheck> {
    if t == 0 {
        return Err(Error::OrderTooSmall(0));
    }
    let n = 4 * t;
    let spec = MatrixSpec::new(n, x, ComplexScalar::i())?;
    let lu_determinant = determinant(&build_dense(&spec));
    let f2 = fibonacci_poly(2, x)?;
    let formula_value = complex_pow(ComplexScalar::i() * f2, (n / 2) as u64);
    let report = compare(
        &DenseMatrix::diagonal(&[lu_determinant]),
        &DenseMatrix::diagonal(&[formula_value]),
        COROLLARY_TOLERANCE,
    )?;
    Ok(CorollaryCheck { n, lu_determinant, formula_value, report })
}
