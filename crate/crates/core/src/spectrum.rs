//! Eigenvalues and explicit eigenvector bases of the band matrix.
//!
//! For even `n` the odd-indexed and even-indexed coordinates each carry a
//! tridiagonal Toeplitz block of size `n/2`, so every eigenvalue
//! `lambda_k = 2 sqrt(ab) cos(2 k pi / (n + 2))` appears twice. For odd `n` the
//! blocks have sizes `(n+1)/2` and `(n-1)/2` and all `n` eigenvalues are simple.
//!
//! Eigenvector entries are `sqrt(alpha)^(p-1) U_{p-1}(mu)` with `alpha = b/a`
//! and `mu` the cosine behind the eigenvalue. The inverse basis replaces the
//! powers of `sqrt(alpha)` with their reciprocals and scales each row by the
//! normalisation weight `(4 - 4 mu^2) / (2 (m + 1))` of its block of size `m`.

use crate::chebyshev::{chebyshev_u, chebyshev_u_sequence};
use crate::oracle::DenseMatrix;
use crate::{complex_powi, is_finite, ComplexScalar, Error, Result};

/// Order and band values of the matrix with `a` on offset `+2` and `b` on
/// offset `-2`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSpec {
    n: usize,
    a: ComplexScalar,
    b: ComplexScalar,
}

impl MatrixSpec {
    pub fn new(n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<Self> {
        if !is_finite(a) {
            return Err(Error::NotFinite("a"));
        }
        if !is_finite(b) {
            return Err(Error::NotFinite("b"));
        }
        if a.re == 0.0 && a.im == 0.0 {
            return Err(Error::ZeroBand("a"));
        }
        if b.re == 0.0 && b.im == 0.0 {
            return Err(Error::ZeroBand("b"));
        }
        if n < 3 {
            return Err(Error::OrderTooSmall(n));
        }
        Ok(Self { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn b(&self) -> ComplexScalar {
        self.b
    }

    pub fn parity(&self) -> Parity {
        if self.n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn derived(&self, branch: Branch) -> DerivedScalars {
        DerivedScalars::new(self, branch)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Which square-root branch the derived scalars use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Principal,
    /// Both roots negated. Only useful for checking branch independence.
    Flipped,
}

/// Root-valued scalars that appear in the eigen-formulas.
///
/// `sqrt_ab` is the principal root of `ab`. `sqrt_alpha` is tied to it by
/// `a * sqrt_alpha = sqrt_ab`; it squares to `alpha = b/a` but is not always
/// the principal root of `alpha`. Choosing both roots independently can make
/// the eigenvector formulas produce eigenvectors of `-lambda` instead of
/// `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScalars {
    pub sqrt_ab: ComplexScalar,
    pub alpha: ComplexScalar,
    pub sqrt_alpha: ComplexScalar,
}

impl DerivedScalars {
    pub fn new(spec: &MatrixSpec, branch: Branch) -> Self {
        let sqrt_ab = principal_sqrt(spec.a * spec.b);
        let alpha = spec.b / spec.a;
        let sqrt_alpha = sqrt_ab / spec.a;
        let d = Self { sqrt_ab, alpha, sqrt_alpha };
        match branch {
            Branch::Principal => d,
            Branch::Flipped => Self { sqrt_ab: -d.sqrt_ab, alpha, sqrt_alpha: -d.sqrt_alpha },
        }
    }
}

/// Square root with nonnegative real part, and nonnegative imaginary part when
/// the real part is zero.
pub fn principal_sqrt(z: ComplexScalar) -> ComplexScalar {
    let s = z.sqrt();
    if s.re < 0.0 || (s.re == 0.0 && s.im < 0.0) {
        -s
    } else {
        s
    }
}

/// `cos(p pi / q)` for `0 < p < q`, folded so that `cos(p pi/q)` and
/// `cos((q-p) pi/q)` are exact negatives and the midpoint is exactly zero.
pub(crate) fn cos_pi_ratio(p: usize, q: usize) -> f64 {
    debug_assert!(p > 0 && p < q);
    if 2 * p == q {
        0.0
    } else if 2 * p > q {
        -(std::f64::consts::PI * (q - p) as f64 / q as f64).cos()
    } else {
        (std::f64::consts::PI * p as f64 / q as f64).cos()
    }
}

/// `cos(2 k pi / (n + 2))` for `k = 1..=n/2`.
pub(crate) fn even_cosines(n: usize) -> Vec<f64> {
    (1..=n / 2).map(|k| cos_pi_ratio(2 * k, n + 2)).collect()
}

/// Cosines behind `beta_1..beta_n`: `(m+1) pi / (n+3)` for odd `m`,
/// `m pi / (n+1)` for even `m`.
pub(crate) fn odd_cosines(n: usize) -> Vec<f64> {
    (1..=n).map(|m| if m % 2 == 1 { cos_pi_ratio(m + 1, n + 3) } else { cos_pi_ratio(m, n + 1) }).collect()
}

/// Normalisation `(4 - (eigenvalue / sqrt(ab))^2) / denom` with the ratio
/// written as `2 mu`.
pub(crate) fn weight(mu: f64, denom: usize) -> f64 {
    (4.0 - (2.0 * mu) * (2.0 * mu)) / denom as f64
}

fn require(spec: &MatrixSpec, parity: Parity) -> Result<()> {
    if spec.parity() != parity {
        return Err(Error::WrongParity { expected: parity.as_str(), n: spec.n });
    }
    Ok(())
}

fn real(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

/// Distinct eigenvalues `lambda_1..lambda_{n/2}` for even `n`, each of
/// multiplicity two.
pub fn eigenvalues_even(spec: &MatrixSpec) -> Result<Vec<ComplexScalar>> {
    eigenvalues_even_with(spec, Branch::Principal)
}

pub fn eigenvalues_even_with(spec: &MatrixSpec, branch: Branch) -> Result<Vec<ComplexScalar>> {
    require(spec, Parity::Even)?;
    let two_root = spec.derived(branch).sqrt_ab * 2.0;
    Ok(even_cosines(spec.n).into_iter().map(|c| two_root * c).collect())
}

/// `beta_1..beta_n` for odd `n`, all simple, in index order.
pub fn eigenvalues_odd(spec: &MatrixSpec) -> Result<Vec<ComplexScalar>> {
    eigenvalues_odd_with(spec, Branch::Principal)
}

pub fn eigenvalues_odd_with(spec: &MatrixSpec, branch: Branch) -> Result<Vec<ComplexScalar>> {
    require(spec, Parity::Odd)?;
    let two_root = spec.derived(branch).sqrt_ab * 2.0;
    Ok(odd_cosines(spec.n).into_iter().map(|c| two_root * c).collect())
}

/// Eigenvalues with multiplicity, matching the column order of the transform.
pub fn eigenvalues_with_multiplicity(spec: &MatrixSpec, branch: Branch) -> Vec<ComplexScalar> {
    match spec.parity() {
        Parity::Even => {
            eigenvalues_even_with(spec, branch).expect("parity checked").into_iter().flat_map(|l| [l, l]).collect()
        }
        Parity::Odd => eigenvalues_odd_with(spec, branch).expect("parity checked"),
    }
}

/// `A = transform * diag(eigenvalues) * inverse_transform`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub parity: Parity,
    pub eigenvalues: Vec<ComplexScalar>,
    pub transform: DenseMatrix,
    pub inverse_transform: DenseMatrix,
}

impl SpectralDecomposition {
    pub fn build(spec: &MatrixSpec, branch: Branch) -> Self {
        match spec.parity() {
            Parity::Even => transform_even_with(spec, branch),
            Parity::Odd => transform_odd_with(spec, branch),
        }
        .expect("parity checked")
    }
}

/// Powers `sqrt_alpha^e` for `e` in `-max..=max`, indexed by `e + max`.
pub(crate) fn sqrt_alpha_powers(sqrt_alpha: ComplexScalar, max: usize) -> Vec<ComplexScalar> {
    let max = max as i64;
    (-max..=max).map(|e| complex_powi(sqrt_alpha, e)).collect()
}

/// Fills an eigenvector column (or an inverse row, with `sign = -1`) whose
/// support is the coordinates `offset, offset + 2, ...` (0-based).
#[allow(clippy::too_many_arguments)]
fn place_vector(
    out: &mut DenseMatrix,
    line: usize,
    as_column: bool,
    offset: usize,
    len: usize,
    u: &[ComplexScalar],
    pow: &[ComplexScalar],
    sign: i64,
    scale: f64,
) {
    let mid = (pow.len() / 2) as i64;
    for p in 0..len {
        let v = pow[(mid + sign * p as i64) as usize] * u[p] * scale;
        let coord = offset + 2 * p;
        if as_column {
            out[(coord, line)] = v;
        } else {
            out[(line, coord)] = v;
        }
    }
}

/// Eigenbasis `P` and its inverse for even `n`.
pub fn transform_even(spec: &MatrixSpec) -> Result<SpectralDecomposition> {
    transform_even_with(spec, Branch::Principal)
}

pub fn transform_even_with(spec: &MatrixSpec, branch: Branch) -> Result<SpectralDecomposition> {
    transform_even_from(spec, spec.derived(branch))
}

fn transform_even_from(spec: &MatrixSpec, d: DerivedScalars) -> Result<SpectralDecomposition> {
    require(spec, Parity::Even)?;
    let n = spec.n;
    let half = n / 2;
    let pow = sqrt_alpha_powers(d.sqrt_alpha, half);
    let mut p_mat = DenseMatrix::zeros(n);
    let mut p_inv = DenseMatrix::zeros(n);
    for (k0, &mu) in even_cosines(n).iter().enumerate() {
        let u = chebyshev_u_sequence(half - 1, real(mu))?;
        let s = weight(mu, n + 2);
        // columns 2k-1 and 2k (1-based) share lambda_k
        for (line, offset) in [(2 * k0, 0), (2 * k0 + 1, 1)] {
            place_vector(&mut p_mat, line, true, offset, half, &u, &pow, 1, 1.0);
            place_vector(&mut p_inv, line, false, offset, half, &u, &pow, -1, s);
        }
    }
    let two_root = d.sqrt_ab * 2.0;
    Ok(SpectralDecomposition {
        parity: Parity::Even,
        eigenvalues: even_cosines(n).into_iter().flat_map(|c| [two_root * c, two_root * c]).collect(),
        transform: p_mat,
        inverse_transform: p_inv,
    })
}

/// Eigenbasis `T` and its inverse for odd `n`.
pub fn transform_odd(spec: &MatrixSpec) -> Result<SpectralDecomposition> {
    transform_odd_with(spec, Branch::Principal)
}

pub fn transform_odd_with(spec: &MatrixSpec, branch: Branch) -> Result<SpectralDecomposition> {
    require(spec, Parity::Odd)?;
    let n = spec.n;
    let d = spec.derived(branch);
    let pow = sqrt_alpha_powers(d.sqrt_alpha, n.div_ceil(2));
    let mut t_mat = DenseMatrix::zeros(n);
    let mut t_inv = DenseMatrix::zeros(n);
    for (j0, &eta) in odd_cosines(n).iter().enumerate() {
        // 1-based index j = j0 + 1; odd j lives on odd coordinates
        let (offset, len, denom) = if j0 % 2 == 0 { (0, n.div_ceil(2), n + 3) } else { (1, (n - 1) / 2, n + 1) };
        let u = chebyshev_u_sequence(len - 1, real(eta))?;
        let q = weight(eta, denom);
        place_vector(&mut t_mat, j0, true, offset, len, &u, &pow, 1, 1.0);
        place_vector(&mut t_inv, j0, false, offset, len, &u, &pow, -1, q);
    }
    Ok(SpectralDecomposition {
        parity: Parity::Odd,
        eigenvalues: eigenvalues_with_multiplicity(spec, branch),
        transform: t_mat,
        inverse_transform: t_inv,
    })
}

/// Determinant `p_order(x)` of the `order x order` tridiagonal Toeplitz
/// matrix with `x` on the diagonal, `a` above and `b` below.
pub fn tridiag_charpoly(order: usize, spec: &MatrixSpec, x: ComplexScalar) -> ComplexScalar {
    let ab = spec.a * spec.b;
    let mut prev = ComplexScalar::new(1.0, 0.0);
    if order == 0 {
        return prev;
    }
    let mut cur = x;
    for _ in 1..order {
        let next = x * cur - ab * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalised characteristic function whose zeros are exactly the spectrum.
///
/// Even `n`: `U_{n/2}(z)^2`; odd `n`: `U_{(n-1)/2}(z) U_{(n+1)/2}(z)`, with
/// `z = lam / (2 sqrt(ab))`. It differs from `det(lam I - A)` by the factor
/// `(ab)^{n/2}`.
pub fn char_function(spec: &MatrixSpec, lam: ComplexScalar) -> Result<ComplexScalar> {
    let z = lam / (spec.derived(Branch::Principal).sqrt_ab * 2.0);
    let n = spec.n;
    Ok(match spec.parity() {
        Parity::Even => {
            let u = chebyshev_u(n / 2, z)?;
            u * u
        }
        Parity::Odd => chebyshev_u((n - 1) / 2, z)? * chebyshev_u(n.div_ceil(2), z)?,
    })
}
