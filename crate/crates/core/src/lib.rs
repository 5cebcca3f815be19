//! Integer powers of complex pentadiagonal Toeplitz matrices.
//!
//! The matrix family handled here has nonzero entries only on the diagonals at
//! offsets `+2` (value `a`) and `-2` (value `b`). Such a matrix decouples into
//! two tridiagonal Toeplitz blocks acting on the odd and even indices, which is
//! what makes a closed form in terms of Chebyshev polynomials of the second
//! kind possible.
//!
//! Three independent routes to `A^r` are provided:
//!
//! * [`power::power_matrix`]: closed-form entry formulas (cost independent of `r`
//!   apart from scalar eigenvalue powers),
//! * [`power::power_via_spectral`]: dense `P J^r P^{-1}` from the explicit
//!   eigendecomposition,
//! * [`oracle::naive_power`]: brute-force binary exponentiation of the dense
//!   matrix, used as ground truth.

pub mod chebyshev;
pub mod error;
pub mod oracle;
pub mod power;
pub mod spectrum;
pub mod sweep;

pub use num_complex::Complex64;

/// Double-precision complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

pub use error::{Error, Result};
pub use oracle::{DenseMatrix, VerificationReport};
pub use power::PowerRequest;
pub use spectrum::{Branch, DerivedScalars, MatrixSpec, Parity, SpectralDecomposition};

/// Binary exponentiation of a complex scalar.
///
/// `z^0` is `1` for every `z`, including zero.
pub fn complex_pow(base: ComplexScalar, mut exp: u64) -> ComplexScalar {
    let mut acc = ComplexScalar::new(1.0, 0.0);
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq * sq;
        }
    }
    acc
}

/// Integer power with negative exponents handled through the reciprocal.
pub(crate) fn complex_powi(base: ComplexScalar, exp: i64) -> ComplexScalar {
    if exp >= 0 {
        complex_pow(base, exp as u64)
    } else {
        complex_pow(base.inv(), exp.unsigned_abs())
    }
}

pub(crate) fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
