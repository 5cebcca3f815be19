//! Chebyshev polynomials of the second kind and Fibonacci polynomials at
//! complex arguments, evaluated by their three-term recurrences.
//!
//! `U_0 = 1`, `U_1 = 2x`, `U_{m+1} = 2x U_m - U_{m-1}`, so that
//! `U_m(cos t) = sin((m+1)t) / sin t`.

use crate::{is_finite, ComplexScalar, Error, Result};

/// `U_m(x)` by forward recurrence.
pub fn chebyshev_u(m: usize, x: ComplexScalar) -> Result<ComplexScalar> {
    if !is_finite(x) {
        return Err(Error::NotFinite("x"));
    }
    let two_x = x + x;
    let mut prev = ComplexScalar::new(1.0, 0.0);
    if m == 0 {
        return Ok(prev);
    }
    let mut cur = two_x;
    for _ in 1..m {
        let next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `[U_0(x), ..., U_{m_max}(x)]`.
///
/// Uses exactly the same sequence of floating-point operations as
/// [`chebyshev_u`], so element `k` is bit-identical to `chebyshev_u(k, x)`.
pub fn chebyshev_u_sequence(m_max: usize, x: ComplexScalar) -> Result<Vec<ComplexScalar>> {
    if !is_finite(x) {
        return Err(Error::NotFinite("x"));
    }
    let two_x = x + x;
    let mut out = Vec::with_capacity(m_max + 1);
    out.push(ComplexScalar::new(1.0, 0.0));
    if m_max >= 1 {
        out.push(two_x);
    }
    for k in 2..=m_max {
        let next = two_x * out[k - 1] - out[k - 2];
        out.push(next);
    }
    Ok(out)
}

/// Fibonacci polynomial `F_m(x)` with `F_0 = 0`, `F_1 = 1`,
/// `F_m = x F_{m-1} + F_{m-2}`.
pub fn fibonacci_poly(m: usize, x: ComplexScalar) -> Result<ComplexScalar> {
    if !is_finite(x) {
        return Err(Error::NotFinite("x"));
    }
    let mut prev = ComplexScalar::new(0.0, 0.0);
    if m == 0 {
        return Ok(prev);
    }
    let mut cur = ComplexScalar::new(1.0, 0.0);
    for _ in 1..m {
        let next = x * cur + prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
