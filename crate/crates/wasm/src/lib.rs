//! Browser bindings. Complex results are flattened to interleaved
//! `[re0, im0, re1, im1, ...]` arrays, row-major for matrices.

use num_complex::Complex64;
use pentapow::oracle::{compare, naive_power};
use pentapow::power::{power_matrix as closed_form, power_via_spectral};
use pentapow::spectrum::eigenvalues_with_multiplicity;
use pentapow::{Branch, DenseMatrix, MatrixSpec, PowerRequest};
use wasm_bindgen::prelude::*;

fn spec(n: u32, a_re: f64, a_im: f64, b_re: f64, b_im: f64) -> Result<MatrixSpec, String> {
    MatrixSpec::new(n as usize, Complex64::new(a_re, a_im), Complex64::new(b_re, b_im)).map_err(|e| e.to_string())
}

fn flatten(values: &[Complex64]) -> Vec<f64> {
    values.iter().flat_map(|z| [z.re, z.im]).collect()
}

fn compute(req: &PowerRequest, route: &str) -> Result<DenseMatrix, String> {
    match route {
        "closed_form" => closed_form(req).map_err(|e| e.to_string()),
        "spectral" => power_via_spectral(req).map_err(|e| e.to_string()),
        "oracle" => Ok(naive_power(&req.spec, req.r)),
        other => Err(format!("unknown route `{other}`")),
    }
}

/// `A^r` as `2 n^2` interleaved floats.
#[wasm_bindgen(js_name = powerMatrix)]
#[allow(clippy::too_many_arguments)]
pub fn power_matrix(
    n: u32,
    r: u32,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    route: &str,
) -> Result<Vec<f64>, String> {
    let req = PowerRequest::new(spec(n, a_re, a_im, b_re, b_im)?, r as u64);
    Ok(flatten(compute(&req, route)?.entries()))
}

/// All `n` eigenvalues, repeated by multiplicity.
#[wasm_bindgen]
pub fn eigenvalues(n: u32, a_re: f64, a_im: f64, b_re: f64, b_im: f64, flipped: bool) -> Result<Vec<f64>, String> {
    let branch = if flipped { Branch::Flipped } else { Branch::Principal };
    Ok(flatten(&eigenvalues_with_multiplicity(&spec(n, a_re, a_im, b_re, b_im)?, branch)))
}

/// Largest relative deviation of the closed form from repeated multiplication.
#[wasm_bindgen]
pub fn verify(n: u32, r: u32, a_re: f64, a_im: f64, b_re: f64, b_im: f64) -> Result<f64, String> {
    let req = PowerRequest::new(spec(n, a_re, a_im, b_re, b_im)?, r as u64);
    let closed = compute(&req, "closed_form")?;
    let report = compare(&closed, &naive_power(&req.spec, req.r), 1e-8).map_err(|e| e.to_string())?;
    Ok(report.max_rel_deviation)
}
