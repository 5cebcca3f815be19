//! Timing table for the three routes to `A^r`.

use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use pentapow::oracle::{compare, naive_power};
use pentapow::power::{power_matrix, power_via_spectral};
use pentapow::{DenseMatrix, MatrixSpec, PowerRequest};
use serde::{Deserialize, Serialize};

use crate::Route;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub r: u64,
    pub route: String,
    pub median_ns: u128,
    pub max_rel_vs_oracle: f64,
}

pub fn compute(route: Route, req: &PowerRequest) -> pentapow::Result<DenseMatrix> {
    match route {
        Route::ClosedForm => power_matrix(req),
        Route::Spectral => power_via_spectral(req),
        Route::Oracle => Ok(naive_power(&req.spec, req.r)),
    }
}

/// Median of the samples; mean of the two middle values for even counts.
pub fn median(samples: &mut [u128]) -> u128 {
    samples.sort_unstable();
    let n = samples.len();
    if n % 2 == 1 {
        samples[n / 2]
    } else {
        (samples[n / 2 - 1] + samples[n / 2]) / 2
    }
}

pub fn run(
    orders: &[usize],
    exponents: &[u64],
    routes: &[Route],
    repeats: usize,
    a: Complex64,
    b: Complex64,
) -> pentapow::Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in orders {
        let spec = MatrixSpec::new(n, a, b)?;
        for &r in exponents {
            let req = PowerRequest::new(spec.clone(), r);
            let reference = naive_power(&spec, r);
            for &route in routes {
                let mut samples = Vec::with_capacity(repeats);
                let mut last = None;
                for _ in 0..repeats {
                    let start = Instant::now();
                    let m = compute(route, &req)?;
                    samples.push(start.elapsed().as_nanos());
                    last = Some(m);
                }
                let m = last.expect("repeats >= 1");
                let report = compare(&m, &reference, 1e-8)?;
                rows.push(BenchRow {
                    n,
                    r,
                    route: route.name().to_string(),
                    median_ns: median(&mut samples),
                    max_rel_vs_oracle: report.max_rel_deviation,
                });
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,r,route,median_ns,max_rel_vs_oracle\n");
    for row in rows {
        let _ = writeln!(out, "{},{},{},{},{:e}", row.n, row.r, row.route, row.median_ns, row.max_rel_vs_oracle);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_odd_and_even() {
        assert_eq!(median(&mut [5, 1, 3]), 3);
        assert_eq!(median(&mut [4, 1, 3, 2]), 2);
    }

    #[test]
    fn small_bench_agrees() {
        let one = Complex64::new(1.0, 0.0);
        let rows =
            run(&[8], &[5], &[Route::ClosedForm, Route::Spectral, Route::Oracle], 3, one, Complex64::new(0.5, 0.5))
                .unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.max_rel_vs_oracle <= 1e-8));
        assert_eq!(rows[2].max_rel_vs_oracle, 0.0);
        let csv = to_csv(&rows);
        assert!(csv.starts_with("n,r,route,median_ns,max_rel_vs_oracle\n8,5,closed_form,"));
    }
}
