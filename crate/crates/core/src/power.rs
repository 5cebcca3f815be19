//! Integer powers `A^r` of the band matrix.
//!
//! The closed form folds the eigenvalue pairs `lambda`, `-lambda` of each
//! tridiagonal block into a single term, so an entry is a sum over roughly a
//! quarter of the spectrum:
//!
//! ```text
//! even n:  w_ij(r) = nu    * sum_{k=1}^{(n-eps)/4}  lambda_k^r s_k alpha^{(i-j)/4} U_{(i gamma - delta)/2}(mu_k) U_{(j gamma - delta)/2}(mu_k)
//! odd n:   z_ij(r) = sigma * sum_{m=1}^{d_ij}       beta_l^r   q_l alpha^{(i-j)/4} U_{(i+theta-2)/2}(eta_l) U_{(j+theta-2)/2}(eta_l),  l = 2m - theta
//! ```
//!
//! Entries with `i + j` odd are identically zero. The parity factors `nu`,
//! `sigma` are either `0` or `2`, which is what the folding produces.

use crate::chebyshev::chebyshev_u_sequence;
use crate::oracle::{mat_mul, DenseMatrix};
use crate::spectrum::{
    even_cosines, odd_cosines, sqrt_alpha_powers, weight, Branch, MatrixSpec, Parity, SpectralDecomposition,
};
use crate::{complex_pow, ComplexScalar, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerRequest {
    pub spec: MatrixSpec,
    pub r: u64,
    /// Evaluate with both square roots negated.
    pub branch_flip: bool,
}

impl PowerRequest {
    pub fn new(spec: MatrixSpec, r: u64) -> Self {
        Self { spec, r, branch_flip: false }
    }

    pub fn branch(&self) -> Branch {
        if self.branch_flip {
            Branch::Flipped
        } else {
            Branch::Principal
        }
    }
}

/// Index bookkeeping constants for entry `(i, j)` of an even-order power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenConstants {
    pub gamma: i64,
    pub delta: i64,
    pub epsilon: i64,
    pub nu: i64,
}

/// Index bookkeeping constants for entry `(i, j)` of an odd-order power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddConstants {
    pub theta: i64,
    pub kappa: i64,
    pub sigma: i64,
    /// Number of folded terms in the sum.
    pub d: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityConstants {
    Even(EvenConstants),
    Odd(OddConstants),
}

fn one_plus_minus_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        2
    } else {
        0
    }
}

impl ParityConstants {
    /// Constants for 1-based `(i, j)`; `None` when `i` and `j` differ in parity
    /// (those entries are zero).
    pub fn new(n: usize, r: u64, i: usize, j: usize) -> Option<Self> {
        if (i + j) % 2 == 1 {
            return None;
        }
        let both_odd = i % 2 == 1;
        let (n, r, i, j) = (n as i64, (r % 2) as i64, i as i64, j as i64);
        if n % 2 == 0 {
            let gamma = if both_odd { 1 } else { -1 };
            let delta = if both_odd { 1 } else { -n };
            let epsilon = if n % 4 == 0 { 0 } else { 2 };
            let nu = one_plus_minus_one_pow(r + gamma * (i + j) / 2 - delta);
            Some(ParityConstants::Even(EvenConstants { gamma, delta, epsilon, nu }))
        } else {
            let theta = if both_odd { 1 } else { 0 };
            let half_minus = (n - 1) / 2;
            let half_plus = (n + 1) / 2;
            let kappa = if both_odd && half_minus % 2 == 1 {
                -3
            } else if both_odd && half_plus % 2 == 1 {
                -1
            } else if !both_odd && half_plus % 2 == 0 {
                2
            } else {
                0
            };
            let sigma = one_plus_minus_one_pow(r + (i + j) / 2 - theta);
            let numer = n - theta - kappa - 1;
            debug_assert_eq!(numer % 4, 0, "n={n} i={i} j={j}");
            Some(ParityConstants::Odd(OddConstants { theta, kappa, sigma, d: numer / 4 }))
        }
    }
}

/// One folded term of the closed-form sum: `eigenvalue^r * weight` and the
/// Chebyshev table at that eigenvalue's cosine.
struct Term {
    scaled_power: ComplexScalar,
    u: Vec<ComplexScalar>,
}

/// Everything an entry evaluation needs, computed once per request.
struct Kernel {
    n: usize,
    r: u64,
    terms: Vec<Term>,
    alpha_pow: Vec<ComplexScalar>,
}

impl Kernel {
    fn build(spec: &MatrixSpec, r: u64, branch: Branch) -> Result<Self> {
        let n = spec.n();
        let d = spec.derived(branch);
        let two_root = d.sqrt_ab * 2.0;
        let mut terms = Vec::new();
        match spec.parity() {
            Parity::Even => {
                let half = n / 2;
                let count = (n - if n.is_multiple_of(4) { 0 } else { 2 }) / 4;
                for &mu in even_cosines(n).iter().take(count) {
                    let lam = two_root * mu;
                    terms.push(Term {
                        scaled_power: complex_pow(lam, r) * weight(mu, n + 2),
                        u: chebyshev_u_sequence(half - 1, ComplexScalar::new(mu, 0.0))?,
                    });
                }
            }
            Parity::Odd => {
                // all n eigenvalues, indexed 0-based by (l - 1)
                let top = (n - 1) / 2;
                for (l0, &eta) in odd_cosines(n).iter().enumerate() {
                    let denom = if l0 % 2 == 0 { n + 3 } else { n + 1 };
                    let beta = two_root * eta;
                    terms.push(Term {
                        scaled_power: complex_pow(beta, r) * weight(eta, denom),
                        u: chebyshev_u_sequence(top, ComplexScalar::new(eta, 0.0))?,
                    });
                }
            }
        }
        Ok(Self { n, r, terms, alpha_pow: sqrt_alpha_powers(d.sqrt_alpha, n) })
    }

    /// `alpha^{(i-j)/4} = sqrt_alpha^{(i-j)/2}`, `i - j` even.
    fn alpha_factor(&self, i: usize, j: usize) -> ComplexScalar {
        let e = (i as i64 - j as i64) / 2;
        self.alpha_pow[(self.n as i64 + e) as usize]
    }

    /// Entry `(i, j)`, 1-based.
    fn entry(&self, i: usize, j: usize) -> ComplexScalar {
        let zero = ComplexScalar::new(0.0, 0.0);
        let Some(constants) = ParityConstants::new(self.n, self.r, i, j) else {
            return zero;
        };
        let (i_, j_) = (i as i64, j as i64);
        let (factor, sum) = match constants {
            ParityConstants::Even(c) => {
                if c.nu == 0 {
                    return zero;
                }
                let ui = ((i_ * c.gamma - c.delta) / 2) as usize;
                let uj = ((j_ * c.gamma - c.delta) / 2) as usize;
                let sum = self.terms.iter().fold(zero, |acc, t| acc + t.scaled_power * (t.u[ui] * t.u[uj]));
                (c.nu, sum)
            }
            ParityConstants::Odd(c) => {
                if c.sigma == 0 || c.d == 0 {
                    return zero;
                }
                let ui = ((i_ + c.theta - 2) / 2) as usize;
                let uj = ((j_ + c.theta - 2) / 2) as usize;
                let sum = (1..=c.d).fold(zero, |acc, m| {
                    let t = &self.terms[(2 * m - c.theta - 1) as usize];
                    acc + t.scaled_power * (t.u[ui] * t.u[uj])
                });
                (c.sigma, sum)
            }
        };
        sum * self.alpha_factor(i, j) * factor as f64
    }
}

fn check_entry_args(spec: &MatrixSpec, parity: Parity, r: u64, i: usize, j: usize) -> Result<()> {
    let n = spec.n();
    if spec.parity() != parity {
        return Err(Error::WrongParity { expected: parity.as_str(), n });
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    if r == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(())
}

/// Entry `(i, j)` (1-based) of `A^r` for even `n` by the closed form.
pub fn power_entry_even(spec: &MatrixSpec, r: u64, i: usize, j: usize) -> Result<ComplexScalar> {
    check_entry_args(spec, Parity::Even, r, i, j)?;
    Ok(Kernel::build(spec, r, Branch::Principal)?.entry(i, j))
}

/// Entry `(i, j)` (1-based) of `A^r` for odd `n` by the closed form.
pub fn power_entry_odd(spec: &MatrixSpec, r: u64, i: usize, j: usize) -> Result<ComplexScalar> {
    check_entry_args(spec, Parity::Odd, r, i, j)?;
    Ok(Kernel::build(spec, r, Branch::Principal)?.entry(i, j))
}

/// Full `A^r` from the closed-form entries. `r = 0` returns the identity.
pub fn power_matrix(req: &PowerRequest) -> Result<DenseMatrix> {
    let n = req.spec.n();
    if req.r == 0 {
        return Ok(DenseMatrix::identity(n));
    }
    let kernel = Kernel::build(&req.spec, req.r, req.branch())?;
    let mut out = DenseMatrix::zeros(n);
    for i in 1..=n {
        // opposite-parity entries stay at the exact zero from `zeros`
        for j in (1 + (i + 1) % 2..=n).step_by(2) {
            out[(i - 1, j - 1)] = kernel.entry(i, j);
        }
    }
    finite_or_overflow(out, req)
}

/// `A^r = P J^r P^{-1}` with the explicit eigenbasis.
pub fn power_via_spectral(req: &PowerRequest) -> Result<DenseMatrix> {
    let dec = SpectralDecomposition::build(&req.spec, req.branch());
    let n = req.spec.n();
    let powers: Vec<ComplexScalar> = dec.eigenvalues.iter().map(|&l| complex_pow(l, req.r)).collect();
    let mut scaled = dec.transform.clone();
    for i in 0..n {
        for (j, p) in powers.iter().enumerate() {
            scaled[(i, j)] *= p;
        }
    }
    let out = mat_mul(&scaled, &dec.inverse_transform)?;
    finite_or_overflow(out, req)
}

fn finite_or_overflow(m: DenseMatrix, req: &PowerRequest) -> Result<DenseMatrix> {
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::Overflow { n: req.spec.n(), r: req.r })
    }
}
