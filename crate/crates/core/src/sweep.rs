//! Fixed-seed parameter grids shared by the verification command and the test
//! suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{ComplexScalar, MatrixSpec};

pub const DEFAULT_SEED_COUNT: u64 = 5;
pub const MIN_BAND_MODULUS: f64 = 0.5;
pub const MAX_BAND_MODULUS: f64 = 2.0;

/// Draws `(a, b)` with moduli uniform in `[0.5, 2]` and phases uniform on the
/// circle. Deterministic in `seed`.
pub fn sample_bands(seed: u64) -> (ComplexScalar, ComplexScalar) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let r = rng.gen_range(MIN_BAND_MODULUS..=MAX_BAND_MODULUS);
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        ComplexScalar::from_polar(r, t)
    };
    let a = draw();
    let b = draw();
    (a, b)
}

#[derive(Debug, Clone)]
pub struct SweepCase {
    pub seed: u64,
    pub r: u64,
    pub spec: MatrixSpec,
}

/// Cartesian grid over orders, exponents and `seed_count` seeds starting at
/// `base_seed`.
pub fn grid(
    orders: impl IntoIterator<Item = usize> + Clone,
    exponents: impl IntoIterator<Item = u64> + Clone,
    base_seed: u64,
    seed_count: u64,
) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    for seed in base_seed..base_seed + seed_count {
        let (a, b) = sample_bands(seed);
        for n in orders.clone() {
            let spec = MatrixSpec::new(n, a, b).expect("sampled bands are nonzero and n >= 3");
            for r in exponents.clone() {
                cases.push(SweepCase { seed, r, spec: spec.clone() });
            }
        }
    }
    cases
}

/// The oracle-equivalence grid: `n` in 3..=12, `r` in 1..=10, five seeds.
pub fn oracle_grid(base_seed: u64) -> Vec<SweepCase> {
    grid(3..=12, 1..=10, base_seed, DEFAULT_SEED_COUNT)
}
