//! Seeded random instances: hulls of points on the grid `k / 2^16` in
//! `[-1, 1]^d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PolysumError, Result};
use crate::exact::{rat, QVec};
use crate::polytope::{hull, VPolytope};

const GRID: i64 = 1 << 16;
const MAX_RESAMPLES: usize = 1000;

fn grid_point(d: usize, rng: &mut ChaCha8Rng) -> QVec {
    QVec((0..d).map(|_| rat(rng.gen_range(-GRID..=GRID), GRID)).collect())
}

/// Hull of `n` random points whose affine hull has dimension `dim`, inside
/// `R^ambient`. Points are drawn from `dim + 1` random affine generators so
/// low-dimensional instances are possible.
pub fn rand_polytope_in(ambient: usize, dim: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<VPolytope> {
    if dim > ambient || ambient == 0 || ambient > 4 || n < dim + 1 {
        return Err(PolysumError::OutOfRange(format!(
            "need dim <= ambient <= 4 and at least dim + 1 points (ambient {ambient}, dim {dim}, n {n})"
        )));
    }
    for _ in 0..MAX_RESAMPLES {
        let pts: Vec<QVec> = if dim == ambient {
            (0..n).map(|_| grid_point(ambient, rng)).collect()
        } else {
            // Convex combinations of dim + 1 random points stay in [-1, 1]^d.
            let gens: Vec<QVec> = (0..=dim).map(|_| grid_point(ambient, rng)).collect();
            (0..n)
                .map(|_| {
                    let w: Vec<i64> = (0..=dim).map(|_| rng.gen_range(0..=16)).collect();
                    let total: i64 = w.iter().sum::<i64>().max(1);
                    gens.iter().zip(&w).fold(QVec::zeros(ambient), |acc, (g, &wi)| &acc + &g.scale(&rat(wi, total)))
                })
                .collect()
        };
        let h = hull(&pts)?;
        if h.affine.dim() == dim {
            return Ok(h.polytope);
        }
    }
    Err(PolysumError::Invariant(format!("no {dim}-dimensional sample after {MAX_RESAMPLES} tries")))
}

/// Full-dimensional random polytope in `R^d` from `n` grid points;
/// deterministic in `seed`.
pub fn rand_polytope(d: usize, n: usize, seed: u64) -> Result<VPolytope> {
    rand_polytope_in(d, d, n, &mut ChaCha8Rng::seed_from_u64(seed))
}
