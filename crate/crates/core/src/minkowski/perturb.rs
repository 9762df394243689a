//! Small exact rotations that bring summands into relative general position
//! without losing faces of the sum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decompose::{decompose_faces, is_relatively_general_position, SumDecomposition};
use super::MinkowskiSum;
use crate::error::{PolysumError, Result};
use crate::exact::{format_rat, rat, QMat, Rat};
use crate::polytope::{FVector, Polytope, VPolytope};

pub const DEFAULT_MAX_RETRIES: usize = 16;

/// Initial bound on the entries of the skew-symmetric generator.
pub const DEFAULT_EPSILON: (i64, i64) = (1, 64);

/// Outcome of [`perturb_to_general_position`].
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub summands: Vec<VPolytope>,
    /// Rotation applied to each summand (identity for the first).
    pub rotations: Vec<QMat>,
    pub epsilon: Rat,
    /// Rotation attempts made; 0 when the input was already in general
    /// position.
    pub attempts: usize,
    pub before: FVector,
    pub after: FVector,
    /// The sum of the rotated summands and its decomposition.
    pub sum: MinkowskiSum,
    pub decomposition: SumDecomposition,
}

impl Perturbation {
    pub fn is_identity(&self) -> bool {
        self.attempts == 0
    }
}

/// Cayley transform `(I - A)^{-1} (I + A)` of a skew-symmetric `A`; an
/// exactly orthogonal rational matrix.
pub fn cayley_rotation(skew: &QMat) -> QMat {
    let n = skew.nrows();
    let id = QMat::identity(n);
    let inv = id.sub(skew).inverse().expect("I - A is invertible for skew-symmetric A");
    inv.mul(&id.add(skew))
}

fn random_skew(n: usize, eps: &Rat, rng: &mut ChaCha8Rng) -> QMat {
    let mut a = QMat::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = eps * rat(rng.gen_range(-64..=64), 64);
            a.set(j, i, -v.clone());
            a.set(i, j, v);
        }
    }
    a
}

/// Rotates every summand but the first by an independent random rotation,
/// halving the rotation size after each failed attempt, until the sum is
/// relatively in general position and has at least as many faces of each
/// dimension as the original sum.
pub fn perturb_to_general_position(summands: &[VPolytope], seed: u64, max_retries: usize) -> Result<Perturbation> {
    if summands.len() < 2 {
        return Err(PolysumError::EmptyInput("perturbation needs at least two summands"));
    }
    let polys = summands.iter().map(Polytope::from_vpolytope).collect::<Result<Vec<_>>>()?;
    let original_f: Vec<FVector> = polys.iter().map(Polytope::f_vector).collect();
    let ms = MinkowskiSum::from_polytopes(polys.clone())?;
    let before = ms.sum().f_vector();
    let n = ms.sum().ambient_dim();
    let id = QMat::identity(n);
    let sd = decompose_faces(&ms)?;
    if is_relatively_general_position(&sd) {
        return Ok(Perturbation {
            summands: polys.iter().map(|p| p.vpolytope().clone()).collect(),
            rotations: vec![id; polys.len()],
            epsilon: rat(0, 1),
            attempts: 0,
            after: before.clone(),
            before,
            sum: ms,
            decomposition: sd,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut eps = rat(DEFAULT_EPSILON.0, DEFAULT_EPSILON.1);
    let mut last = String::from("no attempts made");
    for attempt in 1..=max_retries {
        let mut rotations = vec![id.clone()];
        let mut rotated = vec![polys[0].clone()];
        for p in &polys[1..] {
            let q = cayley_rotation(&random_skew(n, &eps, &mut rng));
            rotated.push(Polytope::from_vpolytope(&p.vpolytope().map_linear(&q))?);
            rotations.push(q);
        }
        if rotated.iter().map(Polytope::f_vector).ne(original_f.iter().cloned()) {
            return Err(PolysumError::Invariant("rotation changed a summand's f-vector".into()));
        }
        let candidate = MinkowskiSum::from_polytopes(rotated)?;
        let sd = decompose_faces(&candidate)?;
        let after = candidate.sum().f_vector();
        let gp = is_relatively_general_position(&sd);
        let grows = after.dominates(&before);
        if gp && grows {
            return Ok(Perturbation {
                summands: candidate.summands().iter().map(|p| p.vpolytope().clone()).collect(),
                rotations,
                epsilon: eps,
                attempts: attempt,
                before,
                after,
                sum: candidate,
                decomposition: sd,
            });
        }
        last = format!(
            "attempt {attempt}, eps {}: general position {gp}, f {after} vs {before}",
            format_rat(&eps)
        );
        eps /= rat(2, 1);
    }
    Err(PolysumError::PerturbationExhausted { attempts: max_retries, diagnostics: last })
}
