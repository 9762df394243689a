//! Minkowski sums, their face decompositions and the f-vector identities
//! relating a sum to its summands.

mod cone;
mod decompose;
mod perturb;
mod verify;

pub use cone::{normal_cone, relint_witness, NormalCone};
pub use decompose::{
    check_reconstruction,
    decompose_faces, decompose_faces_weighted, delta_vector, is_relatively_general_position, DeltaVector,
    FaceDecomposition, SumDecomposition,
};
pub use perturb::{cayley_rotation, perturb_to_general_position, Perturbation, DEFAULT_EPSILON, DEFAULT_MAX_RETRIES};
pub use verify::{
    verify_lem_euler, verify_lem_summand, verify_lemface, verify_maincor, verify_maincor2, verify_mainthm,
    verify_thm_delta,
};

use crate::error::{PolysumError, Result};
use crate::exact::QVec;
use crate::polytope::{hull, Polytope, VPolytope};

/// `P = P_1 + ... + P_r` with every polytope's lattice computed.
#[derive(Clone, Debug)]
pub struct MinkowskiSum {
    summands: Vec<Polytope>,
    sum: Polytope,
}

impl MinkowskiSum {
    pub fn summands(&self) -> &[Polytope] {
        &self.summands
    }

    pub fn summand(&self, i: usize) -> &Polytope {
        &self.summands[i]
    }

    pub fn sum(&self) -> &Polytope {
        &self.sum
    }

    /// Dimension of the sum.
    pub fn dim(&self) -> usize {
        self.sum.dim()
    }

    pub fn num_summands(&self) -> usize {
        self.summands.len()
    }

    pub fn from_polytopes(summands: Vec<Polytope>) -> Result<Self> {
        let first = summands.first().ok_or(PolysumError::EmptyInput("minkowski sum"))?;
        let n = first.ambient_dim();
        if let Some(p) = summands.iter().find(|p| p.ambient_dim() != n) {
            return Err(PolysumError::DimensionMismatch { expected: n, found: p.ambient_dim() });
        }
        // Fold pairwise so each intermediate point set is the vertex set of
        // a partial sum.
        let mut acc: Vec<QVec> = first.vertices().to_vec();
        let mut last = None;
        for p in &summands[1..] {
            let pts: Vec<QVec> = acc.iter().flat_map(|a| p.vertices().iter().map(move |b| a + b)).collect();
            let h = hull(&pts)?;
            acc = h.polytope.vertices().to_vec();
            last = Some(h);
        }
        let sum = match last {
            Some(h) => Polytope::from_hull(h)?,
            None => first.clone(),
        };
        Ok(Self { summands, sum })
    }
}

/// Hull of all vertex sums.
pub fn minkowski_sum(summands: &[VPolytope]) -> Result<MinkowskiSum> {
    let polys = summands.iter().map(Polytope::from_vpolytope).collect::<Result<Vec<_>>>()?;
    MinkowskiSum::from_polytopes(polys)
}

/// Convenience for point lists that may contain redundant points.
pub fn minkowski_sum_of_points(summands: &[Vec<QVec>]) -> Result<MinkowskiSum> {
    let polys = summands.iter().map(|p| Polytope::from_points(p)).collect::<Result<Vec<_>>>()?;
    MinkowskiSum::from_polytopes(polys)
}
