use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cone::{normal_cone, relint_witness, NormalCone};
use super::MinkowskiSum;
use crate::error::{PolysumError, Result};
use crate::exact::{rat, QVec};

/// Decomposition `F = t_1(F) + ... + t_r(F)` of one nonempty face.
#[derive(Clone, Debug, Serialize)]
pub struct FaceDecomposition {
    pub face: usize,
    pub dim: i32,
    /// Face index of `t_i(F)` in summand `i`'s lattice.
    pub parts: Vec<usize>,
    pub part_dims: Vec<i32>,
    /// `dim F == sum of dim t_i(F)`.
    pub exact: bool,
    /// Functional maximized over the sum exactly on `F`.
    pub witness: QVec,
}

impl PartialEq for FaceDecomposition {
    /// Witnesses are not compared; the decomposition is unique.
    fn eq(&self, other: &Self) -> bool {
        self.face == other.face && self.parts == other.parts && self.exact == other.exact
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumDecomposition {
    dim: usize,
    /// Indexed by sum face; the empty face has no entry.
    entries: Vec<Option<FaceDecomposition>>,
}

impl SumDecomposition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, face: usize) -> Option<&FaceDecomposition> {
        self.entries.get(face).and_then(Option::as_ref)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FaceDecomposition> {
        self.entries.iter().flatten()
    }
}

/// Decomposes each nonempty face of the sum by maximizing the sum of its
/// normal cone generators over every summand.
pub fn decompose_faces(ms: &MinkowskiSum) -> Result<SumDecomposition> {
    decompose_with(ms, relint_witness)
}

/// Same as [`decompose_faces`] but with each generator scaled by an
/// independent random positive rational before summing.
pub fn decompose_faces_weighted(ms: &MinkowskiSum, seed: u64) -> Result<SumDecomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    decompose_with(ms, |cone, n| {
        cone.generators.iter().fold(QVec::zeros(n), |acc, g| {
            let w = rat(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
            &acc + &g.scale(&w)
        })
    })
}

fn decompose_with(ms: &MinkowskiSum, mut witness: impl FnMut(&NormalCone, usize) -> QVec) -> Result<SumDecomposition> {
    let sum = ms.sum();
    let n = sum.ambient_dim();
    let l = sum.lattice();
    let mut entries = vec![None; l.len()];
    for face in 0..l.len() {
        if face == l.bottom() {
            continue;
        }
        let cone = normal_cone(sum, face)?;
        let c = witness(&cone, n);
        let f = l.face(face);
        if sum.argmax(&c) != f.vertices {
            return Err(PolysumError::Invariant(format!("witness {c} does not isolate face {face}")));
        }
        let mut parts = Vec::with_capacity(ms.num_summands());
        let mut part_dims = Vec::with_capacity(ms.num_summands());
        for p in ms.summands() {
            let idx = p
                .lattice()
                .find(&p.argmax(&c))
                .ok_or_else(|| PolysumError::Invariant("argmax is not a face".into()))?;
            parts.push(idx);
            part_dims.push(p.lattice().face(idx).dim);
        }
        let exact = f.dim == part_dims.iter().sum::<i32>();
        entries[face] = Some(FaceDecomposition { face, dim: f.dim, parts, part_dims, exact, witness: c });
    }
    Ok(SumDecomposition { dim: ms.dim(), entries })
}

/// True iff every facet of the sum decomposes exactly.
pub fn is_relatively_general_position(sd: &SumDecomposition) -> bool {
    let facet_dim = sd.dim as i32 - 1;
    sd.iter().filter(|e| e.dim == facet_dim).all(|e| e.exact)
}

/// `f^δ_k(F) = f_k(F) - sum_i f_k(t_i(F))` for `k = 0..=dim F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaVector {
    pub entries: Vec<i64>,
}

impl DeltaVector {
    pub fn get(&self, k: usize) -> i64 {
        self.entries.get(k).copied().unwrap_or(0)
    }
}

pub fn delta_vector(ms: &MinkowskiSum, sd: &SumDecomposition, face: usize) -> Result<DeltaVector> {
    let e = sd.get(face).ok_or(PolysumError::FaceOutOfRange(face))?;
    let mut entries: Vec<i64> = ms.sum().face_counts(face).iter().map(|&c| c as i64).collect();
    for (p, &part) in ms.summands().iter().zip(&e.parts) {
        for (k, &c) in p.face_counts(part).iter().enumerate() {
            if k < entries.len() {
                entries[k] -= c as i64;
            }
        }
    }
    Ok(DeltaVector { entries })
}

/// Checks that every face is the hull of its parts' vertex sums: each
/// vertex of `F` is such a sum, and every such sum lies on `F`.
pub fn check_reconstruction(ms: &MinkowskiSum, sd: &SumDecomposition) -> Result<()> {
    let sum = ms.sum();
    for e in sd.iter() {
        let mut sums: Vec<QVec> = vec![QVec::zeros(sum.ambient_dim())];
        for (p, &part) in ms.summands().iter().zip(&e.parts) {
            let pts = p.face_points(part);
            sums = sums.iter().flat_map(|s| pts.iter().map(move |q| s + q)).collect();
        }
        let top = sum.vertices().iter().map(|v| e.witness.dot(v)).max().expect("nonempty sum");
        if let Some(s) = sums.iter().find(|s| e.witness.dot(s) != top) {
            return Err(PolysumError::Invariant(format!("vertex sum {s} leaves face {}", e.face)));
        }
        let set: HashSet<&QVec> = sums.iter().collect();
        if let Some(v) = sum.face_points(e.face).iter().find(|v| !set.contains(v)) {
            return Err(PolysumError::Invariant(format!("vertex {v} of face {} is not a part sum", e.face)));
        }
    }
    Ok(())
}
