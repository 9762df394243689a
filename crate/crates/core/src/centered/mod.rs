//! Perfectly centered polytopes and the faces of `P + P*`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{PolysumError, Result};
use crate::exact::{rat_int, solve_feasibility, QMat, QVec, Rat};
use crate::flag::{flag_vector, fvthm_predict, verify_nestthm, GradedPoset};
use crate::minkowski::{decompose_faces, is_relatively_general_position, MinkowskiSum};
use crate::polytope::{dual_face_map, f_vector, hull, polar_dual, FVector, Face, FaceLattice, Polytope};
use crate::report::VerifierReport;

fn full_dimensional(p: &Polytope) -> Result<()> {
    if p.dim() != p.ambient_dim() {
        return Err(PolysumError::NotFullDimensional { dim: p.dim(), ambient: p.ambient_dim() });
    }
    Ok(())
}

/// Whether some point of the relative interior of `face` lies in its closed
/// normal cone: `Σ λ_j v_j = Σ μ_m n_m` with `λ > 0`, `Σ λ = 1`, `μ >= 0`.
pub fn face_meets_normal_cone(p: &Polytope, face: usize) -> Result<bool> {
    let verts: Vec<&QVec> = p.lattice().face(face).vertices.iter().map(|i| &p.vertices()[i]).collect();
    let verts_set = &p.lattice().face(face).vertices;
    let normals: Vec<&QVec> = p.facets().iter().filter(|f| verts_set.is_subset(&f.vertices)).map(|f| &f.normal).collect();
    let (k, m, d) = (verts.len(), normals.len(), p.ambient_dim());
    let width = k + m + 1;

    let mut eqs = Vec::with_capacity(d + 1);
    let mut sum_row = vec![Rat::one(); k];
    sum_row.extend(vec![Rat::zero(); m]);
    sum_row.push(Rat::one());
    eqs.push(QVec(sum_row));
    for c in 0..d {
        let mut row: Vec<Rat> = verts.iter().map(|v| v[c].clone()).collect();
        row.extend(normals.iter().map(|n| -n[c].clone()));
        row.push(Rat::zero());
        eqs.push(QVec(row));
    }
    let unit = |i: usize| {
        let mut r = QVec::zeros(width);
        r.0[i] = Rat::one();
        r
    };
    let strict = QMat::new(width, (0..k).map(unit).collect())?;
    let weak = QMat::new(width, (k..k + m).map(unit).collect())?;
    Ok(solve_feasibility(&QMat::new(width, eqs)?, &weak, &strict)?.is_some())
}

/// Checks every nonempty face. The polytope itself passes exactly when the
/// origin is interior, which is tested first.
pub fn is_perfectly_centered(p: &Polytope) -> Result<VerifierReport> {
    full_dimensional(p)?;
    if let Some(f) = p.facets().iter().find(|f| !f.offset.is_positive()) {
        let part = VerifierReport::new("origin interior", rat_int(0), rat_int(1))
            .with_diagnostics(vec![format!("facet {}.x <= {} does not separate the origin strictly", f.normal, f.offset)]);
        return Ok(VerifierReport::aggregate("perfectly_centered", &[part]));
    }
    let l = p.lattice();
    let parts = (1..l.top())
        .map(|i| {
            let ok = face_meets_normal_cone(p, i)?;
            let verts = l.face(i).vertices.to_vec();
            Ok(VerifierReport::new(
                format!("face {i} (dim {}, vertices {verts:?})", l.face(i).dim),
                rat_int(ok as i64),
                rat_int(1),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifierReport::aggregate("perfectly_centered", &parts))
}

/// A face `G + F^D` of `P + P*` for a chain `G ⊆ F` of nontrivial faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcSumFace {
    /// Face indices in the lattice of `P`.
    pub g: usize,
    pub f: usize,
    /// Index of `F^D` in the lattice of `P*`.
    pub f_dual: usize,
    /// Index in [`PcSumLattice::lattice`].
    pub realized: usize,
    /// Index in the face lattice of the directly computed sum.
    pub direct: usize,
}

/// Faces of `P + P*` assembled from chains, with the lattice order taken
/// from containment of their realized vertex sets.
#[derive(Clone, Debug)]
pub struct PcSumLattice {
    pub faces: Vec<PcSumFace>,
    /// Vertex indices refer to the vertices of `direct.sum()`.
    pub lattice: FaceLattice,
    pub direct: MinkowskiSum,
}

impl PcSumLattice {
    pub fn f_vector(&self) -> FVector {
        f_vector(&self.lattice)
    }
}

fn require_centered(p: &Polytope) -> Result<()> {
    let r = is_perfectly_centered(p)?;
    if !r.pass {
        return Err(PolysumError::NotPerfectlyCentered(r.diagnostics.join("; ")));
    }
    Ok(())
}

/// Realizes `G + F^D` for every chain of nontrivial faces as the hull of
/// vertex sums and matches it against the face lattice of `P + P*`. The
/// face counts are checked against [`fvthm_predict`].
pub fn pc_sum_lattice(p: &Polytope) -> Result<PcSumLattice> {
    require_centered(p)?;
    let out = chain_faces(p)?;
    let predicted = fvthm_predict(&flag_vector(&GradedPoset::from_face_lattice(p.lattice())));
    if out.f_vector() != predicted {
        return Err(PolysumError::Invariant(format!("chain faces give f = {}, predicted {predicted}", out.f_vector())));
    }
    Ok(out)
}

fn chain_faces(p: &Polytope) -> Result<PcSumLattice> {
    let dual = polar_dual(p)?;
    let direct = MinkowskiSum::from_polytopes(vec![p.clone(), dual.clone()])?;
    let sum = direct.sum();
    let index: HashMap<&QVec, usize> = sum.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let n = sum.vertices().len();
    let l = p.lattice();
    let d = p.dim() as i32;

    let mut faces = Vec::new();
    let mut sets: Vec<Face> = vec![Face { vertices: BitSet::new(n), dim: -1 }, Face { vertices: BitSet::full(n), dim: d }];
    let mut seen: HashMap<BitSet, (usize, usize)> = HashMap::new();
    for f in 1..l.top() {
        let f_dual = dual_face_map(p, &dual, f)?;
        let dual_pts = dual.face_points(f_dual);
        for g in (1..=f).filter(|&g| l.leq(g, f)) {
            let pts: Vec<QVec> = p
                .face_points(g)
                .iter()
                .flat_map(|a| dual_pts.iter().map(move |b| a + b))
                .collect();
            let h = hull(&pts)?;
            let mut vs = BitSet::new(n);
            for v in h.polytope.vertices() {
                let &i = index.get(v).ok_or_else(|| PolysumError::Invariant(format!("{v} is not a vertex of P + P*")))?;
                vs.insert(i);
            }
            let dim = h.affine.dim() as i32;
            if dim != l.face(g).dim + dual.lattice().face(f_dual).dim {
                return Err(PolysumError::Invariant(format!("dim(G + F^D) is not additive for chain ({g}, {f})")));
            }
            let direct_idx = sum
                .lattice()
                .find(&vs)
                .ok_or_else(|| PolysumError::Invariant(format!("G + F^D for chain ({g}, {f}) is not a face of P + P*")))?;
            if let Some(prev) = seen.insert(vs.clone(), (g, f)) {
                return Err(PolysumError::Invariant(format!("chains {prev:?} and ({g}, {f}) give the same face")));
            }
            faces.push(PcSumFace { g, f, f_dual, realized: 0, direct: direct_idx });
            sets.push(Face { vertices: vs, dim });
        }
    }
    let lattice = FaceLattice::from_faces(n, sets);
    for face in &mut faces {
        let vs = &sum.lattice().face(face.direct).vertices;
        face.realized = lattice.find(vs).expect("realized face is in the lattice");
    }
    faces.sort_by_key(|f| f.realized);
    Ok(PcSumLattice { faces, lattice, direct })
}

/// Compares the f-vector of `P + P*` predicted from flags, counted from
/// chains, and computed directly.
pub fn verify_fvthm(p: &Polytope) -> Result<VerifierReport> {
    require_centered(p)?;
    let predicted = fvthm_predict(&flag_vector(&GradedPoset::from_face_lattice(p.lattice())));
    let dual = polar_dual(p)?;
    let direct = MinkowskiSum::from_polytopes(vec![p.clone(), dual])?.sum().f_vector();
    let chains = match chain_faces(p) {
        Ok(l) => Some(l.f_vector()),
        Err(PolysumError::Invariant(_)) => None,
        Err(e) => return Err(e),
    };
    let routes = [Some(&predicted), chains.as_ref(), Some(&direct)];
    let agree = routes.iter().all(|r| *r == Some(&predicted));
    let fmt = |r: Option<&FVector>| r.map_or("inconsistent".to_string(), |f| f.to_string());
    let diagnostics = vec![
        format!("predicted {}", fmt(Some(&predicted))),
        format!("chains {}", fmt(chains.as_ref())),
        format!("direct {}", fmt(Some(&direct))),
    ];
    Ok(VerifierReport::new("fvthm", rat_int(!agree as i64), rat_int(0)).with_diagnostics(diagnostics))
}

/// The f-vector identity for `P + P*` evaluated from the flag vector of `P`
/// alone.
pub fn verify_mainthm_pc(p: &Polytope) -> Result<VerifierReport> {
    require_centered(p)?;
    let mut r = verify_nestthm(&flag_vector(&GradedPoset::from_face_lattice(p.lattice())));
    r.identity = "mainthm_pc".into();
    Ok(r)
}

/// Whether `P + P*` is relatively in general position.
pub fn dual_sum_in_general_position(p: &Polytope) -> Result<bool> {
    let dual = polar_dual(p)?;
    let ms = MinkowskiSum::from_polytopes(vec![p.clone(), dual])?;
    Ok(is_relatively_general_position(&decompose_faces(&ms)?))
}
