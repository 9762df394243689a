//! Polytopes in vertex representation, their facets and face lattices.

mod charpoly;
mod hull;
mod io;
mod lattice;

pub use charpoly::CharPoly;
pub use hull::{hull, AffineHull, Facet, Hull, VPolytope};
pub use io::PolytopeFile;
pub use lattice::{f_vector, face_lattice, FVector, Face, FaceLattice};

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::bitset::BitSet;
use crate::error::{PolysumError, Result};
use crate::exact::{format_rat, rat_int, QVec, Rat};
use crate::report::VerifierReport;

/// A polytope with its facets and face lattice computed.
#[derive(Clone, Debug)]
pub struct Polytope {
    hull: Hull,
    lattice: FaceLattice,
    face_counts: OnceLock<Vec<Vec<u64>>>,
    /// Vertices times the lcm of all their denominators.
    int_vertices: OnceLock<Vec<Vec<BigInt>>>,
}

impl Polytope {
    pub fn from_points(points: &[QVec]) -> Result<Self> {
        Self::from_hull(hull(points)?)
    }

    pub fn from_hull(hull: Hull) -> Result<Self> {
        let lattice = face_lattice(hull.polytope.vertices(), &hull.facets)?;
        Ok(Self { hull, lattice, face_counts: OnceLock::new(), int_vertices: OnceLock::new() })
    }

    pub fn from_vpolytope(p: &VPolytope) -> Result<Self> {
        Self::from_points(p.vertices())
    }

    pub fn from_file(f: &PolytopeFile) -> Result<Self> {
        Self::from_points(&f.points()?)
    }

    pub fn vpolytope(&self) -> &VPolytope {
        &self.hull.polytope
    }

    pub fn vertices(&self) -> &[QVec] {
        self.hull.polytope.vertices()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.hull.facets
    }

    pub fn affine_hull(&self) -> &AffineHull {
        &self.hull.affine
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.hull.affine.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.hull.polytope.ambient_dim()
    }

    pub fn f_vector(&self) -> FVector {
        f_vector(&self.lattice)
    }

    /// `f_k` of face `face` for `k = 0..=dim(face)`; cached for all faces on
    /// first use.
    pub fn face_counts(&self, face: usize) -> &[u64] {
        &self.face_counts.get_or_init(|| (0..self.lattice.len()).map(|i| self.lattice.face_counts(i)).collect())[face]
    }

    /// Vertex coordinates of a face.
    pub fn face_points(&self, face: usize) -> Vec<QVec> {
        self.lattice.face(face).vertices.iter().map(|i| self.vertices()[i].clone()).collect()
    }

    /// Vertices on which `c . x` is maximal.
    /// Vertices on which `c` is maximal. Compares integer dot products
    /// after positive rescaling of both `c` and the vertices.
    pub fn argmax(&self, c: &QVec) -> BitSet {
        let verts = self.int_vertices.get_or_init(|| {
            let lcm = self.vertices().iter().flat_map(|v| v.iter()).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            self.vertices()
                .iter()
                .map(|v| v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect())
                .collect()
        });
        let c = c.primitive_ints();
        let vals: Vec<BigInt> = verts.iter().map(|v| v.iter().zip(&c).map(|(a, b)| a * b).sum()).collect();
        let best = vals.iter().max().expect("polytopes have vertices");
        BitSet::from_indices(vals.len(), vals.iter().enumerate().filter(|(_, v)| *v == best).map(|(i, _)| i))
    }
}

/// `sum_{k<d} (-1)^k f_k = 1 - (-1)^d`.
pub fn euler_check(f: &FVector) -> VerifierReport {
    let lhs = f
        .proper()
        .iter()
        .enumerate()
        .fold(rat_int(0), |acc, (k, &c)| acc + sign(k as i64) * rat_int(c as i64));
    let rhs = rat_int(1) - sign(f.dim() as i64);
    VerifierReport::new("euler", lhs, rhs).with_diagnostics(vec![format!("f = {f}")])
}

/// Generating polynomial `f_0 + f_1 x + ... + f_d x^d`, with `f_d = 1`.
pub fn char_poly(f: &FVector) -> CharPoly {
    CharPoly::from_counts(&f.full().iter().map(|&c| c as i64).collect::<Vec<_>>())
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// Polar dual `{y : y.x <= 1 for x in P}`. Vertex `j` of the result is the
/// dual of facet `j` of `p`.
pub fn polar_dual(p: &Polytope) -> Result<Polytope> {
    if p.dim() != p.ambient_dim() {
        return Err(PolysumError::NotFullDimensional { dim: p.dim(), ambient: p.ambient_dim() });
    }
    if let Some(f) = p.facets().iter().find(|f| !f.offset.is_positive()) {
        return Err(PolysumError::OriginNotInterior { normal: f.normal.to_string(), offset: format_rat(&f.offset) });
    }
    let pts: Vec<QVec> = p.facets().iter().map(|f| f.normal.scale(&f.offset.recip())).collect();
    let dual = Polytope::from_points(&pts)?;
    if dual.vertices() != pts.as_slice() {
        return Err(PolysumError::Invariant("dual vertices out of facet order".into()));
    }
    Ok(dual)
}

/// `F^D`: the face of the dual spanned by the duals of the facets containing
/// `face`. `dual` must come from [`polar_dual`] applied to `p`.
pub fn dual_face_map(p: &Polytope, dual: &Polytope, face: usize) -> Result<usize> {
    let l = p.lattice();
    if face >= l.len() {
        return Err(PolysumError::FaceOutOfRange(face));
    }
    if face == l.bottom() || face == l.top() {
        return Err(PolysumError::TrivialFace);
    }
    let verts = &l.face(face).vertices;
    let set = BitSet::from_indices(
        p.facets().len(),
        p.facets().iter().enumerate().filter(|(_, f)| verts.is_subset(&f.vertices)).map(|(j, _)| j),
    );
    dual.lattice()
        .find(&set)
        .ok_or_else(|| PolysumError::Invariant(format!("no dual face with vertex set {set:?}")))
}
