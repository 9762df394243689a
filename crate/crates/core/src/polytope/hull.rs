//! Convex hulls of finite rational point sets.
//!
//! Points are first reduced to coordinates of their affine hull; facets are
//! then the extreme rays of the homogenized cone `{(a, b) : a.v <= b}`,
//! enumerated with the double description method over primitive integer
//! rays. Adjacency uses the combinatorial test, so degenerate
//! (non-simplicial) input needs no perturbation.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{PolysumError, Result};
use crate::exact::{QMat, QVec, Rat};

/// A polytope given by its vertices; every listed point is a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<QVec>,
}

impl VPolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Applies a linear map to every vertex. The map must be injective on
    /// the polytope for the result to stay irredundant.
    pub fn map_linear(&self, m: &QMat) -> VPolytope {
        VPolytope {
            ambient_dim: m.nrows(),
            vertices: self.vertices.iter().map(|v| m.mul_vec(v)).collect(),
        }
    }
}

/// Facet inequality `normal . x <= offset`, tight exactly on `vertices`.
///
/// For lower-dimensional polytopes the normal is the primitive integer
/// normal in affine-hull coordinates, embedded with zeros in the eliminated
/// coordinates; it is only meaningful together with the affine hull
/// equations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: QVec,
    #[serde(with = "crate::exact::serde_rat")]
    pub offset: Rat,
    pub vertices: BitSet,
}

/// The affine hull of a point set as an origin plus a coordinate chart.
///
/// `chart` is the reduced row echelon basis of the direction space;
/// projecting onto the pivot coordinates is a bijection from the hull to
/// `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    origin: QVec,
    chart: QMat,
    pivots: Vec<usize>,
    equations: Vec<(QVec, Rat)>,
}

impl AffineHull {
    pub fn of(points: &[QVec]) -> Result<Self> {
        let (origin, rest) = points.split_first().ok_or(PolysumError::EmptyInput("affine hull"))?;
        let n = origin.dim();
        let diffs = QMat::new(n, rest.iter().map(|p| p - origin).collect())?;
        let (chart, pivots) = diffs.rref();
        let equations = diffs
            .nullspace()
            .into_iter()
            .map(|v| {
                let v = v.primitive();
                let rhs = v.dot(origin);
                (v, rhs)
            })
            .collect();
        Ok(Self { origin: origin.clone(), chart, pivots, equations })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    /// Equations `a . x = b` cutting out the hull.
    pub fn equations(&self) -> &[(QVec, Rat)] {
        &self.equations
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_local(&self, p: &QVec) -> QVec {
        (p - &self.origin).select(&self.pivots)
    }

    pub fn to_ambient(&self, y: &QVec) -> QVec {
        let mut x = self.origin.clone();
        for (c, row) in y.iter().zip(self.chart.rows()) {
            x = &x + &row.scale(c);
        }
        x
    }

    /// Embeds a local linear functional as an ambient one that agrees with it
    /// on the hull's direction space.
    pub fn embed_normal(&self, local: &QVec) -> QVec {
        let mut v = QVec::zeros(self.ambient_dim());
        for (c, &p) in local.iter().zip(&self.pivots) {
            v.0[p] = c.clone();
        }
        v
    }

    pub fn contains(&self, p: &QVec) -> bool {
        self.equations.iter().all(|(a, b)| a.dot(p) == *b)
    }
}

/// Output of [`hull`].
#[derive(Clone, Debug)]
pub struct Hull {
    pub polytope: VPolytope,
    pub facets: Vec<Facet>,
    pub affine: AffineHull,
}

/// Convex hull of a nonempty point list.
///
/// Duplicates and non-vertices are dropped; surviving vertices keep the
/// order of their first occurrence. Facets are sorted by normal.
pub fn hull(points: &[QVec]) -> Result<Hull> {
    let first = points.first().ok_or(PolysumError::EmptyInput("hull"))?;
    let ambient = first.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != ambient) {
        return Err(PolysumError::DimensionMismatch { expected: ambient, found: p.dim() });
    }
    let mut seen = HashSet::new();
    let distinct: Vec<QVec> = points.iter().filter(|p| seen.insert((*p).clone())).cloned().collect();

    let affine = AffineHull::of(&distinct)?;
    let k = affine.dim();
    if k == 0 {
        return Ok(Hull {
            polytope: VPolytope { ambient_dim: ambient, vertices: distinct },
            facets: Vec::new(),
            affine,
        });
    }
    let local: Vec<QVec> = distinct.iter().map(|p| affine.to_local(p)).collect();
    let rays = double_description(&local, k)?;

    // A point is a vertex iff the facets through it meet only in it.
    let n = distinct.len();
    let is_vertex: Vec<bool> = (0..n)
        .map(|i| {
            let mut meet = BitSet::full(n);
            let mut any = false;
            for r in rays.iter().filter(|r| r.zero.contains(i)) {
                meet = meet.intersection(&r.zero);
                any = true;
            }
            any && meet.len() == 1
        })
        .collect();
    let mut reindex = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for (i, p) in distinct.into_iter().enumerate() {
        if is_vertex[i] {
            reindex[i] = vertices.len();
            vertices.push(p);
        }
    }
    let nv = vertices.len();

    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|r| {
            let local_normal = QVec(r.coords[..k].iter().map(|x| Rat::from_integer(x.clone())).collect()).primitive();
            let normal = affine.embed_normal(&local_normal);
            let inc = BitSet::from_indices(nv, r.zero.iter().filter(|&i| is_vertex[i]).map(|i| reindex[i]));
            let v0 = &vertices[inc.iter().next().expect("facet without vertices")];
            let offset = normal.dot(v0);
            Facet { normal, offset, vertices: inc }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));

    Ok(Hull { polytope: VPolytope { ambient_dim: ambient, vertices }, facets, affine })
}

struct Ray {
    coords: Vec<BigInt>,
    zero: BitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Extreme rays of `{w in Q^{k+1} : (-v_i, 1) . w >= 0}` for points `v_i`
/// spanning `Q^k` affinely. Each ray is a facet `(a, b)` of their hull.
fn double_description(points: &[QVec], k: usize) -> Result<Vec<Ray>> {
    let n = points.len();
    let dim = k + 1;
    let constraints: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut row: Vec<Rat> = p.iter().map(|x| -x).collect();
            row.push(Rat::one());
            QVec(row).primitive_ints()
        })
        .collect();

    // Greedy basis of dim independent constraints.
    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    for i in 0..n {
        let mut cand: Vec<QVec> = basis.iter().map(|&j| int_row(&constraints[j])).collect();
        cand.push(int_row(&constraints[i]));
        if QMat::new(dim, cand)?.rank() == basis.len() + 1 {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(PolysumError::Invariant("points do not span their affine hull".into()));
    }
    let b = QMat::new(dim, basis.iter().map(|&j| int_row(&constraints[j])).collect())?;
    let inv = b.inverse().ok_or_else(|| PolysumError::Invariant("singular initial basis".into()))?;
    let inv_t = inv.transpose();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut coords = inv_t.row(j).primitive_ints();
            make_primitive(&mut coords);
            let zero = BitSet::from_indices(n, basis.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &r)| r));
            Ray { coords, zero }
        })
        .collect();

    let in_basis = BitSet::from_indices(n, basis.iter().copied());
    for h in (0..n).filter(|&h| !in_basis.contains(h)) {
        let row = &constraints[h];
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zero.insert(h);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.intersection(&rays[q].zero);
                if common.len() + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || !common.is_subset(&r.zero));
                if !adjacent {
                    continue;
                }
                let mut coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(xq, xp)| &vals[p] * xq - &vals[q] * xp)
                    .collect();
                make_primitive(&mut coords);
                let mut zero = common;
                zero.insert(h);
                fresh.push(Ray { coords, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(vals) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                r.zero.insert(h);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Ok(rays)
}

fn int_row(v: &[BigInt]) -> QVec {
    QVec(v.iter().map(|x| Rat::from_integer(x.clone())).collect())
}
