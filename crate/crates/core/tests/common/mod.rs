//! Slow, independent reference implementations used to cross-check the
//! library. None of these share code with the hull, lattice or flag
//! routines they test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use polysum::exact::{rat_int, QVec, Rat};
use polysum::polytope::{FaceLattice, Polytope};

pub fn pts(rows: &[&[i64]]) -> Vec<QVec> {
    rows.iter().map(|r| QVec::from_ints(r)).collect()
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<Rat>]) -> Rat {
    match m.len() {
        0 => rat_int(1),
        1 => m[0][0].clone(),
        n => (0..n)
            .filter(|&j| !m[0][j].is_zero())
            .map(|j| {
                let minor: Vec<Vec<Rat>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(rat_int(0), |a, b| a + b),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Normal of the hyperplane through `d` points in `R^d` by generalized cross
/// product; zero when they are affinely dependent.
fn hyperplane_normal(points: &[&QVec]) -> QVec {
    let d = points[0].dim();
    let rows: Vec<Vec<Rat>> = points[1..].iter().map(|p| (*p - points[0]).0).collect();
    QVec(
        (0..d)
            .map(|j| {
                let minor: Vec<Vec<Rat>> =
                    rows.iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
                let v = det(&minor);
                if j % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect(),
    )
}

/// Facets of a full-dimensional point set as (primitive outer normal,
/// offset) pairs, by testing every hyperplane through `d` of the points.
pub fn brute_force_facets(points: &[QVec]) -> BTreeSet<(QVec, Rat)> {
    let d = points[0].dim();
    let mut out = BTreeSet::new();
    for idx in subsets(points.len(), d) {
        let chosen: Vec<&QVec> = idx.iter().map(|&i| &points[i]).collect();
        let n = hyperplane_normal(&chosen);
        if n.is_zero() {
            continue;
        }
        let b = n.dot(chosen[0]);
        let vals: Vec<Rat> = points.iter().map(|p| n.dot(p)).collect();
        let normal = if vals.iter().all(|v| *v <= b) {
            n
        } else if vals.iter().all(|v| *v >= b) {
            -&n
        } else {
            continue;
        };
        let normal = normal.primitive();
        let offset = points.iter().map(|p| normal.dot(p)).max().unwrap();
        out.insert((normal, offset));
    }
    out
}

/// Vertices of a full-dimensional point set: points where the facets
/// through them meet in that point alone.
pub fn brute_force_vertices(points: &[QVec]) -> BTreeSet<QVec> {
    let facets = brute_force_facets(points);
    let distinct: BTreeSet<QVec> = points.iter().cloned().collect();
    distinct
        .iter()
        .filter(|p| {
            let mut common: BTreeSet<&QVec> = distinct.iter().collect();
            for (n, b) in &facets {
                if n.dot(p) == *b {
                    common.retain(|q| n.dot(q) == *b);
                }
            }
            common.len() == 1
        })
        .cloned()
        .collect()
}

/// Library facets in the same normal form.
pub fn library_facets(p: &Polytope) -> BTreeSet<(QVec, Rat)> {
    p.facets().iter().map(|f| {
        let n = f.normal.primitive();
        let b = n.dot(&p.vertices()[f.vertices.iter().next().unwrap()]);
        (n, b)
    }).collect()
}

/// Plain rational argmax.
pub fn argmax(points: &[QVec], c: &QVec) -> BTreeSet<usize> {
    let vals: Vec<Rat> = points.iter().map(|p| c.dot(p)).collect();
    let best = vals.iter().max().unwrap();
    (0..points.len()).filter(|&i| vals[i] == *best).collect()
}

/// Number of edges of `A + B` for polygons: the number of distinct outer
/// edge normals of `A` and `B` together.
pub fn polygon_sum_edges(a: &[QVec], b: &[QVec]) -> usize {
    let mut normals: BTreeSet<QVec> = brute_force_facets(a).into_iter().map(|(n, _)| n).collect();
    normals.extend(brute_force_facets(b).into_iter().map(|(n, _)| n));
    normals.len()
}

/// Flag numbers of a face lattice by listing every chain of proper faces.
/// Keys are dimension sets.
pub fn enumerate_chains(l: &FaceLattice) -> BTreeMap<Vec<usize>, u64> {
    let top = l.top();
    let proper: Vec<usize> = (1..top).collect();
    let mut out = BTreeMap::new();
    fn extend(l: &FaceLattice, proper: &[usize], last: Option<usize>, dims: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        *out.entry(dims.clone()).or_insert(0) += 1;
        for &f in proper {
            let ok = match last {
                None => true,
                Some(g) => g != f && l.leq(g, f),
            };
            if ok {
                dims.push(l.face(f).dim as usize);
                extend(l, proper, Some(f), dims, out);
                dims.pop();
            }
        }
    }
    extend(l, &proper, None, &mut Vec::new(), &mut out);
    out
}

/// Perfect centering for polygons: each edge's foot point from the origin
/// lies strictly inside the edge, and each vertex lies in the cone of its
/// two edge normals.
pub fn polygon_perfectly_centered(vertices: &[QVec]) -> bool {
    let facets = brute_force_facets(vertices);
    if facets.iter().any(|(_, b)| !b.is_positive()) {
        return false;
    }
    let on = |n: &QVec, b: &Rat| -> Vec<&QVec> { vertices.iter().filter(|v| n.dot(v) == *b).collect() };
    for (n, b) in &facets {
        let ends = on(n, b);
        let foot = n.scale(&(b / n.dot(n)));
        // foot = (1 - t) e0 + t e1 with 0 < t < 1
        let dir = ends[1] - ends[0];
        let t = (&foot - ends[0]).dot(&dir) / dir.dot(&dir);
        if !(t.is_positive() && t < rat_int(1)) {
            return false;
        }
    }
    for v in vertices {
        let ns: Vec<&QVec> = facets.iter().filter(|(n, b)| n.dot(v) == *b).map(|(n, _)| n).collect();
        // v = a n0 + b n1 with a, b >= 0
        let m = [vec![ns[0][0].clone(), ns[1][0].clone()], vec![ns[0][1].clone(), ns[1][1].clone()]];
        let dm = det(&m);
        let a = det(&[vec![v[0].clone(), ns[1][0].clone()], vec![v[1].clone(), ns[1][1].clone()]]) / &dm;
        let b = det(&[vec![ns[0][0].clone(), v[0].clone()], vec![ns[0][1].clone(), v[1].clone()]]) / &dm;
        if a.is_negative() || b.is_negative() {
            return false;
        }
    }
    true
}
