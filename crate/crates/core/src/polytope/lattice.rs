//! Face lattices built from facet–vertex incidences.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::hull::Facet;
use crate::bitset::BitSet;
use crate::error::{PolysumError, Result};
use crate::exact::{affine_dim, QVec};

/// A face, identified by the polytope vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Face {
    pub vertices: BitSet,
    /// `-1` for the empty face.
    pub dim: i32,
}

/// The faces of a polytope (or an interval of them), sorted by dimension
/// and then by vertex set.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    num_vertices: usize,
    faces: Vec<Face>,
    lookup: HashMap<BitSet, usize>,
}

impl FaceLattice {
    pub(crate) fn from_faces(num_vertices: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        let lookup = faces.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect();
        Self { num_vertices, faces, lookup }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, idx: usize) -> &Face {
        &self.faces[idx]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Dimension of the top element.
    pub fn dim(&self) -> i32 {
        self.faces.last().map_or(-1, |f| f.dim)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn find(&self, vertices: &BitSet) -> Option<usize> {
        self.lookup.get(vertices).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.faces[a].vertices.is_subset(&self.faces[b].vertices)
    }

    pub fn faces_of_dim(&self, k: i32) -> impl Iterator<Item = usize> + '_ {
        self.faces.iter().enumerate().filter(move |(_, f)| f.dim == k).map(|(i, _)| i)
    }

    /// Index pairs `(lo, hi)` with `hi` covering `lo`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            for j in self.faces_of_dim(f.dim + 1) {
                if f.vertices.is_subset(&self.faces[j].vertices) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `f_k` of the face `idx`: the number of its `k`-faces, for
    /// `k = 0..=dim(idx)` (so the last entry is 1).
    pub fn face_counts(&self, idx: usize) -> Vec<u64> {
        let top = &self.faces[idx];
        let mut counts = vec![0u64; (top.dim + 1).max(0) as usize];
        for f in &self.faces[..=idx] {
            if f.dim >= 0 && f.vertices.is_subset(&top.vertices) {
                counts[f.dim as usize] += 1;
            }
        }
        counts
    }

    /// The sub-poset of faces between `lo` and `hi`.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<FaceLattice> {
        if lo >= self.len() {
            return Err(PolysumError::FaceOutOfRange(lo));
        }
        if hi >= self.len() {
            return Err(PolysumError::FaceOutOfRange(hi));
        }
        if !self.leq(lo, hi) {
            return Err(PolysumError::NotContained(lo, hi));
        }
        let (a, b) = (&self.faces[lo].vertices, &self.faces[hi].vertices);
        let faces = self
            .faces
            .iter()
            .filter(|f| a.is_subset(&f.vertices) && f.vertices.is_subset(b))
            .cloned()
            .collect();
        Ok(Self::from_faces(self.num_vertices, faces))
    }
}

/// All faces as intersections of facet vertex sets, plus the empty face and
/// the polytope itself. Dimensions come from the affine hulls of the vertex
/// sets.
pub fn face_lattice(vertices: &[QVec], facets: &[Facet]) -> Result<FaceLattice> {
    let n = vertices.len();
    let mut sets: BTreeSet<BitSet> = BTreeSet::new();
    sets.insert(BitSet::new(n));
    sets.insert(BitSet::full(n));
    let mut frontier: Vec<BitSet> = Vec::new();
    for f in facets {
        if sets.insert(f.vertices.clone()) {
            frontier.push(f.vertices.clone());
        }
    }
    while let Some(s) = frontier.pop() {
        for f in facets {
            let meet = s.intersection(&f.vertices);
            if !sets.contains(&meet) {
                sets.insert(meet.clone());
                frontier.push(meet);
            }
        }
    }
    let faces = sets
        .into_iter()
        .map(|vs| {
            let dim = if vs.is_empty() {
                -1
            } else {
                let pts: Vec<QVec> = vs.iter().map(|i| vertices[i].clone()).collect();
                affine_dim(&pts)? as i32
            };
            Ok(Face { vertices: vs, dim })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FaceLattice::from_faces(n, faces))
}

/// Face counts `f_0, ..., f_{d-1}` of a `d`-polytope. The polytope itself
/// (`f_d = 1`) is implied; see [`FVector::full`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FVector {
    dim: usize,
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(dim: usize, counts: Vec<u64>) -> Self {
        assert_eq!(counts.len(), dim, "f-vector of a {dim}-polytope has {dim} proper entries");
        Self { dim, counts }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f_0, ..., f_{d-1}`.
    pub fn proper(&self) -> &[u64] {
        &self.counts
    }

    /// `f_0, ..., f_d` with `f_d = 1`.
    pub fn full(&self) -> Vec<u64> {
        let mut v = self.counts.clone();
        v.push(1);
        v
    }

    pub fn get(&self, k: usize) -> u64 {
        match k.cmp(&self.dim) {
            std::cmp::Ordering::Less => self.counts[k],
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Greater => 0,
        }
    }

    /// `f_k(self) >= f_k(other)` for every `k`, missing entries read as 0.
    pub fn dominates(&self, other: &FVector) -> bool {
        (0..=self.dim.max(other.dim)).all(|k| self.get(k) >= other.get(k))
    }
}

impl fmt::Display for FVector {
    /// `(8, 12, 6)`; a point prints as `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = if self.dim == 0 {
            vec!["1".into()]
        } else {
            self.counts.iter().map(u64::to_string).collect()
        };
        write!(f, "({})", shown.join(", "))
    }
}

/// Counts faces of each dimension `0..dim(top)` of the lattice, skipping the
/// empty face and the top element.
pub fn f_vector(l: &FaceLattice) -> FVector {
    let d = l.dim().max(0) as usize;
    let mut counts = vec![0u64; d];
    for f in l.faces() {
        if f.dim >= 0 && (f.dim as usize) < d {
            counts[f.dim as usize] += 1;
        }
    }
    FVector::new(d, counts)
}
