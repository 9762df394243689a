use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{PolysumError, Result};
use crate::polytope::FaceLattice;

/// A finite graded poset with a unique bottom (rank 0) and top.
///
/// The order relation is kept as up- and down-closures per element.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

/// Poset JSON: `{"ranks": [...], "covers": [[lo, hi], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub ranks: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

impl PosetFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

impl GradedPoset {
    pub fn new(ranks: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = ranks.len();
        let bad = |m: String| Err(PolysumError::InvalidPoset(m));
        if n == 0 {
            return bad("no elements".into());
        }
        let mut has_lower = vec![false; n];
        let mut has_upper = vec![false; n];
        for &(lo, hi) in &covers {
            if lo >= n || hi >= n {
                return bad(format!("cover ({lo}, {hi}) out of range"));
            }
            if ranks[hi] != ranks[lo] + 1 {
                return bad(format!("cover ({lo}, {hi}) does not raise the rank by one"));
            }
            has_upper[lo] = true;
            has_lower[hi] = true;
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| !has_lower[i]).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| !has_upper[i]).collect();
        let (&[bottom], &[top]) = (minimal.as_slice(), maximal.as_slice()) else {
            return bad(format!("{} minimal and {} maximal elements", minimal.len(), maximal.len()));
        };
        if ranks[bottom] != 0 {
            return bad("bottom element must have rank 0".into());
        }
        if n > 1 && bottom == top {
            return bad("disconnected elements".into());
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| ranks[i]);
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            lower[hi].push(lo);
            upper[lo].push(hi);
        }
        let mut down: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for &x in &order {
            for &y in &lower[x] {
                down[x] = down[x].union(&down[y]);
            }
        }
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for &x in order.iter().rev() {
            for &y in &upper[x] {
                up[x] = up[x].union(&up[y]);
            }
        }
        if up[bottom].len() != n {
            return bad("bottom is not below every element".into());
        }
        Ok(Self { ranks, covers, bottom, top, up, down })
    }

    pub fn from_file(f: &PosetFile) -> Result<Self> {
        Self::new(f.ranks.clone(), f.covers.clone())
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile { ranks: self.ranks.clone(), covers: self.covers.clone() }
    }

    /// Face lattice as a poset: rank = dimension + 1, bottom = empty face,
    /// top = the polytope.
    pub fn from_face_lattice(l: &FaceLattice) -> Self {
        let ranks = l.faces().iter().map(|f| (f.dim + 1) as usize).collect();
        Self::new(ranks, l.covers()).expect("face lattices are graded")
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    /// Rank of the top element.
    pub fn rank_of_top(&self) -> usize {
        self.ranks[self.top]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub(crate) fn rank_mask(&self, r: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&i| self.ranks[i] == r))
    }

    /// Elements in the closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> BitSet {
        self.up[x].intersection(&self.down[y])
    }

    /// Number of chains `x_1 < ... < x_m` with `rank(x_j) = ranks[j]`;
    /// `ranks` must be strictly increasing.
    pub fn chain_count(&self, ranks: &[usize]) -> u64 {
        let Some((&first, rest)) = ranks.split_first() else {
            return 1;
        };
        let n = self.len();
        let mut counts = vec![0u64; n];
        let mut level = self.rank_mask(first);
        for x in level.iter() {
            counts[x] = 1;
        }
        for &r in rest {
            let next_level = self.rank_mask(r);
            let mut next = vec![0u64; n];
            for x in next_level.iter() {
                next[x] = self.down[x]
                    .intersection(&level)
                    .iter()
                    .try_fold(0u64, |acc, y| acc.checked_add(counts[y]))
                    .expect("chain count overflow");
            }
            counts = next;
            level = next_level;
        }
        level.iter().map(|x| counts[x]).sum()
    }
}

/// Every interval `[x, y]` with `x < y` has as many elements of even rank
/// as of odd rank.
pub fn is_eulerian(p: &GradedPoset) -> bool {
    first_non_eulerian_interval(p).is_none()
}

/// A witness interval violating the Eulerian condition, if any.
pub fn first_non_eulerian_interval(p: &GradedPoset) -> Option<(usize, usize)> {
    let n = p.len();
    let even = BitSet::from_indices(n, (0..n).filter(|&i| p.ranks[i] % 2 == 0));
    for x in 0..n {
        for y in p.up[x].iter().filter(|&y| y != x) {
            let iv = p.interval(x, y);
            if 2 * iv.intersection_len(&even) != iv.len() {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;
    use crate::shapes;

    /// Subsets of {0,1,2} ordered by inclusion.
    pub(crate) fn boolean_lattice() -> GradedPoset {
        let ranks = (0..8u32).map(|m| m.count_ones() as usize).collect();
        let mut covers = Vec::new();
        for m in 0..8usize {
            for b in 0..3 {
                if m & (1 << b) == 0 {
                    covers.push((m, m | (1 << b)));
                }
            }
        }
        GradedPoset::new(ranks, covers).unwrap()
    }

    #[test]
    fn from_lattices() {
        let cube = Polytope::from_points(&shapes::cube(3)).unwrap();
        let p = GradedPoset::from_face_lattice(cube.lattice());
        assert_eq!((p.len(), p.rank_of_top()), (28, 4));
        assert!(is_eulerian(&p));
        let seg = Polytope::from_points(&shapes::symmetric_segment()).unwrap();
        let p = GradedPoset::from_face_lattice(seg.lattice());
        assert_eq!((p.len(), p.rank_of_top()), (4, 2));
        let pt = Polytope::from_points(&shapes::point(2)).unwrap();
        let p = GradedPoset::from_face_lattice(pt.lattice());
        assert_eq!((p.len(), p.rank_of_top()), (2, 1));
        assert!(is_eulerian(&p));
    }

    #[test]
    fn eulerian_examples() {
        assert!(is_eulerian(&boolean_lattice()));
        let chain = GradedPoset::new(vec![0, 1, 2], vec![(0, 1), (1, 2)]).unwrap();
        assert!(!is_eulerian(&chain));
        assert_eq!(first_non_eulerian_interval(&chain), Some((0, 2)));
    }

    #[test]
    fn rejects_malformed() {
        assert!(GradedPoset::new(vec![], vec![]).is_err());
        assert!(GradedPoset::new(vec![0, 2], vec![(0, 1)]).is_err());
        assert!(GradedPoset::new(vec![0, 1, 1], vec![(0, 1), (0, 2)]).is_err());
        assert!(GradedPoset::new(vec![0, 1], vec![(0, 5)]).is_err());
    }

    #[test]
    fn chains_through_trivial_elements() {
        let cube = Polytope::from_points(&shapes::cube(3)).unwrap();
        let p = GradedPoset::from_face_lattice(cube.lattice());
        assert_eq!(p.chain_count(&[1, 3]), 24);
        assert_eq!(p.chain_count(&[0, 1, 3, 4]), 24);
        assert_eq!(p.chain_count(&[1, 2, 3]), 48);
        assert_eq!(p.chain_count(&[]), 1);
    }
}
