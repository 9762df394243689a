use serde::{Deserialize, Serialize};

use super::poset::GradedPoset;
use crate::error::{PolysumError, Result};
use crate::polytope::FVector;

/// Flag f-vector of a graded poset, indexed by dimension sets
/// `S ⊆ {0, ..., d-1}` where dimension = rank - 1 and `d` is the dimension
/// of the top element.
///
/// Lookups accept `-1` and `d` as well and treat them as the bottom and top
/// elements, which extend every chain uniquely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    d: usize,
    /// Indexed by the bitmask of `S`.
    counts: Vec<u64>,
}

/// One serialized entry: `{"S": [dims], "count": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    #[serde(rename = "S")]
    pub dims: Vec<usize>,
    pub count: u64,
}

impl FlagVector {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// `f_S`; `dims` may repeat entries and may include `-1` or `d`.
    pub fn get(&self, dims: &[i64]) -> Result<u64> {
        let mut mask = 0usize;
        for &k in dims {
            if k == -1 || k == self.d as i64 {
                continue;
            }
            if k < -1 || k > self.d as i64 {
                return Err(PolysumError::OutOfRange(format!("dimension {k} outside -1..={}", self.d)));
            }
            mask |= 1 << k;
        }
        Ok(self.counts[mask])
    }

    /// Shorthand for in-range lookups.
    pub fn f(&self, dims: &[i64]) -> u64 {
        self.get(dims).expect("flag index in range")
    }

    pub fn entries(&self) -> Vec<FlagEntry> {
        (0..self.counts.len())
            .map(|mask| FlagEntry {
                dims: (0..self.d).filter(|k| mask >> k & 1 == 1).collect(),
                count: self.counts[mask],
            })
            .collect()
    }

    pub fn from_entries(d: usize, entries: &[FlagEntry]) -> Result<Self> {
        let mut counts = vec![0u64; 1 << d];
        let mut seen = vec![false; 1 << d];
        for e in entries {
            let mut mask = 0;
            for &k in &e.dims {
                if k >= d {
                    return Err(PolysumError::OutOfRange(format!("dimension {k} in a flag vector of dim {d}")));
                }
                mask |= 1 << k;
            }
            counts[mask] = e.count;
            seen[mask] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(PolysumError::OutOfRange("flag vector is missing entries".into()));
        }
        Ok(Self { d, counts })
    }

    /// The singleton entries `f_{k}` as an f-vector.
    pub fn f_vector(&self) -> FVector {
        FVector::new(self.d, (0..self.d).map(|k| self.counts[1 << k]).collect())
    }
}

/// Counts chains for every dimension set by extending chains one rank at a
/// time.
pub fn flag_vector(p: &GradedPoset) -> FlagVector {
    let d = p.rank_of_top().saturating_sub(1);
    let counts = (0..1usize << d)
        .map(|mask| {
            let ranks: Vec<usize> = (0..d).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
            p.chain_count(&ranks)
        })
        .collect();
    FlagVector { d, counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;
    use crate::shapes;

    fn cube_flags() -> FlagVector {
        let cube = Polytope::from_points(&shapes::cube(3)).unwrap();
        flag_vector(&GradedPoset::from_face_lattice(cube.lattice()))
    }

    #[test]
    fn cube_values() {
        let f = cube_flags();
        assert_eq!(f.f(&[]), 1);
        assert_eq!(f.f(&[0, 2]), 24);
        assert_eq!(f.f(&[0, 1, 2]), 48);
        assert_eq!(f.f(&[0, 1]), 24);
        assert_eq!(f.f(&[1, 2]), 24);
        assert_eq!(f.f(&[-1, 0, 0, 3]), 8);
        assert_eq!(f.f_vector().proper(), &[8, 12, 6]);
        assert!(f.get(&[4]).is_err());
    }

    #[test]
    fn entries_roundtrip() {
        let f = cube_flags();
        let e = f.entries();
        assert_eq!(e.len(), 8);
        assert_eq!(FlagVector::from_entries(3, &e).unwrap(), f);
        let json = serde_json::to_string(&e[5]).unwrap();
        assert_eq!(json, r#"{"S":[0,2],"count":24}"#);
    }
}
