//! Polytope JSON files: `{"name", "ambient_dim", "vertices": [["p/q", ...], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::hull::VPolytope;
use crate::error::{PolysumError, Result};
use crate::exact::{format_rat, parse_rat, QVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    #[serde(default)]
    pub name: String,
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeFile {
    pub fn from_points(name: impl Into<String>, ambient_dim: usize, points: &[QVec]) -> Self {
        Self {
            name: name.into(),
            ambient_dim,
            vertices: points.iter().map(|p| p.iter().map(format_rat).collect()).collect(),
        }
    }

    pub fn from_polytope(name: impl Into<String>, p: &VPolytope) -> Self {
        Self::from_points(name, p.ambient_dim(), p.vertices())
    }

    /// Parses the coordinates, checking every row against `ambient_dim`.
    pub fn points(&self) -> Result<Vec<QVec>> {
        self.vertices
            .iter()
            .map(|row| {
                if row.len() != self.ambient_dim {
                    return Err(PolysumError::DimensionMismatch { expected: self.ambient_dim, found: row.len() });
                }
                Ok(QVec(row.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?))
            })
            .collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polytope file serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_and_fraction_strings() {
        let f = PolytopeFile::from_json(r#"{"name":"t","ambient_dim":2,"vertices":[["0","1/2"],["-3","4/6"]]}"#).unwrap();
        let pts = f.points().unwrap();
        assert_eq!(pts[1].to_string(), "(-3, 2/3)");
        assert_eq!(PolytopeFile::from_points("t", 2, &pts).vertices[1], vec!["-3", "2/3"]);
    }

    #[test]
    fn rejects_ragged_rows() {
        let f = PolytopeFile::from_json(r#"{"ambient_dim":2,"vertices":[["0"]]}"#).unwrap();
        assert!(f.points().is_err());
        assert!(PolytopeFile::from_json("{not json").is_err());
    }
}
