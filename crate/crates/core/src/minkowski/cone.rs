use crate::error::{PolysumError, Result};
use crate::exact::{QMat, QVec};
use crate::polytope::Polytope;

/// Closed outer normal cone of a face, given by the normals of the facets
/// containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalCone {
    pub face: usize,
    pub generators: Vec<QVec>,
}

impl NormalCone {
    pub fn dim(&self) -> usize {
        if self.generators.is_empty() {
            return 0;
        }
        QMat::from_rows(self.generators.clone()).map_or(0, |m| m.rank())
    }
}

pub fn normal_cone(p: &Polytope, face: usize) -> Result<NormalCone> {
    let l = p.lattice();
    if face >= l.len() {
        return Err(PolysumError::FaceOutOfRange(face));
    }
    if face == l.bottom() {
        return Err(PolysumError::EmptyInput("normal cone of the empty face"));
    }
    let verts = &l.face(face).vertices;
    let generators: Vec<QVec> = p
        .facets()
        .iter()
        .filter(|f| verts.is_subset(&f.vertices))
        .map(|f| f.normal.clone())
        .collect();
    Ok(NormalCone { face, generators })
}

/// Sum of the generators; a point of the cone's relative interior. The zero
/// vector for the cone of the whole polytope.
pub fn relint_witness(cone: &NormalCone, ambient_dim: usize) -> QVec {
    cone.generators.iter().fold(QVec::zeros(ambient_dim), |acc, g| &acc + g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn square_cones() {
        let sq = Polytope::from_points(&shapes::square()).unwrap();
        let l = sq.lattice();
        let facet = l.faces_of_dim(1).find(|&i| sq.face_points(i).iter().all(|p| p[0] == crate::exact::rat_int(1))).unwrap();
        let c = normal_cone(&sq, facet).unwrap();
        assert_eq!(c.generators, vec![QVec::from_ints(&[1, 0])]);
        assert_eq!(relint_witness(&c, 2), QVec::from_ints(&[1, 0]));

        let v = l.find(&sq.argmax(&QVec::from_ints(&[1, 1]))).unwrap();
        let c = normal_cone(&sq, v).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(relint_witness(&c, 2), QVec::from_ints(&[1, 1]));
        assert!(normal_cone(&sq, l.bottom()).is_err());
        assert_eq!(normal_cone(&sq, l.top()).unwrap().dim(), 0);
    }

    #[test]
    fn cube_cone_dimensions() {
        let cube = Polytope::from_points(&shapes::cube(3)).unwrap();
        for (i, f) in cube.lattice().faces().iter().enumerate().skip(1) {
            let c = normal_cone(&cube, i).unwrap();
            assert_eq!(c.dim() as i32, 3 - f.dim);
            let w = relint_witness(&c, 3);
            assert_eq!(cube.argmax(&w), f.vertices);
            if f.dim == 0 {
                assert_eq!(c.generators.len(), 3);
            }
        }
    }
}
