use super::poset::{first_non_eulerian_interval, GradedPoset};
use super::vector::{flag_vector, FlagVector};
use crate::error::{PolysumError, Result};
use crate::exact::{rat_int, Rat};
use crate::polytope::FVector;
use crate::report::VerifierReport;

fn sgn(k: i64) -> i128 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn to_rat(x: i128) -> Rat {
    Rat::from_integer(x.into())
}

fn f(fv: &FlagVector, dims: &[i64]) -> i128 {
    fv.f(dims) as i128
}

/// One Bayer–Billera instance for the set `s` and gap `(i, k)`.
pub fn bayer_billera_instance(fv: &FlagVector, s: &[i64], i: i64, k: i64) -> VerifierReport {
    let mut lhs = 0i128;
    let mut dims = s.to_vec();
    for j in i + 1..k {
        dims.push(j);
        lhs += sgn(j - i - 1) * f(fv, &dims);
        dims.pop();
    }
    let rhs = f(fv, s) * (1 - sgn(k - i - 1));
    VerifierReport::new(format!("bayer_billera S={s:?} (i,k)=({i},{k})"), to_rat(lhs), to_rat(rhs))
}

/// Every set `S` and every gap `(i, k)` between consecutive elements of
/// `S ∪ {-1, d}` with `k - i >= 2`.
pub fn verify_bayer_billera(fv: &FlagVector) -> VerifierReport {
    let d = fv.dim() as i64;
    let mut parts = Vec::new();
    for mask in 0..1u64 << d {
        let s: Vec<i64> = (0..d).filter(|k| mask >> k & 1 == 1).collect();
        let mut ext = vec![-1];
        ext.extend(&s);
        ext.push(d);
        for w in ext.windows(2) {
            if w[1] - w[0] >= 2 {
                parts.push(bayer_billera_instance(fv, &s, w[0], w[1]));
            }
        }
    }
    VerifierReport::aggregate("bayer_billera", &parts)
}

/// `Σ_{j=i}^{k} (-1)^j f_{i,j,k} = 0` for `-1 <= i < k <= d`.
pub fn verify_dsrshort(fv: &FlagVector, i: i64, k: i64) -> Result<VerifierReport> {
    let d = fv.dim() as i64;
    if !(-1 <= i && i < k && k <= d) {
        return Err(PolysumError::OutOfRange(format!("need -1 <= i < k <= {d}, got ({i}, {k})")));
    }
    let lhs: i128 = (i..=k).map(|j| sgn(j) * f(fv, &[i, j, k])).sum();
    Ok(VerifierReport::new(format!("dsrshort (i,k)=({i},{k})"), to_rat(lhs), rat_int(0)))
}

/// All valid `(i, k)` pairs.
pub fn verify_dsrshort_all(fv: &FlagVector) -> VerifierReport {
    let d = fv.dim() as i64;
    let parts: Vec<_> = (-1..d)
        .flat_map(|i| (i + 1..=d).map(move |k| (i, k)))
        .map(|(i, k)| verify_dsrshort(fv, i, k).expect("indices in range"))
        .collect();
    VerifierReport::aggregate("dsrshort", &parts)
}

/// `Σ_{k=0}^{d-1} (-1)^k k (Σ_{i=0}^{k} f_{i,i+d-1-k} - f_k - f_{d-1-k}) = 0`.
pub fn verify_nestthm(fv: &FlagVector) -> VerifierReport {
    let d = fv.dim() as i64;
    let lhs: i128 = (0..d)
        .map(|k| {
            let chains: i128 = (0..=k).map(|i| f(fv, &[i, i + d - 1 - k])).sum();
            sgn(k) * k as i128 * (chains - f(fv, &[k]) - f(fv, &[d - 1 - k]))
        })
        .sum();
    VerifierReport::new("nestthm", to_rat(lhs), rat_int(0))
}

/// Checks the Eulerian property before running [`verify_nestthm`]; a
/// non-Eulerian poset gets an advisory naming a bad interval.
pub fn verify_nestthm_poset(p: &GradedPoset) -> VerifierReport {
    let advisory = first_non_eulerian_interval(p).map(|(x, y)| format!("not Eulerian: interval [{x}, {y}]"));
    verify_nestthm(&flag_vector(p)).with_advisory(advisory)
}

/// Predicted f-vector of `P + P*`: `f_k = Σ_{i=0}^{k} f_{i,i+d-1-k}`.
pub fn fvthm_predict(fv: &FlagVector) -> FVector {
    let d = fv.dim() as i64;
    let counts = (0..d).map(|k| (0..=k).map(|i| fv.f(&[i, i + d - 1 - k])).sum()).collect();
    FVector::new(d as usize, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;
    use crate::shapes;

    fn flags(points: &[crate::exact::QVec]) -> FlagVector {
        let p = Polytope::from_points(points).unwrap();
        flag_vector(&GradedPoset::from_face_lattice(p.lattice()))
    }

    #[test]
    fn cube_bayer_billera() {
        let fv = flags(&shapes::cube(3));
        let euler = bayer_billera_instance(&fv, &[], -1, 3);
        assert_eq!((euler.lhs.clone(), euler.rhs.clone()), (rat_int(2), rat_int(2)));
        let r = bayer_billera_instance(&fv, &[0], 0, 3);
        assert_eq!((r.lhs, r.pass), (rat_int(0), true));
        let r = bayer_billera_instance(&fv, &[2], -1, 2);
        assert_eq!((r.lhs, r.pass), (rat_int(0), true));
        assert!(verify_bayer_billera(&fv).pass);
    }

    #[test]
    fn dsrshort_examples() {
        let cube = flags(&shapes::cube(3));
        assert!(verify_dsrshort(&cube, -1, 3).unwrap().pass);
        assert!(verify_dsrshort(&cube, 0, 2).unwrap().pass);
        assert!(verify_dsrshort(&cube, 2, 2).is_err());
        assert!(verify_dsrshort(&cube, -2, 2).is_err());
        let seg = flags(&shapes::symmetric_segment());
        assert!(verify_dsrshort(&seg, -1, 1).unwrap().pass);
        assert!(verify_dsrshort_all(&cube).pass);
    }

    #[test]
    fn nestthm_examples() {
        for pts in [shapes::cube(3), shapes::centered_triangle(), shapes::symmetric_segment(), shapes::cross_polytope(4)] {
            assert!(verify_nestthm(&flags(&pts)).pass);
        }
    }

    #[test]
    fn nestthm_rejects_chain() {
        let chain = GradedPoset::new(vec![0, 1, 2, 3], vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = verify_nestthm_poset(&chain);
        assert!(r.advisory.is_some());
    }

    #[test]
    fn predictions() {
        assert_eq!(fvthm_predict(&flags(&shapes::cube(3))).proper(), &[24, 48, 26]);
        assert_eq!(fvthm_predict(&flags(&shapes::centered_triangle())).proper(), &[6, 6]);
        assert_eq!(fvthm_predict(&flags(&shapes::symmetric_segment())).proper(), &[2]);
    }
}
