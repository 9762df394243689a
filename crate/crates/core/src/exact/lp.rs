//! Exact strict feasibility via slack maximization.
//!
//! The system `A x = b`, `W x >= w`, `G x > h` is feasible iff the maximum of
//! `t` over `A x = b`, `W x >= w`, `G x - t >= h`, `t <= 1` is positive. After eliminating the
//! equalities and fixing the lineality space, that polyhedron is pointed and
//! its optimum is attained at a vertex, which we find by enumerating every
//! basic solution. Cost is exponential in the number of constraints; it is
//! meant for a few dozen rows.

use num_traits::{One, Signed, Zero};

use super::matrix::QMat;
use super::rat::Rat;
use super::vector::QVec;
use crate::error::{PolysumError, Result};

/// Finds `x` with `eqs[.., ..n] x = eqs[.., n]` and
/// `strict[.., ..n] x > strict[.., n]`, where `n` is the variable count
/// (`eqs.ncols() - 1`). Returns `None` when no such point exists.
///
/// The returned point maximizes the smallest constraint slack, capped at 1.
pub fn solve_strict_feasibility(eqs: &QMat, strict: &QMat) -> Result<Option<QVec>> {
    solve_feasibility(eqs, &QMat::zeros(0, 0), strict)
}

/// Like [`solve_strict_feasibility`] with additional non-strict rows
/// `weak[.., ..n] x >= weak[.., n]`.
pub fn solve_feasibility(eqs: &QMat, weak: &QMat, strict: &QMat) -> Result<Option<QVec>> {
    let width = [eqs, weak, strict].iter().find(|m| m.nrows() > 0).map_or(eqs.ncols(), |m| m.ncols());
    if width == 0 {
        return Err(PolysumError::EmptyInput("feasibility system needs a right-hand-side column"));
    }
    for m in [eqs, weak, strict] {
        if m.nrows() > 0 && m.ncols() != width {
            return Err(PolysumError::DimensionMismatch { expected: width, found: m.ncols() });
        }
    }
    let n = width - 1;
    let split = |row: &QVec| (QVec(row[..n].to_vec()), row[n].clone());

    // x = x0 + N y
    let (a, b): (Vec<QVec>, Vec<Rat>) = eqs.rows().iter().map(split).unzip();
    let (x0, null) = if a.is_empty() {
        (QVec::zeros(n), (0..n).map(|i| QVec::unit(n, i)).collect())
    } else {
        match QMat::new(n, a)?.solve_affine(&QVec(b)) {
            Some(sol) => sol,
            None => return Ok(None),
        }
    };
    let m = null.len();

    // Inequalities over w = (y, t): rows . w >= rhs.
    let mut rows = Vec::with_capacity(weak.nrows() + strict.nrows() + 1);
    let mut rhs = Vec::with_capacity(weak.nrows() + strict.nrows() + 1);
    let tagged = weak.rows().iter().map(|r| (r, Rat::zero())).chain(strict.rows().iter().map(|r| (r, -Rat::one())));
    for (row, slack) in tagged {
        let (g, h) = split(row);
        let mut coeffs: Vec<Rat> = null.iter().map(|v| g.dot(v)).collect();
        coeffs.push(slack);
        rows.push(QVec(coeffs));
        rhs.push(h - g.dot(&x0));
    }
    let mut cap = QVec::zeros(m + 1);
    cap.0[m] = -Rat::one();
    rows.push(cap);
    rhs.push(-Rat::one());

    let ineq = QMat::new(m + 1, rows)?;
    let lineality = ineq.nullspace();
    let rank = ineq.nrows().min(m + 1 - lineality.len());

    let mut best: Option<(Rat, QVec)> = None;
    for subset in Combinations::new(ineq.nrows(), rank) {
        let mut sys: Vec<QVec> = subset.iter().map(|&i| ineq.row(i).clone()).collect();
        let mut sys_rhs: Vec<Rat> = subset.iter().map(|&i| rhs[i].clone()).collect();
        sys.extend(lineality.iter().cloned());
        sys_rhs.extend(std::iter::repeat_n(Rat::zero(), lineality.len()));
        let Some(w) = QMat::new(m + 1, sys)?.solve_unique(&QVec(sys_rhs)) else {
            continue;
        };
        let feasible = ineq.rows().iter().zip(&rhs).all(|(r, h)| r.dot(&w) >= *h);
        if !feasible {
            continue;
        }
        let t = w[m].clone();
        if best.as_ref().is_none_or(|(bt, _)| t > *bt) {
            best = Some((t, w));
        }
    }

    let Some((t, w)) = best else {
        if weak.nrows() > 0 {
            return Ok(None);
        }
        return Err(PolysumError::Invariant("slack polyhedron has no vertex".into()));
    };
    if !t.is_positive() {
        return Ok(None);
    }
    let mut x = x0;
    for (coef, v) in w.iter().take(m).zip(&null) {
        x = &x + &v.scale(coef);
    }
    Ok(Some(x))
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn check(eqs: &QMat, strict: &QMat, x: &QVec) {
        let n = x.dim();
        for r in eqs.rows() {
            assert_eq!(QVec(r[..n].to_vec()).dot(x), r[n]);
        }
        for r in strict.rows() {
            assert!(QVec(r[..n].to_vec()).dot(x) > r[n]);
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn open_interval() {
        // x > 0, -x > -1
        let strict = QMat::from_ints(&[&[1, 0], &[-1, -1]]);
        let eqs = QMat::zeros(0, 2);
        let x = solve_strict_feasibility(&eqs, &strict).unwrap().unwrap();
        assert_eq!(x, QVec(vec![rat(1, 2)]));
    }

    #[test]
    fn contradictory() {
        let strict = QMat::from_ints(&[&[1, 0], &[-1, 0]]);
        assert!(solve_strict_feasibility(&QMat::zeros(0, 2), &strict).unwrap().is_none());
    }

    #[test]
    fn square_facet_meets_its_normal_ray() {
        // x = (1, s) with -1 < s < 1 (relint of facet x1 = 1 of [-1,1]^2)
        // and x = t (1, 0) with t > 0. Variables (x1, x2, s, t).
        let eqs = QMat::from_ints(&[&[1, 0, 0, 0, 1], &[0, 1, -1, 0, 0], &[1, 0, 0, -1, 0], &[0, 1, 0, 0, 0]]);
        let strict = QMat::from_ints(&[&[0, 0, 1, 0, -1], &[0, 0, -1, 0, -1], &[0, 0, 0, 1, 0]]);
        let x = solve_strict_feasibility(&eqs, &strict).unwrap().unwrap();
        check(&eqs, &strict, &x);
        assert_eq!(x, QVec(vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn inconsistent_equalities() {
        let eqs = QMat::from_ints(&[&[1, 1, 1], &[1, 1, 2]]);
        assert!(solve_strict_feasibility(&eqs, &QMat::zeros(0, 3)).unwrap().is_none());
    }

    #[test]
    fn unconstrained_directions_are_fine() {
        // x + y > 3 in the plane: lineality along (1, -1).
        let strict = QMat::from_ints(&[&[1, 1, 3]]);
        let x = solve_strict_feasibility(&QMat::zeros(0, 3), &strict).unwrap().unwrap();
        check(&QMat::zeros(0, 3), &strict, &x);
    }

    #[test]
    fn mismatched_widths_error() {
        let eqs = QMat::from_ints(&[&[1, 1, 1]]);
        let strict = QMat::from_ints(&[&[1, 1]]);
        assert!(solve_strict_feasibility(&eqs, &strict).is_err());
    }

    #[test]
    fn weak_rows() {
        // x >= 1, y >= 0 weakly, x + y < 1 strictly: infeasible.
        let weak = QMat::from_ints(&[&[1, 0, 1], &[0, 1, 0]]);
        let strict = QMat::from_ints(&[&[-1, -1, -1]]);
        assert_eq!(solve_feasibility(&QMat::zeros(0, 3), &weak, &strict).unwrap(), None);
        // x >= 1 weakly, x < 2 strictly.
        let weak = QMat::from_ints(&[&[1, 1]]);
        let strict = QMat::from_ints(&[&[-1, -2]]);
        let x = solve_feasibility(&QMat::zeros(0, 2), &weak, &strict).unwrap().unwrap();
        assert!(x[0] >= rat_int(1) && x[0] < rat_int(2));
        // x >= 1 and -x >= 0: empty without any strict row.
        let weak = QMat::from_ints(&[&[1, 1], &[-1, 0]]);
        assert_eq!(solve_feasibility(&QMat::zeros(0, 2), &weak, &QMat::zeros(0, 2)).unwrap(), None);
    }
}
