use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rat::Rat;
use super::vector::QVec;
use crate::error::{PolysumError, Result};

/// Dense rational matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    ncols: usize,
    rows: Vec<QVec>,
}

impl QMat {
    pub fn new(ncols: usize, rows: Vec<QVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(PolysumError::DimensionMismatch { expected: ncols, found: r.dim() });
        }
        Ok(Self { ncols, rows })
    }

    /// Builds from rows; the column count is taken from the first row.
    pub fn from_rows(rows: Vec<QVec>) -> Result<Self> {
        let ncols = rows.first().map_or(0, QVec::dim);
        Self::new(ncols, rows)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows: Vec<QVec> = rows.iter().map(|r| QVec::from_ints(r)).collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { ncols, rows: vec![QVec::zeros(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { ncols: n, rows: (0..n).map(|i| QVec::unit(n, i)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &QVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.rows[i].0[j] = v;
    }

    pub fn transpose(&self) -> QMat {
        let rows = (0..self.ncols)
            .map(|j| QVec(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        QMat { ncols: self.nrows(), rows }
    }

    pub fn mul_vec(&self, v: &QVec) -> QVec {
        QVec(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        debug_assert_eq!(self.ncols, other.nrows());
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| QVec(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        QMat { ncols: other.ncols, rows }
    }

    pub fn add(&self, other: &QMat) -> QMat {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a + b).collect();
        QMat { ncols: self.ncols, rows }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a - b).collect();
        QMat { ncols: self.ncols, rows }
    }

    /// Exact rank by fraction-free (Bareiss) elimination on the
    /// row-wise integer scaling of the matrix.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.primitive_ints()).collect();
        bareiss_rank(&mut m, self.ncols)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            m[r] = m[r].scale(&inv);
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    m[i] = &m[i] - &m[r].scale(&f);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (QMat { ncols: self.ncols, rows: m }, pivots)
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<QVec> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = QVec::zeros(self.ncols);
                v.0[f] = Rat::one();
                for (row, &p) in r.rows.iter().zip(&pivots) {
                    v.0[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `M x = rhs` together with a nullspace basis, or `None`
    /// when the system is inconsistent.
    pub fn solve_affine(&self, rhs: &QVec) -> Option<(QVec, Vec<QVec>)> {
        let aug: Vec<QVec> = self
            .rows
            .iter()
            .zip(rhs.iter())
            .map(|(r, b)| {
                let mut v = r.0.clone();
                v.push(b.clone());
                QVec(v)
            })
            .collect();
        let (r, pivots) = QMat { ncols: self.ncols + 1, rows: aug }.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = QVec::zeros(self.ncols);
        for (row, &p) in r.rows.iter().zip(&pivots) {
            x.0[p] = row[self.ncols].clone();
        }
        Some((x, self.nullspace()))
    }

    /// The unique solution of `M x = rhs`, if there is exactly one.
    pub fn solve_unique(&self, rhs: &QVec) -> Option<QVec> {
        let (x, null) = self.solve_affine(rhs)?;
        null.is_empty().then_some(x)
    }

    pub fn inverse(&self) -> Option<QMat> {
        if self.nrows() != self.ncols {
            return None;
        }
        let n = self.ncols;
        let aug: Vec<QVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.0.clone();
                v.extend(QVec::unit(n, i).0);
                QVec(v)
            })
            .collect();
        let (r, pivots) = QMat { ncols: 2 * n, rows: aug }.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let rows = r.rows.iter().map(|row| QVec(row[n..].to_vec())).collect();
        Some(QMat { ncols: n, rows })
    }
}

/// Fraction-free echelon reduction; every division is exact.
fn bareiss_rank(m: &mut [Vec<BigInt>], ncols: usize) -> usize {
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of a nonempty point list.
pub fn affine_dim(points: &[QVec]) -> Result<usize> {
    let (first, rest) = points.split_first().ok_or(PolysumError::EmptyInput("affine_dim"))?;
    if rest.is_empty() {
        return Ok(0);
    }
    let diffs = rest.iter().map(|p| p - first).collect();
    Ok(QMat::new(first.dim(), diffs)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(QMat::identity(3).rank(), 3);
        assert_eq!(QMat::zeros(2, 4).rank(), 0);
        assert_eq!(QMat::from_ints(&[&[1, 0], &[2, 0]]).rank(), 1);
        assert_eq!(QMat::from_ints(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn affine_dim_examples() {
        assert_eq!(affine_dim(&[QVec::from_ints(&[0, 0])]).unwrap(), 0);
        let line = [QVec::from_ints(&[0, 0]), QVec::from_ints(&[1, 0]), QVec::from_ints(&[2, 0])];
        assert_eq!(affine_dim(&line).unwrap(), 1);
        let mut cube = Vec::new();
        for mask in 0..8 {
            cube.push(QVec::from_ints(&[mask & 1, (mask >> 1) & 1, (mask >> 2) & 1].map(|b| 2 * b - 1)));
        }
        assert_eq!(affine_dim(&cube).unwrap(), 3);
        assert!(affine_dim(&[]).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let m = QMat::from_rows(vec![
            QVec(vec![rat(2, 1), rat(1, 3)]),
            QVec(vec![rat(-1, 2), rat(5, 1)]),
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));
        let b = QVec::from_ints(&[1, 2]);
        let x = m.solve_unique(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(QMat::from_ints(&[&[1, 1], &[2, 2]]).inverse().is_none());
        assert!(QMat::from_ints(&[&[1, 1], &[2, 2]]).solve_affine(&QVec::from_ints(&[1, 3])).is_none());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = QMat::from_ints(&[&[1, 2, 3, 4], &[2, 4, 7, 1]]);
        let null = m.nullspace();
        assert_eq!(null.len(), 2);
        for v in &null {
            assert!(m.mul_vec(v).is_zero());
        }
    }
}
