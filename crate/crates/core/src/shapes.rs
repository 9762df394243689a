//! Standard rational polytopes used by tests, examples and the CLI.

use crate::exact::{rat, QVec};

fn pts(raw: &[&[i64]]) -> Vec<QVec> {
    raw.iter().map(|r| QVec::from_ints(r)).collect()
}

/// `[-1, 1]^d`.
pub fn cube(d: usize) -> Vec<QVec> {
    (0..1u32 << d)
        .map(|m| QVec::from_ints(&(0..d).map(|i| if m >> i & 1 == 1 { 1 } else { -1 }).collect::<Vec<_>>()))
        .collect()
}

/// `conv{±e_i}` in `R^d`.
pub fn cross_polytope(d: usize) -> Vec<QVec> {
    let mut out = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1, -1] {
            let mut v = vec![0; d];
            v[i] = s;
            out.push(QVec::from_ints(&v));
        }
    }
    out
}

pub fn square() -> Vec<QVec> {
    cube(2)
}

/// `conv{(±2, 0), (0, ±2)}`.
pub fn diamond() -> Vec<QVec> {
    pts(&[&[2, 0], &[-2, 0], &[0, 2], &[0, -2]])
}

pub fn unit_segment_x() -> Vec<QVec> {
    pts(&[&[0, 0], &[1, 0]])
}

pub fn unit_segment_y() -> Vec<QVec> {
    pts(&[&[0, 0], &[0, 1]])
}

/// `(0,0)`–`(1,1)`.
pub fn diagonal_segment() -> Vec<QVec> {
    pts(&[&[0, 0], &[1, 1]])
}

/// A rational triangle whose facets' normals pass through their relative
/// interiors.
pub fn centered_triangle() -> Vec<QVec> {
    pts(&[&[2, 0], &[-1, 2], &[-1, -2]])
}

/// `[1, 3] x [-1, 1]`.
pub fn shifted_rectangle() -> Vec<QVec> {
    pts(&[&[1, -1], &[3, -1], &[1, 1], &[3, 1]])
}

pub fn symmetric_segment() -> Vec<QVec> {
    pts(&[&[-1], &[1]])
}

pub fn point(d: usize) -> Vec<QVec> {
    vec![QVec::zeros(d)]
}

/// Standard simplex `conv{0, e_1, ..., e_d}` shifted so the origin is
/// interior.
pub fn simplex(d: usize) -> Vec<QVec> {
    let shift = rat(1, (d + 2) as i64);
    let mut out = vec![QVec(vec![-shift.clone(); d])];
    for i in 0..d {
        let mut v = QVec::unit(d, i);
        for x in v.0.iter_mut() {
            *x -= &shift;
        }
        out.push(v);
    }
    out
}
