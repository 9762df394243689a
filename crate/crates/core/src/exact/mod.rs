//! Exact rational scalars, vectors and matrices.

mod lp;
mod matrix;
mod rat;
mod vector;

pub use lp::{solve_feasibility, solve_strict_feasibility};
pub use matrix::{affine_dim, QMat};
pub use rat::{format_rat, parse_rat, rat, rat_int, Rat};
pub use vector::QVec;

pub(crate) use rat::serde_rat;
