//! Exact polyhedral computation for Minkowski sums.
//!
//! Everything is computed over arbitrary-precision rationals: convex hulls,
//! face lattices, Minkowski sums with their face decompositions, flag
//! vectors of graded posets, and checks of the linear relations between the
//! f-vectors of a sum and its summands.

pub mod batch;
pub mod bitset;
pub mod centered;
pub mod error;
pub mod exact;
pub mod flag;
pub mod minkowski;
pub mod polytope;
pub mod random;
pub mod report;
pub mod shapes;

pub use error::{PolysumError, Result};
pub use report::VerifierReport;
