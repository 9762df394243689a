//! Graded posets, flag f-vectors and the linear relations they satisfy.

mod poset;
mod vector;
mod verify;

pub use poset::{first_non_eulerian_interval, is_eulerian, GradedPoset, PosetFile};
pub use vector::{flag_vector, FlagEntry, FlagVector};
pub use verify::{
    bayer_billera_instance, fvthm_predict, verify_bayer_billera, verify_dsrshort, verify_dsrshort_all,
    verify_nestthm, verify_nestthm_poset,
};
