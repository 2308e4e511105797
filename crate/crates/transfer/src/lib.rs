//! Transfer of extensions along adjoint pairs between module and functor
//! categories: the maps `Θ` and `Ω`, flatness and coflatness, membership
//! in perpendicular classes, and the intrinsic description of projective
//! and injective functors.

mod classes;
mod classify;
mod error;
mod flat;
mod theta;

pub use classes::{perp_membership, ClassSelector, ClassSpec, ObjectEvidence, PerpSelector, PerpVerdict};
pub use classify::{
    classify_functor, is_c_flat_functor, is_k_coflat_functor, zero_detect, Classification, Side, ZeroDetection,
};
pub use error::{Result, TransferError};
pub use flat::{injective_copresentation, is_coflat_for, is_flat_for, left_derived_dim, right_derived_dim};
pub use theta::{
    omega_by_comparison, omega_by_extensions, omega_map, theta_by_comparison, theta_by_extensions, theta_map,
    TransferMap,
};
