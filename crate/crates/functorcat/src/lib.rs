//! Additive functors from a finite linear category to vector spaces, the
//! functors induced from one object, the reduced functors, adjunctions and
//! the bridge to modules over the category algebra.

mod adjunction;
mod bridge;
mod context;
mod error;
mod ext;
mod functor;
mod induced;
mod reduced;

pub use adjunction::{AdjunctionHandle, AdjunctionTag, Transpose};
pub use bridge::{functor_to_module, module_to_functor, Bridged};
pub use context::FunctorCategory;
pub use error::{FunctorError, Result};
pub use ext::{functor_ext, functor_ext_dim};
pub use functor::{
    direct_sum, functoriality_defect, generator_values_are_functorial, nat_space, quotient_functor, subfunctor_on, validate_functor,
    AddFunctor, FunctorReport, NatSpace, NatTrans,
};
pub use induced::{
    induced_functor, induced_p, induced_p_map, induced_q, induced_q_map, p_counit, p_unit, q_counit, q_unit, stalk,
    stalk_map, InducedKind, InducedP, InducedQ,
};
pub use reduced::{
    cogenerating_hull, coker_phi, generating_cover, ker_mu, product_component, product_module, reduced_at, reduced_c,
    reduced_c_total, reduced_k, reduced_k_total, relation_presentation, series_kc, FunctorSes, ReducedKind,
    RelationPresentation, SeriesKC,
};
