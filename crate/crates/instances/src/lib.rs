//! Standard instances: chain complexes, truncations of the positive
//! integers, Morita contexts, ring morphisms and one-object categories;
//! exhaustive enumeration of small modules and functors up to isomorphism;
//! and seeded random instances.

pub mod builders;
pub mod enumerate;
pub mod error;
pub mod random;

pub use builders::{build_instance, chain, fib, morita, one_object, ring_mor, Instance, InstanceSpec, RingMorInstance};
pub use enumerate::{
    all_matrices, enumerate_functors, enumerate_functors_bounded, enumerate_functors_by_extensions,
    enumerate_functors_by_scan, enumerate_modules, is_indecomposable, simple_modules, functors_isomorphic,
    modules_isomorphic, modules_of_dim, FunctorBounds, MAX_CANDIDATES,
};
pub use error::{InstanceError, Result};
pub use random::{random_instance, RandomInstance, SizeProfile, RETRY_CAP};
