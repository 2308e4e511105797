//! Finite categories enriched over GF(p)-vector spaces.
//!
//! A category is given by its objects, a basis of every Hom space, the
//! composition tensors on basis elements and the coordinates of the
//! identities. From it we derive:
//! - endomorphism algebras `R_A = Hom(A, A)` and the `(R_B, R_A)`-bimodules
//!   `Hom(A, B)`;
//! - the category algebra, whose modules are the additive functors out of
//!   the category;
//! - a greedy set of generating morphisms with word expressions, so
//!   functors can be specified by their values on generators;
//! - validation of the axioms and of the zero-trace condition (every
//!   composite `B → A → B` with `A != B` vanishes);
//! - a search for the longest nonvanishing chain of composable morphisms
//!   through distinct objects.
//!
//! The base ring is always GF(p), included in each `R_A` through its unit.
//! Chain conditions asking that no infinite sequence of composable
//! morphisms compose to nonzero maps hold automatically for finitely many
//! objects; [`chain_diagnostic`] reports the longest finite chain as
//! evidence.

mod category;
mod chain;
mod error;
mod generators;
mod lambda;
mod validate;

pub use category::{CategoryGenerators, EnrichedCategory};
pub use chain::{chain_diagnostic, ChainDiagnostic, ChainDirection};
pub use error::{EncatError, Result};
pub use lambda::CategoryAlgebra;
pub use validate::{validate_category, zero_trace_failures, CategoryReport};
