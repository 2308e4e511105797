//! Finite-dimensional algebras over GF(p), their modules, and the
//! homological toolkit built on them: Hom spaces, tensor products, duals,
//! free presentations, Ext via syzygies, Tor, extension classes and
//! projectivity/injectivity tests.
//!
//! Conventions:
//! - An algebra has basis `b_0..b_{d-1}` with `b_i b_j = Σ c[i][j][k] b_k`.
//! - A left module stores one matrix per basis element; a right module
//!   stores the matrix of `m ↦ m b_i`, so it is a left module over the
//!   opposite algebra with the same matrices.
//! - Module maps are `dim target x dim source` matrices.
//! - Homomorphism equations are imposed on algebra generators only, which
//!   is equivalent to imposing them on the whole algebra.
//!
//! The naming `L_1 q` and `Tor_1` are used interchangeably downstream: the
//! first left derived functor of a tensor functor is computed here by the
//! Tor formula.

mod algebra;
mod error;
mod ext;
mod hom;
mod module;
mod resolution;
mod ses;
mod tensor;

pub use algebra::{
    opposite_algebra, same_algebra, validate_algebra, Algebra, AlgebraMorphism, AlgebraReport, Generators,
};
pub use error::{AlgmodError, Result};
pub use ext::{
    ext, ext_class_of, ext_dim, ext_from_basis_presentation, ext_map_first, ext_map_second, ext_to_ses, is_injective, is_injective_split, is_projective,
    is_projective_split, tor1_dim,
    tor_dim, ExtSpace,
};
pub use hom::{hom_bimodule, hom_bimodule_map, hom_dim, hom_space, HomSpace};
pub use module::{Bimodule, LeftModule, ModuleMap, RightModule};
pub use resolution::{free_map_matrix, free_presentation, generator_presentation, syzygy, syzygy_chain, Presentation};
pub use ses::{has_section, is_split_exact, ShortExactSequence};
pub use tensor::{tensor_bimodule, tensor_bimodule_map, tensor_map, tensor_product, tensor_with_map, TensorSpace};
