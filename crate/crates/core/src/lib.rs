//! Exact algebra engine for Clifford algebras built by repeated hat
//! extensions, iterant (twisted group) algebras and their matrix images,
//! Cayley-Dickson doubling, and nilpotent plane-wave solutions of the
//! Dirac equation.
//!
//! All arithmetic is exact over the rationals or Gaussian rationals.

pub mod cayley_dickson;
pub mod checkerboard;
pub mod clifford;
pub mod dirac;
pub mod error;
pub mod group_algebra;
pub mod hat;
pub mod iterant;
pub mod matrix;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod suites;
pub mod text;

pub use cayley_dickson::{associator, cd_conj, cd_mul, find_associator_witness, CDElement};
pub use clifford::{clifford_normal_form, iterate_clifford, CliffordAlgebra, CliffordElement};
pub use error::{Error, Result};
pub use group_algebra::{
    clifford_as_group_algebra, ga_action, ga_mul, ga_tensor, group_ring, GroupAlgebra, GroupAlgebraElement,
    TensorAlgebra,
};
pub use hat::{brace_mul, brace_to_hat, hat_mul, hat_star, BraceSum, ComplexScalar, HatElement, InvolutiveAlgebra};
pub use iterant::{act, direct_product, make_cyclic, FiniteGroup, Iterant, Permutation};
pub use matrix::{from_matrix, permutation_image, to_matrix, Matrix};
pub use report::{Check, VerificationReport};
pub use sample::Sampler;
pub use scalar::{GaussianRational, Rational};
