//! Exact linear algebra over the rationals and finite fields.

pub mod field;
pub mod matrix;
pub mod pit;
pub mod poly;
pub mod subspace;

pub use field::{Field, FieldSpec, GaloisField, Rationals};
pub use matrix::{vecops, Matrix};
pub use pit::{generic_determinant_nonzero, DetSearch, MissBound};
pub use subspace::{linear_kernel, solve_affine, KernelBuilder, Subspace};

#[cfg(test)]
mod field_tests;
