//! Dense exact linear algebra.
//!
//! Matrices are dense grids of [`FieldScalar`]s; every subspace is kept in
//! its canonical reduced-row-echelon basis, so subspace equality everywhere
//! in the crate is plain entry-wise equality of canonical forms.

mod enumerate;
pub(crate) mod matrix;
mod subspace;

pub use enumerate::{gaussian_binomial, subspace_count, SubspaceEnumeration};
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::field::FieldDescriptor;

/// Kernel of `m^n` for square `m` of size n: the subspace of vectors killed
/// by some power of `m`.  Together with [`fitting_image`] this splits the
/// ambient space: nullspace ⊕ image(m^n) = ambient.
pub fn generalized_nullspace(m: &Matrix) -> Subspace {
    assert_eq!(m.rows(), m.cols(), "generalized nullspace needs a square matrix");
    m.pow(m.rows() as u64).kernel()
}

/// Image of `m^n`, the complement of the generalized nullspace.
pub fn fitting_image(m: &Matrix) -> Subspace {
    assert_eq!(m.rows(), m.cols(), "fitting image needs a square matrix");
    m.pow(m.rows() as u64).image()
}

/// Enumerate every subspace of F_p^n exactly once as RREF canonical forms,
/// rank by rank (pivot sets in lexicographic order, free entries in
/// mixed-radix order).  Errors upfront if the total count exceeds `budget`.
pub fn enumerate_subspaces(
    ambient_dim: usize,
    desc: &FieldDescriptor,
    dim_filter: Option<usize>,
    budget: u64,
) -> crate::error::Result<SubspaceEnumeration> {
    SubspaceEnumeration::new(ambient_dim, desc, dim_filter, budget)
}
