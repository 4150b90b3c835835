//! Exact computation with finite-dimensional left Leibniz algebras.
//!
//! A left Leibniz algebra is an algebra in which every left multiplication
//! is a derivation: `a(bc) = (ab)c + b(ac)`.  Algebras are presented by
//! structure constants over an exact field (the rationals or a prime field
//! F_p); every computation in this crate is exact — there is no floating
//! point anywhere.
//!
//! The crate provides:
//!
//! * [`field`] — exact scalars over Q (arbitrary precision) and F_p,
//! * [`linalg`] — dense exact matrices, reduced row echelon form, kernels,
//!   generalized nullspaces and the canonical subspace lattice,
//! * [`algebra`] — the Leibniz algebra engine: presentations, multiplication
//!   operators, series, centres, normalizers, quotients,
//! * [`engel`] — Engel subalgebras, Fitting decompositions and Cartan
//!   subalgebra computation by minimal-Engel descent,
//! * [`structure`] — minimal ideals, socle, Frattini subalgebra, primitive
//!   algebras, complements and conjugacy over prime fields,
//! * [`bimodule`] — two-sided representations as (S, T) operator pairs and
//!   the joint-annihilator witness for nil representations,
//! * [`generators`] — constructions producing verified algebras for test
//!   corpora,
//! * [`checks`] — the executable theorem suite run per algebra,
//! * [`io`] — the JSON file formats for algebras, bimodules and corpora.

pub mod algebra;
pub mod bimodule;
pub mod checks;
pub mod engel;
pub mod error;
pub mod field;
pub mod generators;
pub mod io;
pub mod linalg;
pub mod structure;

pub use algebra::{Algebra, Element, SubalgebraHandle};
pub use error::Error;
pub use field::{FieldDescriptor, FieldScalar};
pub use linalg::{Matrix, Subspace};

/// Default candidate budget for enumeration-based operations.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
