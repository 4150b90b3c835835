//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by the contract-level operations.
///
/// Verdicts (a theorem check failing on its mathematical merits) are not
/// errors; they are returned as explicit verdict values.  `TheoremViolated`
/// and `CertificationFailed` exist for conditions the underlying mathematics
/// rules out: if one of them ever fires it is a bug report, not a result.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields: {0} vs {1}")]
    MixedFields(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("field has {cardinality} elements but at least {needed} are required")]
    FieldTooSmall { cardinality: u64, needed: u64 },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("subspace is not an abelian two-sided ideal")]
    NotAbelianIdeal,
    #[error("presentation is not a Lie algebra")]
    NotLie,
    #[error("maps do not satisfy the bimodule identities: {0}")]
    NotBimodule(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("theorem-guaranteed conclusion failed (bug): {0}")]
    TheoremViolated(String),
    #[error("search result failed certification (bug): {0}")]
    CertificationFailed(String),
    #[error("the algebra equals its socle; no complement is needed")]
    NoComplementNeeded,
    #[error("generator retry budget exhausted after {0} attempts")]
    RetryBudgetExceeded(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
