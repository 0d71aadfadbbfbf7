//! Crate-wide error type.

use thiserror::Error;

use crate::algebra::ShapeError;
use crate::fuzzy::ValueError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Shape(#[from] ShapeError),

    #[error(transparent)]
    Value(#[from] ValueError),

    /// Operands live over different ambient structures.
    #[error("ambient mismatch: operands belong to different structures")]
    AmbientMismatch,

    /// `meet_family` requires a nonempty family.
    #[error("empty family: infimum of zero fuzzy subsets is undefined")]
    EmptyFamily,

    /// Enumeration would visit more candidates than the configured budget.
    #[error("enumeration budget exceeded: {candidates} candidates")]
    BudgetExceeded { candidates: u128 },

    /// No law in the catalog matches the requested id.
    #[error("unknown law id: {id}")]
    UnknownLaw { id: String },
}

pub type Result<T> = std::result::Result<T, Error>;
