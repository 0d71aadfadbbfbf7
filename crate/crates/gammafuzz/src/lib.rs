//! Exact computational kernel for finite gamma-semirings.
//!
//! The crate represents a finite gamma-semiring as dense operation
//! tables, validates the defining axioms exhaustively, computes the
//! sum, gamma-product and composition of fuzzy subsets with exact
//! rational grades, enumerates the fuzzy ideal families over a finite
//! grade chain, and machine-checks the structural laws those families
//! satisfy (hemiring, complete lattice, modularity, and the regularity
//! characterization), reporting counterexample witnesses when a check
//! fails.
//!
//! Everything is deterministic: carriers are dense indices, grades are
//! exact rationals, quantifiers are scanned in fixed order, and the law
//! suite emits identical reports regardless of thread count.

pub mod algebra;
pub mod doc;
pub mod enumerate;
mod error;
pub mod fuzzy;
pub mod ops;
pub mod samples;
pub mod verify;

pub use algebra::{
    Axiom, AxiomViolation, CrispSubset, ElemG, ElemS, GammaSemiring, Regularity, ShapeError, Side,
    UnityDecl,
};
pub use enumerate::{
    enumerate_crisp_ideals, enumerate_ideals, enumerate_ideals_with, EnumerateOptions, IdealFamily,
    DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use fuzzy::{meet_family, Chain, FuzzySubset, IdealClass, IdealKind, Membership, ValueError};
pub use ops::{compose, compose_oracle, gamma_product, sum_oplus};
pub use verify::{
    check_law, check_law_with, expand_laws, law_catalog_ids, replay_witness, run_suite,
    run_suite_with, suite_passes, Outcome, Universe, VerifyOptions, VerifyReport, Witness,
};
