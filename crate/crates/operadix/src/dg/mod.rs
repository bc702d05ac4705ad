//! Graded and differential-graded operad elements over exact integer
//! coefficients.
//!
//! The ambient operads here are built on an associative base (with or
//! without a strict unit) together with free graded generators `nu(n,S)` of
//! arity `n - |S|` and degree `n - 2 + |S|`.  Elements are finite formal
//! sums of canonical labelled trees; every sign is the Koszul sign of
//! reordering tensor factors against the preorder of inner vertices.

mod checks;
mod compose;
mod differential;
mod element;
mod label;
mod morphism;
mod parse;
mod sample;
mod subset;

pub use checks::{
    d2_sweep, generators_up_to, graded_axiom_sweep, resolution_chain_map, ChainMapReport,
    D2Report, GradedAxiomReport,
};
pub use compose::{apply, compose_tree, label_element, normalize};
pub use differential::{d_generator, differential};
pub use element::{Element, LTree};
pub use label::{Ambient, GradedLabel};
pub use morphism::{evaluate_morphism, NuFallback, OperadMorphism};
pub use parse::{parse_label, parse_ltree};
pub use sample::{random_composite, random_label, random_nu};
pub use subset::{subset_circ, subset_from_iter, subset_members, subset_shift};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DgError {
    #[error("slot {slot} out of range for arity {arity}")]
    SlotRange { slot: usize, arity: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("label {0} carries {1} children, but its arity is {2}")]
    LabelArity(String, usize, usize),
    #[error("label `u` is not available in the non-unital ambient")]
    AmbientViolation,
    #[error("invalid generator: {0}")]
    BadGenerator(String),
    #[error("no assignment for generator {0}")]
    MissingAssignment(String),
    #[error("parse error: {0}")]
    Parse(String),
}
