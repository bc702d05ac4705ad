//! Operads in Set: the associative operads by normal form, labelled-tree
//! coproducts over them, the object-level corolla operads with corks,
//! endomorphism operads of finite sets, and a brute-force axiom harness.

mod ass;
mod coproduct;
mod endo;
mod harness;
mod objects;

pub use ass::{ass_normal_form, uass_compose, Ass, UAss};
pub use coproduct::{coproduct_compose, coproduct_normalize, SetLabel, SetTree};
pub use endo::{EndFn, FiniteEndOperad};
pub use harness::{
    check_axioms, monoid_census, unit_transfer_check, AxiomReport, CensusReport, UnitTransferError,
};
pub use objects::{ob_psi, ObU, ObUElem, ObUinfA, ObUinfAElem, Slot};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetOperadError {
    #[error("slot {slot} out of range for arity {arity}")]
    SlotRange { slot: usize, arity: usize },
    #[error("element has no composition slots (arity 0)")]
    NoSlots,
    #[error("invalid element: {0}")]
    Invalid(String),
}

/// An operad in Set with enumerable components.  `elements` is bounded:
/// implementations with infinite or astronomically large components return
/// at most `bound` elements, in a fixed deterministic order.
pub trait SetOperad {
    type Elem: Clone + Eq + Ord + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn arity(&self, e: &Self::Elem) -> usize;
    fn compose(
        &self,
        a: &Self::Elem,
        i: usize,
        b: &Self::Elem,
    ) -> Result<Self::Elem, SetOperadError>;
    fn elements(&self, arity: usize, bound: usize) -> Vec<Self::Elem>;
    fn describe(&self, e: &Self::Elem) -> String {
        format!("{e:?}")
    }
}
