use super::compose::{apply, label_element};
use super::element::{Element, LTree};
use super::label::GradedLabel;
use super::DgError;
use std::collections::BTreeMap;

/// What an operad morphism does with a `nu` generator that has no explicit
/// assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuFallback {
    /// Map the generator to itself (inclusions, base-fixing morphisms).
    Identity,
    /// Fail with `MissingAssignment`.
    Reject,
    /// The resolution to the strict-unit operad: `nu(1,{1}) -> u`,
    /// `nu(n,S) -> 0` for `n > 1`.
    Resolution,
}

/// A morphism of operads determined by generator assignments, evaluated
/// multiplicatively over canonical trees.  Base labels (`mu`, `u`, the
/// identity) always map to themselves.
#[derive(Debug, Clone)]
pub struct OperadMorphism {
    pub assign: BTreeMap<GradedLabel, Element>,
    pub fallback: NuFallback,
}

impl OperadMorphism {
    pub fn identity() -> OperadMorphism {
        OperadMorphism { assign: BTreeMap::new(), fallback: NuFallback::Identity }
    }

    pub fn resolution() -> OperadMorphism {
        OperadMorphism { assign: BTreeMap::new(), fallback: NuFallback::Resolution }
    }

    pub fn with_assignments<I: IntoIterator<Item = (GradedLabel, Element)>>(
        assignments: I,
        fallback: NuFallback,
    ) -> Result<OperadMorphism, DgError> {
        let mut assign = BTreeMap::new();
        for (lab, e) in assignments {
            if e.arity() != lab.arity() {
                return Err(DgError::ArityMismatch { expected: lab.arity(), got: e.arity() });
            }
            assign.insert(lab, e);
        }
        Ok(OperadMorphism { assign, fallback })
    }

    /// Image of a single generator label.
    pub fn image(&self, lab: GradedLabel) -> Result<Element, DgError> {
        if let Some(e) = self.assign.get(&lab) {
            return Ok(e.clone());
        }
        if lab.is_base() {
            return Ok(label_element(lab));
        }
        match self.fallback {
            NuFallback::Identity => Ok(label_element(lab)),
            NuFallback::Reject => Err(DgError::MissingAssignment(lab.to_string())),
            NuFallback::Resolution => match lab {
                GradedLabel::Nu { n: 1, .. } => Ok(label_element(GradedLabel::U)),
                _ => Ok(Element::zero(lab.arity())),
            },
        }
    }

    pub fn eval(&self, x: &Element) -> Result<Element, DgError> {
        evaluate_morphism(self, x)
    }

    pub fn eval_tree(&self, t: &LTree) -> Result<Element, DgError> {
        match t {
            LTree::Leaf => Ok(Element::identity()),
            LTree::Node(lab, cs) => {
                let parts: Vec<Element> =
                    cs.iter().map(|c| self.eval_tree(c)).collect::<Result<_, _>>()?;
                apply(&self.image(*lab)?, &parts)
            }
        }
    }
}

/// Multiplicative evaluation of `phi` on an element, linear in `x`.
pub fn evaluate_morphism(phi: &OperadMorphism, x: &Element) -> Result<Element, DgError> {
    let mut out = Element::zero(x.arity());
    for (t, c) in x.terms() {
        out = out.add(&phi.eval_tree(t)?.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{d_generator, differential, subset_from_iter};

    fn nu(n: usize, s: &[usize]) -> GradedLabel {
        GradedLabel::nu(n, subset_from_iter(s.iter().copied())).unwrap()
    }

    #[test]
    fn identity_morphism_is_identity() {
        let phi = OperadMorphism::identity();
        let x = d_generator(nu(3, &[1, 3]));
        assert_eq!(phi.eval(&x).unwrap(), x);
    }

    #[test]
    fn resolution_kills_d_nu2() {
        // image of d(nu(2,{j})) = mu o_j u - id = 0
        let phi = OperadMorphism::resolution();
        for j in [1usize, 2] {
            let img = phi.eval(&d_generator(nu(2, &[j]))).unwrap();
            assert!(img.is_zero(), "j={j}: {img}");
        }
    }

    #[test]
    fn resolution_commutes_with_d_small() {
        let phi = OperadMorphism::resolution();
        for n in 1..=4usize {
            for s in 1u64..(1 << n) {
                let lab = GradedLabel::Nu { n, s };
                let lhs = phi.eval(&d_generator(lab)).unwrap();
                let rhs = differential(&phi.eval(&label_element(lab)).unwrap());
                assert_eq!(lhs, rhs, "n={n} s={s:#b}");
            }
        }
    }

    #[test]
    fn reject_fallback_errors() {
        let phi =
            OperadMorphism { assign: BTreeMap::new(), fallback: NuFallback::Reject };
        assert!(phi.eval(&label_element(nu(2, &[1]))).is_err());
    }
}
