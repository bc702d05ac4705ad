use super::{SetOperad, SetOperadError};
use crate::tree::Tree;

/// The associative operad: one element `mu^(n-1)` in every arity `n >= 1`,
/// none in arity 0.  Elements are represented by their arity.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ass;

/// The unital associative operad: one element in every arity `n >= 0`; the
/// arity-0 element is the unit `u`.
#[derive(Debug, Clone, Copy, Default)]
pub struct UAss;

fn describe_arity(n: usize) -> String {
    match n {
        0 => "u".to_string(),
        1 => "id".to_string(),
        2 => "mu".to_string(),
        n => format!("mu^{}", n - 1),
    }
}

impl SetOperad for Ass {
    type Elem = usize;

    fn identity(&self) -> usize {
        1
    }
    fn arity(&self, e: &usize) -> usize {
        *e
    }
    fn compose(&self, a: &usize, i: usize, b: &usize) -> Result<usize, SetOperadError> {
        if *a == 0 {
            return Err(SetOperadError::NoSlots);
        }
        if i == 0 || i > *a {
            return Err(SetOperadError::SlotRange { slot: i, arity: *a });
        }
        Ok(a + b - 1)
    }
    fn elements(&self, arity: usize, _bound: usize) -> Vec<usize> {
        if arity >= 1 {
            vec![arity]
        } else {
            vec![]
        }
    }
    fn describe(&self, e: &usize) -> String {
        describe_arity(*e)
    }
}

impl SetOperad for UAss {
    type Elem = usize;

    fn identity(&self) -> usize {
        1
    }
    fn arity(&self, e: &usize) -> usize {
        *e
    }
    fn compose(&self, a: &usize, i: usize, b: &usize) -> Result<usize, SetOperadError> {
        if *a == 0 {
            return Err(SetOperadError::NoSlots);
        }
        if i == 0 || i > *a {
            return Err(SetOperadError::SlotRange { slot: i, arity: *a });
        }
        Ok(a + b - 1)
    }
    fn elements(&self, arity: usize, _bound: usize) -> Vec<usize> {
        vec![arity]
    }
    fn describe(&self, e: &usize) -> String {
        describe_arity(*e)
    }
}

/// Collapse a planar tree all of whose inner vertices have arity `>= 2`
/// into its associative normal form: the arity of the corolla it equals,
/// i.e. the token `mu^(n-1)` for an `n`-leaf tree.  The bare tree is `id`.
pub fn ass_normal_form(t: &Tree) -> Result<usize, SetOperadError> {
    fn check(t: &Tree) -> Result<(), SetOperadError> {
        if let Tree::Vertex(cs) = t {
            if cs.len() < 2 {
                return Err(SetOperadError::Invalid(format!(
                    "vertex of arity {} (need >= 2)",
                    cs.len()
                )));
            }
            for c in cs {
                check(c)?;
            }
        }
        Ok(())
    }
    check(t)?;
    Ok(t.leaf_count())
}

/// Composition in the unital associative operad, on arity-coded elements.
pub fn uass_compose(a: usize, i: usize, b: usize) -> Result<usize, SetOperadError> {
    UAss.compose(&a, i, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::graft;

    #[test]
    fn mu_relation() {
        // mu o_1 mu = mu o_2 mu = mu^2
        assert_eq!(Ass.compose(&2, 1, &2).unwrap(), 3);
        assert_eq!(Ass.compose(&2, 2, &2).unwrap(), 3);
    }

    #[test]
    fn corolla_collapse_via_trees() {
        for p in 2..=5usize {
            for q in 2..=5usize {
                for i in 1..=p {
                    let (g, _) = graft(&Tree::corolla(p), i, &Tree::corolla(q)).unwrap();
                    assert_eq!(ass_normal_form(&g).unwrap(), p + q - 1);
                    assert_eq!(Ass.compose(&p, i, &q).unwrap(), p + q - 1);
                }
            }
        }
        assert_eq!(ass_normal_form(&Tree::corolla(4)).unwrap(), 4);
        assert_eq!(ass_normal_form(&Tree::bare()).unwrap(), 1);
    }

    #[test]
    fn arity_one_vertices_rejected() {
        let t = Tree::Vertex(vec![Tree::Leaf]);
        assert!(ass_normal_form(&t).is_err());
        assert!(ass_normal_form(&Tree::cork()).is_err());
    }

    #[test]
    fn unit_absorption() {
        assert_eq!(uass_compose(2, 1, 0).unwrap(), 1); // mu o_1 u = id
        assert_eq!(uass_compose(2, 2, 0).unwrap(), 1); // mu o_2 u = id
        assert_eq!(uass_compose(3, 2, 0).unwrap(), 2); // mu^2 o_2 u = mu
        assert_eq!(uass_compose(1, 1, 5).unwrap(), 5); // id o_1 x = x
    }
}
