//! The binary coproduct of the unital associative operad with a free
//! operad on named generators, at the Set level.
//!
//! Elements are leveled labelled trees: base labels (elements of the
//! associative operad, determined by their arity) at odd levels, free
//! generator labels at even levels.  An arity-1 base label (the identity)
//! appears only as padding below a generator vertex; a pure-base element
//! is a single level-1 corolla; the coproduct identity is the bare tree.

use super::SetOperadError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetLabel {
    /// The unique base element of the given arity (`u`, `id`, `mu^(k-1)`).
    O(usize),
    /// A named free generator with its arity.
    V(String, usize),
}

impl SetLabel {
    pub fn arity(&self) -> usize {
        match self {
            SetLabel::O(k) => *k,
            SetLabel::V(_, k) => *k,
        }
    }
    pub fn is_base(&self) -> bool {
        matches!(self, SetLabel::O(_))
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetLabel::O(0) => write!(f, "u"),
            SetLabel::O(1) => write!(f, "id"),
            SetLabel::O(2) => write!(f, "mu"),
            SetLabel::O(k) => write!(f, "mu^{}", k - 1),
            SetLabel::V(name, _) => write!(f, "{name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetTree {
    Leaf,
    Node(SetLabel, Vec<SetTree>),
}

impl SetTree {
    pub fn generator(name: &str, arity: usize) -> SetTree {
        SetTree::Node(
            SetLabel::O(1),
            vec![SetTree::Node(SetLabel::V(name.to_string(), arity), vec![SetTree::Leaf; arity])],
        )
    }

    pub fn base_corolla(arity: usize) -> SetTree {
        match arity {
            1 => SetTree::Leaf,
            k => SetTree::Node(SetLabel::O(k), vec![SetTree::Leaf; k]),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            SetTree::Leaf => 1,
            SetTree::Node(_, cs) => cs.iter().map(SetTree::arity).sum(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        fn odd(t: &SetTree) -> bool {
            match t {
                SetTree::Leaf => true,
                SetTree::Node(lab, cs) => {
                    lab.is_base()
                        && lab.arity() == cs.len()
                        && (lab.arity() != 1
                            || matches!(&cs[0], SetTree::Node(l, _) if !l.is_base()))
                        && cs.iter().all(even)
                }
            }
        }
        fn even(t: &SetTree) -> bool {
            match t {
                SetTree::Leaf => true,
                SetTree::Node(lab, cs) => {
                    !lab.is_base() && lab.arity() == cs.len() && cs.iter().all(odd)
                }
            }
        }
        matches!(self, SetTree::Leaf) || odd(self)
    }

    pub fn to_text(&self) -> String {
        match self {
            SetTree::Leaf => "|".to_string(),
            _ => {
                fn child(t: &SetTree, out: &mut String) {
                    match t {
                        SetTree::Leaf => out.push('*'),
                        SetTree::Node(lab, cs) => {
                            out.push_str(&lab.to_string());
                            if !cs.is_empty() {
                                out.push('[');
                                for (i, c) in cs.iter().enumerate() {
                                    if i > 0 {
                                        out.push(',');
                                    }
                                    child(c, out);
                                }
                                out.push(']');
                            }
                        }
                    }
                }
                let mut s = String::new();
                child(self, &mut s);
                s
            }
        }
    }
}

/// Compose two canonical trees of the coproduct: graft the root of `y`
/// onto leaf `i` of `x` and contract the newly created inner edge when
/// both endpoints carry base labels (merged through the base composition,
/// which for the associative operad just adds arities).
pub fn coproduct_compose(x: &SetTree, i: usize, y: &SetTree) -> Result<SetTree, SetOperadError> {
    let arity = x.arity();
    if i == 0 || i > arity {
        return Err(SetOperadError::SlotRange { slot: i, arity });
    }
    if !x.is_canonical() || !y.is_canonical() {
        return Err(SetOperadError::Invalid("non-canonical input".into()));
    }
    if x == &SetTree::Leaf {
        return Ok(y.clone());
    }
    if y == &SetTree::Leaf {
        return Ok(x.clone());
    }
    fn go(t: &SetTree, remaining: &mut usize, y: &SetTree) -> SetTree {
        let SetTree::Node(lab, cs) = t else { unreachable!() };
        let mut out = Vec::with_capacity(cs.len());
        let mut graft_at = None;
        for c in cs {
            match c {
                SetTree::Leaf => {
                    if graft_at.is_none() && *remaining > 0 {
                        *remaining -= 1;
                        if *remaining == 0 {
                            graft_at = Some(out.len());
                            out.push(y.clone());
                            continue;
                        }
                    }
                    out.push(SetTree::Leaf);
                }
                SetTree::Node(..) => {
                    if graft_at.is_none() && *remaining > 0 {
                        out.push(go(c, remaining, y));
                    } else {
                        out.push(c.clone());
                    }
                }
            }
        }
        if let Some(ix) = graft_at {
            if lab.is_base() {
                if let SetTree::Node(SetLabel::O(_), gcs) = &out[ix] {
                    let mut merged = Vec::with_capacity(out.len() + gcs.len() - 1);
                    merged.extend_from_slice(&out[..ix]);
                    merged.extend_from_slice(gcs);
                    merged.extend_from_slice(&out[ix + 1..]);
                    let k = merged.len();
                    if k == 1 && merged[0] == SetTree::Leaf {
                        return SetTree::Leaf;
                    }
                    return SetTree::Node(SetLabel::O(k), merged);
                }
            }
        }
        SetTree::Node(lab.clone(), out)
    }
    let mut remaining = i;
    let result = go(x, &mut remaining, y);
    debug_assert!(result.is_canonical());
    Ok(result)
}

/// Canonicalize a labelled tree with arbitrary label placement by
/// rebuilding it through `coproduct_compose`.
pub fn coproduct_normalize(raw: &SetTree) -> Result<SetTree, SetOperadError> {
    match raw {
        SetTree::Leaf => Ok(SetTree::Leaf),
        SetTree::Node(lab, cs) => {
            if lab.arity() != cs.len() {
                return Err(SetOperadError::Invalid(format!(
                    "label {lab} has {} children but arity {}",
                    cs.len(),
                    lab.arity()
                )));
            }
            let head = match lab {
                SetLabel::O(k) => SetTree::base_corolla(*k),
                SetLabel::V(name, k) => SetTree::generator(name, *k),
            };
            let mut acc = head;
            let mut pos = 1usize;
            for c in cs {
                let part = coproduct_normalize(c)?;
                acc = coproduct_compose(&acc, pos, &part)?;
                pos += part.arity();
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_elements_compose_as_base() {
        // corolla(x) o_i corolla(y) = corolla(x o_i y)
        for p in 2..=4usize {
            for q in 2..=4usize {
                for i in 1..=p {
                    let c = coproduct_compose(
                        &SetTree::base_corolla(p),
                        i,
                        &SetTree::base_corolla(q),
                    )
                    .unwrap();
                    assert_eq!(c, SetTree::base_corolla(p + q - 1));
                }
            }
        }
    }

    #[test]
    fn merge_label_across_contracted_edge() {
        // two arity-2 base vertices merge into the arity-3 base label
        let x2 = SetTree::base_corolla(2);
        let merged = coproduct_compose(&x2, 2, &x2).unwrap();
        assert_eq!(merged.to_text(), "mu^2[*,*,*]");
    }

    #[test]
    fn generator_over_generator_gets_padding() {
        let nu = SetTree::generator("a", 2);
        let nu2 = SetTree::generator("b", 2);
        let t = coproduct_compose(&nu, 1, &nu2).unwrap();
        assert_eq!(t.to_text(), "id[a[id[b[*,*]],*]]");
        assert!(t.is_canonical());
    }

    #[test]
    fn unit_absorption_set_level() {
        let mu = SetTree::base_corolla(2);
        let u = SetTree::Node(SetLabel::O(0), vec![]);
        assert_eq!(coproduct_compose(&mu, 1, &u).unwrap(), SetTree::Leaf);
        assert_eq!(coproduct_compose(&mu, 2, &u).unwrap(), SetTree::Leaf);
    }

    #[test]
    fn normalize_idempotent() {
        let nu = SetTree::generator("a", 2);
        let t = coproduct_compose(&nu, 2, &SetTree::base_corolla(3)).unwrap();
        assert_eq!(coproduct_normalize(&t).unwrap(), t);
        // raw tree with a stray identity label over a leaf
        let raw = SetTree::Node(SetLabel::O(2), vec![
            SetTree::Node(SetLabel::O(1), vec![SetTree::Leaf]),
            SetTree::Leaf,
        ]);
        assert_eq!(coproduct_normalize(&raw).unwrap(), SetTree::base_corolla(2));
    }
}
