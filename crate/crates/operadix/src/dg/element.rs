use super::label::{Ambient, GradedLabel};
use super::subset::{subset_from_iter, subset_members};
use super::DgError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// A labelled planted planar tree.  `Leaf` at the root is the bare tree `|`
/// (the operad identity); elsewhere it marks an open input.
///
/// The *canonical form* discipline for basis trees: inner vertices
/// alternate between base labels (`Mu`/`U`/`IdPad`, odd levels) and `Nu`
/// labels (even levels); an `IdPad` appears only when its unique child is a
/// `Nu` vertex; a pure-base element is a single level-1 vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LTree {
    Leaf,
    Node(GradedLabel, Vec<LTree>),
}

impl LTree {
    pub fn arity(&self) -> usize {
        match self {
            LTree::Leaf => 1,
            LTree::Node(_, cs) => cs.iter().map(LTree::arity).sum(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            LTree::Leaf => 0,
            LTree::Node(lab, cs) => lab.degree() + cs.iter().map(LTree::degree).sum::<usize>(),
        }
    }

    /// Every label's stored arity matches its child count.
    pub fn arity_consistent(&self) -> bool {
        match self {
            LTree::Leaf => true,
            LTree::Node(lab, cs) => {
                lab.arity() == cs.len() && cs.iter().all(LTree::arity_consistent)
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        fn odd_level(t: &LTree) -> bool {
            // expects a base-labelled vertex; children at even levels
            match t {
                LTree::Leaf => true,
                LTree::Node(lab, cs) => {
                    lab.is_base()
                        && lab.arity() == cs.len()
                        && (*lab != GradedLabel::IdPad
                            || matches!(&cs[0], LTree::Node(l, _) if !l.is_base()))
                        && cs.iter().all(even_level)
                }
            }
        }
        fn even_level(t: &LTree) -> bool {
            match t {
                LTree::Leaf => true,
                LTree::Node(lab, cs) => {
                    !lab.is_base() && lab.arity() == cs.len() && cs.iter().all(odd_level)
                }
            }
        }
        match self {
            LTree::Leaf => true,
            LTree::Node(_, _) => odd_level(self),
        }
    }

    pub fn labels(&self) -> Vec<GradedLabel> {
        let mut out = Vec::new();
        fn go(t: &LTree, out: &mut Vec<GradedLabel>) {
            if let LTree::Node(lab, cs) = t {
                out.push(*lab);
                for c in cs {
                    go(c, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    pub fn allowed_in(&self, ambient: Ambient) -> bool {
        self.labels().iter().all(|l| l.allowed_in(ambient))
    }

    pub fn to_text(&self) -> String {
        match self {
            LTree::Leaf => "|".to_string(),
            _ => {
                fn child(t: &LTree, out: &mut String) {
                    match t {
                        LTree::Leaf => out.push('*'),
                        LTree::Node(lab, cs) => {
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

    pub fn to_json(&self) -> Value {
        match self {
            LTree::Leaf => json!("*"),
            LTree::Node(lab, cs) => {
                let label = match *lab {
                    GradedLabel::Mu(k) => json!({"kind": "mu", "k": k}),
                    GradedLabel::U => json!({"kind": "u"}),
                    GradedLabel::IdPad => json!({"kind": "id"}),
                    GradedLabel::Nu { n, s } => {
                        json!({"S": subset_members(s).collect::<Vec<_>>(), "kind": "nu", "n": n})
                    }
                };
                json!({
                    "children": cs.iter().map(LTree::to_json).collect::<Vec<_>>(),
                    "label": label,
                })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<LTree, DgError> {
        match v {
            Value::String(s) if s == "*" || s == "|" => Ok(LTree::Leaf),
            Value::Object(m) => {
                let lab = m
                    .get("label")
                    .and_then(Value::as_object)
                    .ok_or_else(|| DgError::Parse("missing label".into()))?;
                let kind = lab
                    .get("kind")
                    .and_then(Value::as_str)
                    .ok_or_else(|| DgError::Parse("missing label kind".into()))?;
                let label = match kind {
                    "mu" => GradedLabel::Mu(
                        lab.get("k")
                            .and_then(Value::as_u64)
                            .ok_or_else(|| DgError::Parse("mu needs k".into()))?
                            as usize,
                    ),
                    "u" => GradedLabel::U,
                    "id" => GradedLabel::IdPad,
                    "nu" => {
                        let n = lab
                            .get("n")
                            .and_then(Value::as_u64)
                            .ok_or_else(|| DgError::Parse("nu needs n".into()))?
                            as usize;
                        let members = lab
                            .get("S")
                            .and_then(Value::as_array)
                            .ok_or_else(|| DgError::Parse("nu needs S".into()))?
                            .iter()
                            .map(|x| x.as_u64().map(|u| u as usize))
                            .collect::<Option<Vec<_>>>()
                            .ok_or_else(|| DgError::Parse("bad S entry".into()))?;
                        GradedLabel::nu(n, subset_from_iter(members))?
                    }
                    other => return Err(DgError::Parse(format!("unknown label kind `{other}`"))),
                };
                let children = m
                    .get("children")
                    .and_then(Value::as_array)
                    .ok_or_else(|| DgError::Parse("missing children".into()))?
                    .iter()
                    .map(LTree::from_json)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(LTree::Node(label, children))
            }
            other => Err(DgError::Parse(format!("unexpected JSON node {other}"))),
        }
    }
}

/// Finite formal sum of canonical trees of one common arity, with exact
/// integer coefficients.  Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    arity: usize,
    terms: BTreeMap<LTree, BigInt>,
}

impl Element {
    pub fn zero(arity: usize) -> Element {
        Element { arity, terms: BTreeMap::new() }
    }

    /// The operad identity as an element: the bare tree with coefficient 1.
    pub fn identity() -> Element {
        Element::from_tree(LTree::Leaf)
    }

    pub fn from_tree(t: LTree) -> Element {
        debug_assert!(t.is_canonical(), "non-canonical basis tree {}", t.to_text());
        let arity = t.arity();
        let mut terms = BTreeMap::new();
        terms.insert(t, BigInt::one());
        Element { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LTree, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Homogeneous degree, if the element has one (zero elements report 0).
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(LTree::degree);
        match it.next() {
            None => Some(0),
            Some(d) => {
                if it.all(|d2| d2 == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    pub fn add_term(&mut self, t: LTree, c: BigInt) {
        debug_assert_eq!(t.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            // re-borrow: find and remove the zeroed key
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.arity, other.arity, "cannot add elements of different arities");
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        if k.is_zero() {
            return Element::zero(self.arity);
        }
        Element {
            arity: self.arity,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    pub fn neg(&self) -> Element {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn allowed_in(&self, ambient: Ambient) -> bool {
        self.terms.keys().all(|t| t.allowed_in(ambient))
    }

    /// True iff every `Nu` label occurring anywhere has `|S| <= m`.
    pub fn in_filtration(&self, m: usize) -> bool {
        self.terms.keys().all(|t| {
            t.labels().iter().all(|lab| match lab {
                GradedLabel::Nu { s, .. } => s.count_ones() as usize <= m,
                _ => true,
            })
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(t, c)| json!({"coeff": c.to_string(), "tree": t.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value, arity: usize) -> Result<Element, DgError> {
        let arr = v
            .as_array()
            .ok_or_else(|| DgError::Parse("element JSON must be an array".into()))?;
        let mut out = Element::zero(arity);
        for item in arr {
            let coeff = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| DgError::Parse("term needs a coeff string".into()))?
                .parse::<BigInt>()
                .map_err(|e| DgError::Parse(format!("bad coefficient: {e}")))?;
            let tree = LTree::from_json(
                item.get("tree").ok_or_else(|| DgError::Parse("term needs a tree".into()))?,
            )?;
            if tree.arity() != arity {
                return Err(DgError::ArityMismatch { expected: arity, got: tree.arity() });
            }
            out.add_term(tree, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (ix, (t, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if ix == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", t.to_text())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::subset_from_iter;

    fn nu_tree(n: usize, s: &[usize]) -> LTree {
        let lab = GradedLabel::nu(n, subset_from_iter(s.iter().copied())).unwrap();
        LTree::Node(
            GradedLabel::IdPad,
            vec![LTree::Node(lab, vec![LTree::Leaf; lab.arity()])],
        )
    }

    #[test]
    fn canonical_recognition() {
        assert!(LTree::Leaf.is_canonical());
        assert!(LTree::Node(GradedLabel::Mu(3), vec![LTree::Leaf; 3]).is_canonical());
        assert!(LTree::Node(GradedLabel::U, vec![]).is_canonical());
        assert!(nu_tree(3, &[1, 2]).is_canonical());
        // bad: IdPad over a leaf
        assert!(!LTree::Node(GradedLabel::IdPad, vec![LTree::Leaf]).is_canonical());
        // bad: Mu directly over Mu (unmerged base labels)
        assert!(!LTree::Node(
            GradedLabel::Mu(2),
            vec![LTree::Node(GradedLabel::Mu(2), vec![LTree::Leaf; 2]), LTree::Leaf]
        )
        .is_canonical());
        // bad: Nu at root level
        let nu = GradedLabel::nu(2, subset_from_iter([1])).unwrap();
        assert!(!LTree::Node(nu, vec![LTree::Leaf]).is_canonical());
    }

    #[test]
    fn arithmetic() {
        let a = Element::from_tree(nu_tree(2, &[1]));
        let b = a.neg();
        assert!(a.add(&b).is_zero());
        assert_eq!(a.scale(&BigInt::from(3)).sub(&a).terms.len(), 1);
        assert_eq!(a.degree(), Some(1));
    }

    #[test]
    fn json_roundtrip() {
        let mut e = Element::from_tree(nu_tree(3, &[2]));
        e = e.add(&Element::from_tree(nu_tree(3, &[1])).scale(&BigInt::from(-7)));
        let back = Element::from_json(&e.to_json(), e.arity()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn display_form() {
        let e = Element::identity().neg();
        assert_eq!(e.to_string(), "-|");
        let mu = Element::from_tree(LTree::Node(GradedLabel::Mu(2), vec![LTree::Leaf; 2]));
        assert_eq!(mu.to_string(), "mu[*,*]");
    }
}
