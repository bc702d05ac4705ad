use super::element::{Element, LTree};
use super::label::GradedLabel;
use super::DgError;
use num_bigint::BigInt;

/// Base label of the given arity: `u` for 0, the identity pad for 1, the
/// associative corolla otherwise.  Used when two base-labelled vertices
/// merge across a contracted edge.
fn base_label(arity: usize) -> GradedLabel {
    match arity {
        0 => GradedLabel::U,
        1 => GradedLabel::IdPad,
        k => GradedLabel::Mu(k),
    }
}

/// The canonical element of a single generator label: `Mu(k)` is its
/// corolla, `U` the lollipop, `IdPad` the bare tree, and a `Nu` label sits
/// at level 2 under an identity pad with its open inputs as direct leaves.
pub fn label_element(lab: GradedLabel) -> Element {
    match lab {
        GradedLabel::IdPad => Element::identity(),
        GradedLabel::Mu(k) => Element::from_tree(LTree::Node(GradedLabel::Mu(k), vec![LTree::Leaf; k])),
        GradedLabel::U => Element::from_tree(LTree::Node(GradedLabel::U, vec![])),
        GradedLabel::Nu { .. } => Element::from_tree(LTree::Node(
            GradedLabel::IdPad,
            vec![LTree::Node(lab, vec![LTree::Leaf; lab.arity()])],
        )),
    }
}

/// Compose canonical basis trees: graft `ty` onto leaf `i` of `tx`, merge
/// the two base labels across the new edge when both endpoints carry base
/// labels, and return the canonical result with its Koszul sign.
///
/// The sign is the reordering sign of moving `ty`'s tensor factors (which
/// start out concatenated after `tx`'s) into preorder position: `(-1)^(
/// deg(ty) * D)` with `D` the total degree of `tx`'s vertices that come
/// after leaf `i` in preorder.
pub fn compose_tree(tx: &LTree, i: usize, ty: &LTree) -> Result<(i64, LTree), DgError> {
    let arity = tx.arity();
    if i == 0 || i > arity {
        return Err(DgError::SlotRange { slot: i, arity });
    }
    if tx == &LTree::Leaf {
        return Ok((1, ty.clone()));
    }
    if ty == &LTree::Leaf {
        return Ok((1, tx.clone()));
    }

    // degree of tx-vertices strictly after leaf i in preorder
    fn deg_after(t: &LTree, remaining: &mut usize, found: &mut bool, acc: &mut usize) {
        match t {
            LTree::Leaf => {
                if !*found {
                    *remaining -= 1;
                    if *remaining == 0 {
                        *found = true;
                    }
                }
            }
            LTree::Node(lab, cs) => {
                if *found {
                    *acc += lab.degree();
                }
                for c in cs {
                    deg_after(c, remaining, found, acc);
                }
            }
        }
    }
    let mut remaining = i;
    let mut found = false;
    let mut after = 0usize;
    deg_after(tx, &mut remaining, &mut found, &mut after);
    let sign = if (ty.degree() * after) % 2 == 1 { -1 } else { 1 };

    // graft + local merge
    fn go(t: &LTree, remaining: &mut usize, ty: &LTree) -> LTree {
        let LTree::Node(lab, cs) = t else {
            // a root leaf was handled above; child leaves are consumed below
            unreachable!()
        };
        let mut out = Vec::with_capacity(cs.len());
        let mut graft_at: Option<usize> = None;
        for c in cs {
            match c {
                LTree::Leaf => {
                    if graft_at.is_none() && *remaining > 0 {
                        *remaining -= 1;
                        if *remaining == 0 {
                            graft_at = Some(out.len());
                            out.push(ty.clone());
                            continue;
                        }
                    }
                    out.push(LTree::Leaf);
                }
                LTree::Node(..) => {
                    if graft_at.is_none() && *remaining > 0 {
                        let before = *remaining;
                        let sub = go(c, remaining, ty);
                        if *remaining == 0 && before > 0 {
                            out.push(sub);
                            // graft happened strictly inside the child
                            continue;
                        }
                        out.push(sub);
                    } else {
                        out.push(c.clone());
                    }
                }
            }
        }
        if let Some(ix) = graft_at {
            // the grafted root is a direct child: merge if both labels are base
            if lab.is_base() {
                if let LTree::Node(glab, gcs) = &out[ix] {
                    if glab.is_base() {
                        let mut merged = Vec::with_capacity(out.len() + gcs.len() - 1);
                        merged.extend_from_slice(&out[..ix]);
                        merged.extend_from_slice(gcs);
                        merged.extend_from_slice(&out[ix + 1..]);
                        let k = merged.len();
                        if k == 1 && merged[0] == LTree::Leaf {
                            // an identity label over a leaf is no vertex at all
                            return LTree::Leaf;
                        }
                        return LTree::Node(base_label(k), merged);
                    }
                }
            }
        }
        LTree::Node(*lab, out)
    }
    let mut remaining = i;
    let result = go(tx, &mut remaining, ty);
    debug_assert!(result.is_canonical(), "compose produced {}", result.to_text());
    debug_assert_eq!(result.arity(), tx.arity() + ty.arity() - 1);
    Ok((sign, result))
}

impl Element {
    /// Partial composition, bilinear over both arguments.
    pub fn compose(&self, i: usize, other: &Element) -> Result<Element, DgError> {
        if i == 0 || i > self.arity() {
            return Err(DgError::SlotRange { slot: i, arity: self.arity() });
        }
        let mut out = Element::zero(self.arity() + other.arity() - 1);
        for (tx, cx) in self.terms() {
            for (ty, cy) in other.terms() {
                let (sign, t) = compose_tree(tx, i, ty)?;
                out.add_term(t, cx * cy * BigInt::from(sign));
            }
        }
        Ok(out)
    }
}

/// The multiplication morphism `head(parts[0], ..., parts[k-1])`, computed
/// as the left-to-right iterated partial composition (slot offsets tracked
/// by the arities of the already-inserted parts).
pub fn apply(head: &Element, parts: &[Element]) -> Result<Element, DgError> {
    if head.arity() != parts.len() {
        return Err(DgError::ArityMismatch { expected: head.arity(), got: parts.len() });
    }
    let mut acc = head.clone();
    let mut pos = 1usize;
    for p in parts {
        acc = acc.compose(pos, p)?;
        pos += p.arity();
    }
    Ok(acc)
}

/// Canonicalize a labelled tree with arbitrary label placement into an
/// element: base-label chains are contracted (corollas flatten, `u` is
/// absorbed with arity drop, stray identity labels vanish) and the sign is
/// the Koszul reorder from the input preorder to the canonical one.
pub fn normalize(raw: &LTree) -> Result<Element, DgError> {
    match raw {
        LTree::Leaf => Ok(Element::identity()),
        LTree::Node(lab, cs) => {
            if lab.arity() != cs.len() {
                return Err(DgError::LabelArity(lab.to_string(), cs.len(), lab.arity()));
            }
            let parts: Vec<Element> = cs.iter().map(normalize).collect::<Result<_, _>>()?;
            apply(&label_element(*lab), &parts)
        }
    }
}
