//! Planted planar trees with leaves and corks.
//!
//! A planted tree hangs from a single root edge; the planar structure is the
//! fixed left-to-right order of each child list.  Leaves are positional
//! markers (the open inputs of the tree), while a *cork* is an inner vertex
//! with no children — structurally distinct from a leaf even though both are
//! "ends" of the picture.  The bare tree `|` consists of the root edge alone.

use serde_json::{json, Value};
use thiserror::Error;

/// A node of a planted planar tree: either a leaf position or an inner
/// vertex with an ordered list of children.  A whole tree is just its root
/// node; the root node being a `Leaf` encodes the bare tree `|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf,
    Vertex(Vec<Tree>),
}

/// Path of 0-based child indices from the root node.  The empty path is the
/// root node itself.
pub type TreeAddress = Vec<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("leaf index {index} out of range (tree has {leaves} leaves)")]
    LeafIndex { index: usize, leaves: usize },
    #[error("address {0:?} does not resolve to a node of the tree")]
    BadAddress(String),
    #[error("edge at {0:?} is not an inner edge (root or leaf endpoint)")]
    NotInnerEdge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Tree {
    pub fn bare() -> Tree {
        Tree::Leaf
    }

    pub fn cork() -> Tree {
        Tree::Vertex(vec![])
    }

    /// Corolla with `n` leaves: one inner vertex, all children leaves.
    pub fn corolla(n: usize) -> Tree {
        Tree::Vertex(vec![Tree::Leaf; n])
    }

    pub fn is_bare(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Vertex(cs) => cs.iter().map(Tree::leaf_count).sum(),
        }
    }

    pub fn inner_vertex_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Vertex(cs) => 1 + cs.iter().map(Tree::inner_vertex_count).sum::<usize>(),
        }
    }

    pub fn node_at(&self, addr: &[usize]) -> Option<&Tree> {
        let mut cur = self;
        for &ix in addr {
            match cur {
                Tree::Vertex(cs) => cur = cs.get(ix)?,
                Tree::Leaf => return None,
            }
        }
        Some(cur)
    }

    /// Nested-bracket text form: `*` leaf, `v[...]` vertex, `|` bare tree.
    pub fn to_text(&self) -> String {
        fn child(t: &Tree, out: &mut String) {
            match t {
                Tree::Leaf => out.push('*'),
                Tree::Vertex(cs) => {
                    out.push_str("v[");
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
        match self {
            Tree::Leaf => "|".to_string(),
            _ => {
                let mut s = String::new();
                child(self, &mut s);
                s
            }
        }
    }

    pub fn from_text(s: &str) -> Result<Tree, TreeError> {
        let s = s.trim();
        if s == "|" {
            return Ok(Tree::Leaf);
        }
        let mut chars = s.char_indices().peekable();
        let t = parse_node(s, &mut chars)?;
        if let Some((i, c)) = chars.next() {
            return Err(TreeError::Parse(format!("trailing input `{c}` at byte {i}")));
        }
        Ok(t)
    }

    pub fn to_json(&self) -> Value {
        match self {
            Tree::Leaf => json!("*"),
            Tree::Vertex(cs) => {
                json!({ "children": cs.iter().map(Tree::to_json).collect::<Vec<_>>() })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Tree, TreeError> {
        match v {
            Value::String(s) if s == "*" || s == "|" => Ok(Tree::Leaf),
            Value::Object(m) => {
                let cs = m
                    .get("children")
                    .and_then(Value::as_array)
                    .ok_or_else(|| TreeError::Parse("expected {\"children\": [...]}".into()))?;
                Ok(Tree::Vertex(
                    cs.iter().map(Tree::from_json).collect::<Result<_, _>>()?,
                ))
            }
            other => Err(TreeError::Parse(format!("unexpected JSON node {other}"))),
        }
    }
}

fn parse_node(
    src: &str,
    chars: &mut std::iter::Peekable<std::str::CharIndices>,
) -> Result<Tree, TreeError> {
    match chars.next() {
        Some((_, '*')) => Ok(Tree::Leaf),
        Some((_, 'v')) => {
            match chars.next() {
                Some((_, '[')) => {}
                _ => return Err(TreeError::Parse("expected `[` after `v`".into())),
            }
            let mut children = Vec::new();
            if matches!(chars.peek(), Some((_, ']'))) {
                chars.next();
                return Ok(Tree::Vertex(children));
            }
            loop {
                children.push(parse_node(src, chars)?);
                match chars.next() {
                    Some((_, ',')) => continue,
                    Some((_, ']')) => break,
                    _ => return Err(TreeError::Parse("expected `,` or `]`".into())),
                }
            }
            Ok(Tree::Vertex(children))
        }
        Some((i, c)) => Err(TreeError::Parse(format!("unexpected `{c}` at byte {i}"))),
        None => Err(TreeError::Parse("unexpected end of input".into())),
    }
}

/// Graft the root edge of `t2` onto leaf `i` (1-based, left-to-right) of `t`.
/// Returns the grafted tree together with the address of the graft position:
/// the lower endpoint of the newly created inner edge when `t2` has a root
/// vertex, or the surviving leaf position when `t2` is the bare tree.
pub fn graft(t: &Tree, i: usize, t2: &Tree) -> Result<(Tree, TreeAddress), TreeError> {
    let leaves = t.leaf_count();
    if i == 0 || i > leaves {
        return Err(TreeError::LeafIndex { index: i, leaves });
    }
    fn go(t: &Tree, i: &mut usize, t2: &Tree, path: &mut Vec<usize>) -> Option<(Tree, TreeAddress)> {
        match t {
            Tree::Leaf => {
                *i -= 1;
                if *i == 0 {
                    Some((t2.clone(), path.clone()))
                } else {
                    None
                }
            }
            Tree::Vertex(cs) => {
                for (ix, c) in cs.iter().enumerate() {
                    path.push(ix);
                    if let Some((sub, addr)) = go(c, i, t2, path) {
                        let mut new_children = cs.clone();
                        new_children[ix] = sub;
                        path.pop();
                        return Some((Tree::Vertex(new_children), addr));
                    }
                    path.pop();
                }
                None
            }
        }
    }
    let mut k = i;
    if t.is_bare() {
        // grafting onto the bare tree replaces it outright
        return Ok((t2.clone(), vec![]));
    }
    let mut path = Vec::new();
    Ok(go(t, &mut k, t2, &mut path).expect("leaf index was range-checked"))
}

/// Contract the inner edge whose *upper* endpoint is the vertex at `e`.
/// The upper vertex's children are spliced into the lower vertex's child
/// list at the contracted position.
pub fn contract_inner_edge(t: &Tree, e: &[usize]) -> Result<Tree, TreeError> {
    if e.is_empty() {
        // the edge below the root vertex is the root edge, not an inner edge
        return Err(TreeError::NotInnerEdge(format!("{e:?}")));
    }
    match t.node_at(e) {
        None => return Err(TreeError::BadAddress(format!("{e:?}"))),
        Some(Tree::Leaf) => return Err(TreeError::NotInnerEdge(format!("{e:?}"))),
        Some(Tree::Vertex(_)) => {}
    }
    fn go(t: &Tree, e: &[usize]) -> Tree {
        let Tree::Vertex(cs) = t else { unreachable!() };
        let ix = e[0];
        if e.len() == 1 {
            let Tree::Vertex(upper_children) = &cs[ix] else { unreachable!() };
            let mut new_children = Vec::with_capacity(cs.len() + upper_children.len() - 1);
            new_children.extend_from_slice(&cs[..ix]);
            new_children.extend_from_slice(upper_children);
            new_children.extend_from_slice(&cs[ix + 1..]);
            Tree::Vertex(new_children)
        } else {
            let mut new_children = cs.clone();
            new_children[ix] = go(&cs[ix], &e[1..]);
            Tree::Vertex(new_children)
        }
    }
    Ok(go(t, e))
}

/// Level of every inner vertex, keyed by address.  The root vertex sits at
/// level 1 (one edge away from the planting point); the bare tree has no
/// vertices at all.
pub fn levels(t: &Tree) -> Vec<(TreeAddress, usize)> {
    let mut out = Vec::new();
    fn go(t: &Tree, path: &mut Vec<usize>, level: usize, out: &mut Vec<(TreeAddress, usize)>) {
        if let Tree::Vertex(cs) = t {
            out.push((path.clone(), level));
            for (ix, c) in cs.iter().enumerate() {
                path.push(ix);
                go(c, path, level + 1, out);
                path.pop();
            }
        }
    }
    go(t, &mut Vec::new(), 1, &mut out);
    out
}

/// Depth-first, root-first, children-left-to-right order on inner vertices.
/// This is the tensor-factor order used for all Koszul signs downstream.
pub fn canonical_vertex_order(t: &Tree) -> Vec<TreeAddress> {
    levels(t).into_iter().map(|(a, _)| a).collect()
}

/// Exhaustive, duplicate-free, deterministically ordered enumeration of
/// planar trees with exactly `n_leaves` leaves and at most
/// `max_inner_vertices` inner vertices.  Non-cork inner vertices must have
/// arity at least `min_arity`; corks (arity 0) appear only if `allow_corks`.
pub fn enumerate_trees(
    n_leaves: usize,
    max_inner_vertices: usize,
    allow_corks: bool,
    min_arity: usize,
) -> Vec<Tree> {
    fn rec(n: usize, budget: usize, allow_corks: bool, min_arity: usize) -> Vec<Tree> {
        let mut out = Vec::new();
        if n == 1 {
            out.push(Tree::Leaf);
        }
        if budget == 0 {
            return out;
        }
        if n == 0 && allow_corks {
            out.push(Tree::cork());
        }
        let max_k = n + budget - 1;
        for k in min_arity.max(1)..=max_k {
            for combo in child_lists(k, n, budget - 1, allow_corks, min_arity) {
                out.push(Tree::Vertex(combo));
            }
        }
        out
    }
    // all ordered lists of k subtrees with total leaves n and total inner <= budget
    fn child_lists(
        k: usize,
        n: usize,
        budget: usize,
        allow_corks: bool,
        min_arity: usize,
    ) -> Vec<Vec<Tree>> {
        if k == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first_leaves in 0..=n {
            for first in rec(first_leaves, budget, allow_corks, min_arity) {
                let used = first.inner_vertex_count();
                for mut rest in
                    child_lists(k - 1, n - first_leaves, budget - used, allow_corks, min_arity)
                {
                    let mut combo = Vec::with_capacity(k);
                    combo.push(first.clone());
                    combo.append(&mut rest);
                    out.push(combo);
                }
            }
        }
        out
    }
    let mut all = rec(n_leaves, max_inner_vertices, allow_corks, min_arity);
    all.sort_by_key(|t| (t.inner_vertex_count(), t.to_text()));
    all.dedup();
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        for s in ["|", "*", "v[*,*]", "v[v[],*,v[*,v[*,*]]]", "v[]"] {
            let t = Tree::from_text(s).unwrap();
            assert_eq!(t.to_text(), if s == "*" { "|".to_string() } else { s.to_string() });
            let back = Tree::from_json(&t.to_json()).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn graft_identity_tree_is_noop() {
        let c2 = Tree::corolla(2);
        let (g, _) = graft(&c2, 1, &Tree::bare()).unwrap();
        assert_eq!(g, c2);
        let (g, _) = graft(&Tree::bare(), 1, &c2).unwrap();
        assert_eq!(g, c2);
    }

    #[test]
    fn graft_two_corollas() {
        // 2-leaf corolla with a 3-leaf corolla grafted at leaf 2: 5 leaves total
        let (g, addr) = graft(&Tree::corolla(2), 2, &Tree::corolla(3)).unwrap();
        assert_eq!(g.to_text(), "v[*,v[*,*,*]]");
        assert_eq!(addr, vec![1]);
        assert_eq!(g.leaf_count(), 2 + 3 - 1);
    }

    #[test]
    fn graft_cork_lollipop() {
        let (g, _) = graft(&Tree::corolla(3), 2, &Tree::cork()).unwrap();
        assert_eq!(g.to_text(), "v[*,v[],*]");
        assert_eq!(g.leaf_count(), 2);
    }

    #[test]
    fn contract_merges_corollas() {
        for p in 2..=4usize {
            for q in 2..=4usize {
                for i in 1..=p {
                    let (g, addr) = graft(&Tree::corolla(p), i, &Tree::corolla(q)).unwrap();
                    let c = contract_inner_edge(&g, &addr).unwrap();
                    assert_eq!(c, Tree::corolla(p + q - 1));
                }
            }
        }
    }

    #[test]
    fn contract_chain() {
        // arity-1 vertex over an arity-k vertex contracts to the corolla
        let t = Tree::Vertex(vec![Tree::corolla(3)]);
        assert_eq!(contract_inner_edge(&t, &[0]).unwrap(), Tree::corolla(3));
    }

    #[test]
    fn contract_errors() {
        let t = Tree::corolla(2);
        assert!(matches!(contract_inner_edge(&t, &[]), Err(TreeError::NotInnerEdge(_))));
        assert!(matches!(contract_inner_edge(&t, &[0]), Err(TreeError::NotInnerEdge(_))));
        assert!(matches!(contract_inner_edge(&t, &[5]), Err(TreeError::BadAddress(_))));
    }

    #[test]
    fn levels_increment() {
        let t = Tree::from_text("v[v[*,v[]],*]").unwrap();
        let lv: Vec<_> = levels(&t);
        for (addr, l) in &lv {
            assert_eq!(*l, addr.len() + 1);
        }
        assert!(levels(&Tree::bare()).is_empty());
        assert_eq!(levels(&Tree::corolla(4)), vec![(vec![], 1)]);
    }

    #[test]
    fn preorder_is_depth_first() {
        let t = Tree::from_text("v[v[*,*],v[*]]").unwrap();
        assert_eq!(canonical_vertex_order(&t), vec![vec![], vec![0], vec![1]]);
    }

    // independent brute-force oracle: build every child-list by brute
    // composition of smaller results, no budget pruning tricks
    fn oracle(n: usize, max_inner: usize, corks: bool, min_arity: usize) -> Vec<Tree> {
        fn all(n: usize, b: usize, corks: bool, ma: usize) -> Vec<Tree> {
            let mut v = Vec::new();
            if n == 1 {
                v.push(Tree::Leaf);
            }
            if b == 0 {
                return v;
            }
            if n == 0 && corks {
                v.push(Tree::cork());
            }
            for k in 1..=(n + b) {
                if k < ma {
                    continue;
                }
                let mut lists: Vec<Vec<Tree>> = vec![vec![]];
                for _ in 0..k {
                    let mut next = Vec::new();
                    for l in &lists {
                        let used: usize = l.iter().map(|t| t.inner_vertex_count()).sum();
                        let leaves: usize = l.iter().map(|t| t.leaf_count()).sum();
                        if leaves > n || used > b - 1 {
                            continue;
                        }
                        for m in 0..=(n - leaves) {
                            for sub in all(m, b - 1 - used, corks, ma) {
                                let mut l2 = l.clone();
                                l2.push(sub);
                                next.push(l2);
                            }
                        }
                    }
                    lists = next;
                }
                for l in lists {
                    let leaves: usize = l.iter().map(|t| t.leaf_count()).sum();
                    let used: usize = l.iter().map(|t| t.inner_vertex_count()).sum();
                    if leaves == n && used <= b - 1 {
                        v.push(Tree::Vertex(l));
                    }
                }
            }
            v.sort_by_key(|t| (t.inner_vertex_count(), t.to_text()));
            v.dedup();
            v
        }
        all(n, max_inner, corks, min_arity)
    }

    #[test]
    fn enumeration_matches_oracle() {
        for n in 0..=4 {
            for b in 0..=3 {
                for corks in [false, true] {
                    for ma in [1, 2] {
                        assert_eq!(
                            enumerate_trees(n, b, corks, ma),
                            oracle(n, b, corks, ma),
                            "n={n} b={b} corks={corks} min_arity={ma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_known_counts() {
        assert_eq!(enumerate_trees(1, 0, false, 2), vec![Tree::bare()]);
        // 3 leaves, binary-or-more vertices: two binary shapes + the ternary corolla
        assert_eq!(enumerate_trees(3, 3, false, 2).len(), 3);
        assert_eq!(enumerate_trees(0, 1, true, 2), vec![Tree::cork()]);
    }

    #[test]
    fn graft_leaf_count_law() {
        for t in enumerate_trees(3, 2, true, 2) {
            for t2 in enumerate_trees(2, 2, true, 2) {
                for i in 1..=t.leaf_count() {
                    let (g, _) = graft(&t, i, &t2).unwrap();
                    assert_eq!(g.leaf_count(), t.leaf_count() + t2.leaf_count() - 1);
                }
            }
        }
    }
}
