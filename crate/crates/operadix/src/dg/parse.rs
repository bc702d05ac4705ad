//! Text parsing for generator labels and labelled trees, inverse to
//! `GradedLabel::to_string` and `LTree::to_text`.

use super::element::LTree;
use super::label::GradedLabel;
use super::subset::subset_from_iter;
use super::DgError;

/// Parse a generator label: `mu`, `mu^k`, `u`, `id`, or `nu(n,{j1,...})`.
pub fn parse_label(s: &str) -> Result<GradedLabel, DgError> {
    let s = s.trim();
    if s == "mu" {
        return Ok(GradedLabel::Mu(2));
    }
    if let Some(rest) = s.strip_prefix("mu^") {
        let k: usize = rest
            .parse()
            .map_err(|_| DgError::Parse(format!("bad corolla exponent in `{s}`")))?;
        if k < 1 {
            return Err(DgError::Parse("corolla exponent must be >= 1".into()));
        }
        return Ok(GradedLabel::Mu(k + 1));
    }
    if s == "u" {
        return Ok(GradedLabel::U);
    }
    if s == "id" {
        return Ok(GradedLabel::IdPad);
    }
    if let Some(rest) = s.strip_prefix("nu(").and_then(|r| r.strip_suffix(')')) {
        let (n_str, set_str) = rest
            .split_once(',')
            .ok_or_else(|| DgError::Parse(format!("expected nu(n,{{...}}), got `{s}`")))?;
        let n: usize = n_str
            .trim()
            .parse()
            .map_err(|_| DgError::Parse(format!("bad arity bound in `{s}`")))?;
        let set_str = set_str
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| DgError::Parse(format!("expected {{...}} subset in `{s}`")))?;
        let members = set_str
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| DgError::Parse(format!("bad subset member in `{s}`")))?;
        if members.iter().any(|&j| j == 0 || j > 64) {
            return Err(DgError::Parse("subset members must lie in 1..=64".into()));
        }
        return GradedLabel::nu(n, subset_from_iter(members));
    }
    Err(DgError::Parse(format!("unrecognized label `{s}`")))
}

/// Parse a labelled tree: `|` (bare), `*` (leaf), or `label[c1,...,cm]`
/// with the bracket list omitted for arity-0 labels.
pub fn parse_ltree(s: &str) -> Result<LTree, DgError> {
    let s = s.trim();
    if s == "|" {
        return Ok(LTree::Leaf);
    }
    let (t, rest) = parse_node(s)?;
    if !rest.trim_start().is_empty() {
        return Err(DgError::Parse(format!("trailing input `{rest}`")));
    }
    Ok(t)
}

fn parse_node(s: &str) -> Result<(LTree, &str), DgError> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('*') {
        return Ok((LTree::Leaf, rest));
    }
    // the label runs to the first `[`, `,`, or `]` outside any parentheses
    let mut depth = 0usize;
    let mut label_end = s.len();
    for (ix, ch) in s.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth = depth.saturating_sub(1),
            '[' | ',' | ']' if depth == 0 => {
                label_end = ix;
                break;
            }
            _ => {}
        }
    }
    let label = parse_label(&s[..label_end])?;
    let mut rest = &s[label_end..];
    let mut children = Vec::new();
    if let Some(body) = rest.strip_prefix('[') {
        rest = body;
        loop {
            let (c, after) = parse_node(rest)?;
            children.push(c);
            let after = after.trim_start();
            if let Some(r) = after.strip_prefix(',') {
                rest = r;
            } else if let Some(r) = after.strip_prefix(']') {
                rest = r;
                break;
            } else {
                return Err(DgError::Parse("expected `,` or `]` in child list".into()));
            }
        }
    }
    if label.arity() != children.len() {
        return Err(DgError::LabelArity(label.to_string(), children.len(), label.arity()));
    }
    Ok((LTree::Node(label, children), rest))
}
