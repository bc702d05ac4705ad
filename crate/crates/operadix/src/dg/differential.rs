use super::compose::{apply, label_element};
use super::element::{Element, LTree};
use super::label::GradedLabel;
use super::subset::{subset_circ, subset_members, subset_shift, Subset};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

fn sign(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn nu_elem(n: usize, s: Subset) -> Element {
    label_element(GradedLabel::Nu { n, s })
}

/// `d` on a single generator label.  Base labels (`mu`, `u`, the identity)
/// and `nu(1,{1})` are closed; `nu(2,{j})` maps to `mu o_j nu(1,{1}) - id`;
/// every other `nu(n,S)` expands into the four signed summand families:
///
///   d nu(n,S) = (-1)^n mu o_1 nu(n-1,S)            [absent when max S = n]
///             + mu o_2 nu(n-1,S-1)                  [absent when min S = 1]
///             + sum over gaps  (-1)^{i+v-1} nu(n-1, S_v ∪ (S'_v - 1)) o_i mu
///             + sum over splittings with S1 o_i S2 = S of
///               (-1)^{q(p-|S1|)+(q-1)(i+r-1)+|S2|(r-1)} nu(p,S1) o_i nu(q,S2)
///
/// where S = {l_1 < ... < l_m}, l_0 = 0, l_{m+1} = n+1, S_v = {l_1..l_{v-1}},
/// S'_v = {l_v..l_m}, the gap sum runs over 1 <= v <= m+1 and
/// l_{v-1} < i+v-1 < l_v - 1, and the splitting sum over p+q = n+1 with
/// S1, S2 nonempty.
pub fn d_generator(lab: GradedLabel) -> Element {
    let GradedLabel::Nu { n, s } = lab else {
        return Element::zero(lab.arity());
    };
    static CACHE: OnceLock<Mutex<HashMap<(usize, Subset), Element>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, s)) {
        return hit.clone();
    }
    let result = d_nu_uncached(n, s);
    cache.lock().unwrap().insert((n, s), result.clone());
    result
}

fn d_nu_uncached(n: usize, s: Subset) -> Element {
    let m = s.count_ones() as usize;
    let arity = n - m;
    if n == 1 {
        return Element::zero(arity);
    }
    if n == 2 && m == 1 {
        // d nu(2,{j}) = mu o_j nu(1,{1}) - id
        let j = subset_members(s).next().unwrap();
        let mu = label_element(GradedLabel::Mu(2));
        return mu
            .compose(j, &nu_elem(1, 1))
            .unwrap()
            .sub(&Element::identity());
    }

    let mut acc = Element::zero(arity);
    let ls: Vec<usize> = subset_members(s).collect();
    let mu = label_element(GradedLabel::Mu(2));

    // first summand: (-1)^n mu o_1 nu(n-1, S), absent when n = max S
    if *ls.last().unwrap() != n {
        let t = mu.compose(1, &nu_elem(n - 1, s)).unwrap();
        acc = acc.add(&t.scale(&sign(n)));
    }
    // second summand: mu o_2 nu(n-1, S-1), absent when 1 = min S
    if ls[0] != 1 {
        let t = mu.compose(2, &nu_elem(n - 1, subset_shift(s, -1))).unwrap();
        acc = acc.add(&t);
    }
    // gap summands: nu(n-1, S_v ∪ (S'_v - 1)) o_i mu
    let l_at = |v: usize| -> usize {
        // l_0 = 0, l_{m+1} = n+1
        if v == 0 {
            0
        } else if v == m + 1 {
            n + 1
        } else {
            ls[v - 1]
        }
    };
    for v in 1..=m + 1 {
        let lo = l_at(v - 1);
        let hi = l_at(v); // condition: lo < i+v-1 < hi - 1
        for val in lo + 1..hi.saturating_sub(1) {
            let i = val + 1 - v; // val = i + v - 1
            if i == 0 {
                continue;
            }
            let mut t_set: Subset = 0;
            for &l in &ls[..v - 1] {
                t_set |= 1 << (l - 1);
            }
            for &l in &ls[v - 1..] {
                t_set |= 1 << (l - 1 - 1);
            }
            debug_assert_eq!(t_set.count_ones() as usize, m);
            debug_assert!(i <= (n - 1) - m);
            let t = nu_elem(n - 1, t_set).compose(i, &mu).unwrap();
            acc = acc.add(&t.scale(&sign(val)));
        }
    }
    // splitting summands: nu(p,S1) o_i nu(q,S2) over S1 o_i S2 = S
    for p in 1..=n {
        let q = n + 1 - p;
        for s1 in 1u64..(1 << p) {
            let c1 = s1.count_ones() as usize;
            if c1 >= m {
                continue;
            }
            for s2 in 1u64..(1 << q) {
                let c2 = s2.count_ones() as usize;
                if c1 + c2 != m {
                    continue;
                }
                for i in 1..=p - c1 {
                    let (r, composed) = subset_circ(s1, p, i, s2, q).unwrap();
                    if composed != s {
                        continue;
                    }
                    let exp = q * (p - c1) + (q - 1) * (i + r - 1) + c2 * (r - 1);
                    let t = nu_elem(p, s1).compose(i, &nu_elem(q, s2)).unwrap();
                    acc = acc.add(&t.scale(&sign(exp)));
                }
            }
        }
    }
    acc
}

/// The differential on elements: a degree `-1` derivation with respect to
/// the multiplication morphisms, extended linearly.  For a basis tree with
/// root decomposition `x(y_1, ..., y_k)` this is
/// `d(x)(y_1,...,y_k) + sum_i (-1)^{|x| + |y_1| + ... + |y_{i-1}|}
/// x(y_1, ..., d(y_i), ..., y_k)`.
pub fn differential(x: &Element) -> Element {
    let mut out = Element::zero(x.arity());
    for (t, c) in x.terms() {
        out = out.add(&d_tree(t).scale(c));
    }
    out
}

/// A subtree as a standalone element: `Nu`-rooted subtrees get an identity
/// pad below them to restore the canonical root level.
pub(crate) fn subtree_element(c: &LTree) -> Element {
    match c {
        LTree::Leaf => Element::identity(),
        LTree::Node(lab, _) if lab.is_base() => Element::from_tree(c.clone()),
        LTree::Node(..) => {
            Element::from_tree(LTree::Node(GradedLabel::IdPad, vec![c.clone()]))
        }
    }
}

fn d_tree(t: &LTree) -> Element {
    let LTree::Node(lab, cs) = t else {
        return Element::zero(1);
    };
    let parts: Vec<Element> = cs.iter().map(subtree_element).collect();
    let mut acc = Element::zero(t.arity());
    if !lab.is_base() {
        let dg = d_generator(*lab);
        if !dg.is_zero() {
            acc = acc.add(&apply(&dg, &parts).unwrap());
        }
    }
    let mut prefix = lab.degree();
    for (ix, c) in cs.iter().enumerate() {
        if let LTree::Node(..) = c {
            let dc = d_tree(c);
            if !dc.is_zero() {
                let mut parts2 = parts.clone();
                parts2[ix] = dc;
                let term = apply(&label_element(*lab), &parts2).unwrap();
                acc = acc.add(&term.scale(&sign(prefix)));
            }
        }
        prefix += c.degree();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::subset_from_iter;

    fn nu(n: usize, s: &[usize]) -> GradedLabel {
        GradedLabel::nu(n, subset_from_iter(s.iter().copied())).unwrap()
    }

    #[test]
    fn closed_generators() {
        assert!(d_generator(GradedLabel::Mu(2)).is_zero());
        assert!(d_generator(GradedLabel::U).is_zero());
        assert!(d_generator(nu(1, &[1])).is_zero());
    }

    #[test]
    fn d_nu2() {
        let d1 = d_generator(nu(2, &[1]));
        assert_eq!(d1.to_string(), "-| + mu[nu(1,{1}),*]");
        let d2 = d_generator(nu(2, &[2]));
        assert_eq!(d2.to_string(), "-| + mu[*,nu(1,{1})]");
    }

    #[test]
    fn degree_drop() {
        for (n, s) in [(3, vec![1]), (3, vec![1, 3]), (4, vec![2, 3]), (5, vec![1, 2, 3])] {
            let lab = nu(n, &s);
            let d = d_generator(lab);
            assert_eq!(d.degree(), Some(lab.degree() - 1), "n={n} S={s:?}");
            assert_eq!(d.arity(), lab.arity());
        }
    }

    #[test]
    fn d_squared_zero_small() {
        for n in 1..=5usize {
            for s in 1u64..(1 << n) {
                let lab = GradedLabel::Nu { n, s };
                let dd = differential(&d_generator(lab));
                assert!(dd.is_zero(), "d^2(nu({n},{s:#b})) = {dd}");
            }
        }
    }

    #[test]
    fn derivation_on_pure_mu() {
        let mu3 = label_element(GradedLabel::Mu(3));
        assert!(differential(&mu3).is_zero());
    }

    #[test]
    fn differential_of_generator_tree_matches() {
        let lab = nu(2, &[1]);
        assert_eq!(differential(&label_element(lab)), d_generator(lab));
    }
}
