//! Object-level operads: corollas with corks.
//!
//! `ObUinfA` has elements the bare tree, the single cork `u`, and corollas
//! with `n` leaves, at least two branches, and possibly corks.  Grafting a
//! corolla contracts the new inner edge; grafting `u` does *not* — the
//! leaf simply becomes a cork.
//!
//! `ObU` carries two cork colors: black corks are the free generator `u'`,
//! the white cork is the strict unit `u`.  Here grafting `u` contracts and
//! absorbs (the arity drops), with four exceptional low-arity cases.

use super::{SetOperad, SetOperadError};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Leaf,
    Cork,
}

/// Elements of the operad of objects of the groupoid-level unit
/// resolution.  The corks of `Corolla` are `u`-corks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObUinfAElem {
    Bare,
    U,
    Corolla(Vec<Slot>),
}

/// Elements of the strict-unit target operad.  `Corolla` corks are black
/// (`u'`); `WhiteU` is the strict unit `u`, `BlackU` the lone generator
/// cork `u'`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObUElem {
    Bare,
    WhiteU,
    BlackU,
    Corolla(Vec<Slot>),
}

fn corolla_text(slots: &[Slot], cork_sym: &str) -> String {
    let args: Vec<&str> = slots
        .iter()
        .map(|s| match s {
            Slot::Leaf => "id",
            Slot::Cork => cork_sym,
        })
        .collect();
    format!("mu^{}({})", slots.len() - 1, args.join(","))
}

impl fmt::Display for ObUinfAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObUinfAElem::Bare => write!(f, "|"),
            ObUinfAElem::U => write!(f, "u"),
            ObUinfAElem::Corolla(slots) => write!(f, "{}", corolla_text(slots, "u")),
        }
    }
}

impl fmt::Display for ObUElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObUElem::Bare => write!(f, "|"),
            ObUElem::WhiteU => write!(f, "u"),
            ObUElem::BlackU => write!(f, "u'"),
            ObUElem::Corolla(slots) => write!(f, "{}", corolla_text(slots, "u'")),
        }
    }
}

fn leaves_of(slots: &[Slot]) -> usize {
    slots.iter().filter(|s| **s == Slot::Leaf).count()
}

fn corks_of(slots: &[Slot]) -> usize {
    slots.len() - leaves_of(slots)
}

/// 0-based slot position of the `i`-th (1-based) leaf.
fn leaf_position(slots: &[Slot], i: usize) -> Option<usize> {
    slots
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Slot::Leaf)
        .nth(i - 1)
        .map(|(ix, _)| ix)
}

/// All slot arrangements with `n` leaves and up to `max_corks` corks,
/// ordered by cork count then position pattern.
fn corolla_arrangements(n: usize, max_corks: usize, min_slots: usize) -> Vec<Vec<Slot>> {
    let mut out = Vec::new();
    for k in 0..=max_corks {
        let total = n + k;
        if total < min_slots {
            continue;
        }
        // choose cork positions: iterate bitmasks with k bits over `total`
        fn rec(slots: &mut Vec<Slot>, corks_left: usize, total: usize, out: &mut Vec<Vec<Slot>>) {
            if slots.len() == total {
                if corks_left == 0 {
                    out.push(slots.clone());
                }
                return;
            }
            let positions_left = total - slots.len();
            if corks_left < positions_left {
                slots.push(Slot::Leaf);
                rec(slots, corks_left, total, out);
                slots.pop();
            }
            if corks_left > 0 {
                slots.push(Slot::Cork);
                rec(slots, corks_left - 1, total, out);
                slots.pop();
            }
        }
        rec(&mut Vec::new(), k, total, &mut out);
    }
    out
}

/// Ob of the groupoid-level unit resolution, with a cork bound for
/// enumeration.
#[derive(Debug, Clone, Copy)]
pub struct ObUinfA {
    pub max_corks: usize,
}

impl ObUinfA {
    pub fn corks(e: &ObUinfAElem) -> usize {
        match e {
            ObUinfAElem::Bare => 0,
            ObUinfAElem::U => 1,
            ObUinfAElem::Corolla(slots) => corks_of(slots),
        }
    }
    pub fn slots(e: &ObUinfAElem) -> usize {
        match e {
            ObUinfAElem::Bare => 1,
            ObUinfAElem::U => 1,
            ObUinfAElem::Corolla(slots) => slots.len(),
        }
    }
}

impl SetOperad for ObUinfA {
    type Elem = ObUinfAElem;

    fn identity(&self) -> ObUinfAElem {
        ObUinfAElem::Bare
    }

    fn arity(&self, e: &ObUinfAElem) -> usize {
        match e {
            ObUinfAElem::Bare => 1,
            ObUinfAElem::U => 0,
            ObUinfAElem::Corolla(slots) => leaves_of(slots),
        }
    }

    fn compose(
        &self,
        a: &ObUinfAElem,
        i: usize,
        b: &ObUinfAElem,
    ) -> Result<ObUinfAElem, SetOperadError> {
        let arity = self.arity(a);
        if arity == 0 {
            return Err(SetOperadError::NoSlots);
        }
        if i == 0 || i > arity {
            return Err(SetOperadError::SlotRange { slot: i, arity });
        }
        match (a, b) {
            (ObUinfAElem::Bare, _) => Ok(b.clone()),
            (_, ObUinfAElem::Bare) => Ok(a.clone()),
            (ObUinfAElem::Corolla(slots), ObUinfAElem::U) => {
                // the grafted tree is u: the edge is NOT contracted — the
                // leaf becomes a cork
                let pos = leaf_position(slots, i).unwrap();
                let mut out = slots.clone();
                out[pos] = Slot::Cork;
                Ok(ObUinfAElem::Corolla(out))
            }
            (ObUinfAElem::Corolla(slots), ObUinfAElem::Corolla(bs)) => {
                let pos = leaf_position(slots, i).unwrap();
                let mut out = Vec::with_capacity(slots.len() + bs.len() - 1);
                out.extend_from_slice(&slots[..pos]);
                out.extend_from_slice(bs);
                out.extend_from_slice(&slots[pos + 1..]);
                Ok(ObUinfAElem::Corolla(out))
            }
            (ObUinfAElem::U, _) => unreachable!("arity 0 was rejected"),
        }
    }

    fn elements(&self, arity: usize, bound: usize) -> Vec<ObUinfAElem> {
        let mut out = Vec::new();
        if arity == 1 {
            out.push(ObUinfAElem::Bare);
        }
        if arity == 0 && self.max_corks >= 1 {
            out.push(ObUinfAElem::U);
        }
        out.extend(
            corolla_arrangements(arity, self.max_corks, 2)
                .into_iter()
                .map(ObUinfAElem::Corolla),
        );
        out.truncate(bound);
        out
    }

    fn describe(&self, e: &ObUinfAElem) -> String {
        e.to_string()
    }
}

/// The strict-unit object operad with two cork colors.
#[derive(Debug, Clone, Copy)]
pub struct ObU {
    pub max_corks: usize,
}

impl ObU {
    pub fn corks(e: &ObUElem) -> usize {
        match e {
            ObUElem::Bare => 0,
            ObUElem::WhiteU | ObUElem::BlackU => 1,
            ObUElem::Corolla(slots) => corks_of(slots),
        }
    }
}

impl SetOperad for ObU {
    type Elem = ObUElem;

    fn identity(&self) -> ObUElem {
        ObUElem::Bare
    }

    fn arity(&self, e: &ObUElem) -> usize {
        match e {
            ObUElem::Bare => 1,
            ObUElem::WhiteU | ObUElem::BlackU => 0,
            ObUElem::Corolla(slots) => leaves_of(slots),
        }
    }

    fn compose(&self, a: &ObUElem, i: usize, b: &ObUElem) -> Result<ObUElem, SetOperadError> {
        let arity = self.arity(a);
        if arity == 0 {
            return Err(SetOperadError::NoSlots);
        }
        if i == 0 || i > arity {
            return Err(SetOperadError::SlotRange { slot: i, arity });
        }
        match (a, b) {
            (ObUElem::Bare, _) => Ok(b.clone()),
            (_, ObUElem::Bare) => Ok(a.clone()),
            (ObUElem::Corolla(slots), ObUElem::BlackU) => {
                // the free cork u' hangs below the leaf, no contraction
                let pos = leaf_position(slots, i).unwrap();
                let mut out = slots.clone();
                out[pos] = Slot::Cork;
                Ok(ObUElem::Corolla(out))
            }
            (ObUElem::Corolla(slots), ObUElem::WhiteU) => {
                // the strict unit is absorbed: the leaf disappears.  When
                // only one slot remains the corolla degenerates: to the
                // bare tree (mu o_j u = id) or to the lone black cork
                // ((mu(id,u')) o_1 u = u' and its mirror).
                let pos = leaf_position(slots, i).unwrap();
                let mut out = slots.clone();
                out.remove(pos);
                match out.len() {
                    1 => Ok(match out[0] {
                        Slot::Leaf => ObUElem::Bare,
                        Slot::Cork => ObUElem::BlackU,
                    }),
                    _ => Ok(ObUElem::Corolla(out)),
                }
            }
            (ObUElem::Corolla(slots), ObUElem::Corolla(bs)) => {
                let pos = leaf_position(slots, i).unwrap();
                let mut out = Vec::with_capacity(slots.len() + bs.len() - 1);
                out.extend_from_slice(&slots[..pos]);
                out.extend_from_slice(bs);
                out.extend_from_slice(&slots[pos + 1..]);
                Ok(ObUElem::Corolla(out))
            }
            (ObUElem::WhiteU | ObUElem::BlackU, _) => unreachable!("arity 0 was rejected"),
        }
    }

    fn elements(&self, arity: usize, bound: usize) -> Vec<ObUElem> {
        let mut out = Vec::new();
        if arity == 1 {
            out.push(ObUElem::Bare);
        }
        if arity == 0 && self.max_corks >= 1 {
            out.push(ObUElem::WhiteU);
            out.push(ObUElem::BlackU);
        }
        out.extend(
            corolla_arrangements(arity, self.max_corks, 2)
                .into_iter()
                .map(ObUElem::Corolla),
        );
        out.truncate(bound);
        out
    }

    fn describe(&self, e: &ObUElem) -> String {
        e.to_string()
    }
}

/// Ob of the comparison morphism into the strict-unit operad: black corks
/// to black corks, the lone cork `u` of the source to `u'`.
pub fn ob_psi(e: &ObUinfAElem) -> ObUElem {
    match e {
        ObUinfAElem::Bare => ObUElem::Bare,
        ObUinfAElem::U => ObUElem::BlackU,
        ObUinfAElem::Corolla(slots) => ObUElem::Corolla(slots.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slots(pat: &str) -> Vec<Slot> {
        pat.chars()
            .map(|c| if c == 'L' { Slot::Leaf } else { Slot::Cork })
            .collect()
    }

    #[test]
    fn worked_composition_no_contraction() {
        // mu^2(id,u,id) o_2 u = mu^2(id,u,u)
        let o = ObUinfA { max_corks: 3 };
        let x = ObUinfAElem::Corolla(slots("LCL"));
        let r = o.compose(&x, 2, &ObUinfAElem::U).unwrap();
        assert_eq!(r, ObUinfAElem::Corolla(slots("LCC")));
        assert_eq!(r.to_string(), "mu^2(id,u,u)");
    }

    #[test]
    fn worked_composition_with_contraction() {
        // mu^2(id,u,id) o_2 mu^4(id,u,u,id,id) = mu^6(id,u,id,u,u,id,id)
        let o = ObUinfA { max_corks: 3 };
        let x = ObUinfAElem::Corolla(slots("LCL"));
        let y = ObUinfAElem::Corolla(slots("LCCLL"));
        let r = o.compose(&x, 2, &y).unwrap();
        assert_eq!(r, ObUinfAElem::Corolla(slots("LCLCCLL")));
        assert_eq!(r.to_string(), "mu^6(id,u,id,u,u,id,id)");
    }

    #[test]
    fn white_cork_absorption() {
        // mu^4(id,u',u',id,id) o_2 u = mu^3(id,u',u',id)
        let o = ObU { max_corks: 3 };
        let x = ObUElem::Corolla(slots("LCCLL"));
        let r = o.compose(&x, 2, &ObUElem::WhiteU).unwrap();
        assert_eq!(r, ObUElem::Corolla(slots("LCCL")));
        assert_eq!(r.to_string(), "mu^3(id,u',u',id)");
    }

    #[test]
    fn four_exceptions() {
        let o = ObU { max_corks: 3 };
        let mu = ObUElem::Corolla(slots("LL"));
        assert_eq!(o.compose(&mu, 1, &ObUElem::WhiteU).unwrap(), ObUElem::Bare);
        assert_eq!(o.compose(&mu, 2, &ObUElem::WhiteU).unwrap(), ObUElem::Bare);
        let lc = ObUElem::Corolla(slots("LC")); // mu(id,u')
        assert_eq!(o.compose(&lc, 1, &ObUElem::WhiteU).unwrap(), ObUElem::BlackU);
        let cl = ObUElem::Corolla(slots("CL")); // mu(u',id)
        assert_eq!(o.compose(&cl, 1, &ObUElem::WhiteU).unwrap(), ObUElem::BlackU);
    }

    #[test]
    fn psi_counts() {
        // bijection in positive arities, injection missing exactly u in arity 0
        let src = ObUinfA { max_corks: 2 };
        let tgt = ObU { max_corks: 2 };
        for n in 1..=4usize {
            let a: Vec<ObUElem> = src.elements(n, usize::MAX).iter().map(ob_psi).collect();
            let b = tgt.elements(n, usize::MAX);
            let mut a2 = a.clone();
            a2.sort();
            let mut b2 = b.clone();
            b2.sort();
            assert_eq!(a2, b2, "arity {n}");
        }
        let a0: Vec<ObUElem> = src.elements(0, usize::MAX).iter().map(ob_psi).collect();
        let b0 = tgt.elements(0, usize::MAX);
        let missing: Vec<&ObUElem> = b0.iter().filter(|e| !a0.contains(e)).collect();
        assert_eq!(missing, vec![&ObUElem::WhiteU]);
    }
}
