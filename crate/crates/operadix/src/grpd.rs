//! Operads in groupoids with levelwise contractible components.
//!
//! A contractible groupoid has exactly one morphism between any ordered
//! pair of objects, so such an operad is determined by its Set-operad of
//! objects and morphisms can be represented extensionally as ordered
//! pairs.  This module also carries the generation-closure and push-out
//! square checks for the object operads.

use crate::set_operad::{ob_psi, ObU, ObUElem, ObUinfA, ObUinfAElem, SetOperad, SetOperadError, Slot};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub use crate::set_operad::ob_psi as object_comparison_map;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrpdError {
    #[error("objects lie in different components: arities {0} and {1}")]
    ComponentMismatch(usize, usize),
    #[error("morphisms do not chain: target {0} != source {1}")]
    ChainMismatch(String, String),
    #[error(transparent)]
    Objects(#[from] SetOperadError),
}

/// The unique morphism of a contractible groupoid, as an ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Morphism<E> {
    pub src: E,
    pub tgt: E,
}

/// An operad in groupoids whose every component is contractible; entirely
/// determined by its operad of objects.
#[derive(Debug, Clone, Copy)]
pub struct ContractibleGroupoidOperad<O: SetOperad> {
    pub objects: O,
}

impl<O: SetOperad> ContractibleGroupoidOperad<O> {
    pub fn unique_morphism(&self, x: &O::Elem, y: &O::Elem) -> Result<Morphism<O::Elem>, GrpdError> {
        let (ax, ay) = (self.objects.arity(x), self.objects.arity(y));
        if ax != ay {
            return Err(GrpdError::ComponentMismatch(ax, ay));
        }
        Ok(Morphism { src: x.clone(), tgt: y.clone() })
    }

    /// Groupoid composition: `(y,z) . (x,y) = (x,z)`.
    pub fn chain(
        &self,
        second: &Morphism<O::Elem>,
        first: &Morphism<O::Elem>,
    ) -> Result<Morphism<O::Elem>, GrpdError> {
        if first.tgt != second.src {
            return Err(GrpdError::ChainMismatch(
                format!("{:?}", first.tgt),
                format!("{:?}", second.src),
            ));
        }
        Ok(Morphism { src: first.src.clone(), tgt: second.tgt.clone() })
    }

    pub fn inverse(&self, m: &Morphism<O::Elem>) -> Morphism<O::Elem> {
        Morphism { src: m.tgt.clone(), tgt: m.src.clone() }
    }

    /// Operadic composition of morphisms, slot-wise on both endpoints.
    pub fn compose(
        &self,
        a: &Morphism<O::Elem>,
        i: usize,
        b: &Morphism<O::Elem>,
    ) -> Result<Morphism<O::Elem>, GrpdError> {
        Ok(Morphism {
            src: self.objects.compose(&a.src, i, &b.src)?,
            tgt: self.objects.compose(&a.tgt, i, &b.tgt)?,
        })
    }
}

/// Outcome of closing `{mu, u}` (objects) and the two cork-deleting
/// isomorphisms `lambda = (mu(u,id), |)`, `rho = (mu(id,u), |)` under
/// operadic and groupoid composition.
#[derive(Debug, Clone, Serialize)]
pub struct GenerationState {
    pub max_arity: usize,
    pub max_corks: usize,
    /// reached object counts per (arity, corks) within the reporting box
    pub reached: BTreeMap<String, usize>,
    /// objects of the box the closure failed to reach
    pub missing_objects: Vec<String>,
    /// components of the box whose reached objects split into more than
    /// one morphism class
    pub disconnected_components: Vec<usize>,
    pub complete: bool,
}

/// Breadth-first closure.  Intermediate objects are allowed up to
/// `max_arity + max_corks` total slots (building an `n`-leaf, `k`-cork
/// corolla passes through the cork-free `(n+k)`-corolla), but the
/// completeness report only quantifies over the `(arity, corks)` box.
pub fn generation_closure(max_arity: usize, max_corks: usize) -> GenerationState {
    let op = ObUinfA { max_corks };
    let slot_bound = max_arity + max_corks;
    let in_closure_bounds = |e: &ObUinfAElem| {
        ObUinfA::slots(e) <= slot_bound && ObUinfA::corks(e) <= max_corks
    };

    let mu = ObUinfAElem::Corolla(vec![Slot::Leaf, Slot::Leaf]);
    let mut reached: BTreeSet<ObUinfAElem> =
        [ObUinfAElem::Bare, ObUinfAElem::U, mu.clone()].into_iter().collect();

    // union-find over reached objects for the morphism classes
    let mut parent: BTreeMap<ObUinfAElem, ObUinfAElem> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<ObUinfAElem, ObUinfAElem>, x: &ObUinfAElem) -> ObUinfAElem {
        let p = parent.get(x).cloned().unwrap_or_else(|| x.clone());
        if &p == x {
            return p;
        }
        let root = find(parent, &p);
        parent.insert(x.clone(), root.clone());
        root
    }
    let mut merges: Vec<(ObUinfAElem, ObUinfAElem)> = vec![
        (ObUinfAElem::Corolla(vec![Slot::Cork, Slot::Leaf]), ObUinfAElem::Bare), // lambda
        (ObUinfAElem::Corolla(vec![Slot::Leaf, Slot::Cork]), ObUinfAElem::Bare), // rho
    ];
    for (a, b) in merges.clone() {
        reached.insert(a.clone());
        reached.insert(b.clone());
        let (ra, rb) = (find(&mut parent, &a), find(&mut parent, &b));
        if ra != rb {
            parent.insert(ra, rb);
        }
    }

    loop {
        let mut changed = false;
        // close objects under composition
        let objs: Vec<ObUinfAElem> = reached.iter().cloned().collect();
        for x in &objs {
            for y in &objs {
                for i in 1..=op.arity(x) {
                    let z = op.compose(x, i, y).unwrap();
                    if in_closure_bounds(&z) && reached.insert(z) {
                        changed = true;
                    }
                }
            }
        }
        // propagate every recorded merge through composition with every
        // reached object, on either side
        let objs: Vec<ObUinfAElem> = reached.iter().cloned().collect();
        let mut queue: Vec<(ObUinfAElem, ObUinfAElem)> = merges.clone();
        while let Some((a, b)) = queue.pop() {
            for z in &objs {
                let mut derived: Vec<(ObUinfAElem, ObUinfAElem)> = Vec::new();
                for i in 1..=op.arity(&a) {
                    derived.push((op.compose(&a, i, z).unwrap(), op.compose(&b, i, z).unwrap()));
                }
                for j in 1..=op.arity(z) {
                    derived.push((op.compose(z, j, &a).unwrap(), op.compose(z, j, &b).unwrap()));
                }
                for (da, db) in derived {
                    if !(in_closure_bounds(&da) && in_closure_bounds(&db)) {
                        continue;
                    }
                    if reached.insert(da.clone()) {
                        changed = true;
                    }
                    if reached.insert(db.clone()) {
                        changed = true;
                    }
                    let (ra, rb) = (find(&mut parent, &da), find(&mut parent, &db));
                    if ra != rb {
                        parent.insert(ra, rb);
                        merges.push((da.clone(), db.clone()));
                        queue.push((da, db));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // compare against the full enumeration within the reporting box
    let in_box = |e: &ObUinfAElem| {
        op.arity(e) <= max_arity && ObUinfA::corks(e) <= max_corks
    };
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for e in reached.iter().filter(|e| in_box(e)) {
        *counts
            .entry(format!("arity {} corks {}", op.arity(e), ObUinfA::corks(e)))
            .or_insert(0) += 1;
    }
    let mut missing = Vec::new();
    let mut disconnected = Vec::new();
    for n in 0..=max_arity {
        let all = op.elements(n, usize::MAX);
        for e in &all {
            if !reached.contains(e) {
                missing.push(op.describe(e));
            }
        }
        let classes: BTreeSet<ObUinfAElem> = all
            .iter()
            .filter(|e| reached.contains(*e))
            .map(|e| find(&mut parent, e))
            .collect();
        if classes.len() > 1 {
            disconnected.push(n);
        }
    }
    let complete = missing.is_empty() && disconnected.is_empty();
    GenerationState {
        max_arity,
        max_corks,
        reached: counts,
        missing_objects: missing,
        disconnected_components: disconnected,
        complete,
    }
}

/// Object-level checks for the two push-out squares: the comparison map
/// `ob_psi` is a bijection in positive arities and an injection in arity 0
/// whose complement is exactly the white cork; both squares commute on
/// objects within bounds.
#[derive(Debug, Clone, Serialize)]
pub struct PushoutReport {
    pub max_arity: usize,
    pub max_corks: usize,
    pub psi_bijective_positive: bool,
    pub psi_arity0_complement_is_white_cork: bool,
    pub unital_square_commutes: bool,
    pub cork_square_commutes: bool,
    pub failures: Vec<String>,
}

impl PushoutReport {
    pub fn passed(&self) -> bool {
        self.psi_bijective_positive
            && self.psi_arity0_complement_is_white_cork
            && self.unital_square_commutes
            && self.cork_square_commutes
            && self.failures.is_empty()
    }
}

pub fn pushout_square_object_check(max_arity: usize, max_corks: usize) -> PushoutReport {
    let src = ObUinfA { max_corks };
    let tgt = ObU { max_corks };
    let mut failures = Vec::new();

    let mut psi_bijective_positive = true;
    for n in 1..=max_arity {
        let mut image: Vec<ObUElem> = src.elements(n, usize::MAX).iter().map(ob_psi).collect();
        let mut target = tgt.elements(n, usize::MAX);
        let before = image.len();
        image.sort();
        image.dedup();
        if image.len() != before {
            psi_bijective_positive = false;
            failures.push(format!("psi not injective in arity {n}"));
        }
        target.sort();
        if image != target {
            psi_bijective_positive = false;
            failures.push(format!("psi not surjective in arity {n}"));
        }
    }
    let image0: BTreeSet<ObUElem> = src.elements(0, usize::MAX).iter().map(ob_psi).collect();
    let target0: BTreeSet<ObUElem> = tgt.elements(0, usize::MAX).into_iter().collect();
    let complement: Vec<&ObUElem> = target0.difference(&image0).collect();
    let psi_arity0_complement_is_white_cork =
        image0.len() == src.elements(0, usize::MAX).len() && complement == vec![&ObUElem::WhiteU];
    if !psi_arity0_complement_is_white_cork {
        failures.push(format!("arity-0 complement is {complement:?}"));
    }

    // unital square on objects: pushing the associative corolla through
    // either side lands on the cork-free corolla of the strict-unit operad
    let mut unital_square_commutes = true;
    for n in 1..=max_arity {
        let via_grpd = ob_psi(&if n == 1 {
            ObUinfAElem::Bare
        } else {
            ObUinfAElem::Corolla(vec![Slot::Leaf; n])
        });
        let via_uass = if n == 1 {
            ObUElem::Bare
        } else {
            ObUElem::Corolla(vec![Slot::Leaf; n])
        };
        if via_grpd != via_uass {
            unital_square_commutes = false;
            failures.push(format!("unital square disagrees at arity {n}"));
        }
    }

    // cork square on objects: the free arity-0 generator maps to the same
    // cork along both sides (e -> u -> u'), and the second generator e' to u'
    let zeta_then_psi = ob_psi(&ObUinfAElem::U);
    let zeta_prime_e = ObUElem::BlackU; // e' goes to the black cork directly
    let cork_square_commutes = zeta_then_psi == zeta_prime_e;
    if !cork_square_commutes {
        failures.push("cork square disagrees on the arity-0 generator".to_string());
    }

    PushoutReport {
        max_arity,
        max_corks,
        psi_bijective_positive,
        psi_arity0_complement_is_white_cork,
        unital_square_commutes,
        cork_square_commutes,
        failures,
    }
}
