//! Bulk verification sweeps over the graded machinery: the `d^2 = 0`
//! keystone, the signed operad axioms on random homogeneous composites,
//! the derivation law for the differential, and compatibility of the
//! strict-unit resolution morphism with `d`.

use super::compose::label_element;
use super::differential::{d_generator, differential};
use super::element::Element;
use super::label::{Ambient, GradedLabel};
use super::morphism::OperadMorphism;
use super::sample::random_composite;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

fn sign_of(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// All `nu` labels with `n + |S| <= max_weight`, in (n, S) order.
pub fn generators_up_to(max_weight: usize) -> Vec<GradedLabel> {
    let mut out = Vec::new();
    for n in 1..max_weight {
        for s in 1u64..(1 << n) {
            if n + s.count_ones() as usize <= max_weight {
                out.push(GradedLabel::Nu { n, s });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct D2Report {
    pub max_weight: usize,
    pub ambient: String,
    pub generators_checked: usize,
    pub random_composites_checked: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl D2Report {
    pub fn passed(&self) -> bool {
        self.generators_checked > 0 && self.failures.is_empty()
    }
}

/// `d(d(x)) = 0` for every generator with `n + |S| <= max_weight` and for
/// `random_composites` seeded random canonical composites.
pub fn d2_sweep(
    max_weight: usize,
    random_composites: usize,
    seed: u64,
    ambient: Ambient,
) -> D2Report {
    let mut report = D2Report {
        max_weight,
        ambient: format!("{ambient:?}"),
        generators_checked: 0,
        random_composites_checked: 0,
        seed,
        failures: Vec::new(),
    };
    for lab in generators_up_to(max_weight) {
        report.generators_checked += 1;
        let dd = differential(&d_generator(lab));
        if !dd.is_zero() {
            report.failures.push(format!("d^2({lab}) = {dd}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_composites {
        let e = random_composite(&mut rng, 4, max_weight, ambient);
        report.random_composites_checked += 1;
        let dd = differential(&differential(&e));
        if !dd.is_zero() {
            report.failures.push(format!("d^2({e}) = {dd}"));
        }
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedAxiomReport {
    pub max_weight: usize,
    pub ambient: String,
    pub seed: u64,
    pub exchange_checked: usize,
    pub vertical_checked: usize,
    pub unit_checked: usize,
    pub derivation_checked: usize,
    pub failures: Vec<String>,
}

impl GradedAxiomReport {
    pub fn passed(&self) -> bool {
        self.exchange_checked > 0
            && self.vertical_checked > 0
            && self.unit_checked > 0
            && self.derivation_checked > 0
            && self.failures.is_empty()
    }
}

/// Randomized sweep of the signed axioms on homogeneous composites:
///
///   (1') (a o_i b) o_j c = (-1)^{|b||c|} (a o_j c) o_{i+|c|-1} b   (j < i)
///   (2)  (a o_i b) o_j c = a o_i (b o_{j-i+1} c)                  (i <= j < |b|+i)
///   (3),(4) unit laws
///   derivation: d(a o_i b) = d(a) o_i b + (-1)^{|a|} a o_i d(b)
///
/// Each family accumulates at least `count` instances (drawing until the
/// arity side conditions can be met).
pub fn graded_axiom_sweep(
    count: usize,
    max_weight: usize,
    seed: u64,
    ambient: Ambient,
) -> GradedAxiomReport {
    use rand::Rng;
    let mut report = GradedAxiomReport {
        max_weight,
        ambient: format!("{ambient:?}"),
        seed,
        exchange_checked: 0,
        vertical_checked: 0,
        unit_checked: 0,
        derivation_checked: 0,
        failures: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0usize;
    let enough = |r: &GradedAxiomReport| {
        r.exchange_checked >= count
            && r.vertical_checked >= count
            && r.unit_checked >= count
            && r.derivation_checked >= count
    };
    while !enough(&report) && attempts < count * 200 {
        attempts += 1;
        let a = random_composite(&mut rng, 3, max_weight, ambient);
        let b = random_composite(&mut rng, 2, max_weight, ambient);
        let c = random_composite(&mut rng, 2, max_weight, ambient);
        let (db, dc) = (b.degree().unwrap(), c.degree().unwrap());

        if report.unit_checked < count {
            report.unit_checked += 1;
            let id = Element::identity();
            if id.compose(1, &a).unwrap() != a {
                report.failures.push(format!("(3) id o_1 a failed for a = {a}"));
            }
            if a.arity() > 0 {
                let i = rng.gen_range(1..=a.arity());
                if a.compose(i, &id).unwrap() != a {
                    report.failures.push(format!("(4) a o_{i} id failed for a = {a}"));
                }
            }
        }
        if report.exchange_checked < count && a.arity() >= 2 {
            report.exchange_checked += 1;
            let i = rng.gen_range(2..=a.arity());
            let j = rng.gen_range(1..i);
            let lhs = a.compose(i, &b).unwrap().compose(j, &c).unwrap();
            let rhs = a
                .compose(j, &c)
                .unwrap()
                .compose(i + c.arity() - 1, &b)
                .unwrap()
                .scale(&sign_of(db * dc));
            if lhs != rhs {
                report
                    .failures
                    .push(format!("(1') a={a} i={i} b={b} j={j} c={c}: {lhs} != {rhs}"));
            }
        }
        if report.vertical_checked < count && a.arity() >= 1 && b.arity() >= 1 {
            report.vertical_checked += 1;
            let i = rng.gen_range(1..=a.arity());
            let j = rng.gen_range(i..b.arity() + i);
            let lhs = a.compose(i, &b).unwrap().compose(j, &c).unwrap();
            let rhs = a.compose(i, &b.compose(j - i + 1, &c).unwrap()).unwrap();
            if lhs != rhs {
                report
                    .failures
                    .push(format!("(2) a={a} i={i} b={b} j={j} c={c}: {lhs} != {rhs}"));
            }
        }
        if report.derivation_checked < count && a.arity() >= 1 {
            report.derivation_checked += 1;
            let i = rng.gen_range(1..=a.arity());
            let da = a.degree().unwrap();
            let lhs = differential(&a.compose(i, &b).unwrap());
            let rhs = differential(&a)
                .compose(i, &b)
                .unwrap()
                .add(&a.compose(i, &differential(&b)).unwrap().scale(&sign_of(da)));
            if lhs != rhs {
                report
                    .failures
                    .push(format!("derivation a={a} i={i} b={b}: {lhs} != {rhs}"));
            }
        }
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainMapReport {
    pub max_weight: usize,
    pub generators_checked: usize,
    pub failures: Vec<String>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.generators_checked > 0 && self.failures.is_empty()
    }
}

/// The resolution morphism (`mu -> mu`, `nu(1,{1}) -> u`, higher `nu -> 0`)
/// commutes with the differential on every generator within the weight
/// bound.
pub fn resolution_chain_map(max_weight: usize) -> ChainMapReport {
    let phi = OperadMorphism::resolution();
    let mut report =
        ChainMapReport { max_weight, generators_checked: 0, failures: Vec::new() };
    for lab in generators_up_to(max_weight) {
        report.generators_checked += 1;
        let lhs = phi.eval(&d_generator(lab)).unwrap();
        let rhs = differential(&phi.eval(&label_element(lab)).unwrap());
        if lhs != rhs {
            report
                .failures
                .push(format!("phi(d({lab})) = {lhs} but d(phi({lab})) = {rhs}"));
        }
    }
    report
}
