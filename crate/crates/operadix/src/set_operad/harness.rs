use super::{SetOperad, SetOperadError};
use serde::Serialize;
use thiserror::Error;

/// Result of brute-forcing the operad axioms over all in-bound instances:
///
///   (1) (a o_i b) o_j c = (a o_j c) o_{i+|c|-1} b   for j < i
///   (2) (a o_i b) o_j c = a o_i (b o_{j-i+1} c)     for i <= j < |b| + i
///   (3) id o_1 a = a
///   (4) a o_i id = a
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub max_arity: usize,
    pub element_bound: usize,
    pub instances: usize,
    pub violations: Vec<String>,
    pub vacuous: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && !self.vacuous
    }
}

pub fn check_axioms<O: SetOperad>(op: &O, max_arity: usize, element_bound: usize) -> AxiomReport {
    let mut report = AxiomReport {
        max_arity,
        element_bound,
        instances: 0,
        violations: Vec::new(),
        vacuous: false,
    };
    let comps: Vec<Vec<O::Elem>> =
        (0..=max_arity).map(|n| op.elements(n, element_bound)).collect();
    let id = op.identity();

    for p in 1..=max_arity {
        for a in &comps[p] {
            // unit laws
            report.instances += 1;
            match op.compose(&id, 1, a) {
                Ok(r) if &r == a => {}
                r => report.violations.push(format!(
                    "(3) id o_1 {} = {r:?}",
                    op.describe(a)
                )),
            }
            for i in 1..=p {
                report.instances += 1;
                match op.compose(a, i, &id) {
                    Ok(r) if &r == a => {}
                    r => report.violations.push(format!(
                        "(4) {} o_{i} id = {r:?}",
                        op.describe(a)
                    )),
                }
            }
            for qb in 0..=max_arity {
                for b in &comps[qb] {
                    for qc in 0..=max_arity {
                        for c in &comps[qc] {
                            // (1) horizontal exchange: j < i
                            for i in 2..=p {
                                for j in 1..i {
                                    report.instances += 1;
                                    let lhs = op
                                        .compose(a, i, b)
                                        .and_then(|ab| op.compose(&ab, j, c));
                                    let rhs = op
                                        .compose(a, j, c)
                                        .and_then(|ac| op.compose(&ac, i + qc - 1, b));
                                    if lhs != rhs {
                                        report.violations.push(format!(
                                            "(1) a={} i={i} b={} j={j} c={}: {lhs:?} != {rhs:?}",
                                            op.describe(a),
                                            op.describe(b),
                                            op.describe(c)
                                        ));
                                    }
                                }
                            }
                            // (2) vertical associativity: i <= j < qb + i
                            if qb >= 1 {
                                for i in 1..=p {
                                    for j in i..qb + i {
                                        report.instances += 1;
                                        let lhs = op
                                            .compose(a, i, b)
                                            .and_then(|ab| op.compose(&ab, j, c));
                                        let rhs = op
                                            .compose(b, j - i + 1, c)
                                            .and_then(|bc| op.compose(a, i, &bc));
                                        if lhs != rhs {
                                            report.violations.push(format!(
                                                "(2) a={} i={i} b={} j={j} c={}: {lhs:?} != {rhs:?}",
                                                op.describe(a),
                                                op.describe(b),
                                                op.describe(c)
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.vacuous = report.instances == 0;
    report
}

/// Exhaustive census of binary operations on a finite carrier: how many
/// are associative, how many of those have a two-sided unit, and the
/// maximum number of two-sided units any single operation admits.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub carrier_size: usize,
    pub total_ops: u64,
    pub associative_count: u64,
    pub unital_count: u64,
    pub max_units_per_op: usize,
}

pub fn monoid_census(size: usize) -> Result<CensusReport, SetOperadError> {
    if size == 0 || size > 4 {
        return Err(SetOperadError::Invalid(format!(
            "carrier size {size} out of supported range 1..=4"
        )));
    }
    let cells = size * size;
    let total = (size as u64).pow(cells as u32);
    let mut report = CensusReport {
        carrier_size: size,
        total_ops: total,
        associative_count: 0,
        unital_count: 0,
        max_units_per_op: 0,
    };
    let mut table = vec![0usize; cells];
    let idx = |x: usize, y: usize| x * size + y;
    loop {
        let assoc = 'a: {
            for x in 0..size {
                for y in 0..size {
                    for z in 0..size {
                        if table[idx(table[idx(x, y)], z)] != table[idx(x, table[idx(y, z)])] {
                            break 'a false;
                        }
                    }
                }
            }
            true
        };
        let units = (0..size)
            .filter(|&e| (0..size).all(|x| table[idx(e, x)] == x && table[idx(x, e)] == x))
            .count();
        if assoc {
            report.associative_count += 1;
            if units > 0 {
                report.unital_count += 1;
            }
        }
        report.max_units_per_op = report.max_units_per_op.max(units);
        // next table
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(report);
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < size {
                break;
            }
            table[pos] = 0;
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnitTransferError {
    #[error("arity error: fmu must have arity 2 and fu, gu arity 0")]
    Arity,
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Operad(#[from] SetOperadError),
}

/// Replays the two-sided-unit identity chain: given `fmu o_1 fu = id` and
/// `fmu o_2 gu = id`, the element `(fmu o_1 fu) o_1 gu` computes to `gu`
/// directly and — through the horizontal exchange law — to
/// `(fmu o_2 gu) o_1 fu = fu`.  Returns whether `fu = gu` (which the chain
/// forces, so the result is `true` whenever the hypotheses hold).
pub fn unit_transfer_check<O: SetOperad>(
    op: &O,
    fmu: &O::Elem,
    fu: &O::Elem,
    gu: &O::Elem,
) -> Result<bool, UnitTransferError> {
    if op.arity(fmu) != 2 || op.arity(fu) != 0 || op.arity(gu) != 0 {
        return Err(UnitTransferError::Arity);
    }
    let id = op.identity();
    let left = op.compose(fmu, 1, fu)?;
    if left != id {
        return Err(UnitTransferError::Hypothesis("fmu o_1 fu != id".into()));
    }
    let right = op.compose(fmu, 2, gu)?;
    if right != id {
        return Err(UnitTransferError::Hypothesis("fmu o_2 gu != id".into()));
    }
    // chain 1: (fmu o_1 fu) o_1 gu = id o_1 gu = gu
    let route1 = op.compose(&left, 1, gu)?;
    debug_assert_eq!(&route1, gu);
    // chain 2: exchange law rewrites it as (fmu o_2 gu) o_1 fu = id o_1 fu = fu
    let route2 = op.compose(&right, 1, fu)?;
    debug_assert_eq!(&route2, fu);
    debug_assert_eq!(route1, route2);
    Ok(fu == gu && route1 == route2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_operad::{Ass, EndFn, FiniteEndOperad, ObU, ObUinfA, UAss};

    #[test]
    fn axioms_hold_for_presented_operads() {
        assert!(check_axioms(&Ass, 4, usize::MAX).passed());
        assert!(check_axioms(&UAss, 4, usize::MAX).passed());
        assert!(check_axioms(&ObUinfA { max_corks: 2 }, 3, usize::MAX).passed());
        assert!(check_axioms(&ObU { max_corks: 2 }, 3, usize::MAX).passed());
    }

    #[test]
    fn axioms_hold_for_end_small() {
        let report = check_axioms(&FiniteEndOperad { size: 2 }, 2, 6);
        assert!(report.passed(), "{:?}", report.violations);
    }

    /// Negative control: a unital-associative clone with one corrupted
    /// composition entry.
    struct Corrupted;
    impl SetOperad for Corrupted {
        type Elem = usize;
        fn identity(&self) -> usize {
            1
        }
        fn arity(&self, e: &usize) -> usize {
            *e
        }
        fn compose(&self, a: &usize, i: usize, b: &usize) -> Result<usize, SetOperadError> {
            if (*a, i, *b) == (2, 1, 2) {
                return Ok(4); // should be 3
            }
            UAss.compose(a, i, b)
        }
        fn elements(&self, arity: usize, bound: usize) -> Vec<usize> {
            UAss.elements(arity, bound)
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let report = check_axioms(&Corrupted, 3, usize::MAX);
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn census_size_1_and_2() {
        let r1 = monoid_census(1).unwrap();
        assert_eq!((r1.associative_count, r1.unital_count, r1.max_units_per_op), (1, 1, 1));
        let r2 = monoid_census(2).unwrap();
        assert_eq!(r2.total_ops, 16);
        assert_eq!(r2.associative_count, 8);
        assert!(r2.max_units_per_op <= 1);
        assert!(monoid_census(5).is_err());
    }

    #[test]
    fn unit_transfer_in_end() {
        let o = FiniteEndOperad { size: 2 };
        // binary AND with unit 1
        let and = EndFn { arity: 2, table: vec![0, 0, 0, 1] };
        let one = EndFn::constant(1);
        assert!(unit_transfer_check(&o, &and, &one, &one).unwrap());
        // hypothesis violation: 0 is not a unit for AND
        let zero = EndFn::constant(0);
        assert!(matches!(
            unit_transfer_check(&o, &and, &zero, &one),
            Err(UnitTransferError::Hypothesis(_))
        ));
        assert!(matches!(
            unit_transfer_check(&o, &one, &one, &one),
            Err(UnitTransferError::Arity)
        ));
    }
}
