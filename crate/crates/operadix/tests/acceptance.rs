//! End-to-end acceptance suite.  Each numbered check prints a single
//! PASS/FAIL line; the test fails if any check fails.

use operadix::deformation::{build_sdr, deform, gordo_h};
use operadix::dg::{
    d2_sweep, differential, graded_axiom_sweep, label_element, resolution_chain_map,
    subset_from_iter, Ambient, GradedLabel,
};
use operadix::grpd::generation_closure;
use operadix::set_operad::{
    check_axioms, monoid_census, unit_transfer_check, Ass, EndFn, FiniteEndOperad, ObU, ObUElem,
    ObUinfA, ObUinfAElem, SetOperad, Slot, UAss, UnitTransferError,
};

const SEED: u64 = 20260823;

fn nu(n: usize, s: &[usize]) -> GradedLabel {
    GradedLabel::nu(n, subset_from_iter(s.iter().copied())).unwrap()
}

fn slots(pat: &str) -> Vec<Slot> {
    pat.chars().map(|c| if c == 'L' { Slot::Leaf } else { Slot::Cork }).collect()
}

struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, number: usize, name: &str, ok: bool, detail: String) {
        if ok {
            println!("PASS criterion {number}: {name}");
        } else {
            println!("FAIL criterion {number}: {name} — {detail}");
            self.failures.push(format!("criterion {number} ({name}): {detail}"));
        }
    }
}

#[test]
fn acceptance() {
    let mut tally = Tally { failures: Vec::new() };

    // 1: d^2 = 0 on all generators with n + |S| <= 8, both ambients, plus
    //    500 seeded random canonical composites each
    let unital = d2_sweep(8, 500, SEED, Ambient::Unital);
    let non_unital = d2_sweep(8, 500, SEED + 1, Ambient::NonUnital);
    tally.record(
        1,
        "d^2 = 0 sweep",
        unital.passed()
            && non_unital.passed()
            && unital.generators_checked == 79
            && unital.random_composites_checked == 500
            && non_unital.random_composites_checked == 500,
        format!("{:?} / {:?}", unital.failures, non_unital.failures),
    );

    // 2: first-level retract values
    let rd = deform(1, 4).expect("first-level deformation");
    let f_nu1 = rd.f.image(nu(1, &[1])).unwrap();
    let f_nu2 = [1, 2].map(|j| rd.f.image(nu(2, &[j])).unwrap());
    let dh_nu1 = differential(&gordo_h(nu(1, &[1])).unwrap());
    let expected_dh = label_element(nu(1, &[1]))
        .neg()
        .add(&label_element(GradedLabel::U));
    let ok2 = f_nu1 == label_element(GradedLabel::U)
        && f_nu2.iter().all(|e| e.is_zero())
        && dh_nu1 == expected_dh;
    tally.record(
        2,
        "retract values f(nu(1,{1})) = u, f(nu(2,{j})) = 0, dh(nu(1,{1})) = -nu(1,{1}) + u",
        ok2,
        format!("f(nu1) = {f_nu1}, f(nu2) = [{}, {}], dh = {dh_nu1}", f_nu2[0], f_nu2[1]),
    );

    // 3: filtration collapse for m in 1..=3 at n <= 6 (homotopy on every
    //    generator, image inside filtration m-1, lower level fixed)
    let mut ok3 = true;
    let mut detail3 = String::new();
    for m in 1..=3usize {
        let report = build_sdr(m, 6).expect("retract construction");
        if !report.passed() {
            ok3 = false;
            detail3.push_str(&format!("m={m}: {report:?}; "));
        }
    }
    tally.record(3, "filtration collapse m = 1, 2, 3 at n <= 6", ok3, detail3);

    // 4: graded axiom + derivation sweeps, >= 200 seeded random instances
    //    per family in each ambient
    let g_u = graded_axiom_sweep(200, 8, SEED + 2, Ambient::Unital);
    let g_n = graded_axiom_sweep(200, 8, SEED + 3, Ambient::NonUnital);
    let counts_ok = |r: &operadix::dg::GradedAxiomReport| {
        r.exchange_checked >= 200
            && r.vertical_checked >= 200
            && r.unit_checked >= 200
            && r.derivation_checked >= 200
    };
    tally.record(
        4,
        "graded exchange/vertical/unit/derivation laws on random composites",
        g_u.passed() && g_n.passed() && counts_ok(&g_u) && counts_ok(&g_n),
        format!("{:?} / {:?}", g_u.failures, g_n.failures),
    );

    // 5: Set-operad axioms brute-forced within bounds + worked compositions
    let set_ok = check_axioms(&Ass, 4, usize::MAX).passed()
        && check_axioms(&UAss, 4, usize::MAX).passed()
        && check_axioms(&ObUinfA { max_corks: 3 }, 4, usize::MAX).passed()
        && check_axioms(&ObU { max_corks: 3 }, 4, usize::MAX).passed()
        && check_axioms(&FiniteEndOperad { size: 1 }, 2, usize::MAX).passed()
        && check_axioms(&FiniteEndOperad { size: 2 }, 2, usize::MAX).passed()
        && check_axioms(&FiniteEndOperad { size: 3 }, 2, 20).passed();
    let o_src = ObUinfA { max_corks: 3 };
    let o_tgt = ObU { max_corks: 3 };
    let worked_ok = o_src
        .compose(&ObUinfAElem::Corolla(slots("LCL")), 2, &ObUinfAElem::U)
        .unwrap()
        == ObUinfAElem::Corolla(slots("LCC"))
        && o_tgt
            .compose(&ObUElem::Corolla(slots("LCCLL")), 2, &ObUElem::WhiteU)
            .unwrap()
            == ObUElem::Corolla(slots("LCCL"))
        && o_tgt
            .compose(&ObUElem::Corolla(slots("LC")), 1, &ObUElem::WhiteU)
            .unwrap()
            == ObUElem::BlackU;
    tally.record(
        5,
        "Set-operad axioms (Ass, uAss, object operads, End) + worked compositions",
        set_ok && worked_ok,
        format!("axioms ok: {set_ok}, worked compositions ok: {worked_ok}"),
    );

    // 6: generation closure covers the arity <= 4, corks <= 3 object box
    //    with a single morphism class per component
    let state = generation_closure(4, 3);
    tally.record(
        6,
        "closure of {mu, u, lambda, rho} reaches the whole object box",
        state.complete,
        format!(
            "missing: {:?}, disconnected: {:?}",
            state.missing_objects, state.disconnected_components
        ),
    );

    // 7: at most one two-sided unit per associative operation (|X| <= 3),
    //    and the unit-transfer replay succeeds on every valid End instance
    let mut census_ok = true;
    for k in 1..=3usize {
        let r = monoid_census(k).unwrap();
        census_ok &= r.max_units_per_op <= 1;
    }
    let mut transfer_checked = 0usize;
    let mut transfer_ok = true;
    for k in 1..=3usize {
        let op = FiniteEndOperad { size: k };
        let binaries: Vec<EndFn> = op.elements(2, usize::MAX);
        let consts: Vec<EndFn> = op.elements(0, usize::MAX);
        for fmu in &binaries {
            for fu in &consts {
                for gu in &consts {
                    match unit_transfer_check(&op, fmu, fu, gu) {
                        Ok(true) => transfer_checked += 1,
                        Ok(false) => transfer_ok = false,
                        Err(UnitTransferError::Hypothesis(_)) => {}
                        Err(_) => transfer_ok = false,
                    }
                }
            }
        }
    }
    tally.record(
        7,
        "unit uniqueness census + unit-transfer replay in End(X)",
        census_ok && transfer_ok && transfer_checked > 0,
        format!("census ok: {census_ok}, transfers: {transfer_checked}, ok: {transfer_ok}"),
    );

    // 8: the resolution morphism commutes with d up to weight 6
    let chain = resolution_chain_map(6);
    tally.record(
        8,
        "resolution morphism commutes with the differential",
        chain.passed() && chain.generators_checked == 26,
        format!("{:?}", chain.failures),
    );

    assert!(tally.failures.is_empty(), "failed criteria: {:#?}", tally.failures);
}
