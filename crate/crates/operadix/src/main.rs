//! Batch command-line surface: differentials, composition, normalization,
//! enumeration, rendering, and the verification sweeps.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 usage or parse error.

use clap::{Parser, Subcommand, ValueEnum};
use operadix::deformation::build_sdr;
use operadix::dg::{
    d2_sweep, d_generator, graded_axiom_sweep, normalize, parse_label, parse_ltree, Ambient,
    DgError, Element, GradedLabel, LTree,
};
use operadix::grpd::{generation_closure, pushout_square_object_check};
use operadix::set_operad::{
    check_axioms, monoid_census, unit_transfer_check, Ass, EndFn, FiniteEndOperad, ObU, ObUinfA,
    SetOperad, UAss, UnitTransferError,
};
use operadix::tree::{enumerate_trees, Tree};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "operadix", version, about = "Exact symbolic engine for non-symmetric operads on planted planar trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    /// Non-unital: generators over the plain associative base.
    UinfA,
    /// Unital: the strict arity-0 unit `u` is available.
    UinfUa,
}

impl From<AmbientArg> for Ambient {
    fn from(a: AmbientArg) -> Ambient {
        match a {
            AmbientArg::UinfA => Ambient::NonUnital,
            AmbientArg::UinfUa => Ambient::Unital,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Differential of a generator: `mu`, `mu^k`, `u`, or `nu(n,{...})`.
    D {
        generator: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partial composition of two labelled-tree expressions at a slot.
    Compose {
        left: String,
        slot: usize,
        right: String,
        #[arg(long, value_enum, default_value_t = AmbientArg::UinfUa)]
        ambient: AmbientArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonicalize a labelled tree into a signed element.
    Normalize {
        tree: String,
        #[arg(long, value_enum, default_value_t = AmbientArg::UinfUa)]
        ambient: AmbientArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate planted planar trees by leaf count.
    Enumerate {
        #[arg(long)]
        leaves: usize,
        #[arg(long, default_value_t = 4)]
        max_inner: usize,
        #[arg(long, default_value_t = false)]
        allow_corks: bool,
        #[arg(long, default_value_t = 2)]
        min_arity: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a tree or element as DOT or text.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive census of binary operations on a finite carrier.
    Census {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification sweeps; exit 0 iff all checks pass.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// d^2 = 0 on all generators within the weight bound plus seeded
    /// random composites.
    D2 {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The derivation law d(a o_i b) = d(a) o_i b +- a o_i d(b) on seeded
    /// random instances (runs inside the full graded sweep).
    Derivation {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AmbientArg::UinfUa)]
        ambient: AmbientArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed operad axioms on random graded composites, and brute-forced
    /// Set-operad axioms within the bounds.
    Axioms {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
        #[arg(long, default_value_t = 3)]
        max_corks: usize,
        #[arg(long, default_value_t = 3)]
        end_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One level of the filtration-collapsing retract.
    Gordo {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unit uniqueness by exhaustive censuses and unit-transfer replays in
    /// endomorphism operads.
    Census {
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closure of {mu, u, lambda, rho} under composition reaches the whole
    /// object box.
    Generation {
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
        #[arg(long, default_value_t = 3)]
        max_corks: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Object-level push-out square checks for the comparison morphism.
    Pushout {
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long, default_value_t = 3)]
        max_corks: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e),
                _ => Ok(()),
            }
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// An input expression: a generator label or a labelled tree in bracket
/// text, turned into a canonical element.
fn parse_element_expr(s: &str, ambient: Ambient) -> Result<Element, DgError> {
    let t = parse_ltree(s)?;
    if !t.allowed_in(ambient) {
        return Err(DgError::AmbientViolation);
    }
    normalize(&t)
}

fn element_text(e: &Element, format: FormatArg) -> String {
    match format {
        FormatArg::Json => serde_json::to_string_pretty(&e.to_json()).unwrap(),
        FormatArg::Dot => element_dot(e),
        FormatArg::Text => e.to_string(),
    }
}

fn ltree_dot_nodes(t: &LTree, prefix: &str, next: &mut usize, lines: &mut Vec<String>) -> String {
    let id = format!("{prefix}{next}");
    *next += 1;
    match t {
        LTree::Leaf => {
            lines.push(format!("  {id} [label=\"*\", shape=none];"));
        }
        LTree::Node(lab, cs) => {
            let attrs = match lab {
                GradedLabel::U => {
                    // the unit cork is drawn open (white)
                    "shape=circle, style=filled, fillcolor=white, label=\"u\"".to_string()
                }
                _ => format!("shape=box, label=\"{lab}\""),
            };
            lines.push(format!("  {id} [{attrs}];"));
            for c in cs {
                let cid = ltree_dot_nodes(c, prefix, next, lines);
                lines.push(format!("  {id} -> {cid};"));
            }
        }
    }
    id
}

fn ltree_dot(t: &LTree) -> String {
    let mut lines = vec![
        "digraph tree {".to_string(),
        "  graph [ordering=out];".to_string(),
        "  node [fontname=\"monospace\"];".to_string(),
    ];
    let mut next = 0usize;
    let mut inner = Vec::new();
    ltree_dot_nodes(t, "n", &mut next, &mut inner);
    lines.extend(inner);
    lines.push("}".to_string());
    lines.join("\n")
}

fn element_dot(e: &Element) -> String {
    let mut lines = vec![
        "digraph element {".to_string(),
        "  graph [ordering=out];".to_string(),
        "  node [fontname=\"monospace\"];".to_string(),
    ];
    for (ix, (t, c)) in e.terms().enumerate() {
        lines.push(format!("  subgraph cluster_{ix} {{"));
        lines.push(format!("    label=\"{c}\";"));
        let mut inner = Vec::new();
        let mut next = 0usize;
        ltree_dot_nodes(t, &format!("t{ix}_n"), &mut next, &mut inner);
        for l in inner {
            lines.push(format!("  {l}"));
        }
        lines.push("  }".to_string());
    }
    lines.push("}".to_string());
    lines.join("\n")
}

fn plain_tree_dot(t: &Tree) -> String {
    fn rec(t: &Tree, next: &mut usize, lines: &mut Vec<String>) -> String {
        let id = format!("n{next}");
        *next += 1;
        match t {
            Tree::Leaf => lines.push(format!("  {id} [label=\"*\", shape=none];")),
            Tree::Vertex(cs) if cs.is_empty() => {
                // corks are drawn filled (black)
                lines.push(format!(
                    "  {id} [shape=circle, style=filled, fillcolor=black, label=\"\"];"
                ));
            }
            Tree::Vertex(cs) => {
                lines.push(format!("  {id} [shape=point];"));
                for c in cs {
                    let cid = rec(c, next, lines);
                    lines.push(format!("  {id} -> {cid};"));
                }
            }
        }
        id
    }
    let mut lines = vec![
        "digraph tree {".to_string(),
        "  graph [ordering=out];".to_string(),
    ];
    let mut next = 0;
    rec(t, &mut next, &mut lines);
    lines.push("}".to_string());
    lines.join("\n")
}

/// JSON verification report runner: prints the report and converts the
/// pass flag into the exit code.
fn finish_report<T: serde::Serialize>(
    report: &T,
    passed: bool,
    out: &Option<PathBuf>,
) -> ExitCode {
    let text = serde_json::to_string_pretty(report).unwrap();
    if emit(&text, out).is_err() {
        return usage_error("cannot write output file");
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_census_suite(size: usize, out: &Option<PathBuf>) -> ExitCode {
    let mut reports = Vec::new();
    let mut passed = true;
    for k in 1..=size {
        match monoid_census(k) {
            Ok(r) => {
                passed &= r.max_units_per_op <= 1;
                reports.push(r);
            }
            Err(e) => return usage_error(e),
        }
    }
    // replay the unit-transfer argument on every valid End(X) instance
    let mut transfer_checked = 0usize;
    let mut transfer_failures: Vec<String> = Vec::new();
    for k in 1..=size.min(3) {
        let op = FiniteEndOperad { size: k };
        let binaries: Vec<EndFn> = op.elements(2, usize::MAX);
        let consts: Vec<EndFn> = op.elements(0, usize::MAX);
        for fmu in &binaries {
            for fu in &consts {
                for gu in &consts {
                    match unit_transfer_check(&op, fmu, fu, gu) {
                        Ok(true) => transfer_checked += 1,
                        Ok(false) => transfer_failures
                            .push(format!("transfer returned false for |X|={k}")),
                        Err(UnitTransferError::Hypothesis(_)) => {}
                        Err(e) => transfer_failures.push(format!("|X|={k}: {e}")),
                    }
                }
            }
        }
    }
    passed &= transfer_failures.is_empty() && transfer_checked > 0;
    let report = json!({
        "max_size": size,
        "censuses": reports,
        "unit_transfer_instances": transfer_checked,
        "unit_transfer_failures": transfer_failures,
        "passed": passed,
    });
    finish_report(&report, passed, out)
}

fn run_axioms_suite(
    count: usize,
    max_n: usize,
    seed: u64,
    max_arity: usize,
    max_corks: usize,
    end_size: usize,
    out: &Option<PathBuf>,
) -> ExitCode {
    let graded_unital = graded_axiom_sweep(count, max_n, seed, Ambient::Unital);
    let graded_nonunital = graded_axiom_sweep(count, max_n, seed.wrapping_add(1), Ambient::NonUnital);
    let set_reports = vec![
        ("Ass", check_axioms(&Ass, max_arity, usize::MAX)),
        ("uAss", check_axioms(&UAss, max_arity, usize::MAX)),
        ("Ob(uinf-a)", check_axioms(&ObUinfA { max_corks }, max_arity, usize::MAX)),
        ("Ob(strict-unit)", check_axioms(&ObU { max_corks }, max_arity, usize::MAX)),
    ];
    let mut end_reports = Vec::new();
    for k in 1..=end_size {
        let bound = if k >= 3 { 30 } else { usize::MAX };
        end_reports.push((format!("End({k})"), check_axioms(&FiniteEndOperad { size: k }, 2.min(max_arity), bound)));
    }
    let passed = graded_unital.passed()
        && graded_nonunital.passed()
        && set_reports.iter().all(|(_, r)| r.passed())
        && end_reports.iter().all(|(_, r)| r.passed());
    let report = json!({
        "graded": { "unital": graded_unital, "non_unital": graded_nonunital },
        "set_operads": set_reports
            .iter()
            .map(|(name, r)| json!({"operad": name, "report": r}))
            .collect::<Vec<_>>(),
        "end_operads": end_reports
            .iter()
            .map(|(name, r)| json!({"operad": name, "report": r}))
            .collect::<Vec<_>>(),
        "passed": passed,
    });
    finish_report(&report, passed, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::D { generator, format, out } => {
            let lab = match parse_label(&generator) {
                Ok(l) => l,
                Err(e) => return usage_error(e),
            };
            let e = d_generator(lab);
            if emit(&element_text(&e, format), &out).is_err() {
                return usage_error("cannot write output file");
            }
            ExitCode::SUCCESS
        }
        Cmd::Compose { left, slot, right, ambient, format, out } => {
            let a = match parse_element_expr(&left, ambient.into()) {
                Ok(e) => e,
                Err(e) => return usage_error(e),
            };
            let b = match parse_element_expr(&right, ambient.into()) {
                Ok(e) => e,
                Err(e) => return usage_error(e),
            };
            match a.compose(slot, &b) {
                Ok(r) => {
                    if emit(&element_text(&r, format), &out).is_err() {
                        return usage_error("cannot write output file");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Cmd::Normalize { tree, ambient, format, out } => match parse_element_expr(&tree, ambient.into()) {
            Ok(e) => {
                if emit(&element_text(&e, format), &out).is_err() {
                    return usage_error("cannot write output file");
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Cmd::Enumerate { leaves, max_inner, allow_corks, min_arity, format, out } => {
            let trees = enumerate_trees(leaves, max_inner, allow_corks, min_arity);
            let text = match format {
                FormatArg::Json => serde_json::to_string_pretty(&json!({
                    "leaves": leaves,
                    "max_inner": max_inner,
                    "allow_corks": allow_corks,
                    "min_arity": min_arity,
                    "count": trees.len(),
                    "trees": trees.iter().map(Tree::to_json).collect::<Vec<_>>(),
                }))
                .unwrap(),
                _ => trees.iter().map(Tree::to_text).collect::<Vec<_>>().join("\n"),
            };
            if emit(&text, &out).is_err() {
                return usage_error("cannot write output file");
            }
            ExitCode::SUCCESS
        }
        Cmd::Render { input, format, out } => {
            let text = if let Ok(t) = parse_ltree(&input) {
                match format {
                    FormatArg::Dot => ltree_dot(&t),
                    _ => t.to_text(),
                }
            } else if let Ok(t) = Tree::from_text(&input) {
                match format {
                    FormatArg::Dot => plain_tree_dot(&t),
                    _ => t.to_text(),
                }
            } else if let Ok(v) = serde_json::from_str::<serde_json::Value>(&input) {
                let arity = v
                    .as_array()
                    .and_then(|a| a.first())
                    .and_then(|item| item.get("tree"))
                    .and_then(|t| LTree::from_json(t).ok())
                    .map(|t| t.arity())
                    .unwrap_or(0);
                match Element::from_json(&v, arity) {
                    Ok(e) => match format {
                        FormatArg::Dot => element_dot(&e),
                        _ => e.to_string(),
                    },
                    Err(e) => return usage_error(e),
                }
            } else {
                return usage_error(format!("cannot parse `{input}` as a tree or element"));
            };
            if emit(&text, &out).is_err() {
                return usage_error("cannot write output file");
            }
            ExitCode::SUCCESS
        }
        Cmd::Census { size, format, out } => match monoid_census(size) {
            Ok(r) => {
                let text = match format {
                    FormatArg::Text => format!(
                        "carrier {}: {} operations, {} associative, {} unital, max units per operation {}",
                        r.carrier_size, r.total_ops, r.associative_count, r.unital_count, r.max_units_per_op
                    ),
                    _ => serde_json::to_string_pretty(&r).unwrap(),
                };
                if emit(&text, &out).is_err() {
                    return usage_error("cannot write output file");
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Cmd::Verify { suite } => match suite {
            Suite::D2 { max_n, random, seed, out } => {
                let unital = d2_sweep(max_n, random, seed, Ambient::Unital);
                let non_unital = d2_sweep(max_n, random, seed.wrapping_add(1), Ambient::NonUnital);
                let passed = unital.passed() && non_unital.passed();
                let report = json!({
                    "unital": unital,
                    "non_unital": non_unital,
                    "passed": passed,
                });
                finish_report(&report, passed, &out)
            }
            Suite::Derivation { count, max_n, seed, ambient, out } => {
                let r = graded_axiom_sweep(count, max_n, seed, ambient.into());
                let passed = r.passed();
                finish_report(&r, passed, &out)
            }
            Suite::Axioms { count, max_n, seed, max_arity, max_corks, end_size, out } => {
                run_axioms_suite(count, max_n, seed, max_arity, max_corks, end_size, &out)
            }
            Suite::Gordo { m, max_n, out } => match build_sdr(m, max_n) {
                Ok(r) => {
                    let passed = r.passed();
                    finish_report(&r, passed, &out)
                }
                Err(e) => usage_error(e),
            },
            Suite::Census { size, out } => run_census_suite(size, &out),
            Suite::Generation { max_arity, max_corks, out } => {
                let state = generation_closure(max_arity, max_corks);
                let passed = state.complete;
                finish_report(&state, passed, &out)
            }
            Suite::Pushout { max_arity, max_corks, out } => {
                let report = pushout_square_object_check(max_arity, max_corks);
                let passed = report.passed();
                finish_report(&report, passed, &out)
            }
        },
    }
}
