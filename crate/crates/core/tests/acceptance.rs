//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use stabgraph::classifier::{classify_full, is_koenig_egervary, PlusClass, StabilityReport};
use stabgraph::graph::Fixture;
use stabgraph::harness::{run_suite, suite, SuiteConfig, VerificationOutcome};
use stabgraph::solvers::{alpha, pendant_perfect_matching, Budget};
use stabgraph::EdgePair;

struct Line {
    pass: bool,
    text: String,
    details: Vec<String>,
}

fn report(g: &stabgraph::Graph) -> StabilityReport {
    classify_full(g, Budget::default()).expect("fixture within budget")
}

fn fixtures() -> Line {
    let k3e = report(&Fixture::K3PlusE.graph());
    let k4e = report(&Fixture::K4PlusE.graph());
    let k4m = report(&Fixture::K4MinusE.graph());
    let checks = [
        ("K3+e alpha1+", k3e.plus == PlusClass::Alpha1Plus),
        ("K4+e alpha1+", k4e.plus == PlusClass::Alpha1Plus),
        ("K4-e not alpha+", k4m.plus == PlusClass::NotPlus),
        ("K4+e alpha+_P3", k4e.p3_plus),
        ("K4+e alpha++", k4e.plus_plus),
        ("K3+e not alpha+_P3", !k3e.p3_plus),
    ];
    booleans("small fixtures", &checks)
}

fn g1_g2() -> Line {
    let (g1, g2) = (Fixture::G1.graph(), Fixture::G2.graph());
    let r1 = report(&g1);
    let replay = r1
        .witnesses
        .get(&stabgraph::classifier::Flag::PlusPlus)
        .map(|w| {
            let e = w.edges();
            let h = match e[..] {
                [a, b] => g1.add_edges(&EdgePair::new(a, b).expect("distinct")),
                [a] => g1.with_edge(a),
                _ => unreachable!(),
            };
            alpha(&h.expect("non-edges")) < r1.alpha
        })
        .unwrap_or(false);
    let checks = [
        ("G1 pendant perfect matching", pendant_perfect_matching(&g1).is_some()),
        ("G1 has C4", g1.has_c4()),
        ("G1 K-E", is_koenig_egervary(&g1)),
        ("G1 not alpha++", !r1.plus_plus),
        ("G1 witness replay drops alpha", replay),
        ("G2 K-E", is_koenig_egervary(&g2)),
        ("G2 pendant perfect matching", pendant_perfect_matching(&g2).is_some()),
        ("G2 C4-free", !g2.has_c4()),
        ("G2 alpha++", report(&g2).plus_plus),
    ];
    booleans("G1/G2", &checks)
}

fn booleans(name: &str, checks: &[(&str, bool)]) -> Line {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let text = if failed.is_empty() {
        format!("{name}: {} exact checks", checks.len())
    } else {
        format!("{name}: failed {}", failed.join(", "))
    };
    Line { pass: failed.is_empty(), text, details: Vec::new() }
}

fn run(id: &str, nmax: Option<usize>) -> VerificationOutcome {
    let cfg = SuiteConfig { nmax, ..SuiteConfig::default() };
    run_suite(suite(id).expect("known suite"), &cfg).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn describe(o: &VerificationOutcome) -> String {
    let mut s = format!("{} checked {}, {} violations", o.theorem_id, o.checked, o.violations.len());
    if o.excluded > 0 {
        s += &format!(", {} set aside", o.excluded);
    }
    s + &format!(" [{}]", o.population)
}

fn suites(runs: &[(&str, Option<usize>)]) -> Line {
    let outcomes: Vec<VerificationOutcome> = runs.iter().map(|&(id, n)| run(id, n)).collect();
    let pass = outcomes.iter().all(|o| o.holds() && o.checked > 0);
    let mut details = Vec::new();
    for o in &outcomes {
        if let Some(reason) = o.exclusion.as_ref().filter(|_| o.excluded > 0) {
            details.push(format!(
                "{}: {} graphs set aside by a documented exception ({reason})",
                o.theorem_id, o.excluded
            ));
        }
        for v in o.violations.iter().take(5) {
            details.push(format!("{}: violation {} {}", o.theorem_id, v.graph6, v.detail));
        }
    }
    let text = if outcomes.len() == 1 {
        describe(&outcomes[0])
    } else {
        details.splice(0..0, outcomes.iter().map(describe));
        let total: u64 = outcomes.iter().map(|o| o.checked).sum();
        let bad: usize = outcomes.iter().map(|o| o.violations.len()).sum();
        format!("{} suites, {total} graph checks, {bad} violations", outcomes.len())
    };
    Line { pass, text, details }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Line) -> (Line, Duration) {
    let start = Instant::now();
    let mut line = f();
    let took = start.elapsed();
    if let Some(limit) = limit.filter(|&l| took > l) {
        line.pass = false;
        line.details.push(format!("took {took:.2?}, limit {limit:?}"));
    }
    (line, took)
}

type Criterion = (Option<Duration>, Box<dyn FnOnce() -> Line>);

fn main() -> ExitCode {
    let second = Some(Duration::from_secs(1));
    let criteria: Vec<Criterion> = vec![
        (second, Box::new(fixtures)),
        (second, Box::new(g1_g2)),
        (None, Box::new(|| suites(&[("core_size", Some(7))]))),
        (None, Box::new(|| suites(&[("ke_pendant_c4", Some(6))]))),
        (None, Box::new(|| suites(&[("cover_p3", Some(6)), ("cover_plus_plus", Some(6))]))),
        (Some(Duration::from_secs(10)), Box::new(|| suites(&[("cycle_parity", None)]))),
        (None, Box::new(|| suites(&[("trees", Some(9))]))),
        (None, Box::new(|| suites(&[("girth6_panel", Some(8))]))),
        (None, Box::new(|| suites(&[("matching", Some(7))]))),
        (
            None,
            Box::new(|| {
                suites(&[
                    ("ke_matching_position", Some(6)),
                    ("matching_additivity", Some(6)),
                    ("ke_split", Some(6)),
                    ("plus_plus_inheritance", Some(6)),
                    ("hamiltonian_order6", None),
                    ("triple_criterion", Some(7)),
                    ("ke_pendant_necessity", Some(7)),
                    ("pendant_matching_p3", Some(7)),
                    ("zero_core_p3", Some(7)),
                    ("p3_implies_plus", Some(7)),
                    ("alpha_two", Some(7)),
                    ("plus_plus_implies_p3", Some(7)),
                    ("avoidable_pairs", Some(7)),
                    ("six_assertions", Some(6)),
                    ("pendant_c4", Some(7)),
                    ("bipartite", Some(7)),
                    ("g0_pairs", Some(7)),
                    ("g0_component", Some(7)),
                    ("ke_decomposition", Some(6)),
                    ("report", Some(6)),
                ])
            }),
        ),
    ];
    let mut failures = 0;
    for (i, (limit, f)) in criteria.into_iter().enumerate() {
        let (line, took) = timed(limit, f);
        let verdict = if line.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {} ({took:.2?})", i + 1, line.text);
        for d in &line.details {
            println!("    {d}");
        }
        failures += usize::from(!line.pass);
    }
    println!("{} of 10 criteria pass", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
