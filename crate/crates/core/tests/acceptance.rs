//! Acceptance gate: one line per criterion, each within its time budget.

use scatterkit::verify::{Suite, SuiteReport, DEFAULT_SEED};
use scatterkit::Limits;

const TITLES: [&str; 8] = [
    "ordinal arithmetic laws",
    "classification of ordinal spaces",
    "Cantor-Bendixson rank consistency",
    "graph realisation",
    "full transitivity",
    "flows on linear orders",
    "group isomorphism oracle",
    "normal subgroup candidates",
];

fn line(report: &SuiteReport) -> String {
    let s = report.suite;
    let ok = report.passed() && report.within_budget();
    format!(
        "criterion {} [{}] {}: {} ({} checks, {} failed, {:.2?} of {:?})",
        s.criterion(),
        s.name(),
        TITLES[s.criterion() - 1],
        if ok { "PASS" } else { "FAIL" },
        report.checks,
        report.failed,
        report.elapsed,
        s.budget(),
    )
}

fn run(suite: Suite) {
    let report = suite
        .run(DEFAULT_SEED, &Limits::default())
        .unwrap_or_else(|e| panic!("criterion {} errored: {e}", suite.criterion()));
    println!("{}", line(&report));
    for note in &report.notes {
        println!("    {note}");
    }
    for f in &report.failures {
        println!("    failure: {f}");
    }
    assert!(report.passed(), "criterion {} failed", suite.criterion());
    assert!(
        report.within_budget(),
        "criterion {} took {:?}, budget {:?}",
        suite.criterion(),
        report.elapsed,
        suite.budget()
    );
}

#[test]
fn criterion_1_arithmetic() {
    run(Suite::Arith);
}

#[test]
fn criterion_2_classifier() {
    run(Suite::Classifier);
}

#[test]
fn criterion_3_cb_ranks() {
    run(Suite::Cb);
}

#[test]
fn criterion_4_graph_realisation() {
    run(Suite::Prop24);
}

#[test]
fn criterion_5_full_transitivity() {
    run(Suite::Transitivity);
}

#[test]
fn criterion_6_flows() {
    run(Suite::Flows);
}

#[test]
fn criterion_7_oracle() {
    run(Suite::Oracle);
}

#[test]
fn criterion_8_normal_subgroups() {
    run(Suite::Remark19);
}
