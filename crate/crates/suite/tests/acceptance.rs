//! Acceptance criteria at their full bounds. Each test prints one
//! PASS/FAIL line (written past the harness capture) and then asserts.

use std::io::Write;

use schurkit_suite::{run_criterion, CriterionReport, MAX_WEIGHT};

fn run(id: u8) -> CriterionReport {
    let report = run_criterion(id, MAX_WEIGHT).expect("known criterion");
    let mut out = std::io::stdout().lock();
    writeln!(out, "{report}").ok();
    out.flush().ok();
    report
}

#[test]
fn criterion_01_lr_oracle() {
    let r = run(1);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_02_hopf_axioms() {
    let r = run(2);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_03_cases() {
    let r = run(3);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_04_laplace() {
    let r = run(4);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_05_kostka() {
    let r = run(5);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_06_series() {
    let r = run(6);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_07_cohomology() {
    let r = run(7);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_08_branching() {
    let r = run(8);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_09_deformed_counit() {
    let r = run(9);
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_10_cliffordization() {
    let r = run(10);
    assert!(r.passed, "{r}");
}
