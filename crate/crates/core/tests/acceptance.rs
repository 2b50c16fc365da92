//! The acceptance suite: one test per criterion at the default bounds, each
//! printing a single PASS/FAIL line (run with `--nocapture` to see them).

use ison::verify::{run, VerifyConfig};

fn criterion(number: u32, suite: &str) {
    let reports = run(suite, &VerifyConfig::default()).expect("known suite");
    for r in &reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {number:>2} {verdict} {suite}: {} cases, {} failed, {} ms",
            r.cases, r.failed, r.elapsed_ms
        );
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn c01_inverse_monoid_axioms() {
    criterion(1, "inverse-monoid");
}

#[test]
fn c02_canonical_representation() {
    criterion(2, "canonical-form");
}

#[test]
fn c03_bicyclic_product_formula() {
    criterion(3, "bicyclic");
}

#[test]
fn c04_commutation_identities() {
    criterion(4, "commutation");
}

#[test]
fn c05_orders() {
    criterion(5, "orders");
}

#[test]
fn c06_chains_cosets_sandwiches() {
    criterion(6, "chains");
}

#[test]
fn c07_equation_solvers() {
    criterion(7, "f-property");
}

#[test]
fn c08_group_congruence() {
    criterion(8, "group-congruence");
}

#[test]
fn c09_simplicity_witnesses() {
    criterion(9, "simplicity");
}

#[test]
fn c10_compact_zero_neighbourhoods() {
    criterion(10, "compact-model");
}

#[test]
fn c11_parser() {
    criterion(11, "parser");
}

#[test]
fn green_relations() {
    criterion(0, "green");
}
