//! Exhaustive property suites over bounded enumerations.
//!
//! Each suite compares the library against an independent oracle (pointwise
//! evaluation, existential search, brute force over a wider enumeration) and
//! reports every disagreement. [`run`] dispatches on a suite id; `all` runs
//! every suite in order.

use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::equations::EnumBounds;

mod algebra;
mod congruences;
mod oracle;
mod ordering;
mod solving;
mod syntax;

/// Failures beyond this many are counted but not described.
const MAX_LISTED: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`; known suites: {known}", known = suite_ids().join(", "))]
pub struct UnknownSuite(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Main enumeration.
    pub bounds: EnumBounds,
    /// Enumeration for cubic and pairwise-with-search checks.
    pub small: EnumBounds,
    /// Brute-force search space.
    pub wide: EnumBounds,
    /// Offsets and powers for the commutation identities.
    pub max_i: u64,
    /// Sampled associativity triples.
    pub samples: usize,
    /// Fuzzed parser inputs.
    pub fuzz: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            bounds: EnumBounds::default(),
            small: EnumBounds::new(2, 3),
            wide: EnumBounds::new(4, 6),
            max_i: 6,
            samples: 100_000,
            fuzz: 1_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub id: &'static str,
    pub title: &'static str,
    pub cases: u64,
    pub failed: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl Report {
    fn new(id: &'static str, title: &'static str) -> Self {
        Report {
            id,
            title,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// Records one case; `detail` is only built on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(detail());
            }
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({}): {} cases, {} failed, {} ms",
            self.id, self.title, self.cases, self.failed, self.elapsed_ms
        )?;
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        for x in &self.failures {
            write!(f, "\n    failure: {x}")?;
        }
        Ok(())
    }
}

type Suite = fn(&VerifyConfig, &mut Report);

const SUITES: [(&str, &str, Suite); 12] = [
    (
        "inverse-monoid",
        "associativity and inverse axioms",
        algebra::inverse_monoid,
    ),
    (
        "canonical-form",
        "canonical factorization round trips",
        algebra::canonical_form,
    ),
    (
        "bicyclic",
        "product formula in the bicyclic monoid",
        algebra::bicyclic,
    ),
    (
        "commutation",
        "moving idempotents past generator powers",
        ordering::commutation,
    ),
    (
        "orders",
        "conjugation order and natural order",
        ordering::orders,
    ),
    (
        "chains",
        "conjugation chains, coset closure, sandwiches",
        ordering::chains,
    ),
    (
        "f-property",
        "one-sided equation solvers",
        solving::f_property,
    ),
    (
        "group-congruence",
        "minimum group congruence onto the integers",
        congruences::group_congruence,
    ),
    (
        "simplicity",
        "two-sided witnesses u·g·v = d",
        congruences::simplicity,
    ),
    (
        "compact-model",
        "shrinking neighbourhoods of the zero",
        solving::compact_model,
    ),
    (
        "parser",
        "word syntax round trips and fuzzing",
        syntax::parser,
    ),
    ("green", "Green's relations", congruences::green),
];

/// Every id accepted by [`run`], including `all`.
pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).chain(["all"]).collect()
}

/// Runs one suite, or every suite for `all`.
pub fn run(id: &str, config: &VerifyConfig) -> Result<Vec<Report>, UnknownSuite> {
    let selected: Vec<_> = SUITES.iter().filter(|s| id == "all" || s.0 == id).collect();
    if selected.is_empty() {
        return Err(UnknownSuite(id.to_string()));
    }
    Ok(selected
        .into_iter()
        .map(|&(id, title, suite)| {
            let start = Instant::now();
            let mut report = Report::new(id, title);
            suite(config, &mut report);
            report.elapsed_ms = start.elapsed().as_millis();
            report
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> VerifyConfig {
        VerifyConfig {
            bounds: EnumBounds::new(1, 2),
            small: EnumBounds::new(1, 1),
            wide: EnumBounds::new(3, 3),
            max_i: 2,
            samples: 200,
            fuzz: 50,
            seed: 1,
        }
    }

    #[test]
    fn every_suite_passes_on_tiny_bounds() {
        for r in run("all", &tiny()).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn unknown_suite_is_reported() {
        let err = run("nope", &tiny()).unwrap_err();
        assert!(err.to_string().contains("commutation"));
    }

    #[test]
    fn failures_are_capped() {
        let mut r = Report::new("x", "y");
        for i in 0..50 {
            r.check(i % 2 == 0, || format!("case {i}"));
        }
        assert_eq!((r.cases, r.failed, r.failures.len()), (50, 25, MAX_LISTED));
        assert!(!r.passed());
        assert!(r.to_string().starts_with("FAIL x"));
    }
}
