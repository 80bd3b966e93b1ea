//! Suite-level verdicts over a list of map reports.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::{MapReport, Outcome};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem2Suite {
    pub applicable: Vec<String>,
    pub violations: Vec<String>,
    pub verdict: Outcome,
}

/// The equivalence of (a), (b), (c) across all maps satisfying the
/// hypotheses. A violation means a bug or a counterexample; it is
/// reported as a failure either way.
pub fn theorem2_harness(reports: &[MapReport]) -> Theorem2Suite {
    let applicable: Vec<String> = reports.iter().filter(|r| r.theorem2.applicable).map(|r| r.name.clone()).collect();
    let violations: Vec<String> = reports
        .iter()
        .filter(|r| r.theorem2.equivalent.is_fail())
        .map(|r| r.name.clone())
        .collect();
    let verdict = if applicable.is_empty() {
        Outcome::skipped(format!("{}", crate::Error::NoApplicableMaps))
    } else if violations.is_empty() {
        Outcome::pass(format!("{} applicable maps, a = b = c on each", applicable.len()))
    } else {
        Outcome::fail(format!("equivalence violated on: {}", violations.join(", ")))
    };
    Theorem2Suite {
        applicable,
        violations,
        verdict,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteTotals {
    pub maps: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cap_errors: usize,
}

pub fn suite_totals(reports: &[MapReport]) -> SuiteTotals {
    let mut t = SuiteTotals {
        maps: reports.len(),
        ..SuiteTotals::default()
    };
    for r in reports {
        for c in &r.checks {
            match c.outcome {
                Outcome::Pass { .. } => t.passed += 1,
                Outcome::Fail { .. } => t.failed += 1,
                Outcome::Skipped { .. } => t.skipped += 1,
            }
        }
        t.cap_errors += r.cap_errors().count();
    }
    t
}
