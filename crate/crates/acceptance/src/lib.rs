//! Runner for the acceptance criteria in `tests/acceptance.rs`.
//!
//! Each criterion prints one verdict line whether it passes or fails; the
//! process exits non-zero if any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};

pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(passed: bool, detail: String) -> Self {
        Self { passed, detail }
    }
}

pub type Criterion = (&'static str, fn() -> Verdict);

/// Relative error; NaN counts as infinitely wrong.
pub fn rel(value: f64, reference: f64) -> f64 {
    let d = (value - reference).abs();
    let r = if reference == 0.0 {
        d
    } else {
        d / reference.abs()
    };
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}

/// Runs every criterion, printing `criterion N name: PASS|FAIL | detail`.
/// Returns the number of failures.
pub fn run(criteria: &[Criterion]) -> usize {
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::new(false, format!("panicked: {msg}"))
        });
        if !v.passed {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} | {}",
            i + 1,
            if v.passed { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    failed
}
