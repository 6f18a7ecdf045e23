//! Runs the oracle suite used by `curvedcomb validate` on a custom
//! geometry and prints the worst case of each suite.
//!
//!     cargo run --example validate_oracles

use curvedcomb::cli::validate::run_suite;
use curvedcomb::model::{ArcProfile, DriveModel, MechanicalModel, Variant};
use curvedcomb::sweep::{ArcMode, SharedParams};

fn main() -> curvedcomb::Result<()> {
    let shared = SharedParams {
        base_profile: ArcProfile::new(250e-6, 0.5, 2e-6)?,
        arc_mode: ArcMode::VaryPhiFixedR,
        gap_m: 8e-6,
        mech: MechanicalModel::new(2.6e-10, 1.0, 21)?,
        drive: DriveModel::default(),
    };
    let report = run_suite(&shared, &Variant::ALL, (-50.0, 50.0), 0.0)?;
    for s in &report.suites {
        println!(
            "{:<24} {:>4} cases  max rel err {:.2e} (tol {:.0e})  {}",
            s.name,
            s.cases,
            s.max_rel_error,
            s.tolerance,
            if s.passed { "ok" } else { "FAILED" }
        );
        println!("    worst: {}", s.worst_case);
    }
    std::process::exit(if report.passed { 0 } else { 3 });
}
