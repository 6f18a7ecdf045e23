//! Output voltage against acceleration for every variant, with the
//! least-squares slope compared to the exact sensitivity at rest.
//!
//!     cargo run --example gain_curve > gain.csv

use curvedcomb::cli::output::write_gain_csv;
use curvedcomb::model::{ArcProfile, DriveModel, MechanicalModel, Variant};
use curvedcomb::sweep::{gain_curve, ArcMode, GridRange, SharedParams, SweepPlan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let plan = SweepPlan {
        variants: Variant::ALL.to_vec(),
        arc_range_m: GridRange::new(5e-6, 60e-6, 2)?,
        accel_range_g: GridRange::new(-20.0, 20.0, 41)?,
        shared: SharedParams {
            base_profile: ArcProfile::new(100e-6, 0.3, 2e-6)?,
            arc_mode: ArcMode::VaryPhiFixedR,
            gap_m: 2e-6,
            mech: MechanicalModel::new(2.6e-10, 1.0, 21)?,
            drive: DriveModel::default(),
        },
    };
    let result = gain_curve(&plan)?;
    write_gain_csv(std::io::stdout().lock(), &result)?;

    for fit in &result.metadata.fits {
        eprintln!(
            "{:<16} slope {:.6} mV/g, S(0) {:.6} mV/g, offset {:+.3e} V",
            fit.variant, fit.slope_mv_per_g, fit.sensitivity_at_rest_mv_per_g, fit.intercept_v
        );
    }
    Ok(())
}
