//! Arc length maximising sensitivity for each variant, checked against a
//! dense grid scan.
//!
//!     cargo run --example optimize_arc

use curvedcomb::model::{ArcProfile, DriveModel, MechanicalModel, Variant};
use curvedcomb::sweep::{linspace, maximize_sensitivity, ArcMode, SharedParams};

fn main() -> curvedcomb::Result<()> {
    let shared = SharedParams {
        base_profile: ArcProfile::new(100e-6, 0.2, 2e-6)?,
        arc_mode: ArcMode::VaryPhiFixedR,
        gap_m: 2e-6,
        mech: MechanicalModel::new(2.6e-10, 1.0, 21)?,
        drive: DriveModel::default(),
    };
    let bounds = (5e-6, 60e-6);
    for v in Variant::ALL {
        let opt = maximize_sensitivity(v, bounds, &shared)?;
        let grid_best = linspace(bounds.0, bounds.1, 200)
            .into_iter()
            .filter_map(|l| {
                shared
                    .sensitivity_at_arc(v, l)
                    .ok()
                    .map(|s| (l, s.mv_per_g()))
            })
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        println!(
            "{:<16} L* = {:9.5} µm  S* = {:.6e} mV/g  ({} evaluations; grid best {:.3} µm, {:.6e} mV/g)",
            v,
            opt.arc_length_m * 1e6,
            opt.sensitivity.mv_per_g(),
            opt.evaluations,
            grid_best.0 * 1e6,
            grid_best.1
        );
    }
    Ok(())
}
