//! Sensitivity against arc length under both arc conventions, optionally
//! drawn as an SVG chart.
//!
//!     cargo run --example sensitivity_sweep -- sweep.svg

use curvedcomb::cli::output::{render_svg, Chart, Series};
use curvedcomb::model::{ArcProfile, DriveModel, MechanicalModel, Variant};
use curvedcomb::sweep::{sensitivity_sweep, ArcMode, GridRange, SharedParams, SweepPlan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let svg_path = std::env::args().nth(1);
    for mode in [ArcMode::VaryPhiFixedR, ArcMode::VaryRFixedArc] {
        let plan = SweepPlan {
            variants: vec![Variant::Biconvex, Variant::Planar, Variant::Biconcave],
            arc_range_m: GridRange::new(5e-6, 60e-6, 12)?,
            accel_range_g: GridRange::new(-1.0, 1.0, 3)?,
            shared: SharedParams {
                base_profile: ArcProfile::new(100e-6, 0.2, 2e-6)?,
                arc_mode: mode,
                gap_m: 2e-6,
                mech: MechanicalModel::new(2.6e-10, 1.0, 21)?,
                drive: DriveModel::default(),
            },
        };
        let result = sensitivity_sweep(&plan)?;
        println!("{mode:?}");
        for row in &result.rows {
            println!(
                "  {:<10} L = {:5.1} µm  R = {:7.1} µm  φ = {:.3}  S = {:.5} mV/g  S_net = {:.4} mV/g",
                row.variant,
                row.arc_length_m * 1e6,
                row.radius_m * 1e6,
                row.phi_rad,
                row.s_mv_per_g,
                row.s_net_mv_per_g
            );
        }
        for skip in &result.metadata.skipped {
            println!(
                "  skipped {} at {:.1} µm",
                skip.variant,
                skip.arc_length_m * 1e6
            );
        }

        if let (Some(path), ArcMode::VaryPhiFixedR) = (&svg_path, mode) {
            let series = plan
                .variants
                .iter()
                .map(|&v| Series {
                    name: v.to_string(),
                    points: result
                        .rows_for(v)
                        .map(|r| (r.arc_length_m * 1e6, r.s_mv_per_g))
                        .collect(),
                })
                .collect();
            let chart = Chart {
                title: "Sensitivity vs arc length (R = 100 µm)",
                x_label: "arc length [µm]",
                y_label: "S [mV/g]",
                series,
            };
            std::fs::write(path, render_svg(&chart))?;
            println!("wrote {path}");
        }
    }
    Ok(())
}
