//! Loads a JSON run configuration the way the command line does and shows
//! the resolved SI parameters.
//!
//!     cargo run --example cli_config -- configs/default.json

use std::path::PathBuf;

use curvedcomb::cli::config::RunConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path: PathBuf = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/configs/default.json").into());
    let cfg = RunConfig::load(&path)?;
    let plan = cfg.plan()?;
    let p = plan.shared.base_profile;
    println!(
        "R = {:e} m, φ = {} rad, arc = {:e} m, h = {:e} m",
        p.radius_m(),
        p.angular_extent_rad(),
        p.arc_length(),
        p.thickness_m()
    );
    println!(
        "gap = {:e} m, m = {:e} kg, k = {} N/m, N = {}",
        plan.shared.gap_m,
        plan.shared.mech.mass_kg(),
        plan.shared.mech.spring_n_per_m(),
        plan.shared.mech.comb_count()
    );
    println!("arc grid {:?}", plan.arc_range_m);
    println!(
        "accel grid {:?} g, largest displacement {:e} m",
        plan.accel_range_g,
        plan.max_displacement_m()
    );

    // Unknown keys are rejected with the path of the field.
    let bad = RunConfig::from_json_str(
        r#"{"sweep": {"arc_um": {"min": 5, "max": 60, "n": 20}}}"#,
        "inline.json".as_ref(),
    );
    println!("{}", bad.unwrap_err());
    Ok(())
}
