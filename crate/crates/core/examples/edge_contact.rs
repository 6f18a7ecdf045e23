//! Behaviour of a concave face as the gap closes onto its sagitta.
//!
//!     cargo run --example edge_contact

use curvedcomb::cap_concave;
use curvedcomb::model::{
    validate_geometry, ArcProfile, ElectrodeConfig, GapState, Variant, VACUUM_PERMITTIVITY,
};

fn main() -> curvedcomb::Result<()> {
    let arc = ArcProfile::new(100e-6, 0.4, 2e-6)?;
    let sag = arc.sagitta();
    println!("sagitta = {sag:.6e} m");

    for margin in [1e-1, 1e-3, 1e-6, 1e-9] {
        let gap = sag * (1.0 + margin);
        println!(
            "gap = sag·(1 + {margin:e}): C = {:.6e} F",
            cap_concave(&arc, gap, VACUUM_PERMITTIVITY)?
        );
    }
    match cap_concave(&arc, sag, VACUUM_PERMITTIVITY) {
        Ok(c) => println!("unexpected value at contact: {c:e}"),
        Err(e) => println!("at contact: {e}"),
    }

    // The same check for a whole electrode pair under displacement.
    let config = ElectrodeConfig::new(Variant::PlanoConcave, arc);
    let gap = 1.2 * sag;
    for delta in [0.0, 0.1 * sag, 0.25 * sag] {
        let report = validate_geometry(&config, GapState::new(gap, delta));
        let side1 = &report.sides[0];
        println!(
            "δ = {delta:.3e} m: edge gap {:.3e} m, tanh⁻¹ argument {:.6}, valid = {}",
            side1.min_gap_m,
            side1.atanh_argument.unwrap_or(f64::NAN),
            report.is_valid()
        );
        for v in &report.violations {
            println!("  {v}");
        }
    }
    Ok(())
}
