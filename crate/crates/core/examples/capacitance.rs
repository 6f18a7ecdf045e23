//! Closed-form capacitance of convex, concave and flat faces, checked
//! against adaptive quadrature.
//!
//!     cargo run --example capacitance

use curvedcomb::model::{ArcProfile, VACUUM_PERMITTIVITY};
use curvedcomb::oracles::{quad_capacitance, QuadratureSpec};
use curvedcomb::Face;

fn main() -> curvedcomb::Result<()> {
    let arc = ArcProfile::new(100e-6, 0.2, 2e-6)?;
    let gap = 2e-6;
    println!(
        "R = 100 µm, φ = 0.2 rad, h = 2 µm, d = 2 µm (sagitta {:.4e} m)",
        arc.sagitta()
    );
    println!(
        "{:<8} {:>24} {:>24} {:>10}",
        "face", "closed form [F]", "quadrature [F]", "rel err"
    );
    for face in [
        Face::Convex(arc),
        Face::Concave(arc),
        Face::Flat(arc.flattened()),
    ] {
        let c = face.capacitance(gap, VACUUM_PERMITTIVITY)?;
        let q = quad_capacitance(&face, gap, VACUUM_PERMITTIVITY, &QuadratureSpec::default())?;
        println!(
            "{:<8} {:>24.16e} {:>24.16e} {:>10.2e}",
            format!("{:?}", face.kind()),
            c,
            q.value,
            ((c - q.value) / q.value).abs()
        );
    }

    // Slope in the gap, which sets the sensitivity.
    for face in [Face::Convex(arc), Face::Concave(arc)] {
        println!(
            "{:?}: dC/dd = {:.6e} F/m",
            face.kind(),
            face.dcap_dgap(gap, VACUUM_PERMITTIVITY)?
        );
    }
    Ok(())
}
