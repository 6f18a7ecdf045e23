//! Ranks the seven electrode variants by sensitivity at one geometry, in
//! both feedback modes.
//!
//!     cargo run --example compare_variants

use curvedcomb::model::VACUUM_PERMITTIVITY;
use curvedcomb::model::{
    ArcProfile, DriveModel, ElectrodeConfig, FeedbackMode, MechanicalModel, Variant,
};
use curvedcomb::transduction::{net_sensitivity, Transducer};

fn main() -> curvedcomb::Result<()> {
    let arc = ArcProfile::new(100e-6, 0.3, 2e-6)?;
    let mech = MechanicalModel::new(2.6e-10, 1.0, 21)?;
    for mode in [FeedbackMode::MatchedSum, FeedbackMode::Nominal] {
        let drive = DriveModel::new(1.0, mode, VACUUM_PERMITTIVITY)?;
        let mut ranked = Vec::new();
        for v in Variant::ALL {
            let t = Transducer::new(ElectrodeConfig::new(v, arc), 2e-6, mech, drive)?;
            let s = t.sensitivity(0.0)?;
            let offset = t.gain(0.0)?.gain;
            ranked.push((v, s, offset));
        }
        ranked.sort_by(|a, b| b.1.volts_per_g.total_cmp(&a.1.volts_per_g));
        println!("{mode:?}");
        for (i, (v, s, offset)) in ranked.iter().enumerate() {
            println!(
                "  {}. {:<16} S = {:.6} mV/g  S_net = {:.4} mV/g  G(0) = {:+.4e}",
                i + 1,
                v,
                s.mv_per_g(),
                net_sensitivity(*s, &mech).mv_per_g(),
                offset
            );
        }
    }
    Ok(())
}
