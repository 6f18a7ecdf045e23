use curvedcomb::cli::output::write_sweep_csv;
use curvedcomb::model::{ArcProfile, DriveModel, MechanicalModel, Variant};
use curvedcomb::sweep::{
    attach_fd_sensitivity, gain_curve, linspace, maximize_sensitivity, sensitivity_sweep, ArcMode,
    GridRange, SharedParams, SweepPlan,
};

fn shared(mode: ArcMode) -> SharedParams {
    SharedParams {
        base_profile: ArcProfile::new(100e-6, 0.2, 2e-6).unwrap(),
        arc_mode: mode,
        gap_m: 2e-6,
        mech: MechanicalModel::new(2.6e-10, 1.0, 21).unwrap(),
        drive: DriveModel::default(),
    }
}

fn plan(mode: ArcMode) -> SweepPlan {
    SweepPlan {
        variants: Variant::ALL.to_vec(),
        arc_range_m: GridRange::new(5e-6, 60e-6, 20).unwrap(),
        accel_range_g: GridRange::new(-10.0, 10.0, 21).unwrap(),
        shared: shared(mode),
    }
}

fn s_at(variant: Variant, arcs: &[f64]) -> Vec<f64> {
    let sh = shared(ArcMode::VaryPhiFixedR);
    arcs.iter()
        .map(|&l| sh.sensitivity_at_arc(variant, l).unwrap().volts_per_g)
        .collect()
}

#[test]
fn repeated_sweeps_are_bit_identical() {
    let p = plan(ArcMode::VaryPhiFixedR);
    let csv = |_| {
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &sensitivity_sweep(&p).unwrap()).unwrap();
        buf
    };
    let first = csv(0);
    for i in 1..5 {
        assert_eq!(csv(i), first);
    }
}

#[test]
fn sweep_rows_agree_with_finite_differences() {
    let p = plan(ArcMode::VaryRFixedArc);
    let mut result = sensitivity_sweep(&p).unwrap();
    attach_fd_sensitivity(&p, &mut result).unwrap();
    for row in &result.rows {
        let fd = row.fd_s_mv_per_g.unwrap();
        assert!((row.s_mv_per_g / fd - 1.0).abs() < 1e-6, "{row:?}");
    }
}

#[test]
fn fixed_angle_mode_keeps_phi() {
    let result = sensitivity_sweep(&plan(ArcMode::VaryRFixedArc)).unwrap();
    assert!(result.metadata.skipped.is_empty());
    for row in &result.rows {
        assert_eq!(row.phi_rad, 0.2);
        assert!((row.radius_m * row.phi_rad / row.arc_length_m - 1.0).abs() < 1e-15);
    }
}

// At rest the per-comb sensitivity is proportional to −∂ln C/∂d, a weighted
// mean of 1/gap over the face. Convex faces only widen the gap away from the
// apex and concave faces only narrow it, so for any arc length
// S(biconvex) < S(planar) < S(biconcave), and the separation grows with arc
// length.
#[test]
fn convex_faces_lose_and_concave_faces_gain_sensitivity() {
    let arcs = linspace(5e-6, 39e-6, 12);
    let convex = s_at(Variant::Biconvex, &arcs);
    let plano_convex = s_at(Variant::PlanoConvex, &arcs);
    let planar = s_at(Variant::Planar, &arcs);
    let concave = s_at(Variant::Biconcave, &arcs);
    let plano_concave = s_at(Variant::PlanoConcave, &arcs);
    for i in 0..arcs.len() {
        assert!(convex[i] < plano_convex[i] && plano_convex[i] < planar[i]);
        assert!(planar[i] < plano_concave[i] && plano_concave[i] < concave[i]);
    }
    assert!(convex.windows(2).all(|w| w[1] < w[0]));
    assert!(plano_convex.windows(2).all(|w| w[1] < w[0]));
    assert!(concave.windows(2).all(|w| w[1] > w[0]));
    assert!(plano_concave.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn gain_curve_slopes_follow_the_same_order() {
    let result = gain_curve(&plan(ArcMode::VaryPhiFixedR)).unwrap();
    let slope = |v| result.fit_for(v).unwrap().slope_mv_per_g;
    assert!(slope(Variant::Biconvex) < slope(Variant::Planar));
    assert!(slope(Variant::Planar) < slope(Variant::Biconcave));
    let cc = slope(Variant::ConcavoConvex);
    assert!((cc / slope(Variant::ConvexoConcave) - 1.0).abs() < 1e-12);
}

#[test]
fn convex_optimum_sits_on_the_short_end() {
    let sh = shared(ArcMode::VaryPhiFixedR);
    for v in [Variant::Biconvex, Variant::PlanoConvex] {
        let opt = maximize_sensitivity(v, (5e-6, 60e-6), &sh).unwrap();
        assert_eq!(opt.arc_length_m, 5e-6);
    }
}

#[test]
fn concave_optimum_approaches_edge_contact() {
    let sh = shared(ArcMode::VaryPhiFixedR);
    let opt = maximize_sensitivity(Variant::Biconcave, (5e-6, 60e-6), &sh).unwrap();
    // contact where 2R·sin²(L/4R) = d
    let contact = 4.0 * 100e-6 * ((2e-6f64 / 200e-6).sqrt()).asin();
    assert!(opt.arc_length_m < contact);
    assert!(
        contact - opt.arc_length_m < 1e-9,
        "{}",
        contact - opt.arc_length_m
    );
}

#[test]
fn valid_concave_interval_peaks_at_its_upper_bound() {
    let sh = shared(ArcMode::VaryPhiFixedR);
    let opt = maximize_sensitivity(Variant::Biconcave, (5e-6, 20e-6), &sh).unwrap();
    assert_eq!(opt.arc_length_m, 20e-6);
}
