//! Parameter sweeps over acceleration and arc length, and bounded
//! maximisation of sensitivity over arc length.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    validate_geometry, ArcProfile, DriveModel, ElectrodeConfig, GapState, MechanicalModel, Variant,
    STANDARD_GRAVITY,
};
use crate::oracles::{fd_sensitivity, FdScheme};
use crate::transduction::{net_sensitivity, Sensitivity, Transducer};

/// How an arc-length grid maps onto arc geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcMode {
    /// Keep the base radius, set `φ = L/R`.
    #[default]
    VaryPhiFixedR,
    /// Keep the base angular extent, set `R = L/φ`.
    VaryRFixedArc,
}

impl std::str::FromStr for ArcMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "vary-phi-fixed-r" | "phi" => Ok(ArcMode::VaryPhiFixedR),
            "vary-r-fixed-arc" | "r" => Ok(ArcMode::VaryRFixedArc),
            other => Err(format!("unknown arc mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRange {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridRange {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let range = Self { min, max, points };
        range.check("range")?;
        Ok(range)
    }

    fn check(&self, what: &str) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::InvalidPlan(format!(
                "{what}: need finite min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidPlan(format!(
                "{what}: need at least 2 points"
            )));
        }
        Ok(())
    }

    /// Evenly spaced values with both ends hit exactly.
    pub fn values(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.points)
    }

    pub fn max_abs(&self) -> f64 {
        self.min.abs().max(self.max.abs())
    }
}

/// `n` evenly spaced values from `lo` to `hi`, both hit exactly.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// Everything shared by the variants being compared.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharedParams {
    /// Geometry for fixed-geometry evaluations; supplies the radius or the
    /// angular extent kept fixed during arc-length sweeps.
    pub base_profile: ArcProfile,
    pub arc_mode: ArcMode,
    pub gap_m: f64,
    pub mech: MechanicalModel,
    pub drive: DriveModel,
}

impl SharedParams {
    pub fn profile_for_arc(&self, arc_length_m: f64) -> Result<ArcProfile> {
        let base = &self.base_profile;
        match self.arc_mode {
            ArcMode::VaryPhiFixedR => {
                ArcProfile::from_arc_length(arc_length_m, base.radius_m(), base.thickness_m())
            }
            ArcMode::VaryRFixedArc => {
                let phi = base.angular_extent_rad();
                if phi <= 0.0 {
                    return Err(Error::InvalidPlan(
                        "arc mode vary-r-fixed-arc needs a non-zero angular extent".into(),
                    ));
                }
                ArcProfile::new(arc_length_m / phi, phi, base.thickness_m())
            }
        }
    }

    pub fn transducer(&self, variant: Variant, profile: ArcProfile) -> Result<Transducer> {
        Transducer::new(
            ElectrodeConfig::new(variant, profile),
            self.gap_m,
            self.mech,
            self.drive,
        )
    }

    /// Per-comb sensitivity at rest for a variant with the given arc length.
    pub fn sensitivity_at_arc(&self, variant: Variant, arc_length_m: f64) -> Result<Sensitivity> {
        let profile = self.profile_for_arc(arc_length_m)?;
        self.transducer(variant, profile)?.sensitivity(0.0)
    }

    fn displacement_for_g(&self, accel_g: f64) -> f64 {
        self.mech.displacement(accel_g * STANDARD_GRAVITY)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPlan {
    pub variants: Vec<Variant>,
    pub arc_range_m: GridRange,
    pub accel_range_g: GridRange,
    pub shared: SharedParams,
}

impl SweepPlan {
    /// Rejects malformed ranges and any acceleration range that would close
    /// the nominal gap outright.
    pub fn validate(&self) -> Result<()> {
        if self.variants.is_empty() {
            return Err(Error::InvalidPlan("no electrode variants selected".into()));
        }
        self.arc_range_m.check("arc range")?;
        self.accel_range_g.check("acceleration range")?;
        if self.arc_range_m.min <= 0.0 {
            return Err(Error::InvalidPlan(
                "arc range: lengths must be positive".into(),
            ));
        }
        let delta_max = self.max_displacement_m();
        if delta_max >= self.shared.gap_m {
            return Err(Error::InvalidPlan(format!(
                "acceleration range reaches {:e} m of displacement, closing the {:e} m gap",
                delta_max, self.shared.gap_m
            )));
        }
        Ok(())
    }

    /// Largest |δ| produced by the acceleration range.
    pub fn max_displacement_m(&self) -> f64 {
        self.shared
            .displacement_for_g(self.accel_range_g.max_abs())
            .abs()
    }

    fn unique_variants(&self) -> Vec<Variant> {
        let mut variants = self.variants.clone();
        variants.sort();
        variants.dedup();
        variants
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub variant: Variant,
    pub arc_length_m: f64,
    pub radius_m: f64,
    pub phi_rad: f64,
    pub accel_g: f64,
    pub displacement_m: f64,
    pub c1_f: f64,
    pub c2_f: f64,
    pub gain: f64,
    pub v_out_v: f64,
    pub s_mv_per_g: f64,
    /// Per-comb sensitivity times the comb count.
    pub s_net_mv_per_g: f64,
    /// Finite-difference check of `s_mv_per_g`, when requested.
    pub fd_s_mv_per_g: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkippedPoint {
    pub variant: Variant,
    pub arc_length_m: f64,
    pub accel_g: f64,
    pub reason: String,
}

/// Least-squares line through one variant's V_out(a) curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveFit {
    pub variant: Variant,
    pub slope_mv_per_g: f64,
    pub intercept_v: f64,
    /// Exact sensitivity at a = 0, for comparison with the fitted slope.
    pub sensitivity_at_rest_mv_per_g: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepMetadata {
    pub kind: &'static str,
    pub version: &'static str,
    pub plan: SweepPlan,
    pub skipped: Vec<SkippedPoint>,
    pub fits: Vec<CurveFit>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub metadata: SweepMetadata,
}

impl SweepResult {
    pub fn rows_for(&self, variant: Variant) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.variant == variant)
    }

    pub fn fit_for(&self, variant: Variant) -> Option<&CurveFit> {
        self.metadata.fits.iter().find(|f| f.variant == variant)
    }
}

fn sort_rows(rows: &mut [SweepRow]) {
    rows.sort_by(|a, b| {
        a.variant
            .cmp(&b.variant)
            .then(a.arc_length_m.total_cmp(&b.arc_length_m))
            .then(a.accel_g.total_cmp(&b.accel_g))
    });
}

fn evaluate_row(transducer: &Transducer, accel_g: f64) -> Result<SweepRow> {
    let accel = accel_g * STANDARD_GRAVITY;
    let point = transducer.gain(accel)?;
    let s = transducer.sensitivity(accel)?;
    let profile = transducer.config.profile;
    Ok(SweepRow {
        variant: transducer.config.variant,
        arc_length_m: profile.arc_length(),
        radius_m: profile.radius_m(),
        phi_rad: profile.angular_extent_rad(),
        accel_g,
        displacement_m: point.displacement_m,
        c1_f: point.bridge.c1_f,
        c2_f: point.bridge.c2_f,
        gain: point.gain,
        v_out_v: point.v_out_volts,
        s_mv_per_g: s.mv_per_g(),
        s_net_mv_per_g: net_sensitivity(s, &transducer.mech).mv_per_g(),
        fd_s_mv_per_g: None,
    })
}

type Outcome = std::result::Result<SweepRow, SkippedPoint>;

fn split(outcomes: Vec<Outcome>) -> (Vec<SweepRow>, Vec<SkippedPoint>) {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(skip) => skipped.push(skip),
        }
    }
    (rows, skipped)
}

/// Output voltage against acceleration for each variant at the base
/// geometry, with a least-squares slope per variant.
pub fn gain_curve(plan: &SweepPlan) -> Result<SweepResult> {
    plan.validate()?;
    let shared = &plan.shared;
    let profile = shared.base_profile;
    let accels = plan.accel_range_g.values();
    let jobs: Vec<(Variant, f64)> = plan
        .unique_variants()
        .into_iter()
        .flat_map(|v| accels.iter().map(move |&a| (v, a)))
        .collect();

    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(variant, accel_g)| {
            shared
                .transducer(variant, profile)
                .and_then(|t| evaluate_row(&t, accel_g))
                .map_err(|e| SkippedPoint {
                    variant,
                    arc_length_m: profile.arc_length(),
                    accel_g,
                    reason: e.to_string(),
                })
        })
        .collect();
    let (mut rows, skipped) = split(outcomes);
    sort_rows(&mut rows);

    let mut fits = Vec::new();
    for variant in plan.unique_variants() {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.variant == variant)
            .map(|r| (r.accel_g, r.v_out_v))
            .collect();
        let Some((slope, intercept)) = least_squares(&points) else {
            continue;
        };
        let at_rest = shared
            .transducer(variant, profile)
            .and_then(|t| t.sensitivity(0.0))
            .map(|s| s.mv_per_g())
            .unwrap_or(f64::NAN);
        fits.push(CurveFit {
            variant,
            slope_mv_per_g: slope * 1e3,
            intercept_v: intercept,
            sensitivity_at_rest_mv_per_g: at_rest,
        });
    }

    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            kind: "gain-curve",
            version: env!("CARGO_PKG_VERSION"),
            plan: plan.clone(),
            skipped,
            fits,
        },
    })
}

/// Sensitivity at rest against arc length, per variant.
///
/// A grid point is kept only if the geometry stays valid over the whole
/// displacement range of the plan; others are listed in
/// `metadata.skipped`.
pub fn sensitivity_sweep(plan: &SweepPlan) -> Result<SweepResult> {
    plan.validate()?;
    let shared = &plan.shared;
    let delta_max = plan.max_displacement_m();
    let arcs = plan.arc_range_m.values();
    let jobs: Vec<(Variant, f64)> = plan
        .unique_variants()
        .into_iter()
        .flat_map(|v| arcs.iter().map(move |&l| (v, l)))
        .collect();

    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(variant, arc_length_m)| {
            let skip = |reason: String| SkippedPoint {
                variant,
                arc_length_m,
                accel_g: 0.0,
                reason,
            };
            let profile = shared
                .profile_for_arc(arc_length_m)
                .map_err(|e| skip(e.to_string()))?;
            let config = ElectrodeConfig::new(variant, profile);
            for delta in [-delta_max, delta_max] {
                let report = validate_geometry(&config, GapState::new(shared.gap_m, delta));
                if let Err(e) = report.into_result() {
                    return Err(skip(format!("at δ = {delta:e} m: {e}")));
                }
            }
            shared
                .transducer(variant, profile)
                .and_then(|t| evaluate_row(&t, 0.0))
                .map_err(|e| skip(e.to_string()))
        })
        .collect();
    let (mut rows, skipped) = split(outcomes);
    sort_rows(&mut rows);

    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            kind: "sensitivity-sweep",
            version: env!("CARGO_PKG_VERSION"),
            plan: plan.clone(),
            skipped,
            fits: Vec::new(),
        },
    })
}

/// Fills `fd_s_mv_per_g` on every row with a Richardson finite-difference
/// slope of the output voltage.
pub fn attach_fd_sensitivity(plan: &SweepPlan, result: &mut SweepResult) -> Result<()> {
    let shared = &plan.shared;
    result.rows.par_iter_mut().try_for_each(|row| {
        let profile =
            ArcProfile::new(row.radius_m, row.phi_rad, shared.base_profile.thickness_m())?;
        let t = shared.transducer(row.variant, profile)?;
        let fd = fd_sensitivity(
            &t,
            row.accel_g * STANDARD_GRAVITY,
            FdScheme::RichardsonCentral,
        )?;
        row.fd_s_mv_per_g = Some(fd.value * 1e3);
        Ok(())
    })
}

/// Slope and intercept of the least-squares line, `None` with fewer than
/// two distinct abscissae.
pub fn least_squares(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = x - mean_x;
        (sxy + dx * (y - mean_y), sxx + dx * dx)
    });
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some((slope, mean_y - slope * mean_x))
}

/// Best arc length for one variant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Optimum {
    pub variant: Variant,
    pub arc_length_m: f64,
    pub radius_m: f64,
    pub phi_rad: f64,
    pub sensitivity: Sensitivity,
    pub evaluations: usize,
}

/// Argument tolerance of the search, in meters of arc length.
pub const ARC_TOLERANCE_M: f64 = 1e-10;
const SCAN_POINTS: usize = 65;

/// Maximises |S| at rest over arc lengths in `bounds`.
///
/// A coarse scan brackets the best region, the bracket is clipped to the
/// valid geometry by bisection when it touches an invalid point, and a
/// golden-section search refines inside it. Both bracket ends are
/// candidates, so a monotone objective returns its boundary exactly.
pub fn maximize_sensitivity(
    variant: Variant,
    bounds: (f64, f64),
    shared: &SharedParams,
) -> Result<Optimum> {
    let (lo, hi) = bounds;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi && lo > 0.0) {
        return Err(Error::InvalidPlan(format!(
            "arc bounds [{lo:e}, {hi:e}] are not an interval of positive lengths"
        )));
    }
    let evaluations = std::cell::Cell::new(0usize);
    let objective = |arc: f64| -> Option<f64> {
        evaluations.set(evaluations.get() + 1);
        shared
            .sensitivity_at_arc(variant, arc)
            .ok()
            .map(|s| s.volts_per_g.abs())
            .filter(|v| v.is_finite())
    };

    let scan: Vec<(f64, Option<f64>)> = linspace(lo, hi, if lo == hi { 1 } else { SCAN_POINTS })
        .into_iter()
        .map(|x| (x, objective(x)))
        .collect();
    let (best_index, _) = scan
        .iter()
        .enumerate()
        .filter_map(|(i, (_, f))| f.map(|f| (i, f)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| {
            Error::InvalidPlan(format!(
                "no valid {variant} geometry for arc lengths in [{lo:e}, {hi:e}] m"
            ))
        })?;

    let best_x = scan[best_index].0;
    let mut candidates = vec![best_x];
    if scan.len() > 1 {
        let clip = |neighbour: usize| -> f64 {
            let (x, f) = scan[neighbour];
            if f.is_some() {
                x
            } else {
                validity_edge(&objective, best_x, x)
            }
        };
        let left = if best_index > 0 {
            clip(best_index - 1)
        } else {
            best_x
        };
        let right = if best_index + 1 < scan.len() {
            clip(best_index + 1)
        } else {
            best_x
        };
        candidates.extend([left, right]);
        if right - left > ARC_TOLERANCE_M {
            let inner = golden_section_max(
                |x| objective(x).unwrap_or(f64::NEG_INFINITY),
                left,
                right,
                ARC_TOLERANCE_M,
            );
            candidates.push(inner);
        }
    }

    let (arc, _) = candidates
        .into_iter()
        .filter_map(|x| objective(x).map(|f| (x, f)))
        .fold((best_x, f64::NEG_INFINITY), |acc, (x, f)| {
            if f > acc.1 {
                (x, f)
            } else {
                acc
            }
        });
    let profile = shared.profile_for_arc(arc)?;
    let sensitivity = shared.transducer(variant, profile)?.sensitivity(0.0)?;
    Ok(Optimum {
        variant,
        arc_length_m: arc,
        radius_m: profile.radius_m(),
        phi_rad: profile.angular_extent_rad(),
        sensitivity,
        evaluations: evaluations.get(),
    })
}

/// Last valid point between a valid `inside` and an invalid `outside`.
fn validity_edge<F: Fn(f64) -> Option<f64>>(
    objective: &F,
    mut inside: f64,
    mut outside: f64,
) -> f64 {
    while (outside - inside).abs() > ARC_TOLERANCE_M {
        let mid = 0.5 * (inside + outside);
        if objective(mid).is_some() {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Golden-section search for a maximum of `f` on `[a, b]`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::defaults;

    fn shared() -> SharedParams {
        SharedParams {
            base_profile: ArcProfile::new(100e-6, 0.2, 2e-6).unwrap(),
            arc_mode: ArcMode::VaryPhiFixedR,
            gap_m: 2e-6,
            mech: MechanicalModel::new(2.6e-10, 1.0, defaults::COMB_COUNT).unwrap(),
            drive: DriveModel::default(),
        }
    }

    fn plan(variants: &[Variant]) -> SweepPlan {
        SweepPlan {
            variants: variants.to_vec(),
            arc_range_m: GridRange::new(5e-6, 60e-6, 20).unwrap(),
            accel_range_g: GridRange::new(-10.0, 10.0, 21).unwrap(),
            shared: shared(),
        }
    }

    #[test]
    fn linspace_hits_both_ends() {
        let v = linspace(5e-6, 60e-6, 20);
        assert_eq!(v.len(), 20);
        assert_eq!(v[0], 5e-6);
        assert_eq!(v[19], 60e-6);
    }

    #[test]
    fn plan_validation() {
        assert!(GridRange::new(1.0, 1.0, 5).is_err());
        assert!(GridRange::new(0.0, 1.0, 1).is_err());
        let mut p = plan(&[Variant::Planar]);
        assert!(p.validate().is_ok());
        p.accel_range_g = GridRange::new(-1e4, 1e4, 3).unwrap();
        assert!(matches!(p.validate(), Err(Error::InvalidPlan(_))));
        p.variants.clear();
        assert!(p.validate().is_err());
    }

    #[test]
    fn planar_curve_is_exactly_linear() {
        let result = gain_curve(&plan(&[Variant::Planar])).unwrap();
        let fit = result.fit_for(Variant::Planar).unwrap();
        let exact = 2.6e-10 * STANDARD_GRAVITY / 2e-6 * 1e3;
        assert!(((fit.slope_mv_per_g - exact) / exact).abs() < 1e-12);
        assert!(fit.intercept_v.abs() < 1e-15);
    }

    #[test]
    fn symmetric_curves_pass_through_origin() {
        let result = gain_curve(&plan(&[
            Variant::Planar,
            Variant::Biconvex,
            Variant::Biconcave,
        ]))
        .unwrap();
        let origin: Vec<_> = result.rows.iter().filter(|r| r.accel_g == 0.0).collect();
        assert_eq!(origin.len(), 3);
        assert!(origin.iter().all(|r| r.v_out_v == 0.0));
        assert!(result.metadata.skipped.is_empty());
    }

    #[test]
    fn rows_are_sorted() {
        let result = sensitivity_sweep(&plan(&Variant::ALL)).unwrap();
        for pair in result.rows.windows(2) {
            let key = |r: &SweepRow| (r.variant, r.arc_length_m);
            assert!(key(&pair[0]).0 < key(&pair[1]).0 || key(&pair[0]).1 < key(&pair[1]).1);
        }
    }

    #[test]
    fn concave_points_past_edge_contact_are_skipped() {
        let result = sensitivity_sweep(&plan(&[Variant::Biconcave, Variant::Biconvex])).unwrap();
        assert_eq!(result.rows_for(Variant::Biconvex).count(), 20);
        let kept = result.rows_for(Variant::Biconcave).count();
        assert!(kept > 0 && kept < 20);
        assert_eq!(kept + result.metadata.skipped.len(), 20);
        for skip in &result.metadata.skipped {
            let arc = shared().profile_for_arc(skip.arc_length_m).unwrap();
            assert!(arc.sagitta() >= 2e-6 - plan(&[]).max_displacement_m() - 1e-12);
        }
    }

    #[test]
    fn mixed_curved_variants_mirror_each_other() {
        let result =
            sensitivity_sweep(&plan(&[Variant::ConcavoConvex, Variant::ConvexoConcave])).unwrap();
        let cc: Vec<_> = result.rows_for(Variant::ConcavoConvex).collect();
        let vc: Vec<_> = result.rows_for(Variant::ConvexoConcave).collect();
        assert_eq!(cc.len(), vc.len());
        for (a, b) in cc.iter().zip(vc) {
            assert_eq!(a.gain, -b.gain);
            assert!(((a.s_mv_per_g - b.s_mv_per_g) / a.s_mv_per_g).abs() < 1e-12);
        }
    }

    #[test]
    fn least_squares_line() {
        let pts: Vec<_> = (0..5).map(|i| (i as f64, 3.0 * i as f64 - 1.0)).collect();
        let (m, c) = least_squares(&pts).unwrap();
        assert!((m - 3.0).abs() < 1e-14 && (c + 1.0).abs() < 1e-14);
        assert!(least_squares(&[(1.0, 2.0)]).is_none());
        assert!(least_squares(&[(1.0, 2.0), (1.0, 3.0)]).is_none());
    }

    #[test]
    fn golden_section_finds_interior_maximum() {
        let x = golden_section_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-9);
    }

    #[test]
    fn degenerate_bounds() {
        let opt = maximize_sensitivity(Variant::Biconvex, (20e-6, 20e-6), &shared()).unwrap();
        assert_eq!(opt.arc_length_m, 20e-6);
    }

    #[test]
    fn bounds_entirely_invalid() {
        // sagitta exceeds the 2 µm gap everywhere on this interval
        let err = maximize_sensitivity(Variant::Biconcave, (50e-6, 60e-6), &shared());
        assert!(matches!(err, Err(Error::InvalidPlan(_))));
    }
}
