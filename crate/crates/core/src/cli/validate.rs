//! Oracle suite run by `curvedcomb validate`.

use serde::Serialize;

use crate::capacitance::Face;
use crate::error::Result;
use crate::model::Variant;
use crate::model::{ArcProfile, STANDARD_GRAVITY};
use crate::oracles::{fd_dcap_dgap, fd_sensitivity, quad_capacitance, FdScheme, QuadratureSpec};
use crate::sweep::{linspace, SharedParams};
use crate::transduction::Transducer;

pub const QUADRATURE_TOL: f64 = 1e-9;
pub const DERIVATIVE_TOL: f64 = 1e-6;
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_rel_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Description of the case with the largest error.
    pub worst_case: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

struct Tally {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    worst: f64,
    worst_case: String,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            cases: 0,
            worst: 0.0,
            worst_case: String::new(),
        }
    }

    fn record(&mut self, err: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        // NaN counts as a failure.
        let err = if err.is_nan() { f64::INFINITY } else { err };
        if err > self.worst || self.worst_case.is_empty() {
            self.worst = err;
            self.worst_case = case();
        }
    }

    fn compare(
        &mut self,
        value: Result<f64>,
        reference: Result<f64>,
        case: impl FnOnce() -> String,
    ) {
        match (value, reference) {
            (Ok(v), Ok(r)) => self.record(rel_err(v, r), case),
            (v, r) => {
                let why = v
                    .err()
                    .or(r.err())
                    .map(|e| e.to_string())
                    .unwrap_or_default();
                self.record(f64::INFINITY, || format!("{}: {why}", case()))
            }
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            max_rel_error: self.worst,
            tolerance: self.tolerance,
            passed: self.worst < self.tolerance,
            worst_case: self.worst_case,
        }
    }
}

fn rel_err(value: f64, reference: f64) -> f64 {
    let diff = (value - reference).abs();
    if reference == 0.0 {
        diff
    } else {
        diff / reference.abs()
    }
}

fn face_label(face: &Face, gap: f64) -> String {
    match face {
        Face::Convex(a) | Face::Concave(a) => format!(
            "{:?} R={:e} phi={} gap={:e}",
            face.kind(),
            a.radius_m(),
            a.angular_extent_rad(),
            gap
        ),
        Face::Flat(p) => format!("Flat b={:e} gap={:e}", p.length_m(), gap),
    }
}

/// Faces and gaps covered by the capacitance suites: the configured face
/// plus a fixed grid around it. Concave points in contact are left out.
fn face_cases(shared: &SharedParams) -> Vec<(Face, f64)> {
    let base = shared.base_profile;
    let h = base.thickness_m();
    let mut cases = vec![
        (Face::Convex(base), shared.gap_m),
        (Face::Concave(base), shared.gap_m),
        (Face::Flat(base.flattened()), shared.gap_m),
    ];
    for r in [10e-6, 100e-6, 1000e-6] {
        for phi in [0.05, 0.2, 0.5, 1.0] {
            let Ok(arc) = ArcProfile::new(r, phi, h) else {
                continue;
            };
            for gap in [0.5e-6, 2e-6, 10e-6, arc.sagitta() * 1.01] {
                cases.push((Face::Convex(arc), gap));
                if gap > arc.sagitta() && gap < 2.0 * r {
                    cases.push((Face::Concave(arc), gap));
                }
            }
        }
    }
    cases.retain(|(face, gap)| !matches!(face, Face::Concave(a) if *gap <= a.sagitta()));
    cases
}

/// Runs every suite. `fault` multiplies each closed-form capacitance by
/// `1 + fault` before comparison; zero for a real run.
pub fn run_suite(
    shared: &SharedParams,
    variants: &[Variant],
    accel_g: (f64, f64),
    fault: f64,
) -> Result<ValidationReport> {
    let transducers = variants
        .iter()
        .map(|&v| shared.transducer(v, shared.base_profile))
        .collect::<Result<Vec<Transducer>>>()?;
    let eps = shared.drive.permittivity();
    let quad_spec = QuadratureSpec::default();

    let mut quad = Tally::new("quadrature", QUADRATURE_TOL);
    let mut dcap = Tally::new("capacitance-derivative", DERIVATIVE_TOL);
    for (face, gap) in face_cases(shared) {
        quad.compare(
            face.capacitance(gap, eps).map(|c| c * (1.0 + fault)),
            quad_capacitance(&face, gap, eps, &quad_spec).map(|q| q.value),
            || face_label(&face, gap),
        );
        dcap.compare(
            face.dcap_dgap(gap, eps),
            fd_dcap_dgap(&face, gap, eps, FdScheme::RichardsonCentral).map(|d| d.value),
            || face_label(&face, gap),
        );
    }

    let mut sens = Tally::new("sensitivity-derivative", DERIVATIVE_TOL);
    let mut sym = Tally::new("symmetry", SYMMETRY_TOL);
    let accels: Vec<f64> = linspace(accel_g.0, accel_g.1, 9)
        .into_iter()
        .map(|a| a * STANDARD_GRAVITY)
        .collect();
    for t in &transducers {
        let variant = t.config.variant;
        for &a in &accels {
            let (lo, hi) = t.acceleration_limits();
            if a <= lo || a >= hi {
                continue;
            }
            sens.compare(
                t.sensitivity(a).map(|s| s.volts_per_g),
                fd_sensitivity(t, a, FdScheme::RichardsonCentral).map(|d| d.value),
                || format!("{variant} a={a:e} m/s²"),
            );
            let partner = match variant {
                v if v.is_symmetric() => Some(*t),
                Variant::ConcavoConvex => Some(Transducer {
                    config: crate::model::ElectrodeConfig::new(
                        Variant::ConvexoConcave,
                        t.config.profile,
                    ),
                    ..*t
                }),
                _ => None,
            };
            if let Some(p) = partner {
                sym.compare(
                    t.gain(a).map(|g| g.gain),
                    p.gain(-a).map(|g| -g.gain),
                    || format!("{variant} vs mirror at a={a:e} m/s²"),
                );
            }
            if variant == Variant::Planar {
                let delta = t.mech.displacement(a);
                sym.compare(t.gain(a).map(|g| g.gain), Ok(delta / t.gap_m), || {
                    format!("planar gain = δ/d at a={a:e} m/s²")
                });
            }
        }
    }

    let suites: Vec<SuiteResult> = [quad, dcap, sens, sym]
        .into_iter()
        .map(Tally::finish)
        .collect();
    Ok(ValidationReport {
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}
