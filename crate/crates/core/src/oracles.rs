//! Independent numerical ground truth for the closed forms: adaptive
//! quadrature of the capacitance-per-angle integrands and finite-difference
//! derivatives.
//!
//! Nothing here calls into the closed-form code paths, so agreement between
//! the two is meaningful.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::capacitance::Face;
use crate::error::{Error, Result};
use crate::model::STANDARD_GRAVITY;
use crate::transduction::Transducer;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    /// Absolute tolerance in farads.
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-30,
            max_subdivisions: 2000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureEstimate {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of intervals in the final partition.
    pub subdivisions: usize,
    pub evaluations: usize,
}

/// Integrates the capacitance of one face by summing `ε·dA / gap` along it.
///
/// Curved faces are integrated over θ ∈ [−φ/2, φ/2] with the gap
/// `d ± 2R·sin²(θ/2)`; flat faces over their length with constant gap.
pub fn quad_capacitance(
    face: &Face,
    gap_m: f64,
    permittivity: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureEstimate> {
    let (lo, hi) = face_interval(face);
    integrate_face(face, gap_m, permittivity, lo, hi, spec)
}

/// Integration limits of the face parameter (angle or length).
fn face_interval(face: &Face) -> (f64, f64) {
    match face {
        Face::Convex(arc) | Face::Concave(arc) => {
            let half = arc.angular_extent_rad() / 2.0;
            (-half, half)
        }
        Face::Flat(plane) => {
            let half = plane.length_m() / 2.0;
            (-half, half)
        }
    }
}

pub(crate) fn integrate_face(
    face: &Face,
    gap_m: f64,
    permittivity: f64,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureEstimate> {
    if !(gap_m > 0.0) {
        return Err(Error::NonPositiveGap { gap_m });
    }
    match *face {
        Face::Convex(arc) => {
            let (r, scale) = (
                arc.radius_m(),
                permittivity * arc.thickness_m() * arc.radius_m(),
            );
            integrate(
                |theta| {
                    let s = (theta / 2.0).sin();
                    scale / (gap_m + 2.0 * r * s * s)
                },
                lo,
                hi,
                spec,
            )
        }
        Face::Concave(arc) => {
            let r = arc.radius_m();
            let half = arc.angular_extent_rad() / 2.0;
            let s_edge = (half / 2.0).sin();
            let edge = gap_m - 2.0 * r * s_edge * s_edge;
            if !(edge > 0.0) {
                return Err(Error::EdgeContact {
                    gap_m,
                    edge_gap_m: edge,
                    min_edge_gap_m: 0.0,
                    atanh_argument: f64::NAN,
                });
            }
            let scale = permittivity * arc.thickness_m() * r;
            integrate(
                |theta| {
                    let s = (theta / 2.0).sin();
                    scale / (gap_m - 2.0 * r * s * s)
                },
                lo,
                hi,
                spec,
            )
        }
        Face::Flat(plane) => {
            let density = permittivity * plane.thickness_m() / gap_m;
            integrate(|_| density, lo, hi, spec)
        }
    }
}

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
    /// Creation order; breaks ties so refinement order never depends on
    /// heap internals.
    serial: usize,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.serial.cmp(&self.serial))
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let (f1, f2) = (f(center - dx), f(center + dx));
        kronrod += w * (f1 + f2);
        abs += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    // Roundoff floor: the embedded-pair difference alone underestimates the
    // error once both rules agree to the last few ulps.
    let floor = 50.0 * f64::EPSILON * abs * half.abs();
    (value, error.max(floor))
}

/// Globally adaptive 7/15-point Gauss–Kronrod integration, refining the
/// interval with the largest error estimate first.
pub(crate) fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureEstimate> {
    if !(spec.rel_tol > 0.0) || spec.max_subdivisions == 0 {
        return Err(Error::InvalidParameter {
            quantity: "quadrature tolerance",
            requirement: "rel_tol > 0 and max_subdivisions >= 1",
            value: spec.rel_tol,
        });
    }
    if lo == hi {
        return Ok(QuadratureEstimate {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 1,
            evaluations: 0,
        });
    }

    let mut serial = 0;
    let mut heap = BinaryHeap::new();
    let (value, error) = kronrod15(&f, lo, hi);
    heap.push(Segment {
        lo,
        hi,
        value,
        error,
        serial,
    });
    let mut evaluations = 15;
    let (mut total, mut total_error) = (value, error);

    while total_error > spec.abs_tol.max(spec.rel_tol * total.abs()) {
        if heap.len() >= spec.max_subdivisions {
            let (value, error_estimate) = sum_segments(&heap);
            return Err(Error::QuadratureNonConvergence {
                subdivisions: heap.len(),
                value,
                error_estimate,
            });
        }
        let worst = heap.pop().expect("partition is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        total -= worst.value;
        total_error -= worst.error;
        for (a, b) in [(worst.lo, mid), (mid, worst.hi)] {
            let (value, error) = kronrod15(&f, a, b);
            serial += 1;
            total += value;
            total_error += error;
            heap.push(Segment {
                lo: a,
                hi: b,
                value,
                error,
                serial,
            });
        }
        evaluations += 30;
        // Running sums drift; resynchronise occasionally.
        if serial % 64 == 0 {
            (total, total_error) = sum_segments(&heap);
        }
    }

    let (value, error_estimate) = sum_segments(&heap);
    Ok(QuadratureEstimate {
        value,
        error_estimate,
        subdivisions: heap.len(),
        evaluations,
    })
}

/// Sums in left-to-right order so the result does not depend on heap layout.
fn sum_segments(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    let mut segments: Vec<&Segment> = heap.iter().collect();
    segments.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    segments
        .iter()
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FdScheme {
    /// `(f(x+h) − f(x−h)) / 2h`
    Central2,
    /// Five-point central stencil.
    Central4,
    /// Two central differences at `h` and `h/2` combined to cancel the h² term.
    #[default]
    RichardsonCentral,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiniteDiffSpec {
    pub scheme: FdScheme,
    /// Step relative to `max(|x|, scale)`.
    pub rel_step: f64,
    /// Magnitude below which `x` is treated as `scale` when sizing the step.
    /// Set it to the natural size of the variable (e.g. the gap in meters).
    pub scale: f64,
    /// Absolute step; overrides `rel_step` and `scale` when set.
    pub step: Option<f64>,
}

impl Default for FiniteDiffSpec {
    fn default() -> Self {
        Self {
            scheme: FdScheme::RichardsonCentral,
            rel_step: f64::EPSILON.cbrt(),
            scale: 1.0,
            step: None,
        }
    }
}

impl FiniteDiffSpec {
    pub fn with_scheme(mut self, scheme: FdScheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn with_rel_step(mut self, rel_step: f64) -> Self {
        self.rel_step = rel_step;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_step(mut self, step: f64) -> Self {
        self.step = Some(step);
        self
    }

    pub fn base_step(&self, x: f64) -> f64 {
        self.step.unwrap_or(self.rel_step * x.abs().max(self.scale))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeEstimate {
    pub value: f64,
    pub error_estimate: f64,
    /// Step actually used, after any shrinking near a domain boundary.
    pub step: f64,
}

const MAX_STEP_ATTEMPTS: usize = 40;

/// Finite-difference derivative of `f` at `x`.
///
/// If any stencil point falls outside the domain of `f` (it returns `Err`
/// or a non-finite value) the step is halved, up to 40 times.
pub fn fd_derivative<F, E>(f: F, x: f64, spec: &FiniteDiffSpec) -> Result<DerivativeEstimate>
where
    F: Fn(f64) -> std::result::Result<f64, E>,
{
    let base = spec.base_step(x);
    if !(base > 0.0) || !base.is_finite() {
        return Err(Error::InvalidParameter {
            quantity: "finite-difference step",
            requirement: "finite and > 0",
            value: base,
        });
    }
    let eval = |t: f64| f(t).ok().filter(|v| v.is_finite());
    let central = |h: f64| -> Option<f64> { Some((eval(x + h)? - eval(x - h)?) / (2.0 * h)) };

    let mut h = base;
    for _ in 0..MAX_STEP_ATTEMPTS {
        let estimate = match spec.scheme {
            FdScheme::Central2 => {
                central(h)
                    .zip(central(h / 2.0))
                    .map(|(d1, d2)| DerivativeEstimate {
                        value: d1,
                        error_estimate: (d1 - d2).abs(),
                        step: h,
                    })
            }
            FdScheme::Central4 => (|| {
                let (f1p, f1m) = (eval(x + h)?, eval(x - h)?);
                let (f2p, f2m) = (eval(x + 2.0 * h)?, eval(x - 2.0 * h)?);
                let value = (8.0 * (f1p - f1m) - (f2p - f2m)) / (12.0 * h);
                let d1 = (f1p - f1m) / (2.0 * h);
                Some(DerivativeEstimate {
                    value,
                    error_estimate: (value - d1).abs(),
                    step: h,
                })
            })(),
            FdScheme::RichardsonCentral => {
                central(h).zip(central(h / 2.0)).map(|(coarse, fine)| {
                    let value = (4.0 * fine - coarse) / 3.0;
                    DerivativeEstimate {
                        value,
                        error_estimate: (value - fine).abs(),
                        step: h,
                    }
                })
            }
        };
        if let Some(estimate) = estimate {
            return Ok(estimate);
        }
        h *= 0.5;
    }
    Err(Error::NoAdmissibleStep { x })
}

/// Finite-difference slope of the output voltage in acceleration,
/// independent of the analytic derivative path.
///
/// The step is a thousandth of the acceleration that would consume the
/// tighter of the two displacement margins, so the stencil stays inside the
/// valid range and resolves the curvature near a concave edge contact.
pub fn fd_sensitivity(
    transducer: &Transducer,
    accel_m_s2: f64,
    scheme: FdScheme,
) -> Result<DerivativeEstimate> {
    let (lo, hi) = transducer.acceleration_limits();
    let margin = (accel_m_s2 - lo).min(hi - accel_m_s2);
    let spec = FiniteDiffSpec::default()
        .with_scheme(scheme)
        .with_step(1e-3 * margin);
    let mut estimate = fd_derivative(
        |a| transducer.gain(a).map(|p| p.v_out_volts),
        accel_m_s2,
        &spec,
    )?;
    estimate.value *= STANDARD_GRAVITY;
    estimate.error_estimate *= STANDARD_GRAVITY;
    Ok(estimate)
}

/// Finite-difference `∂C/∂d` with the step sized to the face's own gap
/// margin (the edge gap for concave faces).
pub fn fd_dcap_dgap(
    face: &Face,
    gap_m: f64,
    permittivity: f64,
    scheme: FdScheme,
) -> Result<DerivativeEstimate> {
    let margin = match face {
        Face::Concave(arc) => (gap_m - arc.sagitta()).min(2.0 * arc.radius_m() - gap_m),
        _ => gap_m,
    };
    let spec = FiniteDiffSpec::default()
        .with_scheme(scheme)
        .with_step(1e-3 * margin);
    fd_derivative(|d| face.capacitance(d, permittivity), gap_m, &spec)
}
