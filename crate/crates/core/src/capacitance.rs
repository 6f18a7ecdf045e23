//! Closed-form capacitance between the planar movable finger and a convex,
//! concave or flat fixed face, with exact derivatives in the gap.
//!
//! With `T = tan(φ/4)` and apex (convex) or centre (concave) gap `d`:
//!
//! ```text
//! convex   C = 4εhR / √(d(2R+d)) · atan (T·√((2R+d)/d))
//! concave  C = 4εhR / √(d(2R−d)) · atanh(T·√((2R−d)/d))
//! flat     C = εhb / d
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ArcProfile, PlanarProfile, MIN_EDGE_GAP_REL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceKind {
    /// Bows toward the movable finger; gap `d + R(1 − cos θ)`, never below `d`.
    Convex,
    /// Bows away from the movable finger; gap `d − R(1 − cos θ)`, never above `d`.
    Concave,
    Flat,
}

/// A fixed-electrode face with its geometry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Face {
    Convex(ArcProfile),
    Concave(ArcProfile),
    Flat(PlanarProfile),
}

impl Face {
    pub fn kind(&self) -> FaceKind {
        match self {
            Face::Convex(_) => FaceKind::Convex,
            Face::Concave(_) => FaceKind::Concave,
            Face::Flat(_) => FaceKind::Flat,
        }
    }

    pub fn capacitance(&self, gap_m: f64, permittivity: f64) -> Result<f64> {
        match self {
            Face::Convex(arc) => cap_convex(arc, gap_m, permittivity),
            Face::Concave(arc) => cap_concave(arc, gap_m, permittivity),
            Face::Flat(plane) => cap_planar(plane, gap_m, permittivity),
        }
    }

    /// Exact ∂C/∂d.
    pub fn dcap_dgap(&self, gap_m: f64, permittivity: f64) -> Result<f64> {
        dcap_dgap(self, gap_m, permittivity)
    }
}

fn check_positive_gap(gap_m: f64) -> Result<()> {
    if gap_m > 0.0 && gap_m.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveGap { gap_m })
    }
}

pub fn cap_convex(arc: &ArcProfile, gap_m: f64, permittivity: f64) -> Result<f64> {
    check_positive_gap(gap_m)?;
    let t = ConvexTerms::new(arc, gap_m);
    Ok(4.0 * permittivity * arc.thickness_m() * arc.radius_m() * t.angle / t.root)
}

pub fn cap_concave(arc: &ArcProfile, gap_m: f64, permittivity: f64) -> Result<f64> {
    let t = ConcaveTerms::new(arc, gap_m)?;
    Ok(4.0 * permittivity * arc.thickness_m() * arc.radius_m() * t.angle / t.root)
}

pub fn cap_planar(face: &PlanarProfile, gap_m: f64, permittivity: f64) -> Result<f64> {
    check_positive_gap(gap_m)?;
    Ok(permittivity * face.thickness_m() * face.length_m() / gap_m)
}

pub fn dcap_dgap(face: &Face, gap_m: f64, permittivity: f64) -> Result<f64> {
    match face {
        Face::Convex(arc) => {
            check_positive_gap(gap_m)?;
            let t = ConvexTerms::new(arc, gap_m);
            let r = arc.radius_m();
            let d = gap_m;
            // u = T√q, q = (2R+d)/d, du/dd = −T·R / (d²√q)
            let du = -arc.half_tan() * r / (d * d * t.ratio.sqrt());
            let product = d * (2.0 * r + d);
            let df = du / (1.0 + t.arg * t.arg) / t.root - t.angle * (r + d) / (product * t.root);
            Ok(4.0 * permittivity * arc.thickness_m() * r * df)
        }
        Face::Concave(arc) => {
            let t = ConcaveTerms::new(arc, gap_m)?;
            let r = arc.radius_m();
            let d = gap_m;
            let dv = -arc.half_tan() * r / (d * d * t.ratio.sqrt());
            let product = d * (2.0 * r - d);
            let df = dv / t.one_minus_arg_sq / t.root - t.angle * (r - d) / (product * t.root);
            Ok(4.0 * permittivity * arc.thickness_m() * r * df)
        }
        Face::Flat(plane) => {
            check_positive_gap(gap_m)?;
            Ok(-permittivity * plane.thickness_m() * plane.length_m() / (gap_m * gap_m))
        }
    }
}

struct ConvexTerms {
    /// (2R + d)/d
    ratio: f64,
    /// T·√ratio
    arg: f64,
    angle: f64,
    /// √(d(2R + d))
    root: f64,
}

impl ConvexTerms {
    fn new(arc: &ArcProfile, d: f64) -> Self {
        let r = arc.radius_m();
        let ratio = (2.0 * r + d) / d;
        let arg = arc.half_tan() * ratio.sqrt();
        Self {
            ratio,
            arg,
            angle: arg.atan(),
            root: (d * (2.0 * r + d)).sqrt(),
        }
    }
}

struct ConcaveTerms {
    /// (2R − d)/d
    ratio: f64,
    one_minus_arg_sq: f64,
    angle: f64,
    /// √(d(2R − d))
    root: f64,
}

impl ConcaveTerms {
    fn new(arc: &ArcProfile, d: f64) -> Result<Self> {
        check_positive_gap(d)?;
        let r = arc.radius_m();
        let t = arc.half_tan();
        let diameter = 2.0 * r;
        if d >= diameter {
            return Err(Error::GapBeyondDiameter {
                gap_m: d,
                diameter_m: diameter,
            });
        }
        let ratio = (diameter - d) / d;
        let arg = t * ratio.sqrt();
        let edge = d - arc.sagitta();
        let min_edge = MIN_EDGE_GAP_REL * r;
        if edge <= min_edge {
            return Err(Error::EdgeContact {
                gap_m: d,
                edge_gap_m: edge,
                min_edge_gap_m: min_edge,
                atanh_argument: arg,
            });
        }
        // 1 − T²(2R−d)/d = (1 + T²)(d − 2R·sin²(φ/4))/d, exact in the edge gap
        let one_minus_arg_sq = (1.0 + t * t) * edge / d;
        let angle = if arg < 0.5 {
            arg.atanh()
        } else {
            arg.ln_1p() - 0.5 * one_minus_arg_sq.ln()
        };
        Ok(Self {
            ratio,
            one_minus_arg_sq,
            angle,
            root: (d * (diameter - d)).sqrt(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::VACUUM_PERMITTIVITY as EPS;

    // Golden values from an independent adaptive quadrature (QUADPACK qags,
    // epsrel 1e-13) of the capacitance-per-angle integrands.
    const CONVEX_STANDARD_F: f64 = 1.642107826060091e-16;
    const CONCAVE_STANDARD_F: f64 = 1.9453120206676285e-16;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn standard_arc() -> ArcProfile {
        ArcProfile::new(100e-6, 0.2, 2e-6).unwrap()
    }

    #[test]
    fn convex_standard_point() {
        let c = cap_convex(&standard_arc(), 2e-6, EPS).unwrap();
        assert!(rel(c, CONVEX_STANDARD_F) < 1e-12, "{c:e}");
    }

    #[test]
    fn concave_standard_point() {
        let c = cap_concave(&standard_arc(), 2e-6, EPS).unwrap();
        assert!(rel(c, CONCAVE_STANDARD_F) < 1e-12, "{c:e}");
    }

    #[test]
    fn planar_examples() {
        let face = PlanarProfile::new(20e-6, 2e-6).unwrap();
        let c = cap_planar(&face, 2e-6, EPS).unwrap();
        assert!(rel(c, 1.7708e-16) < 1e-12);
        let wide = cap_planar(&face, 4e-6, EPS).unwrap();
        assert!(rel(wide, c / 2.0) < 1e-15);
        assert!(matches!(
            cap_planar(&face, 0.0, EPS),
            Err(Error::NonPositiveGap { .. })
        ));
    }

    #[test]
    fn empty_arc_has_no_capacitance() {
        let arc = ArcProfile::new(100e-6, 0.0, 2e-6).unwrap();
        assert_eq!(cap_convex(&arc, 2e-6, EPS).unwrap(), 0.0);
        assert_eq!(cap_concave(&arc, 2e-6, EPS).unwrap(), 0.0);
        assert_eq!(dcap_dgap(&Face::Convex(arc), 2e-6, EPS).unwrap(), 0.0);
        assert_eq!(dcap_dgap(&Face::Concave(arc), 2e-6, EPS).unwrap(), 0.0);
    }

    #[test]
    fn flat_gradient() {
        let face = Face::Flat(PlanarProfile::new(20e-6, 2e-6).unwrap());
        let g = face.dcap_dgap(2e-6, EPS).unwrap();
        assert!(rel(g, -8.854e-11) < 1e-12, "{g:e}");
    }

    #[test]
    fn convex_rejects_closed_gap() {
        assert!(matches!(
            cap_convex(&standard_arc(), -1e-9, EPS),
            Err(Error::NonPositiveGap { .. })
        ));
    }

    #[test]
    fn concave_domain_errors() {
        let arc = standard_arc();
        let contact = arc.sagitta();
        match cap_concave(&arc, contact, EPS) {
            Err(Error::EdgeContact { atanh_argument, .. }) => {
                assert!((atanh_argument - 1.0).abs() < 1e-14)
            }
            other => panic!("expected edge contact, got {other:?}"),
        }
        assert!(matches!(
            cap_concave(&arc, 0.3e-6, EPS),
            Err(Error::EdgeContact { .. })
        ));
        assert!(matches!(
            cap_concave(&arc, 200e-6, EPS),
            Err(Error::GapBeyondDiameter { .. })
        ));
        assert!(matches!(
            dcap_dgap(&Face::Concave(arc), contact, EPS),
            Err(Error::EdgeContact { .. })
        ));
    }

    #[test]
    fn concave_diverges_toward_contact() {
        let arc = standard_arc();
        let sag = arc.sagitta();
        let mut previous = 0.0;
        for exp in 1..=9 {
            let gap = sag * (1.0 + 10f64.powi(-exp));
            let c = cap_concave(&arc, gap, EPS).unwrap();
            assert!(c.is_finite() && c > previous, "margin 1e-{exp}: {c:e}");
            previous = c;
        }
        assert!(previous > 10.0 * CONCAVE_STANDARD_F);
    }

    #[test]
    fn flat_plate_limit() {
        // Leading-order deviation of either curved face from the flat plate
        // is ±L²/(24·R·d): the mean of R(1 − cos θ) over the arc.
        let length = 20e-6;
        let gap = 2e-6;
        let plate = EPS * 2e-6 * length / gap;
        for ratio in [1e4, 1e5] {
            let radius = ratio * length;
            let arc = ArcProfile::from_arc_length(length, radius, 2e-6).unwrap();
            let predicted = length * length / (24.0 * radius * gap);
            let convex = cap_convex(&arc, gap, EPS).unwrap();
            let concave = cap_concave(&arc, gap, EPS).unwrap();
            assert!(rel((plate - convex) / plate, predicted) < 1e-3);
            assert!(rel((concave - plate) / plate, predicted) < 1e-3);
        }
        let arc = ArcProfile::from_arc_length(length, 1e8 * length, 2e-6).unwrap();
        assert!(rel(cap_convex(&arc, gap, EPS).unwrap(), plate) < 1e-6);
        assert!(rel(cap_concave(&arc, gap, EPS).unwrap(), plate) < 1e-6);
    }

    #[test]
    fn ordering_at_equal_gap_and_length() {
        let arc = standard_arc();
        let flat = cap_planar(&arc.flattened(), 2e-6, EPS).unwrap();
        let convex = cap_convex(&arc, 2e-6, EPS).unwrap();
        let concave = cap_concave(&arc, 2e-6, EPS).unwrap();
        assert!(concave > flat && flat > convex);
    }
}
