//! Domain types for the sense-comb geometry, the proof-mass suspension and
//! the readout drive.
//!
//! Everything is SI internally: meters, kilograms, farads, volts, m/s².
//! Sign convention for the proof-mass displacement δ: positive δ narrows
//! side 1 (gap `d − δ`, capacitance C₁) and widens side 2 (gap `d + δ`, C₂).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::capacitance::{Face, FaceKind};
use crate::error::{require_positive, Error, Result};

/// Standard gravity, the unit of the "per g" sensitivity.
pub const STANDARD_GRAVITY: f64 = 9.806_65;

/// Vacuum permittivity used by default for the air gap (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854e-12;

/// Density of polycrystalline silicon (kg/m³), used only by
/// [`estimate_proof_mass_kg`].
pub const POLYSILICON_DENSITY: f64 = 2320.0;

/// Smallest concave edge gap, relative to the arc radius, at which the
/// closed form is still evaluated.
pub const MIN_EDGE_GAP_REL: f64 = 1e-12;

/// Device parameters from the reference layout. Gap, drive amplitude and
/// the spring constant are not part of that layout and are assumptions.
pub mod defaults {
    /// Structural (out-of-plane) thickness.
    pub const THICKNESS_M: f64 = 2e-6;
    /// Electrode length of the reference layout.
    pub const ELECTRODE_LENGTH_M: f64 = 120e-6;
    pub const FINGER_WIDTH_M: f64 = 4e-6;
    pub const COMB_COUNT: u32 = 21;
    pub const PROOF_MASS_LENGTH_M: f64 = 565e-6;
    pub const PROOF_MASS_WIDTH_M: f64 = 100e-6;

    /// Assumed apex gap.
    pub const GAP_M: f64 = 2e-6;
    /// Assumed excitation amplitude.
    pub const V_IN_VOLTS: f64 = 1.0;
    /// Proof mass, roughly the solid plate estimate.
    pub const MASS_KG: f64 = 2.6e-10;
    /// Assumed suspension stiffness.
    pub const SPRING_N_PER_M: f64 = 1.0;
    /// Arc radius used for curved faces.
    pub const RADIUS_M: f64 = 100e-6;
    /// Full angular extent of the default arc (arc length 20 µm at 100 µm).
    pub const ANGULAR_EXTENT_RAD: f64 = 0.2;
}

/// A circular-arc electrode face: radius `R`, full angular extent `φ`
/// (the arc spans −φ/2..+φ/2) and out-of-plane thickness `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcProfile {
    radius_m: f64,
    angular_extent_rad: f64,
    thickness_m: f64,
}

impl ArcProfile {
    pub fn new(radius_m: f64, angular_extent_rad: f64, thickness_m: f64) -> Result<Self> {
        require_positive("arc radius", radius_m)?;
        require_positive("thickness", thickness_m)?;
        if !(0.0..PI).contains(&angular_extent_rad) {
            return Err(Error::InvalidParameter {
                quantity: "angular extent",
                requirement: "in [0, π) rad",
                value: angular_extent_rad,
            });
        }
        Ok(Self {
            radius_m,
            angular_extent_rad,
            thickness_m,
        })
    }

    /// Arc of the given length on a circle of the given radius.
    pub fn from_arc_length(arc_length_m: f64, radius_m: f64, thickness_m: f64) -> Result<Self> {
        require_positive("arc radius", radius_m)?;
        Self::new(radius_m, arc_length_m / radius_m, thickness_m)
    }

    pub fn radius_m(&self) -> f64 {
        self.radius_m
    }

    pub fn angular_extent_rad(&self) -> f64 {
        self.angular_extent_rad
    }

    pub fn thickness_m(&self) -> f64 {
        self.thickness_m
    }

    pub fn arc_length(&self) -> f64 {
        self.radius_m * self.angular_extent_rad
    }

    /// Bow depth `R(1 − cos(φ/2))`, evaluated as `2R·sin²(φ/4)` to avoid
    /// cancellation for shallow arcs.
    pub fn sagitta(&self) -> f64 {
        let s = (self.angular_extent_rad / 4.0).sin();
        2.0 * self.radius_m * s * s
    }

    /// `tan(φ/4)`, the half-angle tangent that appears in the closed forms.
    pub fn half_tan(&self) -> f64 {
        (self.angular_extent_rad / 4.0).tan()
    }

    /// The flat face of the same length and thickness.
    pub fn flattened(&self) -> PlanarProfile {
        PlanarProfile {
            length_m: self.arc_length(),
            thickness_m: self.thickness_m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarProfile {
    length_m: f64,
    thickness_m: f64,
}

impl PlanarProfile {
    pub fn new(length_m: f64, thickness_m: f64) -> Result<Self> {
        require_positive("planar length", length_m)?;
        require_positive("thickness", thickness_m)?;
        Ok(Self {
            length_m,
            thickness_m,
        })
    }

    pub fn length_m(&self) -> f64 {
        self.length_m
    }

    pub fn thickness_m(&self) -> f64 {
        self.thickness_m
    }
}

/// Nominal apex gap and signed displacement of the movable electrode.
///
/// Not checked on construction; [`validate_geometry`] reports contact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapState {
    pub gap_m: f64,
    pub displacement_m: f64,
}

impl GapState {
    pub fn new(gap_m: f64, displacement_m: f64) -> Self {
        Self {
            gap_m,
            displacement_m,
        }
    }

    pub fn at_rest(gap_m: f64) -> Self {
        Self::new(gap_m, 0.0)
    }

    pub fn side_gap(&self, side: Side) -> f64 {
        match side {
            Side::One => self.gap_m - self.displacement_m,
            Side::Two => self.gap_m + self.displacement_m,
        }
    }
}

/// The two fixed electrodes flanking the movable finger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Gap `d − δ`, capacitance C₁.
    One,
    /// Gap `d + δ`, capacitance C₂.
    Two,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::One, Side::Two];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::One => f.write_str("side 1"),
            Side::Two => f.write_str("side 2"),
        }
    }
}

/// Fixed-electrode pairing. The name lists side 1 first for the mixed
/// curved variants only by convention of the device literature; the
/// authoritative assignment is [`Variant::faces`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Planar,
    Biconvex,
    Biconcave,
    ConcavoConvex,
    ConvexoConcave,
    PlanoConvex,
    PlanoConcave,
}

impl Variant {
    pub const ALL: [Variant; 7] = [
        Variant::Planar,
        Variant::Biconvex,
        Variant::Biconcave,
        Variant::ConcavoConvex,
        Variant::ConvexoConcave,
        Variant::PlanoConvex,
        Variant::PlanoConcave,
    ];

    /// The six curved variants.
    pub const CURVED: [Variant; 6] = [
        Variant::Biconvex,
        Variant::Biconcave,
        Variant::ConcavoConvex,
        Variant::ConvexoConcave,
        Variant::PlanoConvex,
        Variant::PlanoConcave,
    ];

    /// Face kind on (side 1, side 2).
    pub fn faces(self) -> (FaceKind, FaceKind) {
        use FaceKind::*;
        match self {
            Variant::Planar => (Flat, Flat),
            Variant::Biconvex => (Convex, Convex),
            Variant::Biconcave => (Concave, Concave),
            Variant::ConcavoConvex => (Convex, Concave),
            Variant::ConvexoConcave => (Concave, Convex),
            Variant::PlanoConvex => (Convex, Flat),
            Variant::PlanoConcave => (Concave, Flat),
        }
    }

    pub fn face_kind(self, side: Side) -> FaceKind {
        let (one, two) = self.faces();
        match side {
            Side::One => one,
            Side::Two => two,
        }
    }

    /// Both sides carry the same face, so the gain is odd in δ.
    pub fn is_symmetric(self) -> bool {
        let (one, two) = self.faces();
        one == two
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Planar => "planar",
            Variant::Biconvex => "biconvex",
            Variant::Biconcave => "biconcave",
            Variant::ConcavoConvex => "concavo-convex",
            Variant::ConvexoConcave => "convexo-concave",
            Variant::PlanoConvex => "plano-convex",
            Variant::PlanoConcave => "plano-concave",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == key || v.name().replace('-', "") == key)
            .ok_or_else(|| format!("unknown electrode variant `{s}`"))
    }
}

/// A variant together with the face geometry used on each side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElectrodeConfig {
    pub variant: Variant,
    pub profile: ArcProfile,
    pub planar_face: PlanarProfile,
}

impl ElectrodeConfig {
    /// Flat faces get the arc's length and thickness, so fixed and movable
    /// fingers share one length.
    pub fn new(variant: Variant, profile: ArcProfile) -> Self {
        Self {
            variant,
            profile,
            planar_face: profile.flattened(),
        }
    }

    /// Override the flat-face geometry. Only the all-flat variant may use a
    /// length different from the arc length.
    pub fn with_planar_face(mut self, face: PlanarProfile) -> Result<Self> {
        let mixed = self.variant != Variant::Planar
            && matches!(
                self.variant.faces(),
                (FaceKind::Flat, _) | (_, FaceKind::Flat)
            );
        if mixed {
            let arc = self.profile.arc_length();
            if (face.length_m() - arc).abs() > 1e-12 * arc.max(face.length_m()) {
                return Err(Error::InvalidParameter {
                    quantity: "planar length of a mixed variant",
                    requirement: "equal to the arc length",
                    value: face.length_m(),
                });
            }
        }
        self.planar_face = face;
        Ok(self)
    }

    pub fn face(&self, side: Side) -> Face {
        match self.variant.face_kind(side) {
            FaceKind::Convex => Face::Convex(self.profile),
            FaceKind::Concave => Face::Concave(self.profile),
            FaceKind::Flat => Face::Flat(self.planar_face),
        }
    }
}

/// Proof mass, suspension stiffness and number of sense combs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MechanicalModel {
    mass_kg: f64,
    spring_n_per_m: f64,
    comb_count: u32,
}

impl MechanicalModel {
    pub fn new(mass_kg: f64, spring_n_per_m: f64, comb_count: u32) -> Result<Self> {
        require_positive("proof mass", mass_kg)?;
        require_positive("spring constant", spring_n_per_m)?;
        if comb_count == 0 {
            return Err(Error::InvalidParameter {
                quantity: "comb count",
                requirement: ">= 1",
                value: 0.0,
            });
        }
        Ok(Self {
            mass_kg,
            spring_n_per_m,
            comb_count,
        })
    }

    pub fn mass_kg(&self) -> f64 {
        self.mass_kg
    }

    pub fn spring_n_per_m(&self) -> f64 {
        self.spring_n_per_m
    }

    pub fn comb_count(&self) -> u32 {
        self.comb_count
    }

    /// Static deflection `m·a/k` of an ideal spring.
    pub fn displacement(&self, accel_m_s2: f64) -> f64 {
        displacement(self, accel_m_s2)
    }

    /// Inverse of [`displacement`].
    pub fn acceleration_for(&self, displacement_m: f64) -> f64 {
        displacement_m * self.spring_n_per_m / self.mass_kg
    }

    /// Displacement per unit acceleration, `m/k` (s²).
    pub fn compliance(&self) -> f64 {
        self.mass_kg / self.spring_n_per_m
    }
}

impl Default for MechanicalModel {
    fn default() -> Self {
        Self {
            mass_kg: defaults::MASS_KG,
            spring_n_per_m: defaults::SPRING_N_PER_M,
            comb_count: defaults::COMB_COUNT,
        }
    }
}

pub fn displacement(mech: &MechanicalModel, accel_m_s2: f64) -> f64 {
    mech.mass_kg * accel_m_s2 / mech.spring_n_per_m
}

/// Rough proof-mass estimate from a solid rectangular plate of
/// polysilicon. Etch holes are ignored, so this overestimates.
pub fn estimate_proof_mass_kg(length_m: f64, width_m: f64, thickness_m: f64) -> f64 {
    length_m * width_m * thickness_m * POLYSILICON_DENSITY
}

/// Choice of charge-amplifier feedback capacitance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeedbackMode {
    /// `C_fb = C₁ + C₂` at every operating point.
    #[default]
    MatchedSum,
    /// `C_fb = 2·C₀`, with C₀ the mean rest capacitance of the two sides.
    Nominal,
}

impl FromStr for FeedbackMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "matched-sum" | "matchedsum" | "sum" => Ok(FeedbackMode::MatchedSum),
            "nominal" => Ok(FeedbackMode::Nominal),
            other => Err(format!("unknown feedback mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveModel {
    v_in_volts: f64,
    feedback_mode: FeedbackMode,
    permittivity_f_per_m: f64,
}

impl DriveModel {
    pub fn new(
        v_in_volts: f64,
        feedback_mode: FeedbackMode,
        permittivity_f_per_m: f64,
    ) -> Result<Self> {
        require_positive("excitation amplitude", v_in_volts)?;
        require_positive("permittivity", permittivity_f_per_m)?;
        Ok(Self {
            v_in_volts,
            feedback_mode,
            permittivity_f_per_m,
        })
    }

    pub fn v_in_volts(&self) -> f64 {
        self.v_in_volts
    }

    pub fn feedback_mode(&self) -> FeedbackMode {
        self.feedback_mode
    }

    pub fn permittivity(&self) -> f64 {
        self.permittivity_f_per_m
    }
}

impl Default for DriveModel {
    fn default() -> Self {
        Self {
            v_in_volts: defaults::V_IN_VOLTS,
            feedback_mode: FeedbackMode::MatchedSum,
            permittivity_f_per_m: VACUUM_PERMITTIVITY,
        }
    }
}

/// Which validity rule a side breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Apex (or flat) gap closed.
    NonPositiveGap,
    /// Concave edge gap `g − sagitta` at or below the minimum margin.
    EdgeContact,
    /// Concave gap at or beyond `2R`, outside the closed form's real domain.
    GapBeyondDiameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub side: Side,
    pub rule: Rule,
    /// Signed distance to the limit in meters; ≤ 0 for a violation.
    pub margin_m: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            Rule::NonPositiveGap => "gap closed",
            Rule::EdgeContact => "concave edge contact",
            Rule::GapBeyondDiameter => "gap >= 2R",
        };
        write!(f, "{}: {rule} (margin {:e} m)", self.side, self.margin_m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SideReport {
    pub side: Side,
    pub face: FaceKind,
    /// Gap seen by this side, `d ∓ δ`.
    pub gap_m: f64,
    /// Smallest physical gap along the face: the apex gap for convex and
    /// flat faces, the edge gap for concave ones.
    pub min_gap_m: f64,
    /// `T·√((2R − g)/g)` for concave faces.
    pub atanh_argument: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometryReport {
    pub sides: [SideReport; 2],
    pub violations: Vec<Violation>,
}

impl GeometryReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::Geometry(self.violations))
        }
    }
}

/// Checks that every side keeps a strictly positive physical gap and stays
/// inside the domain of its closed form. Never fails; violations are listed.
pub fn validate_geometry(config: &ElectrodeConfig, gap: GapState) -> GeometryReport {
    let mut violations = Vec::new();
    let sides = Side::BOTH.map(|side| {
        let g = gap.side_gap(side);
        let face = config.variant.face_kind(side);
        let mut report = SideReport {
            side,
            face,
            gap_m: g,
            min_gap_m: g,
            atanh_argument: None,
        };
        if !(g > 0.0) {
            violations.push(Violation {
                side,
                rule: Rule::NonPositiveGap,
                margin_m: g,
            });
            return report;
        }
        if face == FaceKind::Concave {
            let profile = &config.profile;
            let edge = g - profile.sagitta();
            report.min_gap_m = edge;
            let diameter = 2.0 * profile.radius_m();
            if g < diameter {
                report.atanh_argument = Some(concave_atanh_argument(profile, g));
            }
            let min_edge = MIN_EDGE_GAP_REL * profile.radius_m();
            if edge <= min_edge {
                violations.push(Violation {
                    side,
                    rule: Rule::EdgeContact,
                    margin_m: edge - min_edge,
                });
            }
            if g >= diameter {
                violations.push(Violation {
                    side,
                    rule: Rule::GapBeyondDiameter,
                    margin_m: diameter - g,
                });
            }
        }
        report
    });
    GeometryReport { sides, violations }
}

pub(crate) fn concave_atanh_argument(profile: &ArcProfile, gap_m: f64) -> f64 {
    profile.half_tan() * ((2.0 * profile.radius_m() - gap_m) / gap_m).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn displacement_examples() {
        let mech = MechanicalModel::new(2.6e-10, 1.0, 1).unwrap();
        assert_eq!(mech.displacement(0.0), 0.0);
        // 2.6e-10 * 9.80665 = 2.549729e-9
        assert!(rel(mech.displacement(STANDARD_GRAVITY), 2.549729e-9) < 1e-12);
        let stiffer = MechanicalModel::new(2.6e-10, 2.0, 1).unwrap();
        assert_eq!(
            stiffer.displacement(STANDARD_GRAVITY),
            mech.displacement(STANDARD_GRAVITY) / 2.0
        );
        assert_eq!(mech.displacement(-3.0), -mech.displacement(3.0));
    }

    #[test]
    fn arc_accessors() {
        let arc = ArcProfile::new(100e-6, 0.2, 2e-6).unwrap();
        assert!(rel(arc.arc_length(), 20e-6) < 1e-15);
        assert!(rel(arc.sagitta(), 100e-6 * (1.0 - 0.1f64.cos())) < 1e-12);
        assert!(rel(arc.half_tan(), 0.05f64.tan()) < 1e-15);
        assert!(ArcProfile::new(1e-6, PI, 1e-6).is_err());
        assert!(ArcProfile::new(-1.0, 0.1, 1e-6).is_err());
        assert!(ArcProfile::new(1e-6, 0.0, 1e-6).is_ok());
    }

    #[test]
    fn biconcave_standard_point_is_valid() {
        let arc = ArcProfile::new(100e-6, 0.2, 2e-6).unwrap();
        let cfg = ElectrodeConfig::new(Variant::Biconcave, arc);
        let report = validate_geometry(&cfg, GapState::at_rest(2e-6));
        assert!(report.is_valid(), "{:?}", report.violations);
        assert!((arc.sagitta() - 0.4996e-6).abs() < 1e-10);
        for side in report.sides {
            assert!(side.atanh_argument.unwrap() < 1.0);
            assert!(rel(side.min_gap_m, 2e-6 - arc.sagitta()) < 1e-14);
        }
    }

    #[test]
    fn concave_contact_has_unit_atanh_argument() {
        let arc = ArcProfile::new(100e-6, 0.2, 2e-6).unwrap();
        let cfg = ElectrodeConfig::new(Variant::PlanoConcave, arc);
        let contact = 2.0 * 100e-6 * (0.2f64 / 4.0).sin().powi(2);
        let report = validate_geometry(&cfg, GapState::at_rest(contact));
        assert!(!report.is_valid());
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].rule, Rule::EdgeContact);
        assert_eq!(report.violations[0].side, Side::One);
        let arg = report.sides[0].atanh_argument.unwrap();
        assert!((arg - 1.0).abs() < 1e-14, "{arg}");
    }

    #[test]
    fn planar_contact_is_reported_not_panicking() {
        let arc = ArcProfile::new(100e-6, 0.2, 2e-6).unwrap();
        let cfg = ElectrodeConfig::new(Variant::Planar, arc);
        let report = validate_geometry(&cfg, GapState::new(2e-6, 2e-6));
        assert_eq!(
            report.violations,
            vec![Violation {
                side: Side::One,
                rule: Rule::NonPositiveGap,
                margin_m: 0.0
            }]
        );
        assert!(matches!(report.into_result(), Err(Error::Geometry(_))));
    }

    #[test]
    fn concave_beyond_diameter() {
        let arc = ArcProfile::new(1e-6, 0.5, 2e-6).unwrap();
        let cfg = ElectrodeConfig::new(Variant::Biconcave, arc);
        let report = validate_geometry(&cfg, GapState::at_rest(2.5e-6));
        assert!(report
            .violations
            .iter()
            .all(|v| v.rule == Rule::GapBeyondDiameter));
        assert_eq!(report.violations.len(), 2);
        assert!(report.sides[0].atanh_argument.is_none());
    }

    #[test]
    fn side_assignment() {
        assert_eq!(
            Variant::ConcavoConvex.faces(),
            (FaceKind::Convex, FaceKind::Concave)
        );
        assert_eq!(
            Variant::ConvexoConcave.faces(),
            (FaceKind::Concave, FaceKind::Convex)
        );
        assert_eq!(
            Variant::PlanoConvex.faces(),
            (FaceKind::Convex, FaceKind::Flat)
        );
        assert_eq!(
            Variant::PlanoConcave.faces(),
            (FaceKind::Concave, FaceKind::Flat)
        );
        let symmetric: Vec<_> = Variant::ALL
            .into_iter()
            .filter(|v| v.is_symmetric())
            .collect();
        assert_eq!(
            symmetric,
            [Variant::Planar, Variant::Biconvex, Variant::Biconcave]
        );
    }

    #[test]
    fn mixed_variant_planar_face_matches_arc() {
        let arc = ArcProfile::new(100e-6, 0.2, 2e-6).unwrap();
        let cfg = ElectrodeConfig::new(Variant::PlanoConvex, arc);
        assert_eq!(cfg.planar_face.length_m(), arc.arc_length());
        let other = PlanarProfile::new(30e-6, 2e-6).unwrap();
        assert!(cfg.with_planar_face(other).is_err());
        assert!(ElectrodeConfig::new(Variant::Planar, arc)
            .with_planar_face(other)
            .is_ok());
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert_eq!(
            "PlanoConcave".parse::<Variant>().unwrap(),
            Variant::PlanoConcave
        );
        assert!("hyperbolic".parse::<Variant>().is_err());
    }

    #[test]
    fn plate_mass_estimate_is_close_to_default() {
        let m = estimate_proof_mass_kg(
            defaults::PROOF_MASS_LENGTH_M,
            defaults::PROOF_MASS_WIDTH_M,
            defaults::THICKNESS_M,
        );
        assert!(rel(m, defaults::MASS_KG) < 0.01, "{m}");
    }
}
