use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{quantity} must be {requirement}, got {value:e}")]
    InvalidParameter {
        quantity: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("gap must be strictly positive, got {gap_m:e} m")]
    NonPositiveGap { gap_m: f64 },

    /// The concave arc edge touches (or comes within the minimum margin of)
    /// the movable electrode; the tanh⁻¹ argument has reached 1.
    #[error(
        "concave edge contact: gap {gap_m:e} m leaves edge gap {edge_gap_m:e} m \
         (minimum {min_edge_gap_m:e} m, tanh⁻¹ argument {atanh_argument})"
    )]
    EdgeContact {
        gap_m: f64,
        edge_gap_m: f64,
        min_edge_gap_m: f64,
        atanh_argument: f64,
    },

    #[error("concave closed form requires gap < 2R: gap {gap_m:e} m, 2R = {diameter_m:e} m")]
    GapBeyondDiameter { gap_m: f64, diameter_m: f64 },

    #[error("invalid geometry: {}", format_violations(.0))]
    Geometry(Vec<Violation>),

    #[error(
        "acceleration {accel_m_s2:e} m/s² is over range: valid accelerations lie strictly \
         inside ({min_accel_m_s2:e}, {max_accel_m_s2:e}) m/s²"
    )]
    OverRange {
        accel_m_s2: f64,
        min_accel_m_s2: f64,
        max_accel_m_s2: f64,
    },

    #[error(
        "quadrature did not converge within {subdivisions} subdivisions \
         (value {value:e}, error estimate {error_estimate:e})"
    )]
    QuadratureNonConvergence {
        subdivisions: usize,
        value: f64,
        error_estimate: f64,
    },

    #[error("no admissible finite-difference step around x = {x:e}")]
    NoAdmissibleStep { x: f64 },

    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub(crate) fn require_positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            quantity,
            requirement: "finite and > 0",
            value,
        })
    }
}
