//! Differential bridge readout: C₁/C₂ for each electrode variant, the
//! charge-amplifier gain `G = −(C₂ − C₁)/C_fb`, and its exact sensitivity
//! to acceleration.
//!
//! The sensitivity is the chain rule through the exact gap derivatives of
//! the closed forms: `dV/da = V_in · (m/k) · dG/dδ`, where
//! `dC₁/dδ = −∂C/∂d(d − δ)` and `dC₂/dδ = +∂C/∂d(d + δ)`.

use serde::Serialize;

use crate::capacitance::Face;
use crate::error::{Error, Result};
use crate::model::{
    validate_geometry, DriveModel, ElectrodeConfig, FeedbackMode, GapState, MechanicalModel, Side,
    STANDARD_GRAVITY,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BridgeState {
    /// Side 1, gap `d − δ`.
    pub c1_f: f64,
    /// Side 2, gap `d + δ`.
    pub c2_f: f64,
    pub c_fb_f: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransductionPoint {
    pub accel_m_s2: f64,
    pub displacement_m: f64,
    pub bridge: BridgeState,
    pub gain: f64,
    pub v_out_volts: f64,
}

/// Sensitivity of the output voltage to acceleration.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Sensitivity {
    pub volts_per_g: f64,
}

impl Sensitivity {
    pub fn from_volts_per_m_s2(v: f64) -> Self {
        Self {
            volts_per_g: v * STANDARD_GRAVITY,
        }
    }

    pub fn mv_per_g(&self) -> f64 {
        self.volts_per_g * 1e3
    }

    pub fn volts_per_m_s2(&self) -> f64 {
        self.volts_per_g / STANDARD_GRAVITY
    }
}

/// Evaluates C₁ at `d − δ`, C₂ at `d + δ` and the feedback capacitance.
pub fn bridge_capacitances(
    config: &ElectrodeConfig,
    gap: GapState,
    drive: &DriveModel,
) -> Result<BridgeState> {
    validate_geometry(config, gap).into_result()?;
    let eps = drive.permittivity();
    let c1_f = side_capacitance(config, Side::One, gap.side_gap(Side::One), eps)?;
    let c2_f = side_capacitance(config, Side::Two, gap.side_gap(Side::Two), eps)?;
    let c_fb_f = match drive.feedback_mode() {
        FeedbackMode::MatchedSum => c1_f + c2_f,
        FeedbackMode::Nominal => rest_feedback(config, gap.gap_m, eps)?,
    };
    Ok(BridgeState { c1_f, c2_f, c_fb_f })
}

fn side_capacitance(config: &ElectrodeConfig, side: Side, gap_m: f64, eps: f64) -> Result<f64> {
    config.face(side).capacitance(gap_m, eps)
}

/// `2·C₀` with C₀ the mean of both sides at rest, i.e. `C₁(d) + C₂(d)`.
fn rest_feedback(config: &ElectrodeConfig, gap_m: f64, eps: f64) -> Result<f64> {
    Ok(side_capacitance(config, Side::One, gap_m, eps)?
        + side_capacitance(config, Side::Two, gap_m, eps)?)
}

/// `C₁ − C₂`. Matched flat faces use the closed difference
/// `εhb·2δ/((d−δ)(d+δ))`, which stays accurate for δ ≪ d.
fn bridge_difference(
    config: &ElectrodeConfig,
    gap: GapState,
    bridge: &BridgeState,
    eps: f64,
) -> f64 {
    match (config.face(Side::One), config.face(Side::Two)) {
        (Face::Flat(a), Face::Flat(b)) if a == b => {
            let g1 = gap.side_gap(Side::One);
            let g2 = gap.side_gap(Side::Two);
            eps * a.thickness_m() * a.length_m() * (2.0 * gap.displacement_m) / (g1 * g2)
        }
        _ => bridge.c1_f - bridge.c2_f,
    }
}

/// One comb of the sense structure with its suspension and drive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Transducer {
    pub config: ElectrodeConfig,
    /// Nominal apex gap `d`.
    pub gap_m: f64,
    pub mech: MechanicalModel,
    pub drive: DriveModel,
}

impl Transducer {
    /// Fails if the rest position is already geometrically invalid.
    pub fn new(
        config: ElectrodeConfig,
        gap_m: f64,
        mech: MechanicalModel,
        drive: DriveModel,
    ) -> Result<Self> {
        validate_geometry(&config, GapState::at_rest(gap_m)).into_result()?;
        Ok(Self {
            config,
            gap_m,
            mech,
            drive,
        })
    }

    pub fn gap_state(&self, accel_m_s2: f64) -> GapState {
        GapState::new(self.gap_m, self.mech.displacement(accel_m_s2))
    }

    /// Open interval of displacements `(δ_min, δ_max)` for which both sides
    /// stay valid.
    pub fn displacement_limits(&self) -> (f64, f64) {
        // Side 1 closes as δ grows, side 2 as δ shrinks. The concave 2R
        // ceiling bounds the widening side.
        let closing = |side: Side| -> f64 {
            let face = self.config.face(side);
            match face {
                Face::Concave(arc) => {
                    self.gap_m - arc.sagitta() - crate::model::MIN_EDGE_GAP_REL * arc.radius_m()
                }
                _ => self.gap_m,
            }
        };
        let opening = |side: Side| -> f64 {
            match self.config.face(side) {
                Face::Concave(arc) => 2.0 * arc.radius_m() - self.gap_m,
                _ => f64::INFINITY,
            }
        };
        let max = closing(Side::One).min(opening(Side::Two));
        let min = -(closing(Side::Two).min(opening(Side::One)));
        (min, max)
    }

    pub fn acceleration_limits(&self) -> (f64, f64) {
        let (lo, hi) = self.displacement_limits();
        (
            self.mech.acceleration_for(lo),
            self.mech.acceleration_for(hi),
        )
    }

    fn checked_state(&self, accel_m_s2: f64) -> Result<GapState> {
        let gap = self.gap_state(accel_m_s2);
        if validate_geometry(&self.config, gap).is_valid() {
            Ok(gap)
        } else {
            let (min_accel_m_s2, max_accel_m_s2) = self.acceleration_limits();
            Err(Error::OverRange {
                accel_m_s2,
                min_accel_m_s2,
                max_accel_m_s2,
            })
        }
    }

    pub fn bridge(&self, accel_m_s2: f64) -> Result<BridgeState> {
        let gap = self.checked_state(accel_m_s2)?;
        bridge_capacitances(&self.config, gap, &self.drive)
    }

    pub fn gain(&self, accel_m_s2: f64) -> Result<TransductionPoint> {
        let gap = self.checked_state(accel_m_s2)?;
        let bridge = bridge_capacitances(&self.config, gap, &self.drive)?;
        let difference = bridge_difference(&self.config, gap, &bridge, self.drive.permittivity());
        let gain = difference / bridge.c_fb_f;
        Ok(TransductionPoint {
            accel_m_s2,
            displacement_m: gap.displacement_m,
            bridge,
            gain,
            v_out_volts: self.drive.v_in_volts() * gain,
        })
    }

    /// Exact `dG/dδ` at the given acceleration.
    pub fn gain_slope(&self, accel_m_s2: f64) -> Result<f64> {
        let gap = self.checked_state(accel_m_s2)?;
        let bridge = bridge_capacitances(&self.config, gap, &self.drive)?;
        let eps = self.drive.permittivity();
        let dc1 = -self
            .config
            .face(Side::One)
            .dcap_dgap(gap.side_gap(Side::One), eps)?;
        let dc2 = self
            .config
            .face(Side::Two)
            .dcap_dgap(gap.side_gap(Side::Two), eps)?;
        Ok(match self.drive.feedback_mode() {
            FeedbackMode::MatchedSum => {
                let sum = bridge.c1_f + bridge.c2_f;
                2.0 * (dc1 * bridge.c2_f - dc2 * bridge.c1_f) / (sum * sum)
            }
            FeedbackMode::Nominal => (dc1 - dc2) / bridge.c_fb_f,
        })
    }

    /// Per-comb `dV_out/da` at the given operating acceleration.
    pub fn sensitivity(&self, accel_m_s2: f64) -> Result<Sensitivity> {
        let slope = self.gain_slope(accel_m_s2)?;
        Ok(Sensitivity::from_volts_per_m_s2(
            self.drive.v_in_volts() * self.mech.compliance() * slope,
        ))
    }
}

/// Per-comb sensitivity scaled by the comb count, `S_net = N·S`.
///
/// In the ratio readout the comb count cancels between numerator and
/// feedback, so this scaling is a convention carried along for reporting,
/// not a consequence of the bridge model.
pub fn net_sensitivity(per_comb: Sensitivity, mech: &MechanicalModel) -> Sensitivity {
    Sensitivity {
        volts_per_g: per_comb.volts_per_g * f64::from(mech.comb_count()),
    }
}
