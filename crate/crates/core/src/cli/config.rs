//! JSON run configuration. Lengths are micrometers; everything else is SI.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    defaults, ArcProfile, DriveModel, FeedbackMode, MechanicalModel, Variant, VACUUM_PERMITTIVITY,
};
use crate::sweep::{ArcMode, GridRange, SharedParams, SweepPlan};

/// Micrometers to meters. Dividing by the exact 1e6 rounds once, so
/// `2 µm` becomes exactly the literal `2e-6`.
pub fn um(x: f64) -> f64 {
    x / 1e6
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub geometry: GeometryConfig,
    pub gap_um: f64,
    pub mech: MechConfig,
    pub drive: DriveConfig,
    pub sweep: SweepConfig,
    pub output: OutputConfig,
}

/// Arc geometry. Give at most one of `phi_rad` and `arc_um`; with neither,
/// φ defaults to 0.2 rad.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeometryConfig {
    pub r_um: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_rad: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arc_um: Option<f64>,
    pub h_um: f64,
    /// Flat-face length for `capacitance --kind flat`. Transducers give flat
    /// faces the arc length instead.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_um: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MechConfig {
    pub m_kg: f64,
    pub k_n_per_m: f64,
    pub combs: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DriveConfig {
    pub v_in_v: f64,
    pub feedback_mode: FeedbackMode,
    pub permittivity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub variants: Vec<Variant>,
    pub arc_mode: ArcMode,
    pub arc_um: RangeConfig,
    pub accel_g: RangeConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeConfig {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            geometry: GeometryConfig::default(),
            gap_um: 2.0,
            mech: MechConfig::default(),
            drive: DriveConfig::default(),
            sweep: SweepConfig::default(),
            output: OutputConfig::default(),
        }
    }
}

impl Default for GeometryConfig {
    fn default() -> Self {
        Self {
            r_um: 100.0,
            phi_rad: None,
            arc_um: None,
            h_um: 2.0,
            b_um: None,
        }
    }
}

impl Default for MechConfig {
    fn default() -> Self {
        Self {
            m_kg: defaults::MASS_KG,
            k_n_per_m: defaults::SPRING_N_PER_M,
            combs: defaults::COMB_COUNT,
        }
    }
}

impl Default for DriveConfig {
    fn default() -> Self {
        Self {
            v_in_v: defaults::V_IN_VOLTS,
            feedback_mode: FeedbackMode::MatchedSum,
            permittivity: VACUUM_PERMITTIVITY,
        }
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            variants: Variant::ALL.to_vec(),
            arc_mode: ArcMode::VaryPhiFixedR,
            arc_um: RangeConfig {
                min: 5.0,
                max: 60.0,
                points: 20,
            },
            accel_g: RangeConfig {
                min: -10.0,
                max: 10.0,
                points: 21,
            },
        }
    }
}

/// Parse failure with the JSON path of the offending field.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: at `{field}`: {message}")]
    Parse {
        path: PathBuf,
        field: String,
        message: String,
    },
}

impl RunConfig {
    pub fn from_json_str(text: &str, origin: &Path) -> std::result::Result<Self, ConfigError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| ConfigError::Parse {
            path: origin.to_path_buf(),
            field: e.path().to_string(),
            message: e.into_inner().to_string(),
        })
    }

    pub fn load(path: &Path) -> std::result::Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&text, path)
    }

    pub fn profile(&self) -> Result<ArcProfile> {
        let g = &self.geometry;
        let (r, h) = (um(g.r_um), um(g.h_um));
        match (g.phi_rad, g.arc_um) {
            (Some(_), Some(_)) => Err(Error::InvalidPlan(
                "geometry: give phi_rad or arc_um, not both".into(),
            )),
            (None, Some(arc)) => ArcProfile::from_arc_length(um(arc), r, h),
            (phi, None) => ArcProfile::new(r, phi.unwrap_or(defaults::ANGULAR_EXTENT_RAD), h),
        }
    }

    pub fn mechanical(&self) -> Result<MechanicalModel> {
        MechanicalModel::new(self.mech.m_kg, self.mech.k_n_per_m, self.mech.combs)
    }

    pub fn drive_model(&self) -> Result<DriveModel> {
        DriveModel::new(
            self.drive.v_in_v,
            self.drive.feedback_mode,
            self.drive.permittivity,
        )
    }

    pub fn gap_m(&self) -> f64 {
        um(self.gap_um)
    }

    pub fn shared(&self) -> Result<SharedParams> {
        Ok(SharedParams {
            base_profile: self.profile()?,
            arc_mode: self.sweep.arc_mode,
            gap_m: self.gap_m(),
            mech: self.mechanical()?,
            drive: self.drive_model()?,
        })
    }

    pub fn plan(&self) -> Result<SweepPlan> {
        let s = &self.sweep;
        let plan = SweepPlan {
            variants: s.variants.clone(),
            arc_range_m: GridRange::new(um(s.arc_um.min), um(s.arc_um.max), s.arc_um.points)?,
            accel_range_g: GridRange::new(s.accel_g.min, s.accel_g.max, s.accel_g.points)?,
            shared: self.shared()?,
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
