//! Capacitance, bridge transduction and sensitivity of comb-drive
//! accelerometers whose electrodes are circular arcs instead of flat plates.
//!
//! Closed forms live in [`capacitance`]; [`oracles`] recomputes the same
//! quantities by quadrature and finite differences.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacitance;
pub mod cli;
pub mod error;
pub mod model;
pub mod oracles;
pub mod sweep;
pub mod transduction;

pub use capacitance::{cap_concave, cap_convex, cap_planar, dcap_dgap, Face, FaceKind};
pub use error::{Error, Result};
pub use model::{
    validate_geometry, ArcProfile, DriveModel, ElectrodeConfig, FeedbackMode, GapState,
    MechanicalModel, PlanarProfile, Side, Variant,
};
pub use oracles::{fd_derivative, quad_capacitance, FdScheme, FiniteDiffSpec, QuadratureSpec};
pub use sweep::{
    gain_curve, maximize_sensitivity, sensitivity_sweep, ArcMode, GridRange, SharedParams,
    SweepPlan,
};
pub use transduction::{net_sensitivity, Sensitivity, Transducer};
