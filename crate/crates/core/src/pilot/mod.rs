//! Pilot-wave kinematics for closed-form wavefunctions.
//!
//! Wavefunctions here are analytic evaluators (plane waves, Gaussian
//! packets, Gaussian-slit paraxial modes, two-mode entangled states), not
//! PDE-evolved grids: every in-scope scenario has a closed-form external
//! field, which keeps solver error out of the guidance tests. Internally
//! hbar = m = c = 1; unit conversions happen at the CLI boundary.

mod equivariance;
mod field;
mod guidance;
mod trajectory;
mod twobody;

pub use equivariance::{equivariance_check, EquivarianceReport, HistogramBin};
pub use field::{ComplexField, PilotError, VectorFieldC};
pub use guidance::{guidance_velocity, poynting_velocity, quantum_potential, GuidanceLaw};
pub use trajectory::{integrate_trajectory, Trajectory, TrajectoryOutcome};
pub use twobody::{entangled_pair_velocity, integrate_pair, TwoBodyField};
