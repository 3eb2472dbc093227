//! Shared numerical kernels.
//!
//! Everything in this module is pure: functions map inputs to outputs with no
//! shared mutable state, so they are safe to call from many threads at once.
//! There is no internal parallelism.
//!
//! | Area      | Contents                                              |
//! |-----------|-------------------------------------------------------|
//! | grids     | strictly monotone radial grids with a direction tag   |
//! | constants | configurable CODATA-style physical constants          |
//! | ode       | Dormand-Prince 5(4) with dense output onto a grid     |
//! | roots     | bisection and damped Broyden root finding             |
//! | quad      | composite-trapezoid radial quadrature                 |
//! | rng       | xoshiro256++ PRNG for reproducible sampling           |

mod constants;
mod grid;
mod ode;
mod quad;
mod rng;
mod root;

pub use constants::PhysicalConstants;
pub use grid::{Direction, GridError, RadialGrid};
pub use ode::{integrate_ivp, IvpError, IvpOptions, IvpOutcome, IvpSolution};
pub use quad::{radial_integral, trapezoid, QuadError, RadialWeight};
pub use rng::Rng;
pub use root::{find_root2, find_root_scalar, RootError, SolveReport};
