//! Self-field Dirac-Poisson soliton: dimensionless radial system, inward
//! shooting, integral observables, similarity transformations, and the
//! Klein-Gordon companion that exhibits the soliton obstruction.
//!
//! Dimensionless variables: rho = r/r0 with r0 the reduced Compton length,
//! beta = |E|/mc^2, alpha the coupling, theta = beta - sign(eE) (alpha/2) V.
//! The radial system integrated inward from the asymptotic seeds is
//!
//! ```text
//! g' = +(1+kappa) g/rho + (1+theta) f
//! f' = +(1-kappa) f/rho + (1-theta) g
//! V'' = -(2/rho) V' - sign(eE) (f^2 + g^2)
//! ```
//!
//! with decaying wave seeds A rho^m exp(-k rho) (k = sqrt(1-beta^2), m the
//! Coulomb power correction of the B/rho potential tail) and V = B/rho.
//!
//! Sign structure note: the 1/rho centrifugal terms enter with the plus
//! sign, not the minus of the textbook radial reduction. The choice
//! matters structurally: with these signs the wave pair is automatically
//! regular at the origin (both local exponents are non-negative), so
//! shooting only has to regularize the potential, and an origin-regular
//! solution exists for every wave amplitude. That one-parameter freedom is
//! exactly what the three physical constraints (spin, charge, mass-energy)
//! then consume. The far field decays at rate sqrt(1-beta^2) either way;
//! the minus-sign variant instead makes the wave origin-singular, which
//! pins the amplitude too and leaves nothing for the constraints to act
//! on. The decaying tail carries f g < 0, so the spin integral is reported
//! as a magnitude (the spinor phase convention fixes only its sign).

mod kg;
mod observables;
mod shoot;
mod similarity;
mod solve;
mod system;

pub use kg::{dirac_control_scan, kg_companion_scan, kg_effective_potential_demo,
    kg_free_profile, KgFeasibility, KgPotentialRow};
pub use observables::{observables, DiracObservables};
pub use shoot::{match_amplitudes, shoot_from_infinity, ShotDiagnostics, ShotOutcome, ShotTrace};
pub use similarity::similarity_transform;
pub use solve::{solve_at, solve_member, solve_soliton, ConstraintScanRow, DiracSolution,
    SolveSettings};
pub use system::{dirac_rhs, DiracError, DiracParams, DiracState};
