//! Photon-soliton profiles and the Uehling-potential family.
//!
//! The central object is the dimensionless nonlinear field equation
//!
//! ```text
//! E'' + (2/rho) E' = E - E^3        (exact, "with linear term")
//! E'' + (2/rho) E' =   - E^3        (pure cubic, large-amplitude limit)
//! ```
//!
//! integrated outward from a series seed at the origin. Field amplitudes are
//! measured in units of `E_b = E_cl / sqrt(2)` and distances in units of
//! `r_b = r_e / sqrt(pi)`; the energy unit is `eps_b = E_b^2 r_b^3`.

mod dispersion;
mod energy;
mod longitudinal;
mod profile;
mod transverse;
mod uehling;
mod units;

pub use dispersion::{external_dispersion, DispersionVariant};
pub use energy::{soliton_energy, soliton_family, FamilyMember, SolitonEnergy};
pub use longitudinal::{effective_charge_density, solve_longitudinal};
pub use profile::{FieldProfile, Geometry, PhotonError};
pub use transverse::{
    ground_state_amplitude, ground_state_profile, residual_max, self_similar_scale,
    small_r_series, solve_transverse,
};
pub use uehling::{uehling_point_asymptotics, uehling_vacuum, UehlingBranch, UehlingPointValue,
    UehlingVacuum};
pub use units::PhotonUnits;
