//! Longitudinal (radial-vector) profiles.
//!
//! The equation is the same scalar radial form used for the transverse case
//! with a configurable linear coefficient ("mass parameter"); what changes
//! is the physical reading and the regularity requirement E'(0) = 0, which
//! makes the returned amplitude discrete: shooting over the center value
//! picks the nodeless decaying branch for the given mass parameter.

use super::profile::{FieldProfile, Geometry, PhotonError};
use super::transverse::solve_radial;
use crate::numerics::RadialGrid;

/// Discrete longitudinal profile for the given mass parameter, found by
/// bisection on the node-count change over the scanned center amplitudes.
pub fn solve_longitudinal(
    mass_param: f64,
    grid: &RadialGrid,
) -> Result<FieldProfile, PhotonError> {
    if mass_param == 0.0 {
        // No linear term: the zero profile is the only decaying solution the
        // scan can bracket.
        return solve_radial(0.0, 0.0, grid, Geometry::Longitudinal);
    }
    // Self-similar rescaling of m = 1: amplitudes scale by sqrt(m), radii by
    // 1/sqrt(m); bracket accordingly.
    let s = mass_param.sqrt();
    let (mut lo, mut hi) = (1.0 * s, 10.0 * s);
    let sign_at = |a: f64| -> Result<f64, PhotonError> {
        let p = solve_radial(a, mass_param, grid, Geometry::Longitudinal)?;
        Ok(if p.e.iter().any(|&v| v < 0.0) { -1.0 } else { 1.0 })
    };
    let s_lo = sign_at(lo)?;
    if s_lo == sign_at(hi)? {
        return Err(PhotonError::NoProfileInBracket { lo, hi });
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if sign_at(mid)? == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    solve_radial(0.5 * (lo + hi), mass_param, grid, Geometry::Longitudinal)
}

/// Effective charge density of a longitudinal profile,
/// `div E = (2/rho) E + E'`, sampled on the profile grid.
pub fn effective_charge_density(profile: &FieldProfile) -> Vec<f64> {
    profile
        .grid
        .points()
        .iter()
        .zip(profile.e.iter().zip(&profile.de))
        .map(|(&rho, (&e, &de))| 2.0 / rho * e + de)
        .collect()
}
