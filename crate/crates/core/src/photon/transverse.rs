//! Transverse spherical profiles of the nonlinear field equation and their
//! small-radius series, ground-state shooting, and self-similar scaling.

use super::profile::{FieldProfile, Geometry, PhotonError};
use crate::numerics::{integrate_ivp, Direction, IvpOptions, RadialGrid};

/// Right-hand side of the radial equation as a first-order system
/// `(E, E') -> (E', -2E'/rho + mass*E - E^3)`.
fn rhs(rho: f64, y: &[f64], dy: &mut [f64], mass: f64) {
    dy[0] = y[1];
    dy[1] = -2.0 / rho * y[1] + mass * y[0] - y[0] * y[0] * y[0];
}

/// Series seed coefficients (c, e) of `E = a + c rho^2 + e rho^4` for the
/// equation with linear coefficient `mass` (0 drops the linear term).
fn series_coeffs(a: f64, mass: f64) -> (f64, f64) {
    let c = (mass * a - a * a * a) / 6.0;
    let e = c * (mass - 3.0 * a * a) / 20.0;
    (c, e)
}

/// Large-amplitude small-radius series `a - (a^3/6) rho^2 + (a^5/40) rho^4`
/// and its derivative, the closed form quoted for the pure-cubic equation.
pub fn small_r_series(a: f64, rho: f64) -> (f64, f64) {
    let a3 = a * a * a;
    let a5 = a3 * a * a;
    let value = a - a3 / 6.0 * rho * rho + a5 / 40.0 * rho.powi(4);
    let deriv = -a3 / 3.0 * rho + a5 / 10.0 * rho.powi(3);
    (value, deriv)
}

/// Integrate the profile outward from a series seed near the origin.
///
/// `include_linear` selects the exact equation (`E - E^3`); without it the
/// pure-cubic large-amplitude limit (`-E^3`) is solved. Diverging tails are
/// returned as-is: shooting drivers read the divergence off the trace.
pub fn solve_transverse(
    a: f64,
    include_linear: bool,
    grid: &RadialGrid,
) -> Result<FieldProfile, PhotonError> {
    solve_radial(a, if include_linear { 1.0 } else { 0.0 }, grid, Geometry::Transverse)
}

pub(super) fn solve_radial(
    a: f64,
    mass: f64,
    grid: &RadialGrid,
    geometry: Geometry,
) -> Result<FieldProfile, PhotonError> {
    if a < 0.0 {
        return Err(PhotonError::NegativeAmplitude(a));
    }
    if a == 0.0 {
        return Ok(FieldProfile {
            grid: grid.clone(),
            e: vec![0.0; grid.len()],
            de: vec![0.0; grid.len()],
            geometry,
        });
    }
    let rho0 = grid.points()[0];
    let (c, e4) = series_coeffs(a, mass);
    let y0 = [
        a + c * rho0 * rho0 + e4 * rho0.powi(4),
        2.0 * c * rho0 + 4.0 * e4 * rho0.powi(3),
    ];
    let options = IvpOptions {
        blowup_limit: 1e12,
        ..IvpOptions::default()
    };
    let sol = integrate_ivp(
        |rho, y, dy| rhs(rho, y, dy, mass),
        &y0,
        grid,
        1e-12,
        &options,
    )?;
    // Pad unreached outer points by continuing the last value; shooting
    // objectives only look at the covered part, flagged by the pad.
    let n = grid.len();
    let covered = sol.states.len();
    let mut e = Vec::with_capacity(n);
    let mut de = Vec::with_capacity(n);
    for s in &sol.states {
        e.push(s[0]);
        de.push(s[1]);
    }
    for _ in covered..n {
        e.push(*e.last().unwrap());
        de.push(*de.last().unwrap());
    }
    Ok(FieldProfile {
        grid: grid.clone(),
        e,
        de,
        geometry,
    })
}

/// Shooting classification of an outward trace: +1 if the field never
/// crosses zero over the covered span, -1 if it does.
fn node_sign(profile: &FieldProfile) -> f64 {
    if profile.e.iter().any(|&v| v < 0.0) {
        -1.0
    } else {
        1.0
    }
}

/// Ground-state central amplitude of the equation with the linear term:
/// bisection on the node-count change of the decaying branch.
///
/// Below the matched amplitude the trace turns back up without a node; above
/// it the trace crosses zero. The returned amplitude has the nodeless
/// decaying profile.
pub fn ground_state_amplitude(
    bracket: (f64, f64),
    grid: &RadialGrid,
    tol: f64,
) -> Result<f64, PhotonError> {
    let (mut lo, mut hi) = bracket;
    let sign_at = |a: f64| -> Result<f64, PhotonError> {
        Ok(node_sign(&solve_transverse(a, true, grid)?))
    };
    let s_lo = sign_at(lo)?;
    let s_hi = sign_at(hi)?;
    if s_lo == s_hi {
        return Err(PhotonError::NoProfileInBracket { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if sign_at(mid)? == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Ground-state profile with the diverging numerical tail replaced by the
/// matched exponential asymptote `C e^(-rho)/rho` beyond the first upturn.
pub fn ground_state_profile(grid: &RadialGrid, tol: f64) -> Result<FieldProfile, PhotonError> {
    let a = ground_state_amplitude((1.0, 10.0), grid, tol)?;
    let mut p = solve_transverse(a, true, grid)?;
    // Trust the trace up to the last strictly-decreasing positive sample.
    let pts = grid.points().to_vec();
    let mut cut = p.e.len();
    for i in 1..p.e.len() {
        if p.e[i] <= 0.0 || p.e[i] > p.e[i - 1] {
            cut = i;
            break;
        }
    }
    if cut < p.e.len() {
        let anchor = cut - 1;
        let c = p.e[anchor] * pts[anchor] * pts[anchor].exp();
        for i in anchor + 1..p.e.len() {
            let r = pts[i];
            p.e[i] = c * (-r).exp() / r;
            p.de[i] = -c * (-r).exp() * (1.0 / r + 1.0 / (r * r));
        }
    }
    Ok(p)
}

/// Self-similar map: distances scaled by `alpha`, field by `1/alpha`.
///
/// The returned profile lives on the scaled grid (no interpolation), so for
/// the pure-cubic equation it is an exact solution again.
pub fn self_similar_scale(
    profile: &FieldProfile,
    alpha_scale: f64,
) -> Result<FieldProfile, PhotonError> {
    if !(alpha_scale > 0.0) {
        return Err(PhotonError::NonPositiveScale(alpha_scale));
    }
    let points: Vec<f64> = profile
        .grid
        .points()
        .iter()
        .map(|&p| p * alpha_scale)
        .collect();
    let grid = RadialGrid::new(points, Direction::Outward)?;
    Ok(FieldProfile {
        grid,
        e: profile.e.iter().map(|&v| v / alpha_scale).collect(),
        de: profile
            .de
            .iter()
            .map(|&v| v / (alpha_scale * alpha_scale))
            .collect(),
        geometry: profile.geometry,
    })
}

/// Maximum interior residual of the radial equation, with the second
/// derivative reconstructed from the stored first derivative by centered
/// differences. Used as the oracle for scaling invariance.
pub fn residual_max(profile: &FieldProfile, include_linear: bool) -> f64 {
    let mass = if include_linear { 1.0 } else { 0.0 };
    let pts = profile.grid.points();
    let mut worst = 0.0f64;
    for i in 1..pts.len() - 1 {
        let d2 = (profile.de[i + 1] - profile.de[i - 1]) / (pts[i + 1] - pts[i - 1]);
        let e = profile.e[i];
        let r = d2 + 2.0 / pts[i] * profile.de[i] - mass * e + e * e * e;
        worst = worst.max(r.abs());
    }
    worst
}
