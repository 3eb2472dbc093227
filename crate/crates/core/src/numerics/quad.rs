//! Radial quadrature: composite trapezoid over a sampled profile.
//!
//! Second-order accuracy is enough everywhere in this crate; acceptance
//! tolerances sit at 1e-6 and above and the integrands are resampled from
//! the adaptive solver's dense output onto grids the caller controls.

use std::fmt;

/// Volume weights for radial integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialWeight {
    /// 4 pi rho^2: volume element of a spherically symmetric density.
    RhoSquared,
    /// 4 pi rho^3: the extra rho of the spin integrand.
    RhoCubed,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QuadError {
    /// Fewer than two samples.
    TooShort,
    /// Sample count does not match the abscissa count.
    LengthMismatch { points: usize, values: usize },
    /// Non-finite sample encountered.
    NonFinite,
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooShort => write!(f, "quadrature needs at least 2 samples"),
            Self::LengthMismatch { points, values } => {
                write!(f, "grid has {points} points but {values} values")
            }
            Self::NonFinite => write!(f, "non-finite sample in quadrature input"),
        }
    }
}

impl std::error::Error for QuadError {}

/// Composite trapezoid of `values` sampled at `points`.
pub fn trapezoid(points: &[f64], values: &[f64]) -> Result<f64, QuadError> {
    if points.len() != values.len() {
        return Err(QuadError::LengthMismatch {
            points: points.len(),
            values: values.len(),
        });
    }
    if points.len() < 2 {
        return Err(QuadError::TooShort);
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(QuadError::NonFinite);
    }
    let mut acc = 0.0;
    for i in 1..points.len() {
        acc += 0.5 * (points[i] - points[i - 1]) * (values[i] + values[i - 1]);
    }
    Ok(acc)
}

/// Integral of `f(rho) * w(rho)` with `w` one of the radial volume weights.
pub fn radial_integral(
    points: &[f64],
    values: &[f64],
    weight: RadialWeight,
) -> Result<f64, QuadError> {
    if points.len() != values.len() {
        return Err(QuadError::LengthMismatch {
            points: points.len(),
            values: values.len(),
        });
    }
    let four_pi = 4.0 * std::f64::consts::PI;
    let weighted: Vec<f64> = points
        .iter()
        .zip(values)
        .map(|(&rho, &v)| match weight {
            RadialWeight::RhoSquared => four_pi * rho * rho * v,
            RadialWeight::RhoCubed => four_pi * rho * rho * rho * v,
        })
        .collect();
    trapezoid(points, &weighted)
}
