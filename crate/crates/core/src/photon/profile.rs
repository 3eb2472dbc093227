use crate::numerics::{GridError, IvpError, RadialGrid};
use std::fmt;

/// Whether a profile is the transverse (Cartesian-component) or longitudinal
/// (radial-vector) geometry. Both satisfy the same scalar radial equation
/// (the scalar Laplacian applied to the field magnitude); the tag records
/// which physical reading applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Transverse,
    Longitudinal,
}

#[derive(Debug)]
pub enum PhotonError {
    Grid(GridError),
    Ivp(IvpError),
    /// Central amplitude must be non-negative.
    NegativeAmplitude(f64),
    /// Scale factor must be strictly positive.
    NonPositiveScale(f64),
    /// No sign change of the shooting objective in the scanned bracket.
    NoProfileInBracket { lo: f64, hi: f64 },
    /// Profile does not decay at the grid edge; energy is untrustworthy.
    NonDecayingTail { fraction: f64 },
}

impl fmt::Display for PhotonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Grid(e) => write!(f, "grid: {e}"),
            Self::Ivp(e) => write!(f, "integration: {e}"),
            Self::NegativeAmplitude(a) => write!(f, "central amplitude must be >= 0, got {a}"),
            Self::NonPositiveScale(s) => write!(f, "scale factor must be > 0, got {s}"),
            Self::NoProfileInBracket { lo, hi } => {
                write!(f, "no decaying profile found for amplitudes in [{lo}, {hi}]")
            }
            Self::NonDecayingTail { fraction } => write!(
                f,
                "tail carries fraction {fraction:.2e} of the energy; profile does not decay"
            ),
        }
    }
}

impl std::error::Error for PhotonError {}

impl From<GridError> for PhotonError {
    fn from(e: GridError) -> Self {
        Self::Grid(e)
    }
}

impl From<IvpError> for PhotonError {
    fn from(e: IvpError) -> Self {
        Self::Ivp(e)
    }
}

/// Sampled dimensionless field profile E(rho) with its derivative.
#[derive(Debug, Clone)]
pub struct FieldProfile {
    pub grid: RadialGrid,
    pub e: Vec<f64>,
    pub de: Vec<f64>,
    pub geometry: Geometry,
}

impl FieldProfile {
    /// Cubic Hermite interpolation of E at an arbitrary radius inside the
    /// grid span (clamped at the ends).
    pub fn sample(&self, rho: f64) -> f64 {
        let pts = self.grid.points();
        let n = pts.len();
        if rho <= pts[0] {
            return self.e[0];
        }
        if rho >= pts[n - 1] {
            return self.e[n - 1];
        }
        let mut i = match pts.binary_search_by(|p| p.partial_cmp(&rho).unwrap()) {
            Ok(i) => return self.e[i],
            Err(i) => i - 1,
        };
        if i >= n - 1 {
            i = n - 2;
        }
        let h = pts[i + 1] - pts[i];
        let t = (rho - pts[i]) / h;
        let (e0, e1) = (self.e[i], self.e[i + 1]);
        let (m0, m1) = (self.de[i] * h, self.de[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * e0
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * e1
            + (t3 - t2) * m1
    }

    /// Central (first-grid-point) field value.
    pub fn central(&self) -> f64 {
        self.e[0]
    }
}
