use std::fmt;

/// Parameters of the dimensionless Dirac-Poisson system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracParams {
    /// Angular quantum number, +-1.
    pub kappa: i32,
    /// Dimensionless coupling.
    pub alpha: f64,
    /// Energy ratio |E|/mc^2, inside (0, 1) for bound states.
    pub beta: f64,
    /// sign(eE); the electron default is -1. Flipping it flips V and
    /// nothing else.
    pub sign_e_e: f64,
    /// Outer start radius of the inward integration.
    pub rho_max: f64,
    /// Inner stop radius (> 0; the origin is singular).
    pub rho_min: f64,
}

impl DiracParams {
    pub fn new(kappa: i32, alpha: f64, beta: f64) -> Result<Self, DiracError> {
        let p = Self {
            kappa,
            alpha,
            beta,
            sign_e_e: -1.0,
            rho_max: 30.0,
            rho_min: 1e-4,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), DiracError> {
        if self.kappa != 1 && self.kappa != -1 {
            return Err(DiracError::BadKappa(self.kappa));
        }
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return Err(DiracError::BetaOutOfWindow(self.beta));
        }
        if !(self.alpha > 0.0) {
            return Err(DiracError::NonPositiveAlpha(self.alpha));
        }
        if !(self.rho_min > 0.0 && self.rho_min < self.rho_max) {
            return Err(DiracError::BadRadialSpan {
                rho_min: self.rho_min,
                rho_max: self.rho_max,
            });
        }
        if self.sign_e_e != 1.0 && self.sign_e_e != -1.0 {
            return Err(DiracError::BadSign(self.sign_e_e));
        }
        Ok(())
    }

    /// Far-field wavefunction decay rate sqrt(1 - beta^2).
    pub fn decay_rate(&self) -> f64 {
        (1.0 - self.beta * self.beta).sqrt()
    }

    /// theta(V) = beta - sign(eE) (alpha/2) V, the effective energy ratio.
    pub fn theta(&self, v: f64) -> f64 {
        self.beta - self.sign_e_e * 0.5 * self.alpha * v
    }
}

/// State vector (g, f, V, dV/drho) at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracState {
    pub g_hat: f64,
    pub f_hat: f64,
    pub v_hat: f64,
    pub dv_hat: f64,
}

impl DiracState {
    pub fn from_slice(y: &[f64]) -> Self {
        Self {
            g_hat: y[0],
            f_hat: y[1],
            v_hat: y[2],
            dv_hat: y[3],
        }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.g_hat, self.f_hat, self.v_hat, self.dv_hat]
    }

    pub fn is_finite(&self) -> bool {
        self.g_hat.is_finite()
            && self.f_hat.is_finite()
            && self.v_hat.is_finite()
            && self.dv_hat.is_finite()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DiracError {
    BadKappa(i32),
    BetaOutOfWindow(f64),
    NonPositiveAlpha(f64),
    BadRadialSpan { rho_min: f64, rho_max: f64 },
    BadSign(f64),
    NonPositiveRho(f64),
    NonPositiveTau(f64),
    /// Inner amplitude matching failed; diagnostics carried along.
    MatchingFailed(String),
    /// Constraint scan found no admissible bracket.
    NoConstraintBracket(String),
    Grid(crate::numerics::GridError),
    Ivp(crate::numerics::IvpError),
}

impl fmt::Display for DiracError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadKappa(k) => write!(f, "kappa must be +1 or -1, got {k}"),
            Self::BetaOutOfWindow(b) => {
                write!(f, "beta must lie in the bound-state window (0, 1), got {b}")
            }
            Self::NonPositiveAlpha(a) => write!(f, "alpha must be positive, got {a}"),
            Self::BadRadialSpan { rho_min, rho_max } => {
                write!(f, "need 0 < rho_min < rho_max, got [{rho_min}, {rho_max}]")
            }
            Self::BadSign(s) => write!(f, "sign(eE) must be +1 or -1, got {s}"),
            Self::NonPositiveRho(r) => write!(f, "rho must be positive, got {r}"),
            Self::NonPositiveTau(t) => write!(f, "similarity factor must be positive, got {t}"),
            Self::MatchingFailed(msg) => write!(f, "amplitude matching failed: {msg}"),
            Self::NoConstraintBracket(msg) => write!(f, "constraint scan: {msg}"),
            Self::Grid(e) => write!(f, "grid: {e}"),
            Self::Ivp(e) => write!(f, "integration: {e}"),
        }
    }
}

impl std::error::Error for DiracError {}

impl From<crate::numerics::GridError> for DiracError {
    fn from(e: crate::numerics::GridError) -> Self {
        Self::Grid(e)
    }
}

impl From<crate::numerics::IvpError> for DiracError {
    fn from(e: crate::numerics::IvpError) -> Self {
        Self::Ivp(e)
    }
}

/// Derivatives (dg, df, dV, d2V) of the radial system at `rho`.
pub fn dirac_rhs(rho: f64, state: &DiracState, params: &DiracParams) -> Result<[f64; 4], DiracError> {
    if !(rho > 0.0) {
        return Err(DiracError::NonPositiveRho(rho));
    }
    let theta = params.theta(state.v_hat);
    let kappa = params.kappa as f64;
    let dg = (1.0 + kappa) / rho * state.g_hat + (1.0 + theta) * state.f_hat;
    let df = (1.0 - kappa) / rho * state.f_hat + (1.0 - theta) * state.g_hat;
    let d2v = -2.0 / rho * state.dv_hat
        - params.sign_e_e * (state.f_hat * state.f_hat + state.g_hat * state.g_hat);
    Ok([dg, df, state.dv_hat, d2v])
}

/// Asymptotic seed state at `rho` for wave amplitude A and potential
/// amplitude B.
///
/// The decaying far-field mode of this system carries a linear power
/// prefactor: the component without the centrifugal 1/rho term goes as
/// A rho exp(-k rho) and its partner follows from the first-order pair.
/// (A bare exp(-k rho)/rho seed is not a solution of the far-field system
/// here and would make A depend on the start radius.)
pub fn asymptotic_seed(params: &DiracParams, a: f64, b: f64, rho: f64) -> DiracState {
    let k = params.decay_rate();
    let beta = params.beta;
    // Coulomb power correction from the B/rho potential tail:
    // the decaying mode goes as rho^m exp(-k rho), m = 1 - beta mu / k.
    let mu = -params.sign_e_e * 0.5 * params.alpha * b;
    // Clamp the exponent: bracket-expansion probes can pass extreme B
    // values where the power form would overflow long before the
    // integrator sees physically meaningful data.
    let m = (1.0 - beta * mu / k).clamp(-3.0, 5.0);
    let envelope = a * (-k * rho).exp() * rho.powf(m);
    let partner = envelope * (m / rho - k);
    let (g, f) = if params.kappa < 0 {
        (envelope, partner / (1.0 + beta + mu / rho))
    } else {
        (partner / (1.0 - beta - mu / rho), envelope)
    };
    DiracState {
        g_hat: g,
        f_hat: f,
        v_hat: b / rho,
        dv_hat: -b / (rho * rho),
    }
}
