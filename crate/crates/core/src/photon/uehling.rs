//! Uehling-potential solutions: the pure-vacuum closed form and the
//! point-charge asymptotic branches.

use crate::numerics::PhysicalConstants;

/// Euler-Mascheroni constant, used in the short-distance branch.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Pure-vacuum decaying solution `V(r) = c1 exp(-sqrt(a) r) / r` of
/// `r_e^2 lap V = (alpha/15) V`, with `a = alpha / (15 r_e^2)`.
#[derive(Debug, Clone, Copy)]
pub struct UehlingVacuum {
    pub c1: f64,
    /// sqrt(a), in 1/m.
    pub sqrt_a: f64,
    /// alpha/15, the dimensionless right-hand-side coefficient.
    coefficient: f64,
    /// r_e, meters.
    r_e: f64,
}

/// Build the decaying-branch evaluator (c2 = 0).
pub fn uehling_vacuum(c1: f64, constants: &PhysicalConstants) -> UehlingVacuum {
    let r_e = constants.classical_electron_radius;
    let a = constants.alpha_fs / (15.0 * r_e * r_e);
    UehlingVacuum {
        c1,
        sqrt_a: a.sqrt(),
        coefficient: constants.alpha_fs / 15.0,
        r_e,
    }
}

impl UehlingVacuum {
    pub fn value(&self, r: f64) -> f64 {
        self.c1 * (-self.sqrt_a * r).exp() / r
    }

    pub fn derivative(&self, r: f64) -> f64 {
        -self.c1 * (-self.sqrt_a * r).exp() * (self.sqrt_a / r + 1.0 / (r * r))
    }

    fn second_derivative(&self, r: f64) -> f64 {
        let a = self.sqrt_a;
        self.c1 * (-a * r).exp() * (a * a / r + 2.0 * a / (r * r) + 2.0 / (r * r * r))
    }

    /// Analytic ODE residual `r_e^2 lap V - (alpha/15) V` at radius r; zero
    /// to round-off for the closed form.
    pub fn residual(&self, r: f64) -> f64 {
        let lap = self.second_derivative(r) + 2.0 / r * self.derivative(r);
        self.r_e * self.r_e * lap - self.coefficient * self.value(r)
    }
}

/// Which asymptotic branch produced a point-charge value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UehlingBranch {
    /// r << lambda_C: logarithmic short-distance correction.
    Near,
    /// r >> lambda_C: exponentially cut long-distance correction.
    Far,
}

/// Point-charge Uehling potential split into the Coulomb part and the
/// vacuum-polarization correction factor.
#[derive(Debug, Clone, Copy)]
pub struct UehlingPointValue {
    /// -Z alpha hbar c / r, joules.
    pub coulomb: f64,
    /// Multiplicative correction: V = coulomb * (1 + correction).
    pub correction: f64,
    pub branch: UehlingBranch,
    /// |near - far| correction mismatch at the r = lambda_C crossover,
    /// reported so callers can judge the hand-off error.
    pub crossover_discontinuity: f64,
}

impl UehlingPointValue {
    pub fn total(&self) -> f64 {
        self.coulomb * (1.0 + self.correction)
    }
}

fn correction_near(alpha: f64, x: f64) -> f64 {
    // x = r / lambda_C
    2.0 * alpha / (3.0 * std::f64::consts::PI) * ((1.0 / x).ln() - 5.0 / 6.0 - EULER_GAMMA)
}

fn correction_far(alpha: f64, x: f64) -> f64 {
    alpha / (4.0 * std::f64::consts::PI.sqrt()) * (-2.0 * x).exp() / x.powf(1.5)
}

/// Asymptotic point-charge Uehling potential at radius `r` (meters) around a
/// nucleus of charge `Z`, selecting the branch at r = lambda_C.
pub fn uehling_point_asymptotics(
    r: f64,
    z: i32,
    constants: &PhysicalConstants,
) -> Result<UehlingPointValue, String> {
    if !(r > 0.0) {
        return Err(format!("radius must be positive, got {r}"));
    }
    let alpha = constants.alpha_fs;
    let lambda_c = constants.compton_length;
    let x = r / lambda_c;
    let hbar_c = constants.electron_rest_energy * lambda_c;
    let coulomb = -(z as f64) * alpha * hbar_c / r;
    let (branch, correction) = if x < 1.0 {
        (UehlingBranch::Near, correction_near(alpha, x))
    } else {
        (UehlingBranch::Far, correction_far(alpha, x))
    };
    Ok(UehlingPointValue {
        coulomb,
        correction,
        branch,
        crossover_discontinuity: (correction_near(alpha, 1.0) - correction_far(alpha, 1.0)).abs(),
    })
}
