//! Rotating-frame optical Bloch equations with the quantum-force
//! decomposition, and the classical dipole-decay constants.
//!
//! The driven dipole is written `x = x0 [u cos(wt) - v sin(wt)]` with `w`
//! the upper-level population. The projected dipole equation labels four
//! force components (restoring, dissipation, driving, quantum); the full
//! closure is the standard rotating-frame optical Bloch system with the
//! `(1 - 2w)` factor carried by the driving term:
//!
//! ```text
//! du/dt = -D v - u/tau0
//! dv/dt =  D u - v/tau0 - du/dt / (w_drive tau0) - (1 - 2w) W
//! dw/dt = -(W/2) v - w/tau0
//! D = (w_atom^2 - w_drive^2) / (2 w_drive)      (detuning)
//! W = e * eps / (m w_drive x0)                  (drive magnitude)
//! ```
//!
//! Without relaxation the Bloch-vector norm `u^2 + v^2 + (2w-1)^2` is an
//! exact invariant of this closure.

use crate::numerics::PhysicalConstants;

/// In-phase dipole `u`, quadrature `v`, upper population `w` in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

impl BlochState {
    pub fn ground() -> Self {
        Self {
            u: 0.0,
            v: 0.0,
            w: 0.0,
        }
    }

    /// Conserved norm of the undamped closure: u^2 + v^2 + (2w - 1)^2.
    pub fn norm(&self) -> f64 {
        self.u * self.u + self.v * self.v + (2.0 * self.w - 1.0).powi(2)
    }
}

/// Drive and relaxation parameters. `E = 2 eps cos(w_drive t)`.
#[derive(Debug, Clone, Copy)]
pub struct DriveParams {
    /// Drive frequency.
    pub omega: f64,
    /// Atomic transition frequency.
    pub omega_a: f64,
    /// Field half-amplitude.
    pub epsilon: f64,
    /// Single relaxation time for dipole and population; infinity turns
    /// relaxation off.
    pub tau0: f64,
    /// Dipole length scale.
    pub x0: f64,
    /// Mass scale.
    pub mass: f64,
    /// Charge scale.
    pub charge: f64,
}

impl DriveParams {
    /// Undamped resonant drive in scaled units (m = e = x0 = 1).
    pub fn resonant(omega: f64, epsilon: f64) -> Self {
        Self {
            omega,
            omega_a: omega,
            epsilon,
            tau0: f64::INFINITY,
            x0: 1.0,
            mass: 1.0,
            charge: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("omega", self.omega),
            ("omega_a", self.omega_a),
            ("epsilon", self.epsilon),
            ("tau0", self.tau0),
            ("x0", self.x0),
            ("mass", self.mass),
            ("charge", self.charge),
        ] {
            if !(v > 0.0) && !(name == "epsilon" && v == 0.0) {
                return Err(format!("{name} must be positive, got {v}"));
            }
        }
        Ok(())
    }

    /// Rotating-frame detuning (w_a^2 - w^2)/(2w), ~ (w_a - w) near
    /// resonance.
    pub fn detuning(&self) -> f64 {
        (self.omega_a * self.omega_a - self.omega * self.omega) / (2.0 * self.omega)
    }

    /// Drive magnitude e eps / (m w x0).
    pub fn drive(&self) -> f64 {
        self.charge * self.epsilon / (self.mass * self.omega * self.x0)
    }

    fn damping(&self) -> f64 {
        if self.tau0.is_finite() {
            1.0 / self.tau0
        } else {
            0.0
        }
    }
}

/// Time derivatives (du, dv, dw) of the closure.
pub fn bloch_rhs(state: &BlochState, params: &DriveParams) -> (f64, f64, f64) {
    let d = params.detuning();
    let g = params.damping();
    let drive = params.drive();
    let du = -d * state.v - g * state.u;
    let dv = d * state.u - g * state.v - g * du / params.omega
        - (1.0 - 2.0 * state.w) * drive;
    let dw = -0.5 * drive * state.v - g * state.w;
    (du, dv, dw)
}

/// Signed force components of the projected dipole equation, rotating
/// frame. Their sum is the resultant (mass x acceleration term).
#[derive(Debug, Clone, Copy)]
pub struct ForceDiagram {
    pub restoring: f64,
    pub dissipation: f64,
    pub driving: f64,
    pub quantum: f64,
}

impl ForceDiagram {
    pub fn resultant(&self) -> f64 {
        self.restoring + self.dissipation + self.driving + self.quantum
    }
}

/// Decompose the forces acting on the dipole at `state`.
///
/// The quantum component is `2w` times the driving magnitude with opposing
/// sign: zero in the ground state, cancelling the drive exactly at w = 1.
pub fn force_diagram(state: &BlochState, params: &DriveParams) -> ForceDiagram {
    let g = params.damping();
    let drive = params.drive();
    let (du, _, _) = bloch_rhs(state, params);
    ForceDiagram {
        restoring: state.u / (2.0 * params.omega) * params.omega_a * params.omega_a,
        dissipation: -g * state.v - g * du / params.omega,
        driving: -drive,
        quantum: 2.0 * state.w * drive,
    }
}

/// Resultant force read directly off the equation of motion:
/// dv/dt + u w_drive / 2, the "mass x acceleration" term.
pub fn resultant_from_rhs(state: &BlochState, params: &DriveParams) -> f64 {
    let (_, dv, _) = bloch_rhs(state, params);
    dv + 0.5 * state.u * params.omega
}

/// Fixed-step RK4 integration of the Bloch closure.
pub fn integrate_bloch(
    state0: BlochState,
    params: &DriveParams,
    t_end: f64,
    n_steps: usize,
) -> Vec<(f64, BlochState)> {
    let dt = t_end / n_steps as f64;
    let mut out = Vec::with_capacity(n_steps + 1);
    let mut s = state0;
    let mut t = 0.0;
    out.push((t, s));
    let add = |s: &BlochState, k: &(f64, f64, f64), h: f64| BlochState {
        u: s.u + h * k.0,
        v: s.v + h * k.1,
        w: s.w + h * k.2,
    };
    for _ in 0..n_steps {
        let k1 = bloch_rhs(&s, params);
        let k2 = bloch_rhs(&add(&s, &k1, 0.5 * dt), params);
        let k3 = bloch_rhs(&add(&s, &k2, 0.5 * dt), params);
        let k4 = bloch_rhs(&add(&s, &k3, dt), params);
        s = BlochState {
            u: s.u + dt / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            v: s.v + dt / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
            w: s.w + dt / 6.0 * (k1.2 + 2.0 * k2.2 + 2.0 * k3.2 + k4.2),
        };
        t += dt;
        out.push((t, s));
    }
    out
}

/// Classical dipole-decay constants at frequency `omega`:
/// tau = (2/3) r_e / c, Gamma = tau w^2, sin(alpha) = tau w,
/// delta_omega = tau^2 w^3 / 2.
#[derive(Debug, Clone, Copy)]
pub struct DipoleDecay {
    /// Radiation-reaction time constant, seconds.
    pub tau: f64,
    /// Fractional energy decay rate, 1/s.
    pub gamma: f64,
    /// Field-dipole phase lag, radians.
    pub phase_alpha: f64,
    /// Frequency shift, rad/s.
    pub delta_omega: f64,
    /// True when tau * omega exceeded 1 and the phase formula saturated.
    pub regime_violated: bool,
}

pub fn dipole_decay_params(omega: f64, constants: &PhysicalConstants) -> Result<DipoleDecay, String> {
    if !(omega > 0.0) {
        return Err(format!("omega must be positive, got {omega}"));
    }
    let tau = 2.0 / 3.0 * constants.classical_electron_radius / constants.speed_of_light;
    let sin_alpha = tau * omega;
    Ok(DipoleDecay {
        tau,
        gamma: tau * omega * omega,
        phase_alpha: sin_alpha.min(1.0).asin(),
        delta_omega: 0.5 * tau * tau * omega * omega * omega,
        regime_violated: sin_alpha > 1.0,
    })
}
