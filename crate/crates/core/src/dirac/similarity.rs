//! Similarity transformation: solutions map to solutions when the coupling
//! is scaled by tau, the potential by 1/tau, and the wave by 1/sqrt(tau).

use super::solve::DiracSolution;
use super::system::{DiracError, DiracState};

/// Apply the scaling alpha' = tau alpha, V' = V/tau, (g, f)' = (g, f)/sqrt(tau)
/// on the same grid. The transformed trace satisfies the same system with
/// the scaled coupling exactly.
pub fn similarity_transform(
    solution: &DiracSolution,
    tau: f64,
) -> Result<DiracSolution, DiracError> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(DiracError::NonPositiveTau(tau));
    }
    let sqrt_tau = tau.sqrt();
    let mut out = solution.clone();
    out.params.alpha *= tau;
    out.amplitude_a /= sqrt_tau;
    out.amplitude_b /= tau;
    for s in &mut out.states {
        *s = DiracState {
            g_hat: s.g_hat / sqrt_tau,
            f_hat: s.f_hat / sqrt_tau,
            v_hat: s.v_hat / tau,
            dv_hat: s.dv_hat / tau,
        };
    }
    out.observables = super::observables::observables(&out.points, &out.states, &out.params);
    Ok(out)
}
