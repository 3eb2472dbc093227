//! Constraint loops: amplitude matching innermost, then the mass-energy
//! condition over beta, with the spin target enforced by the wave
//! amplitude (re-solving, never rescaling in place).
//!
//! The three physical conditions the solve enforces or scans are
//!
//! 1. spin |J_d| = 3/8,
//! 2. charge integral Q = 1,
//! 3. eigenvalue equals the field energy (mass balance).
//!
//! Condition 1 is always solvable: |J_d| grows monotonically from zero with
//! the wave amplitude. Condition 3 crosses zero in beta and fixes beta*.
//! Condition 2 is structurally unreachable in this system: with the spin
//! held at 3/8 the charge comes out Q = (3/8)(Q/J), and the shape ratio
//! J/Q = 21/(20+8 beta) + nonlinear corrections never descends to 3/8
//! anywhere in the bound window, at any amplitude. The solver therefore
//! pins (spin, mass balance), reports the achieved charge, and attaches the
//! full constraint scan so the miss is visible, not silent.

use super::observables::{observables, DiracObservables};
use super::shoot::{match_amplitudes, shoot_from_infinity, shoot_with_tol};
use super::system::{dirac_rhs, DiracError, DiracParams, DiracState};
use crate::numerics::{Direction, RadialGrid, SolveReport};

/// Solver knobs. `alpha` is the coupling the final solution is reported
/// at; the constraint structure itself is invariant along similarity
/// orbits, so alpha is a presentation choice, not a search outcome.
#[derive(Debug, Clone)]
pub struct SolveSettings {
    pub rho_max: f64,
    pub rho_min: f64,
    /// Grid resolution of the final trace.
    pub trace_points: usize,
    /// Grid resolution used inside scan loops.
    pub scan_points: usize,
    /// Bracket scanned for the mass-balance root in beta.
    pub beta_bracket: (f64, f64),
    pub beta_scan_steps: usize,
    /// Reference amplitude for the constraint scan.
    pub scan_amplitude: f64,
    /// Tolerance on the matched charge objective.
    pub match_tol: f64,
    /// Tolerance on |spin - 3/8|.
    pub constraint_tol: f64,
}

impl Default for SolveSettings {
    fn default() -> Self {
        Self {
            rho_max: 30.0,
            rho_min: 1e-4,
            trace_points: 3000,
            scan_points: 60,
            beta_bracket: (0.05, 0.95),
            beta_scan_steps: 12,
            scan_amplitude: 1.0,
            match_tol: 1e-9,
            constraint_tol: 1e-8,
        }
    }
}

impl SolveSettings {
    /// Coarser settings for unit tests.
    pub fn fast() -> Self {
        Self {
            trace_points: 800,
            scan_points: 40,
            beta_scan_steps: 8,
            ..Self::default()
        }
    }
}

/// One row of the constraint scan over beta: every value is reported at
/// the spin-normalized point of the similarity orbit (|J_d| = 3/8).
#[derive(Debug, Clone, Copy)]
pub struct ConstraintScanRow {
    pub beta: f64,
    /// Shape ratio |J|/Q.
    pub spin_charge_ratio: f64,
    /// Charge at spin normalization; the charge condition wants 1.
    pub charge_at_spin: f64,
    /// Mass-balance residual at spin normalization.
    pub mass_balance_at_spin: f64,
    /// Coupling that realizes |J| = 3/8 at the scan amplitude.
    pub alpha_at_spin: f64,
}

/// Converged (or best-effort) solution bundle.
#[derive(Debug, Clone)]
pub struct DiracSolution {
    pub params: DiracParams,
    /// Asymptotic wave amplitude.
    pub amplitude_a: f64,
    /// Asymptotic potential amplitude.
    pub amplitude_b: f64,
    pub points: Vec<f64>,
    pub states: Vec<DiracState>,
    pub observables: DiracObservables,
    pub report: SolveReport,
    /// Beta scan of the three constraint functions (solve_soliton only).
    pub constraint_scan: Vec<ConstraintScanRow>,
}

impl DiracSolution {
    /// Maximum normalized defect of the trace against the radial system.
    ///
    /// Each grid interval is re-integrated with 16 fixed RK4 substeps from
    /// its left state; the mismatch at the right state is normalized by the
    /// global scale of the corresponding component group (wave, V, V').
    /// The measure is exactly equivariant under the similarity map.
    pub fn residual_max(&self) -> f64 {
        let wave_scale = self
            .states
            .iter()
            .map(|s| s.f_hat.abs().max(s.g_hat.abs()))
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let v_scale = self
            .states
            .iter()
            .map(|s| s.v_hat.abs())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let dv_scale = self
            .states
            .iter()
            .map(|s| s.dv_hat.abs())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let mut worst = 0.0f64;
        for i in 0..self.points.len() - 1 {
            let (r0, r1) = (self.points[i], self.points[i + 1]);
            let mut y = self.states[i].to_array();
            let n_sub = 16;
            let h = (r1 - r0) / n_sub as f64;
            for s in 0..n_sub {
                let rho = r0 + s as f64 * h;
                if rk4_step(&mut y, rho, h, &self.params).is_err() {
                    return f64::INFINITY;
                }
            }
            let target = self.states[i + 1].to_array();
            let d = [
                (y[0] - target[0]).abs() / wave_scale,
                (y[1] - target[1]).abs() / wave_scale,
                (y[2] - target[2]).abs() / v_scale,
                (y[3] - target[3]).abs() / dv_scale,
            ];
            for v in d {
                worst = worst.max(v);
            }
        }
        worst
    }
}

fn rk4_step(y: &mut [f64; 4], rho: f64, h: f64, params: &DiracParams) -> Result<(), DiracError> {
    let f = |rho: f64, y: &[f64; 4]| -> Result<[f64; 4], DiracError> {
        dirac_rhs(rho, &DiracState::from_slice(y), params)
    };
    let k1 = f(rho, y)?;
    let mut y2 = *y;
    for i in 0..4 {
        y2[i] = y[i] + 0.5 * h * k1[i];
    }
    let k2 = f(rho + 0.5 * h, &y2)?;
    for i in 0..4 {
        y2[i] = y[i] + 0.5 * h * k2[i];
    }
    let k3 = f(rho + 0.5 * h, &y2)?;
    for i in 0..4 {
        y2[i] = y[i] + h * k3[i];
    }
    let k4 = f(rho + h, &y2)?;
    for i in 0..4 {
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    Ok(())
}

fn scan_grid(settings: &SolveSettings, points: usize) -> Result<RadialGrid, DiracError> {
    Ok(RadialGrid::logspace(
        settings.rho_min,
        settings.rho_max,
        points,
        Direction::Inward,
    )?)
}

/// Solve the origin-regular member with wave amplitude `amplitude` at fixed
/// parameters: B matched to the charge objective, full trace, observables.
pub fn solve_member(
    params: &DiracParams,
    amplitude: f64,
    settings: &SolveSettings,
) -> Result<DiracSolution, DiracError> {
    let mut params = *params;
    params.rho_max = settings.rho_max;
    params.rho_min = settings.rho_min;
    let match_grid = scan_grid(settings, settings.scan_points)?;
    let ((a, b), report) = match_amplitudes(&params, &match_grid, amplitude, settings.match_tol)?;
    let grid = scan_grid(settings, settings.trace_points)?;
    let shot = shoot_with_tol(&params, a, b, &grid, 1e-11)?;
    let points = grid.points()[shot.offset..].to_vec();
    let obs = observables(&points, &shot.states, &params);
    Ok(DiracSolution {
        params,
        amplitude_a: a,
        amplitude_b: b,
        points,
        states: shot.states,
        observables: obs,
        report,
        constraint_scan: Vec::new(),
    })
}

/// Convenience wrapper used by tests: unit amplitude member.
pub fn solve_at(params: &DiracParams, settings: &SolveSettings) -> Result<DiracSolution, DiracError> {
    solve_member(params, 1.0, settings)
}

/// Observables of the scan member at (beta, amplitude), on coarse grids.
fn scan_observables(
    params: &DiracParams,
    amplitude: f64,
    settings: &SolveSettings,
) -> Result<DiracObservables, DiracError> {
    let grid = scan_grid(settings, settings.scan_points)?;
    let ((a, b), _) = match_amplitudes(params, &grid, amplitude, settings.match_tol)?;
    let fine = scan_grid(settings, 600)?;
    let shot = shoot_from_infinity(params, a, b, &fine)?;
    let points = &fine.points()[shot.offset..];
    Ok(observables(points, &shot.states, params))
}

/// Solve the spin condition |J| = 3/8 at fixed (kappa, alpha, beta) by
/// fixed-point iteration on the wave amplitude (J grows like A^2 near the
/// linear regime). Returns the amplitude and the observables there.
fn spin_normalized_member(
    params: &DiracParams,
    amp_seed: f64,
    settings: &SolveSettings,
) -> Result<(f64, DiracObservables), DiracError> {
    let mut amp = amp_seed;
    let mut obs = scan_observables(params, amp, settings)?;
    for _ in 0..40 {
        if (obs.spin - 0.375).abs() < settings.constraint_tol {
            break;
        }
        amp *= (0.375 / obs.spin).sqrt();
        obs = scan_observables(params, amp, settings)?;
    }
    Ok((amp, obs))
}

fn scan_row(
    kappa: i32,
    alpha: f64,
    beta: f64,
    amp_seed: &mut f64,
    settings: &SolveSettings,
) -> Result<ConstraintScanRow, DiracError> {
    let mut p = DiracParams::new(kappa, alpha, beta)?;
    p.rho_max = settings.rho_max;
    p.rho_min = settings.rho_min;
    let (amp, obs) = spin_normalized_member(&p, *amp_seed, settings)?;
    *amp_seed = amp;
    Ok(ConstraintScanRow {
        beta,
        spin_charge_ratio: obs.spin / obs.charge_integral,
        charge_at_spin: obs.charge_integral,
        mass_balance_at_spin: obs.m_fg + obs.charge_integral + obs.field_energy - beta,
        alpha_at_spin: alpha,
    })
}

/// Full soliton solve for the given kappa.
///
/// Procedure: scan beta for the three constraint functions, root-find the
/// mass balance in beta, then fix the wave amplitude so the spin integral
/// is exactly 3/8 at the reported coupling. The solution's report carries
/// the convergence of every stage; the scan table ships with the solution.
pub fn solve_soliton(
    kappa: i32,
    alpha: f64,
    settings: &SolveSettings,
) -> Result<DiracSolution, DiracError> {
    // Constraint scan over beta, every row at its spin-normalized member.
    let (b_lo, b_hi) = settings.beta_bracket;
    let n = settings.beta_scan_steps;
    let mut scan = Vec::with_capacity(n);
    let mut amp_seed = settings.scan_amplitude;
    for i in 0..n {
        let beta = b_lo + (b_hi - b_lo) * i as f64 / (n - 1) as f64;
        match scan_row(kappa, alpha, beta, &mut amp_seed, settings) {
            Ok(row) => scan.push(row),
            Err(_) => continue,
        }
    }
    // Mass-balance bracket.
    let mut bracket = None;
    for pair in scan.windows(2) {
        if pair[0].mass_balance_at_spin.signum() != pair[1].mass_balance_at_spin.signum() {
            bracket = Some((pair[0].beta, pair[1].beta));
            break;
        }
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Err(DiracError::NoConstraintBracket(format!(
            "mass balance does not change sign over beta in [{b_lo}, {b_hi}]"
        )));
    };
    let mut f_lo = scan_row(kappa, alpha, lo, &mut amp_seed, settings)?.mass_balance_at_spin;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let fm = scan_row(kappa, alpha, mid, &mut amp_seed, settings)?.mass_balance_at_spin;
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 {
            break;
        }
    }
    let beta_star = 0.5 * (lo + hi);

    let mut p = DiracParams::new(kappa, alpha, beta_star)?;
    p.rho_max = settings.rho_max;
    p.rho_min = settings.rho_min;
    let (mut amp, _) = spin_normalized_member(&p, amp_seed, settings)?;
    let mut solution = solve_member(&p, amp, settings)?;
    // Final spin polish on the fine grid.
    for _ in 0..10 {
        let err = solution.observables.spin - 0.375;
        if err.abs() < settings.constraint_tol {
            break;
        }
        amp *= (0.375 / solution.observables.spin).sqrt();
        solution = solve_member(&p, amp, settings)?;
    }

    let spin_ok = (solution.observables.spin - 0.375).abs() < 1e-6;
    let matched = solution.report.converged;
    let balance = solution.observables.mass_balance;
    let charge = solution.observables.charge_integral;
    // node counts of the primary profile; the family's ground branch is
    // nodeless and the scan tie-breaks on it
    let g_nodes = solution
        .states
        .windows(2)
        .filter(|w| w[0].g_hat * w[1].g_hat < 0.0)
        .count();
    let f_nodes = solution
        .states
        .windows(2)
        .filter(|w| w[0].f_hat * w[1].f_hat < 0.0)
        .count();
    solution.report = SolveReport {
        converged: matched && spin_ok,
        iterations: solution.report.iterations,
        final_residual: (solution.observables.spin - 0.375).abs(),
        diagnostics: format!(
            "beta* = {beta_star:.6} from mass balance; spin = {:.8}; charge Q = {charge:.6} \
             (target 1 unreachable: J/Q stays above 3/8 across the window); balance residual = {balance:.3e}; \
             nodes g/f = {g_nodes}/{f_nodes}",
            solution.observables.spin
        ),
    };
    solution.constraint_scan = scan;
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_solution_is_origin_regular_and_low_residual() {
        let p = DiracParams::new(-1, 0.101, 0.35).unwrap();
        let sol = solve_at(&p, &SolveSettings::fast()).unwrap();
        assert!(sol.report.converged, "{}", sol.report.diagnostics);
        // origin-regularity criteria: singular wave component and rho g' small
        // against the profile maximum
        let wave_max = sol
            .states
            .iter()
            .map(|s| s.f_hat.abs().max(s.g_hat.abs()))
            .fold(0.0f64, f64::max);
        let inner = sol.states[0];
        let rho0 = sol.points[0];
        assert!(inner.f_hat.abs() < 1e-3 * wave_max);
        let d = dirac_rhs(rho0, &inner, &sol.params).unwrap();
        assert!((rho0 * d[0]).abs() < 1e-3 * wave_max);
        // potential regular: rho^2 V' small against B
        assert!(
            (rho0 * rho0 * inner.dv_hat).abs() < 1e-6 * sol.amplitude_b.abs(),
            "charge defect {}",
            rho0 * rho0 * inner.dv_hat
        );
        let res = sol.residual_max();
        assert!(res < 1e-6, "residual {res}");
        // the two electrostatic-energy routes agree
        let o = &sol.observables;
        assert!(
            (o.f_d - o.v_d).abs() / o.f_d < 1e-2,
            "F_d = {}, V_d = {}",
            o.f_d,
            o.v_d
        );
    }

    #[test]
    fn kappa_plus_one_member_also_solves() {
        let p = DiracParams::new(1, 0.0685, 0.2).unwrap();
        let sol = solve_at(&p, &SolveSettings::fast()).unwrap();
        assert!(sol.report.converged);
        // for kappa=+1 the roles swap: g is the rho-suppressed component
        let wave_max = sol
            .states
            .iter()
            .map(|s| s.f_hat.abs().max(s.g_hat.abs()))
            .fold(0.0f64, f64::max);
        assert!(sol.states[0].g_hat.abs() < 1e-3 * wave_max);
    }

    #[test]
    fn matched_amplitudes_stable_under_grid_refinement() {
        // Refining the trace grid moves the matched B by < 1%.
        let p = DiracParams::new(-1, 0.101, 0.35).unwrap();
        let coarse = SolveSettings {
            trace_points: 500,
            ..SolveSettings::fast()
        };
        let fine = SolveSettings {
            trace_points: 2500,
            ..SolveSettings::fast()
        };
        let s1 = solve_member(&p, 2.0, &coarse).unwrap();
        let s2 = solve_member(&p, 2.0, &fine).unwrap();
        let db = (s1.amplitude_b - s2.amplitude_b).abs() / s2.amplitude_b.abs();
        assert!(db < 0.01, "B moved {db}");
        assert_eq!(s1.amplitude_a, s2.amplitude_a);
    }

    #[test]
    fn observables_stable_under_doubling_rho_max() {
        let p = DiracParams::new(-1, 0.101, 0.35).unwrap();
        let near = SolveSettings {
            rho_max: 30.0,
            ..SolveSettings::fast()
        };
        let far = SolveSettings {
            rho_max: 60.0,
            ..SolveSettings::fast()
        };
        let s1 = solve_member(&p, 0.05, &near).unwrap();
        let mut p2 = p;
        p2.rho_max = 60.0;
        let s2 = solve_member(&p2, 0.05, &far).unwrap();
        // The raw amplitude parameterizes the seed at the start radius, so
        // compare amplitude-invariant shape ratios and the normalized
        // integrals at spin normalization.
        let shape = |s: &DiracSolution| {
            let o = &s.observables;
            let tau = o.spin / 0.375;
            [
                o.spin / o.charge_integral,
                o.charge_integral / tau,
                (o.m_fg + o.charge_integral + o.field_energy) / tau,
                o.total_mass / o.charge_integral,
            ]
        };
        let (a, b) = (shape(&s1), shape(&s2));
        for (i, name) in ["spin/charge", "charge*", "energy*", "mass/charge"]
            .iter()
            .enumerate()
        {
            let rel = (a[i] - b[i]).abs() / b[i].abs();
            assert!(rel < 1e-3, "{name} moved {rel} under rho_max doubling");
        }
    }
}
