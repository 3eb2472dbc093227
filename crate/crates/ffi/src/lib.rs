//! C ABI for the solver core: opaque handles, status codes, and plain
//! buffers so other languages can bind without Rust on their side.
//!
//! Conventions:
//! - every fallible call returns a [`SolqStatus`]; `Ok` is 0;
//! - output pointers are written only on success;
//! - handles returned by `*_solve` calls are freed with their `*_free`
//!   function exactly once;
//! - `solq_last_error_message` returns a thread-local NUL-terminated
//!   string describing the most recent failure on this thread.

use solq_core::bloch::{dipole_decay_params, integrate_bloch, BlochState, DriveParams};
use solq_core::dirac::{solve_member, solve_soliton, DiracParams, DiracSolution, SolveSettings};
use solq_core::numerics::{Direction, PhysicalConstants, RadialGrid};
use solq_core::photon::{ground_state_amplitude, uehling_vacuum};
use std::cell::RefCell;
use std::ffi::{c_char, CString};

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolqStatus {
    Ok = 0,
    InvalidArgument = 1,
    SolverFailed = 2,
    OutOfRange = 3,
}

/// Opaque handle around a converged Dirac-Poisson solution.
pub struct SolqDiracSolution {
    inner: DiracSolution,
}

/// Scalar observables of a Dirac solution, plain-old-data for C callers.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SolqDiracObservables {
    pub alpha: f64,
    pub beta: f64,
    pub spin: f64,
    pub spin_signed: f64,
    pub charge_integral: f64,
    pub alpha_out: f64,
    pub total_mass: f64,
    pub mass_balance: f64,
    pub amplitude_a: f64,
    pub amplitude_b: f64,
    pub converged: i32,
}

/// Classical dipole-decay constants.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SolqDipoleDecay {
    pub tau: f64,
    pub gamma: f64,
    pub phase_alpha: f64,
    pub delta_omega: f64,
    /// Nonzero when tau * omega > 1 and the phase formula saturated.
    pub regime_violated: i32,
}

/// Rotating-frame drive parameters for the two-level integrator. Pass
/// `tau0 <= 0` to disable relaxation.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SolqBlochParams {
    pub omega: f64,
    pub omega_a: f64,
    pub epsilon: f64,
    pub tau0: f64,
    pub x0: f64,
    pub mass: f64,
    pub charge: f64,
}

/// Version string of the library; static storage, do not free.
#[no_mangle]
pub extern "C" fn solq_version() -> *const c_char {
    static VERSION: &str = concat!("solq ", env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Most recent error message on this thread; valid until the next failing
/// call from the same thread. Do not free.
#[no_mangle]
pub extern "C" fn solq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Solve the full soliton problem for `kappa` (+1 or -1) at coupling
/// `alpha` (pass 0 for the built-in defaults). On success writes a handle
/// the caller must free with [`solq_dirac_free`].
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_solve(
    kappa: i32,
    alpha: f64,
    out: *mut *mut SolqDiracSolution,
) -> SolqStatus {
    if out.is_null() || (kappa != 1 && kappa != -1) || alpha < 0.0 || !alpha.is_finite() {
        set_error("solq_dirac_solve: bad kappa/alpha/out");
        return SolqStatus::InvalidArgument;
    }
    let alpha = if alpha == 0.0 {
        if kappa < 0 {
            0.101
        } else {
            0.0685
        }
    } else {
        alpha
    };
    match solve_soliton(kappa, alpha, &SolveSettings::default()) {
        Ok(inner) => {
            let boxed = Box::new(SolqDiracSolution { inner });
            unsafe { out.write(Box::into_raw(boxed)) };
            SolqStatus::Ok
        }
        Err(e) => {
            set_error(&format!("solq_dirac_solve: {e}"));
            SolqStatus::SolverFailed
        }
    }
}

/// Solve one family member at fixed (kappa, alpha, beta, amplitude).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_solve_member(
    kappa: i32,
    alpha: f64,
    beta: f64,
    amplitude: f64,
    out: *mut *mut SolqDiracSolution,
) -> SolqStatus {
    if out.is_null() {
        set_error("solq_dirac_solve_member: null out");
        return SolqStatus::InvalidArgument;
    }
    let params = match DiracParams::new(kappa, alpha, beta) {
        Ok(p) => p,
        Err(e) => {
            set_error(&format!("solq_dirac_solve_member: {e}"));
            return SolqStatus::InvalidArgument;
        }
    };
    match solve_member(&params, amplitude, &SolveSettings::default()) {
        Ok(inner) => {
            let boxed = Box::new(SolqDiracSolution { inner });
            unsafe { out.write(Box::into_raw(boxed)) };
            SolqStatus::Ok
        }
        Err(e) => {
            set_error(&format!("solq_dirac_solve_member: {e}"));
            SolqStatus::SolverFailed
        }
    }
}

/// Free a solution handle. Passing NULL is a no-op.
///
/// # Safety
/// `handle` must have come from a solq solve call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_free(handle: *mut SolqDiracSolution) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Copy the scalar observables of a solution into `out`.
///
/// # Safety
/// `handle` must be a live solution handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_observables(
    handle: *const SolqDiracSolution,
    out: *mut SolqDiracObservables,
) -> SolqStatus {
    if handle.is_null() || out.is_null() {
        set_error("solq_dirac_observables: null pointer");
        return SolqStatus::InvalidArgument;
    }
    let solution = unsafe { &(*handle).inner };
    let o = &solution.observables;
    let filled = SolqDiracObservables {
        alpha: solution.params.alpha,
        beta: solution.params.beta,
        spin: o.spin,
        spin_signed: o.spin_signed,
        charge_integral: o.charge_integral,
        alpha_out: o.alpha_out,
        total_mass: o.total_mass,
        mass_balance: o.mass_balance,
        amplitude_a: solution.amplitude_a,
        amplitude_b: solution.amplitude_b,
        converged: solution.report.converged as i32,
    };
    unsafe { out.write(filled) };
    SolqStatus::Ok
}

/// Number of radial samples in the solution trace.
///
/// # Safety
/// `handle` must be a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_profile_len(handle: *const SolqDiracSolution) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { (*handle).inner.points.len() }
}

/// Copy up to `capacity` samples of the profile columns (rho, f, g, V) into
/// caller buffers; any column pointer may be NULL to skip it. Returns the
/// number of samples written through `written`.
///
/// # Safety
/// Non-NULL buffers must hold at least `capacity` doubles; `written` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn solq_dirac_profile(
    handle: *const SolqDiracSolution,
    rho: *mut f64,
    f: *mut f64,
    g: *mut f64,
    v: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> SolqStatus {
    if handle.is_null() || written.is_null() {
        set_error("solq_dirac_profile: null pointer");
        return SolqStatus::InvalidArgument;
    }
    let solution = unsafe { &(*handle).inner };
    let n = solution.points.len().min(capacity);
    for i in 0..n {
        unsafe {
            if !rho.is_null() {
                rho.add(i).write(solution.points[i]);
            }
            if !f.is_null() {
                f.add(i).write(solution.states[i].f_hat);
            }
            if !g.is_null() {
                g.add(i).write(solution.states[i].g_hat);
            }
            if !v.is_null() {
                v.add(i).write(solution.states[i].v_hat);
            }
        }
    }
    unsafe { written.write(n) };
    SolqStatus::Ok
}

/// Ground-state central amplitude of the nonlinear field equation with the
/// linear term, by bisection shooting on [1, 10].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn solq_photon_ground_state(
    rho_max: f64,
    grid_points: usize,
    tol: f64,
    out: *mut f64,
) -> SolqStatus {
    if out.is_null() || !(rho_max > 1.0) || grid_points < 100 || !(tol > 0.0) {
        set_error("solq_photon_ground_state: bad arguments");
        return SolqStatus::InvalidArgument;
    }
    let grid = match RadialGrid::linspace(1e-6, rho_max, grid_points, Direction::Outward) {
        Ok(g) => g,
        Err(e) => {
            set_error(&format!("solq_photon_ground_state: {e}"));
            return SolqStatus::InvalidArgument;
        }
    };
    match ground_state_amplitude((1.0, 10.0), &grid, tol) {
        Ok(a) => {
            unsafe { out.write(a) };
            SolqStatus::Ok
        }
        Err(e) => {
            set_error(&format!("solq_photon_ground_state: {e}"));
            SolqStatus::SolverFailed
        }
    }
}

/// Pure-vacuum polarization potential `c1 exp(-sqrt(a) r)/r` at radius
/// `r` meters, CODATA constants.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn solq_uehling_vacuum_value(
    c1: f64,
    r_meters: f64,
    out: *mut f64,
) -> SolqStatus {
    if out.is_null() || !(r_meters > 0.0) {
        set_error("solq_uehling_vacuum_value: bad arguments");
        return SolqStatus::InvalidArgument;
    }
    let v = uehling_vacuum(c1, &PhysicalConstants::codata());
    unsafe { out.write(v.value(r_meters)) };
    SolqStatus::Ok
}

/// Classical dipole decay constants at angular frequency `omega` (rad/s).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn solq_dipole_decay(omega: f64, out: *mut SolqDipoleDecay) -> SolqStatus {
    if out.is_null() {
        set_error("solq_dipole_decay: null out");
        return SolqStatus::InvalidArgument;
    }
    match dipole_decay_params(omega, &PhysicalConstants::codata()) {
        Ok(d) => {
            unsafe {
                out.write(SolqDipoleDecay {
                    tau: d.tau,
                    gamma: d.gamma,
                    phase_alpha: d.phase_alpha,
                    delta_omega: d.delta_omega,
                    regime_violated: d.regime_violated as i32,
                })
            };
            SolqStatus::Ok
        }
        Err(e) => {
            set_error(&format!("solq_dipole_decay: {e}"));
            SolqStatus::InvalidArgument
        }
    }
}

/// Integrate the rotating-frame two-level system from (u0, v0, w0) over
/// `n_steps` steps to `t_end`, writing `n_steps + 1` samples per non-NULL
/// buffer (including the initial state).
///
/// # Safety
/// Non-NULL buffers must hold at least `n_steps + 1` doubles.
#[no_mangle]
pub unsafe extern "C" fn solq_bloch_integrate(
    params: SolqBlochParams,
    u0: f64,
    v0: f64,
    w0: f64,
    t_end: f64,
    n_steps: usize,
    t_out: *mut f64,
    u_out: *mut f64,
    v_out: *mut f64,
    w_out: *mut f64,
) -> SolqStatus {
    if n_steps == 0 || !(t_end > 0.0) {
        set_error("solq_bloch_integrate: need n_steps > 0 and t_end > 0");
        return SolqStatus::InvalidArgument;
    }
    let drive = DriveParams {
        omega: params.omega,
        omega_a: params.omega_a,
        epsilon: params.epsilon,
        tau0: if params.tau0 > 0.0 {
            params.tau0
        } else {
            f64::INFINITY
        },
        x0: params.x0,
        mass: params.mass,
        charge: params.charge,
    };
    if let Err(e) = drive.validate() {
        set_error(&format!("solq_bloch_integrate: {e}"));
        return SolqStatus::InvalidArgument;
    }
    let trace = integrate_bloch(BlochState { u: u0, v: v0, w: w0 }, &drive, t_end, n_steps);
    for (i, (t, s)) in trace.iter().enumerate() {
        unsafe {
            if !t_out.is_null() {
                t_out.add(i).write(*t);
            }
            if !u_out.is_null() {
                u_out.add(i).write(s.u);
            }
            if !v_out.is_null() {
                v_out.add(i).write(s.v);
            }
            if !w_out.is_null() {
                w_out.add(i).write(s.w);
            }
        }
    }
    SolqStatus::Ok
}
