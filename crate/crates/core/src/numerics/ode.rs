//! Adaptive explicit Runge-Kutta integration with dense output.
//!
//! The solver is the Dormand-Prince 5(4) embedded pair with the standard
//! 4th-order continuous extension, stepping adaptively and interpolating the
//! solution onto the caller's grid. Shooting drivers rely on two properties:
//!
//! - blow-up is a reported outcome, not a panic: the partial trace up to the
//!   last accepted step is returned so the caller can read off which
//!   component diverged and with what sign;
//! - step-size underflow (a singularity on the span) is likewise reported
//!   with the partial trace.

use super::grid::{Direction, RadialGrid};
use std::fmt;

/// Tuning knobs for [`integrate_ivp`].
#[derive(Debug, Clone, Copy)]
pub struct IvpOptions {
    /// Absolute tolerance floor added to the relative error weight.
    pub abs_tol: f64,
    /// Hard cap on accepted + rejected steps.
    pub max_steps: usize,
    /// Any state component beyond this magnitude counts as blow-up.
    pub blowup_limit: f64,
}

impl Default for IvpOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-300,
            max_steps: 5_000_000,
            blowup_limit: 1e60,
        }
    }
}

/// How an integration run ended.
#[derive(Debug, Clone, PartialEq)]
pub enum IvpOutcome {
    /// Reached the far end of the grid.
    Completed,
    /// A state component exceeded the blow-up limit, or the right-hand side
    /// returned a non-finite value. `at` is the last accepted abscissa.
    Blowup { at: f64 },
    /// The error controller drove the step below machine resolution.
    StepUnderflow { at: f64 },
}

/// Errors that abort integration without producing a trace.
#[derive(Debug, Clone, PartialEq)]
pub enum IvpError {
    /// Tolerance must be positive and finite.
    BadTolerance(f64),
    /// Initial state contains non-finite entries.
    BadInitialState,
    /// Step budget exhausted before reaching the end of the span.
    MaxStepsExceeded,
}

impl fmt::Display for IvpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadTolerance(t) => write!(f, "tolerance must be positive, got {t}"),
            Self::BadInitialState => write!(f, "initial state must be finite"),
            Self::MaxStepsExceeded => write!(f, "maximum number of steps exceeded"),
        }
    }
}

impl std::error::Error for IvpError {}

/// State trace aligned with a [`RadialGrid`].
///
/// `states[i]` is the state at `grid.points()[offset + i]`. A completed
/// outward run has `offset == 0` and full coverage; a blown-up inward run
/// covers only the outer points it reached, so `offset > 0`.
#[derive(Debug, Clone)]
pub struct IvpSolution {
    pub offset: usize,
    pub states: Vec<Vec<f64>>,
    pub outcome: IvpOutcome,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
    pub rhs_evals: usize,
}

impl IvpSolution {
    pub fn completed(&self) -> bool {
        self.outcome == IvpOutcome::Completed
    }

    /// State at the smallest covered radius.
    pub fn inner_state(&self) -> &[f64] {
        self.states.first().map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// State at the largest covered radius.
    pub fn outer_state(&self) -> &[f64] {
        self.states.last().map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Column `k` of the trace, in grid order.
    pub fn component(&self, k: usize) -> Vec<f64> {
        self.states.iter().map(|s| s[k]).collect()
    }
}

// Dormand-Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
// b - b*: weights of the embedded error estimate (5th minus 4th order).
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// Dense-output weights for the 4th-order continuous extension.
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

/// Integrate `dy/dt = rhs(t, y)` across `grid`, interpolating the solution
/// onto every grid point passed, with mixed error control at `tol`.
///
/// The right-hand side writes its derivatives into the output slice. The
/// traversal order follows the grid's direction tag; states are returned in
/// grid (ascending-radius) order regardless.
pub fn integrate_ivp<F>(
    mut rhs: F,
    y0: &[f64],
    grid: &RadialGrid,
    tol: f64,
    options: &IvpOptions,
) -> Result<IvpSolution, IvpError>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(IvpError::BadTolerance(tol));
    }
    if y0.iter().any(|v| !v.is_finite()) {
        return Err(IvpError::BadInitialState);
    }

    let n = y0.len();
    let points = grid.points();
    let m = points.len();
    let inward = grid.direction() == Direction::Inward;
    let t_start = grid.start();
    let t_end = grid.end();
    let dir = if inward { -1.0 } else { 1.0 };
    let span = (t_end - t_start).abs();

    // Grid traversal: next_idx walks the interpolation targets in visit order.
    let visit = |i: usize| if inward { m - 1 - i } else { i };
    let mut visited: Vec<Vec<f64>> = Vec::with_capacity(m);
    visited.push(y0.to_vec());
    let mut next = 1usize;

    let mut t = t_start;
    let mut y = y0.to_vec();
    let mut k: Vec<Vec<f64>> = (0..7).map(|_| vec![0.0; n]).collect();
    let mut y_stage = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    let mut err = vec![0.0; n];

    rhs(t, &y, &mut k[0]);
    let mut evals = 1usize;
    let mut accepted = 0usize;
    let mut rejected = 0usize;

    // Initial step: conservative fraction of the span.
    let mut h = dir * (span * 1e-4).min(span);
    let h_floor = span * 1e-15 + f64::MIN_POSITIVE;

    let finish = |visited: Vec<Vec<f64>>, outcome, accepted, rejected, evals| {
        let covered = visited.len();
        let mut states = visited;
        let offset = if inward {
            states.reverse();
            m - covered
        } else {
            0
        };
        Ok(IvpSolution {
            offset,
            states,
            outcome,
            steps_accepted: accepted,
            steps_rejected: rejected,
            rhs_evals: evals,
        })
    };

    loop {
        if next >= m {
            return finish(visited, IvpOutcome::Completed, accepted, rejected, evals);
        }
        if accepted + rejected >= options.max_steps {
            return Err(IvpError::MaxStepsExceeded);
        }
        // Do not step past the end of the span.
        if (t + h - t_end) * dir > 0.0 {
            h = t_end - t;
        }
        if h.abs() < h_floor {
            return finish(
                visited,
                IvpOutcome::StepUnderflow { at: t },
                accepted,
                rejected,
                evals,
            );
        }

        // Stages 2..7 (k[0] is FSAL from the previous step).
        let mut bad_rhs = false;
        for s in 0..6 {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, a) in A[s].iter().enumerate().take(s + 1) {
                    acc += a * k[j][i];
                }
                y_stage[i] = y[i] + h * acc;
            }
            rhs(t + C[s] * h, &y_stage, &mut k[s + 1]);
            evals += 1;
            if k[s + 1].iter().any(|v| !v.is_finite()) {
                bad_rhs = true;
                break;
            }
        }
        if bad_rhs {
            // Retry with a smaller step; if already tiny, report blow-up.
            h *= 0.5;
            rejected += 1;
            if h.abs() < h_floor {
                return finish(
                    visited,
                    IvpOutcome::Blowup { at: t },
                    accepted,
                    rejected,
                    evals,
                );
            }
            continue;
        }

        // 5th-order solution is stage row 6 of A; k[6] = f(t+h, y_new) (FSAL).
        for i in 0..n {
            let mut acc = 0.0;
            for (j, a) in A[5].iter().enumerate() {
                acc += a * k[j][i];
            }
            y_new[i] = y[i] + h * acc;
        }

        // Error norm against mixed tolerance.
        let mut err_norm = 0.0f64;
        for i in 0..n {
            let mut acc = 0.0;
            for (j, e) in E.iter().enumerate().take(6) {
                acc += e * k[j][i];
            }
            err[i] = h * acc; // k[6] term added after its evaluation below
        }
        rhs(t + h, &y_new, &mut k[6]);
        evals += 1;
        if k[6].iter().any(|v| !v.is_finite()) {
            h *= 0.5;
            rejected += 1;
            if h.abs() < h_floor {
                return finish(
                    visited,
                    IvpOutcome::Blowup { at: t },
                    accepted,
                    rejected,
                    evals,
                );
            }
            continue;
        }
        for i in 0..n {
            err[i] += h * E[6] * k[6][i];
            let scale = options.abs_tol + tol * y[i].abs().max(y_new[i].abs());
            let r = err[i] / scale;
            err_norm += r * r;
        }
        err_norm = (err_norm / n as f64).sqrt();

        if err_norm > 1.0 {
            let shrink = (0.9 * err_norm.powf(-0.2)).max(0.2);
            h *= shrink;
            rejected += 1;
            continue;
        }

        // Accepted: interpolate onto grid points inside (t, t+h].
        let t_new = t + h;
        while next < m {
            let tp = points[visit(next)];
            if (tp - t_new) * dir > 0.0 {
                break;
            }
            let theta = (tp - t) / h;
            let y_interp = dense_eval(&y, &y_new, &k, h, theta, n);
            visited.push(y_interp);
            next += 1;
        }

        if y_new.iter().any(|v| v.abs() > options.blowup_limit) {
            return finish(
                visited,
                IvpOutcome::Blowup { at: t_new },
                accepted + 1,
                rejected,
                evals,
            );
        }

        t = t_new;
        std::mem::swap(&mut y, &mut y_new);
        let (first, rest) = k.split_at_mut(1);
        first[0].copy_from_slice(&rest[5]); // FSAL
        accepted += 1;

        let grow = if err_norm == 0.0 {
            5.0
        } else {
            (0.9 * err_norm.powf(-0.2)).min(5.0)
        };
        h *= grow.max(0.2);
    }
}

/// Continuous extension of the accepted step, evaluated at fraction `theta`.
fn dense_eval(
    y: &[f64],
    y_new: &[f64],
    k: &[Vec<f64>],
    h: f64,
    theta: f64,
    n: usize,
) -> Vec<f64> {
    let mut out = vec![0.0; n];
    let th1 = 1.0 - theta;
    for i in 0..n {
        let ydiff = y_new[i] - y[i];
        let bspl = h * k[0][i] - ydiff;
        let r4 = ydiff - h * k[6][i] - bspl;
        let mut r5 = 0.0;
        for (j, d) in D.iter().enumerate() {
            r5 += d * k[j][i];
        }
        r5 *= h;
        out[i] = y[i] + theta * (ydiff + th1 * (bspl + theta * (r4 + th1 * r5)));
    }
    out
}
