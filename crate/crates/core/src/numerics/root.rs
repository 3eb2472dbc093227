//! Root finding: bisection for bracketed scalar maps, damped Broyden for
//! 2-vector maps.

use std::fmt;

/// Convergence summary attached to every solver result.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub converged: bool,
    pub iterations: usize,
    pub final_residual: f64,
    pub diagnostics: String,
}

impl SolveReport {
    pub fn converged(iterations: usize, final_residual: f64) -> Self {
        Self {
            converged: true,
            iterations,
            final_residual,
            diagnostics: String::new(),
        }
    }

    pub fn failed(iterations: usize, final_residual: f64, note: &str) -> Self {
        Self {
            converged: false,
            iterations,
            final_residual,
            diagnostics: note.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    /// Scalar bracket endpoints do not straddle a sign change.
    NoSignChange { f_lo: f64, f_hi: f64 },
    /// Objective returned a non-finite value at the given point.
    NonFinite,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoSignChange { f_lo, f_hi } => {
                write!(f, "no sign change over bracket: f(lo)={f_lo}, f(hi)={f_hi}")
            }
            Self::NonFinite => write!(f, "objective returned a non-finite value"),
        }
    }
}

impl std::error::Error for RootError {}

/// Bisection on `[lo, hi]`; requires a sign change. Returns the midpoint of
/// the final bracket once its width is below `tol` or `|f| <= tol`.
pub fn find_root_scalar<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, SolveReport), RootError>
where
    F: FnMut(f64) -> f64,
{
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let fb = f(b);
    if !fa.is_finite() || !fb.is_finite() {
        return Err(RootError::NonFinite);
    }
    if fa == 0.0 {
        return Ok((a, SolveReport::converged(0, 0.0)));
    }
    if fb == 0.0 {
        return Ok((b, SolveReport::converged(0, 0.0)));
    }
    if fa.signum() == fb.signum() {
        return Err(RootError::NoSignChange { f_lo: fa, f_hi: fb });
    }
    let mut iterations = 0;
    let mut fm = fa;
    while iterations < max_iter {
        let mid = 0.5 * (a + b);
        fm = f(mid);
        iterations += 1;
        if !fm.is_finite() {
            return Err(RootError::NonFinite);
        }
        if fm == 0.0 || (b - a).abs() < tol {
            return Ok((mid, SolveReport::converged(iterations, fm.abs())));
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if fm.abs() <= tol && (b - a).abs() < tol.max(1e-15 * mid.abs()) {
            return Ok((mid, SolveReport::converged(iterations, fm.abs())));
        }
    }
    let mid = 0.5 * (a + b);
    Ok((
        mid,
        SolveReport::failed(iterations, fm.abs(), "bisection iteration cap"),
    ))
}

/// Damped Broyden iteration for a 2-vector map from a finite seed.
///
/// The Jacobian is initialized by forward differences and updated with the
/// good Broyden formula; steps are halved until the residual norm decreases
/// (up to 8 halvings). On cap exhaustion the best iterate is returned with a
/// non-converged report, never an error.
pub fn find_root2<F>(
    mut f: F,
    seed: [f64; 2],
    tol: f64,
    max_iter: usize,
) -> Result<([f64; 2], SolveReport), RootError>
where
    F: FnMut([f64; 2]) -> [f64; 2],
{
    let norm = |v: [f64; 2]| v[0].hypot(v[1]);
    let mut x = seed;
    let mut fx = f(x);
    if !fx[0].is_finite() || !fx[1].is_finite() {
        return Err(RootError::NonFinite);
    }

    // Forward-difference Jacobian.
    let mut jac = [[0.0f64; 2]; 2];
    let rebuild = |f: &mut F, x: [f64; 2], fx: [f64; 2], jac: &mut [[f64; 2]; 2]| {
        for j in 0..2 {
            let h = 1e-6 * x[j].abs().max(1e-6);
            let mut xp = x;
            xp[j] += h;
            let fp = f(xp);
            for i in 0..2 {
                jac[i][j] = (fp[i] - fx[i]) / h;
            }
        }
    };
    rebuild(&mut f, x, fx, &mut jac);

    let mut best = (x, norm(fx));
    let mut iterations = 0;
    while iterations < max_iter {
        let r = norm(fx);
        if r <= tol && fx[0].abs() <= tol && fx[1].abs() <= tol {
            return Ok((x, SolveReport::converged(iterations, r)));
        }
        // Solve J dx = -f.
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if det.abs() < 1e-300 || !det.is_finite() {
            rebuild(&mut f, x, fx, &mut jac);
            let det2 = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            if det2.abs() < 1e-300 || !det2.is_finite() {
                return Ok((
                    best.0,
                    SolveReport::failed(iterations, best.1, "singular Jacobian"),
                ));
            }
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        let dx = [
            -(jac[1][1] * fx[0] - jac[0][1] * fx[1]) / det,
            -(-jac[1][0] * fx[0] + jac[0][0] * fx[1]) / det,
        ];

        // Damped line search on the residual norm.
        let mut lambda = 1.0;
        let mut x_new = x;
        let mut f_new = fx;
        let mut improved = false;
        for _ in 0..8 {
            x_new = [x[0] + lambda * dx[0], x[1] + lambda * dx[1]];
            f_new = f(x_new);
            if f_new[0].is_finite() && f_new[1].is_finite() && norm(f_new) < r {
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        iterations += 1;
        if !improved {
            // Stuck: refresh the Jacobian once, then give up if still stuck.
            rebuild(&mut f, x, fx, &mut jac);
            let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            if det.abs() < 1e-300 {
                return Ok((
                    best.0,
                    SolveReport::failed(iterations, best.1, "line search stalled"),
                ));
            }
            let dx = [
                -(jac[1][1] * fx[0] - jac[0][1] * fx[1]) / det,
                -(-jac[1][0] * fx[0] + jac[0][0] * fx[1]) / det,
            ];
            x_new = [x[0] + 0.25 * dx[0], x[1] + 0.25 * dx[1]];
            f_new = f(x_new);
            if !f_new[0].is_finite() || !f_new[1].is_finite() || norm(f_new) >= r {
                return Ok((
                    best.0,
                    SolveReport::failed(iterations, best.1, "line search stalled"),
                ));
            }
        }

        // Good Broyden update: J += (df - J dx) dx^T / (dx . dx).
        let dxv = [x_new[0] - x[0], x_new[1] - x[1]];
        let dfv = [f_new[0] - fx[0], f_new[1] - fx[1]];
        let dd = dxv[0] * dxv[0] + dxv[1] * dxv[1];
        if dd > 0.0 {
            for i in 0..2 {
                let jdx = jac[i][0] * dxv[0] + jac[i][1] * dxv[1];
                let coef = (dfv[i] - jdx) / dd;
                jac[i][0] += coef * dxv[0];
                jac[i][1] += coef * dxv[1];
            }
        }
        x = x_new;
        fx = f_new;
        if norm(fx) < best.1 {
            best = (x, norm(fx));
        }
    }
    Ok((
        best.0,
        SolveReport::failed(iterations, best.1, "iteration cap exceeded"),
    ))
}
