//! Guidance-law trajectory integration.

use super::field::{ComplexField, PilotError};
use super::guidance::{guidance_velocity, GuidanceLaw};

/// Time-stamped particle positions.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub positions: Vec<Vec<f64>>,
    pub outcome: TrajectoryOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrajectoryOutcome {
    Completed,
    /// Field magnitude dropped below the nodal threshold; integration
    /// stopped at the recorded time with the partial path kept.
    NodeHalt { t: f64 },
}

impl Trajectory {
    pub fn last_position(&self) -> &[f64] {
        self.positions.last().map(|p| p.as_slice()).unwrap_or(&[])
    }

    fn validate(&self) -> bool {
        self.times.windows(2).all(|w| w[0] < w[1])
            && self
                .positions
                .iter()
                .all(|p| p.iter().all(|v| v.is_finite()))
    }
}

/// Integrate dx/dt = v(x, t) with classic fixed-step RK4 (local error
/// O(dt^4) against the guidance field), halting with a diagnostic if the
/// trajectory approaches a node.
pub fn integrate_trajectory(
    field: &ComplexField,
    law: &GuidanceLaw,
    x0: &[f64],
    t_span: (f64, f64),
    dt: f64,
) -> Result<Trajectory, PilotError> {
    field.check_dim(x0)?;
    let v = |x: &[f64], t: f64| guidance_velocity(field, law, x, t);
    // Starting on a node is an input error rather than a halt.
    v(x0, t_span.0)?;

    let n_steps = (((t_span.1 - t_span.0) / dt).ceil() as usize).max(1);
    let dt = (t_span.1 - t_span.0) / n_steps as f64;
    let dim = x0.len();
    let mut times = Vec::with_capacity(n_steps + 1);
    let mut positions = Vec::with_capacity(n_steps + 1);
    let mut x = x0.to_vec();
    let mut t = t_span.0;
    times.push(t);
    positions.push(x.clone());

    let mut scratch = vec![0.0; dim];
    for _ in 0..n_steps {
        let step = |k: &[f64], frac: f64, out: &mut Vec<f64>| {
            out.clear();
            out.extend(x.iter().zip(k).map(|(xi, ki)| xi + frac * dt * ki));
        };
        let halt = |t_now: f64, times: Vec<f64>, positions: Vec<Vec<f64>>| Trajectory {
            times,
            positions,
            outcome: TrajectoryOutcome::NodeHalt { t: t_now },
        };
        let k1 = match v(&x, t) {
            Ok(k) => k,
            Err(_) => return Ok(halt(t, times, positions)),
        };
        let mut xs = Vec::with_capacity(dim);
        step(&k1, 0.5, &mut xs);
        let k2 = match v(&xs, t + 0.5 * dt) {
            Ok(k) => k,
            Err(_) => return Ok(halt(t, times, positions)),
        };
        step(&k2, 0.5, &mut xs);
        let k3 = match v(&xs, t + 0.5 * dt) {
            Ok(k) => k,
            Err(_) => return Ok(halt(t, times, positions)),
        };
        step(&k3, 1.0, &mut xs);
        let k4 = match v(&xs, t + dt) {
            Ok(k) => k,
            Err(_) => return Ok(halt(t, times, positions)),
        };
        scratch.clear();
        for i in 0..dim {
            scratch.push(x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
        }
        std::mem::swap(&mut x, &mut scratch);
        t += dt;
        times.push(t);
        positions.push(x.clone());
    }
    let traj = Trajectory {
        times,
        positions,
        outcome: TrajectoryOutcome::Completed,
    };
    debug_assert!(traj.validate());
    Ok(traj)
}
