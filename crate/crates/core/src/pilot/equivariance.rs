//! Ensemble transport check: samples drawn from |psi(0)|^2, pushed along
//! guidance trajectories, compared against |psi(T)|^2.
//!
//! This is the continuity-equation statement in testable form: if the
//! density rides the velocity field, an initially Born-distributed ensemble
//! stays Born-distributed.

use super::field::{ComplexField, PilotError};
use super::guidance::GuidanceLaw;
use super::trajectory::{integrate_trajectory, TrajectoryOutcome};
use crate::numerics::Rng;

/// One histogram bin of the final-position comparison.
#[derive(Debug, Clone, Copy)]
pub struct HistogramBin {
    pub center: f64,
    pub count: usize,
    /// |psi(x, T)|^2 integrated over the bin (midpoint rule), normalized
    /// over the histogram support.
    pub psi2: f64,
}

#[derive(Debug, Clone)]
pub struct EquivarianceReport {
    /// Symmetric Kullback-Leibler divergence between the sampled and
    /// analytic densities over the binned support (floored, so bounded).
    pub divergence: f64,
    pub histogram: Vec<HistogramBin>,
    pub samples_used: usize,
    /// Trajectories dropped because they halted near nodes.
    pub halted: usize,
}

/// Draw `n` samples from |psi(x, t0)|^2 over `[lo, hi]` by rejection.
pub fn born_samples(
    field: &ComplexField,
    t0: f64,
    range: (f64, f64),
    n: usize,
    rng: &mut Rng,
) -> Vec<f64> {
    // envelope: scan for the maximum density
    let mut peak: f64 = 0.0;
    for i in 0..2048 {
        let x = range.0 + (range.1 - range.0) * i as f64 / 2047.0;
        peak = peak.max(field.value(&[x], t0).norm_sqr());
    }
    let peak = peak * 1.05;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = rng.uniform_in(range.0, range.1);
        let y = rng.uniform() * peak;
        if y <= field.value(&[x], t0).norm_sqr() {
            out.push(x);
        }
    }
    out
}

/// Transport `n_samples` Born-distributed points from `t_span.0` to
/// `t_span.1` and compare the endpoint histogram with |psi(T)|^2.
///
/// `sample_range` bounds the initial rejection sampling; `bin_range` and
/// `n_bins` fix the comparison histogram at the final time.
#[allow(clippy::too_many_arguments)]
pub fn equivariance_check(
    field: &ComplexField,
    law: &GuidanceLaw,
    n_samples: usize,
    t_span: (f64, f64),
    dt: f64,
    sample_range: (f64, f64),
    bin_range: (f64, f64),
    n_bins: usize,
    seed: u64,
) -> Result<EquivarianceReport, PilotError> {
    if n_samples < 100 {
        return Err(PilotError::TooFewSamples {
            got: n_samples,
            min: 100,
        });
    }
    let mut rng = Rng::seeded(seed);
    let starts = born_samples(field, t_span.0, sample_range, n_samples, &mut rng);

    let mut finals = Vec::with_capacity(n_samples);
    let mut halted = 0usize;
    for &x0 in &starts {
        match integrate_trajectory(field, law, &[x0], t_span, dt) {
            Ok(traj) => match traj.outcome {
                TrajectoryOutcome::Completed => finals.push(traj.last_position()[0]),
                TrajectoryOutcome::NodeHalt { .. } => halted += 1,
            },
            Err(_) => halted += 1,
        }
    }

    // Histogram of finals.
    let width = (bin_range.1 - bin_range.0) / n_bins as f64;
    let mut counts = vec![0usize; n_bins];
    let mut used = 0usize;
    for &x in &finals {
        if x >= bin_range.0 && x < bin_range.1 {
            counts[((x - bin_range.0) / width) as usize] += 1;
            used += 1;
        }
    }

    // Analytic density per bin at the final time (midpoint rule).
    let t1 = t_span.1;
    let psi2_raw: Vec<f64> = (0..n_bins)
        .map(|i| {
            let center = bin_range.0 + (i as f64 + 0.5) * width;
            field.value(&[center], t1).norm_sqr()
        })
        .collect();
    let psi2_sum: f64 = psi2_raw.iter().sum();

    // Symmetric KL over the binned densities, floored for boundedness.
    let floor = 1e-9;
    let mut divergence = 0.0;
    let mut histogram = Vec::with_capacity(n_bins);
    for i in 0..n_bins {
        let p = (counts[i] as f64 / used.max(1) as f64).max(floor);
        let q = (psi2_raw[i] / psi2_sum).max(floor);
        divergence += 0.5 * (p - q) * (p.ln() - q.ln());
        histogram.push(HistogramBin {
            center: bin_range.0 + (i as f64 + 0.5) * width,
            count: counts[i],
            psi2: psi2_raw[i] / psi2_sum,
        });
    }
    Ok(EquivarianceReport {
        divergence,
        histogram,
        samples_used: used,
        halted,
    })
}
