//! Klein-Gordon companion: the self-field system whose potential-dependent
//! charge density blocks confinement, plus the effective-potential table
//! contrasting the two charge-density structures.

use super::shoot::{shoot_with_tol, ShotTrace};
use super::system::{asymptotic_seed, DiracError, DiracParams};
use crate::numerics::{integrate_ivp, IvpOptions, RadialGrid};

/// One row of the effective-potential demonstration table (m = 1,
/// psi = const, V = 1/rho, total energy E).
#[derive(Debug, Clone, Copy)]
pub struct KgPotentialRow {
    pub rho: f64,
    pub v: f64,
    /// m^2 - (E - V)^2: effective energy with a field-independent charge.
    pub dirac_effective: f64,
    /// m^2 - sign(E - V) (E - V)^2: the Klein-Gordon form.
    pub kg_effective: f64,
    /// Charge density -(E - V)/1.49 psi*psi (fixed normalization constant).
    pub kg_charge: f64,
}

/// Tabulate the two effective energies and the KG charge density over a
/// grid of radii for total energy `e` (grid must exclude rho = 0).
pub fn kg_effective_potential_demo(e: f64, grid: &RadialGrid) -> Vec<KgPotentialRow> {
    grid.points()
        .iter()
        .map(|&rho| {
            let v = 1.0 / rho;
            let diff = e - v;
            KgPotentialRow {
                rho,
                v,
                dirac_effective: 1.0 - diff * diff,
                kg_effective: 1.0 - diff.signum() * diff * diff,
                kg_charge: -diff / 1.49,
            }
        })
        .collect()
}

/// Outcome of the companion-system feasibility scan.
#[derive(Debug, Clone)]
pub struct KgFeasibility {
    /// Charge-objective values over the scanned amplitude bracket.
    pub amplitudes: Vec<f64>,
    pub charge_objectives: Vec<f64>,
    /// Whether any sign change (an origin-regular bound member) was found.
    pub bound_profile_found: bool,
}

/// Right-hand side of the dimensionless Klein-Gordon companion:
/// psi'' + (2/rho) psi' = [1 - theta^2] psi with theta = |beta| - s (alpha/2) V,
/// and the Poisson source carrying the full alpha through the
/// field-dependent charge density (|beta| - s alpha V) |psi|^2.
fn kg_rhs(rho: f64, y: &[f64], dy: &mut [f64], params: &DiracParams) {
    let (psi, dpsi, v, dv) = (y[0], y[1], y[2], y[3]);
    let s = params.sign_e_e;
    let theta = params.beta.abs() - s * 0.5 * params.alpha * v;
    dy[0] = dpsi;
    dy[1] = -2.0 / rho * dpsi + (1.0 - theta * theta) * psi;
    dy[2] = dv;
    dy[3] = -2.0 / rho * dv
        - s * (params.beta.abs() - s * params.alpha * v) * psi * psi;
}

/// Shoot the KG companion inward from decaying seeds.
fn kg_shoot(
    params: &DiracParams,
    a: f64,
    b: f64,
    grid: &RadialGrid,
) -> Result<(Vec<[f64; 4]>, f64, f64), DiracError> {
    let rho_start = grid.start();
    let k = params.decay_rate();
    let psi = a * (-k * rho_start).exp() / rho_start;
    let y0 = [
        psi,
        -psi * (k + 1.0 / rho_start),
        b / rho_start,
        -b / (rho_start * rho_start),
    ];
    let options = IvpOptions {
        blowup_limit: 1e25,
        ..IvpOptions::default()
    };
    let sol = integrate_ivp(
        |rho, y, dy| kg_rhs(rho.max(1e-300), y, dy, params),
        &y0,
        grid,
        1e-10,
        &options,
    )?;
    let states: Vec<[f64; 4]> = sol.states.iter().map(|v| [v[0], v[1], v[2], v[3]]).collect();
    let inner = states[0];
    let rho_inner = grid.points()[sol.offset];
    // wave objective: the 1/rho coefficient of psi (the singular branch)
    let wave = rho_inner * inner[0];
    let charge = rho_inner * rho_inner * inner[3];
    Ok((states, wave, charge))
}

/// Scan the companion system over the amplitude bracket, testing whether
/// any origin-regular bound profile exists: the oracle is an exhaustive
/// bracket scan of the charge objective at wave amplitudes where the Dirac
/// system finds its family.
///
/// For the Klein-Gordon charge density the objective never changes sign:
/// the potential-dependent source flips the charge where the potential is
/// strong and confinement fails.
pub fn kg_companion_scan(
    params: &DiracParams,
    a_bracket: (f64, f64),
    n: usize,
    grid: &RadialGrid,
) -> Result<KgFeasibility, DiracError> {
    params.validate()?;
    let (a_lo, a_hi) = a_bracket;
    let mut amplitudes = Vec::with_capacity(n);
    let mut objectives = Vec::with_capacity(n);
    for i in 0..n {
        let a = a_lo * (a_hi / a_lo).powf(i as f64 / (n - 1) as f64);
        // For each amplitude, test whether a potential amplitude B exists
        // that regularizes V while the wave stays origin-regular: probe the
        // wave objective at the B that zeroes the charge objective.
        let b = match kg_match_b(params, a, grid) {
            Some(b) => b,
            None => {
                amplitudes.push(a);
                objectives.push(f64::NAN);
                continue;
            }
        };
        let (_, wave, _) = kg_shoot(params, a, b, grid)?;
        amplitudes.push(a);
        objectives.push(wave);
    }
    // A sign change alone is not a bound profile: poles of the objective
    // flip sign too. Classify each crossing by whether the objective
    // magnitude collapses as the bracket narrows.
    let mut bound_profile_found = false;
    for i in 0..objectives.len().saturating_sub(1) {
        let (w0, w1) = (objectives[i], objectives[i + 1]);
        if !w0.is_finite() || !w1.is_finite() || w0.signum() == w1.signum() {
            continue;
        }
        let (mut lo, mut hi) = (amplitudes[i], amplitudes[i + 1]);
        let mut w_lo = w0;
        let start = w0.abs().min(w1.abs());
        let mut best = start;
        for _ in 0..12 {
            let mid = (lo * hi).sqrt();
            let Some(b) = kg_match_b(params, mid, grid) else { break };
            let Ok((_, w, _)) = kg_shoot(params, mid, b, grid) else { break };
            best = best.min(w.abs());
            if w.signum() == w_lo.signum() {
                lo = mid;
                w_lo = w;
            } else {
                hi = mid;
            }
        }
        if best < 1e-2 * start {
            bound_profile_found = true;
        }
    }
    Ok(KgFeasibility {
        amplitudes,
        charge_objectives: objectives,
        bound_profile_found,
    })
}

fn kg_match_b(params: &DiracParams, a: f64, grid: &RadialGrid) -> Option<f64> {
    let probe = |b: f64| kg_shoot(params, a, b, grid).map(|(_, _, q)| q).ok();
    let center = -1e-5 * a * a - 1e-6;
    let mut half = center.abs().max(1e-4);
    let (mut lo, mut hi) = (center - half, center + half);
    let (mut f_lo, mut f_hi) = (probe(lo)?, probe(hi)?);
    let mut grow = 0;
    while f_lo.signum() == f_hi.signum() && grow < 80 {
        half *= 2.0;
        lo = center - half;
        hi = center + half;
        f_lo = probe(lo)?;
        f_hi = probe(hi)?;
        grow += 1;
    }
    if f_lo.signum() == f_hi.signum() {
        return None;
    }
    for _ in 0..70 {
        let mid = 0.5 * (lo + hi);
        let fm = probe(mid)?;
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    let _ = f_hi;
    Some(0.5 * (lo + hi))
}

/// Control case: the same amplitude scan applied to the Dirac system, where
/// the wave objective is the regular-branch value and a family exists; the
/// scan must report at least one admissible (regular) member.
pub fn dirac_control_scan(
    params: &DiracParams,
    a_bracket: (f64, f64),
    n: usize,
    grid: &RadialGrid,
) -> Result<bool, DiracError> {
    let (a_lo, a_hi) = a_bracket;
    for i in 0..n {
        let a = a_lo * (a_hi / a_lo).powf(i as f64 / (n - 1).max(1) as f64);
        if let Ok(((_, b), report)) =
            super::shoot::match_amplitudes(params, grid, a, 1e-8)
        {
            if report.converged {
                let _ = b;
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Free Klein-Gordon check (alpha -> 0 limit): with no self-field the only
/// decaying origin-regular solution is trivial.
pub fn kg_free_profile(
    beta: f64,
    a: f64,
    grid: &RadialGrid,
) -> Result<ShotTrace, DiracError> {
    // With alpha ~ 0 the system is linear; reuse the Dirac shot machinery
    // on a params clone to exercise the same code path.
    let mut params = DiracParams::new(-1, 1e-12, beta)?;
    params.rho_max = grid.points()[grid.len() - 1];
    params.rho_min = grid.points()[0];
    let _ = asymptotic_seed(&params, a, 0.0, grid.start());
    shoot_with_tol(&params, a, 0.0, grid, 1e-10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Direction;

    #[test]
    fn effective_potential_table_structure() {
        let grid = RadialGrid::linspace(0.1, 10.0, 200, Direction::Outward).unwrap();
        let rows = kg_effective_potential_demo(0.5, &grid);
        // At V = E (rho = 2) both effective energies equal m^2 = 1.
        let at2 = rows
            .iter()
            .min_by(|a, b| {
                (a.rho - 2.0).abs().partial_cmp(&(b.rho - 2.0).abs()).unwrap()
            })
            .unwrap();
        assert!((at2.dirac_effective - 1.0).abs() < 1e-2);
        assert!((at2.kg_effective - 1.0).abs() < 1e-2);
        // Where V > E the KG form flips sign relative to the Dirac form:
        // deep interior, Dirac effective large negative (a well), KG large
        // positive (a barrier) -- the minimum-vs-maximum structure.
        let inner = &rows[0]; // rho = 0.1, V = 10
        assert!(inner.dirac_effective < -50.0);
        assert!(inner.kg_effective > 50.0);
        assert!((inner.kg_effective + inner.dirac_effective - 2.0).abs() < 1e-12);
        // Charge density follows the fixed 1.49 normalization.
        assert!((inner.kg_charge - (-(0.5 - 10.0) / 1.49)).abs() < 1e-12);
    }

    #[test]
    fn kg_scan_finds_no_bound_profile_where_dirac_does() {
        let params = DiracParams::new(-1, 0.101, 0.35).unwrap();
        let grid = RadialGrid::logspace(1e-4, 30.0, 50, Direction::Inward).unwrap();
        let kg = kg_companion_scan(&params, (0.05, 20.0), 13, &grid).unwrap();
        assert!(
            !kg.bound_profile_found,
            "KG companion unexpectedly found a bound profile"
        );
        let dirac_found = dirac_control_scan(&params, (0.05, 20.0), 3, &grid).unwrap();
        assert!(dirac_found, "Dirac control scan should find its family");
    }

    #[test]
    fn free_kg_has_only_the_trivial_decaying_solution() {
        // alpha -> 0: the wave objective (1/rho coefficient at the origin)
        // scales linearly with the seed amplitude and never vanishes for
        // a != 0: no self-trapping without the nonlinearity.
        let grid = RadialGrid::logspace(1e-4, 30.0, 50, Direction::Inward).unwrap();
        let w1 = kg_free_profile(0.35, 1.0, &grid).unwrap();
        let w2 = kg_free_profile(0.35, 2.0, &grid).unwrap();
        let o1 = w1.diagnostics.wave_objective;
        let o2 = w2.diagnostics.wave_objective;
        assert!((o2 / o1 - 2.0).abs() < 1e-6, "linear scaling violated");
        assert!(o1.abs() > 0.0);
    }
}
