//! Scenario dispatch: run one named computation and emit its artifacts.

use super::config::{ConfigError, Scenario, ScenarioConfig};
use super::csv::{write_csv, CsvError};
use super::manifest::ArtifactManifest;
use super::svg::{emit_plot, PlotSpec, SvgError};
use crate::bloch::{
    bloch_rhs, dipole_decay_params, force_diagram, integrate_bloch, BlochState, DriveParams,
};
use crate::dirac::{
    kg_companion_scan, kg_effective_potential_demo, solve_member, solve_soliton, DiracParams,
    SolveSettings,
};
use crate::numerics::{Direction, PhysicalConstants, RadialGrid, Rng};
use crate::photon::{
    solve_longitudinal, soliton_energy, soliton_family, uehling_point_asymptotics,
    uehling_vacuum, PhotonUnits, UehlingBranch,
};
use crate::pilot::{
    equivariance_check, integrate_pair, integrate_trajectory, ComplexField, GuidanceLaw,
    TwoBodyField,
};
use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum ScenarioError {
    Config(ConfigError),
    Io(std::io::Error),
    Csv(CsvError),
    Svg(SvgError),
    /// A solver failed to converge; the manifest is still written.
    NonConvergence(String),
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Config(e) => write!(f, "config: {e}"),
            Self::Io(e) => write!(f, "io: {e}"),
            Self::Csv(e) => write!(f, "csv: {e}"),
            Self::Svg(e) => write!(f, "svg: {e}"),
            Self::NonConvergence(msg) => write!(f, "solver did not converge: {msg}"),
        }
    }
}

impl std::error::Error for ScenarioError {}

impl From<ConfigError> for ScenarioError {
    fn from(e: ConfigError) -> Self {
        Self::Config(e)
    }
}

impl From<std::io::Error> for ScenarioError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<CsvError> for ScenarioError {
    fn from(e: CsvError) -> Self {
        Self::Csv(e)
    }
}

impl From<SvgError> for ScenarioError {
    fn from(e: SvgError) -> Self {
        Self::Svg(e)
    }
}

/// Run the configured scenario, emitting CSV tables, SVG plots, and the
/// manifest into the config's output directory.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ArtifactManifest, ScenarioError> {
    std::fs::create_dir_all(&config.out_dir)?;
    let mut manifest = ArtifactManifest::new(config.scenario.name(), &config.params);
    let result = match config.scenario {
        Scenario::DiracSoliton => run_dirac(config, &mut manifest),
        Scenario::PhotonSoliton => run_photon(config, &mut manifest),
        Scenario::Uehling => run_uehling(config, &mut manifest),
        Scenario::Trajectories => run_trajectories(config, &mut manifest),
        Scenario::Equivariance => run_equivariance(config, &mut manifest),
        Scenario::Bloch => run_bloch(config, &mut manifest),
        Scenario::DipoleDecay => run_dipole_decay(config, &mut manifest),
    };
    // The manifest is written even on solver non-convergence.
    let manifest_path = manifest.write(&config.out_dir)?;
    manifest.add_file(&manifest_path);
    result.map(|()| manifest)
}

fn out(config: &ScenarioConfig, name: &str) -> PathBuf {
    config.out_dir.join(name)
}

fn run_dirac(config: &ScenarioConfig, manifest: &mut ArtifactManifest) -> Result<(), ScenarioError> {
    let kappa = config.i64("kappa")? as i32;
    let alpha = config
        .f64_opt("alpha")?
        .unwrap_or(if kappa < 0 { 0.101 } else { 0.0685 });
    let settings = SolveSettings {
        rho_max: config.f64("rho_max")?,
        rho_min: config.f64("rho_min")?,
        trace_points: config.usize("trace_points")?,
        beta_bracket: (config.f64("beta_lo")?, config.f64("beta_hi")?),
        beta_scan_steps: config.usize("beta_steps")?,
        ..SolveSettings::default()
    };
    let solution = if config.bool("full_solve")? {
        solve_soliton(kappa, alpha, &settings)
    } else {
        let params = DiracParams::new(kappa, alpha, config.f64("beta")?)
            .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
        solve_member(&params, config.f64("amplitude")?, &settings)
    }
    .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;

    // profiles.csv: rho, f, g, V, dV
    let profile_rows: Vec<Vec<f64>> = solution
        .points
        .iter()
        .zip(&solution.states)
        .map(|(&rho, s)| vec![rho, s.f_hat, s.g_hat, s.v_hat, s.dv_hat])
        .collect();
    let profiles = out(config, "profiles.csv");
    write_csv(&profiles, &["rho", "f", "g", "V", "dV"], &profile_rows)?;
    manifest.add_file(&profiles);

    // observables.csv: one row per named integral
    let o = &solution.observables;
    let obs_rows = vec![
        ("spin", o.spin),
        ("spin_signed", o.spin_signed),
        ("charge_integral", o.charge_integral),
        ("alpha_out", o.alpha_out),
        ("m_g", o.m_g),
        ("m_f", o.m_f),
        ("m_fg", o.m_fg),
        ("F_d", o.f_d),
        ("V_d", o.v_d),
        ("field_energy", o.field_energy),
        ("total_mass", o.total_mass),
        ("mass_balance", o.mass_balance),
        ("alpha", solution.params.alpha),
        ("beta", solution.params.beta),
        ("amplitude_A", solution.amplitude_a),
        ("amplitude_B", solution.amplitude_b),
    ];
    // name column encoded by row order; emit a sidecar header of names
    let observables_path = out(config, "observables.csv");
    {
        use std::io::Write;
        let mut f = std::io::BufWriter::new(std::fs::File::create(&observables_path)?);
        writeln!(f, "name,value").map_err(CsvError::Io)?;
        for (name, value) in &obs_rows {
            writeln!(f, "{name},{}", super::csv::format_value(*value)).map_err(CsvError::Io)?;
        }
    }
    manifest.add_file(&observables_path);

    if !solution.constraint_scan.is_empty() {
        let scan_rows: Vec<Vec<f64>> = solution
            .constraint_scan
            .iter()
            .map(|r| {
                vec![
                    r.beta,
                    r.spin_charge_ratio,
                    r.charge_at_spin,
                    r.mass_balance_at_spin,
                    r.alpha_at_spin,
                ]
            })
            .collect();
        let scan_path = out(config, "constraint_scan.csv");
        write_csv(
            &scan_path,
            &[
                "beta",
                "spin_charge_ratio",
                "charge_at_spin",
                "mass_balance_at_spin",
                "alpha_at_spin",
            ],
            &scan_rows,
        )?;
        manifest.add_file(&scan_path);
    }

    // KG companion demo table (the effective-potential contrast).
    let demo_grid = RadialGrid::linspace(0.1, 10.0, 397, Direction::Outward)
        .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
    let demo_rows: Vec<Vec<f64>> = kg_effective_potential_demo(0.5, &demo_grid)
        .iter()
        .map(|r| vec![r.rho, r.v, r.dirac_effective, r.kg_effective, r.kg_charge])
        .collect();
    let demo_path = out(config, "kg_effective_potential.csv");
    write_csv(
        &demo_path,
        &["rho", "V", "energy_dirac", "energy_kg", "charge_kg"],
        &demo_rows,
    )?;
    manifest.add_file(&demo_path);

    // KG companion feasibility scan at the solved parameters.
    let kg_grid = RadialGrid::logspace(
        solution.params.rho_min,
        solution.params.rho_max,
        50,
        Direction::Inward,
    )
    .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
    if let Ok(kg) = kg_companion_scan(&solution.params, (0.05, 20.0), 13, &kg_grid) {
        manifest.add_report(
            "kg_companion",
            &format!("bound_profile_found={}", kg.bound_profile_found),
        );
    }

    let svg = out(config, "profiles.svg");
    emit_plot(
        &profiles,
        &PlotSpec {
            x_column: "rho".into(),
            y_columns: vec!["f".into(), "g".into(), "V".into()],
            log_x: true,
            log_y: false,
            title: format!("dirac soliton profiles, kappa={kappa}"),
        },
        &svg,
    )?;
    manifest.add_file(&svg);

    manifest.converged = solution.report.converged;
    manifest.add_report("solver", &solution.report.diagnostics);
    if !solution.report.converged {
        return Err(ScenarioError::NonConvergence(
            solution.report.diagnostics.clone(),
        ));
    }
    Ok(())
}

fn run_photon(config: &ScenarioConfig, manifest: &mut ArtifactManifest) -> Result<(), ScenarioError> {
    let rho_max = config.f64("rho_max")?;
    let n = config.usize("grid_points")?;
    let shoot_tol = config.f64("shoot_tol")?;
    let units = PhotonUnits::from_constants(&PhysicalConstants::codata());
    let grid = RadialGrid::linspace(1e-6, rho_max, n, Direction::Outward)
        .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;

    // Ground state of the exact equation, with the matched decaying tail.
    let profile = crate::photon::ground_state_profile(&grid, shoot_tol)
        .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
    let a_star = profile.central();
    manifest.add_report("ground_state_amplitude", &format!("{a_star:.10}"));
    let prof_rows: Vec<Vec<f64>> = profile
        .grid
        .points()
        .iter()
        .zip(profile.e.iter().zip(&profile.de))
        .map(|(&rho, (&e, &de))| vec![rho, e, de])
        .collect();
    let prof_path = out(config, "profile.csv");
    write_csv(&prof_path, &["rho", "E", "dE"], &prof_rows)?;
    manifest.add_file(&prof_path);

    // Self-similar family table.
    let lo = config.f64("scale_lo")?;
    let hi = config.f64("scale_hi")?;
    let members = config.usize("family_members")?.max(2);
    let scales: Vec<f64> = (0..members)
        .map(|i| lo * (hi / lo).powf(i as f64 / (members - 1) as f64))
        .collect();
    let family = soliton_family(&grid, &scales, &units, shoot_tol)
        .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
    let fam_rows: Vec<Vec<f64>> = family
        .iter()
        .map(|m| vec![m.a, m.radius_re, m.energy_mec2, m.central_field_ecl])
        .collect();
    let fam_path = out(config, "family.csv");
    write_csv(
        &fam_path,
        &["a", "radius_re", "energy_mec2", "central_field_Ecl"],
        &fam_rows,
    )?;
    manifest.add_file(&fam_path);

    // Longitudinal profile at the configured mass parameter.
    let long_grid = RadialGrid::logspace(1e-6, rho_max, 2000, Direction::Outward)
        .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;
    if let Ok(lp) = solve_longitudinal(config.f64("mass_param")?, &long_grid) {
        let rows: Vec<Vec<f64>> = lp
            .grid
            .points()
            .iter()
            .zip(lp.e.iter().zip(&lp.de))
            .map(|(&rho, (&e, &de))| vec![rho, e, de])
            .collect();
        let path = out(config, "longitudinal.csv");
        write_csv(&path, &["rho", "E", "dE"], &rows)?;
        manifest.add_file(&path);
        if let Ok(en) = soliton_energy(&lp, &units) {
            manifest.add_report(
                "longitudinal",
                &format!("amplitude={:.8}, energy_mec2={:.8}", lp.central(), en.energy_mec2),
            );
        }
    }

    let svg = out(config, "family.svg");
    emit_plot(
        &fam_path,
        &PlotSpec {
            x_column: "radius_re".into(),
            y_columns: vec!["energy_mec2".into()],
            log_x: true,
            log_y: true,
            title: "soliton energy vs radius".into(),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    let svg2 = out(config, "profile.svg");
    emit_plot(
        &prof_path,
        &PlotSpec {
            x_column: "rho".into(),
            y_columns: vec!["E".into()],
            log_x: false,
            log_y: false,
            title: format!("ground-state profile, a* = {a_star:.6}"),
        },
        &svg2,
    )?;
    manifest.add_file(&svg2);
    Ok(())
}

fn run_uehling(config: &ScenarioConfig, manifest: &mut ArtifactManifest) -> Result<(), ScenarioError> {
    let constants = PhysicalConstants::codata();
    let v = uehling_vacuum(config.f64("c1")?, &constants);
    let r_e = constants.classical_electron_radius;
    let (lo, hi) = (config.f64("r_lo_re")?, config.f64("r_hi_re")?);
    let n = config.usize("points")?.max(2);
    let mut vac_rows = Vec::with_capacity(n);
    for i in 0..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let r = x * r_e;
        vac_rows.push(vec![x, v.value(r), v.derivative(r), v.residual(r)]);
    }
    let vac_path = out(config, "vacuum.csv");
    write_csv(&vac_path, &["r_over_re", "V", "dV", "residual"], &vac_rows)?;
    manifest.add_file(&vac_path);
    manifest.add_report(
        "vacuum_decay",
        &format!("sqrt_a_times_re={:.6}", v.sqrt_a * r_e),
    );

    let z = config.i64("z")? as i32;
    let lc = constants.compton_length;
    let mut point_rows = Vec::new();
    for i in 0..240 {
        let x = 10f64.powf(-3.0 + 4.0 * i as f64 / 239.0); // r/lambda_C
        let p = uehling_point_asymptotics(x * lc, z, &constants)
            .map_err(ScenarioError::NonConvergence)?;
        point_rows.push(vec![
            x,
            p.coulomb,
            p.correction,
            p.total(),
            match p.branch {
                UehlingBranch::Near => 0.0,
                UehlingBranch::Far => 1.0,
            },
        ]);
    }
    let point_path = out(config, "point.csv");
    write_csv(
        &point_path,
        &["r_over_lambda_c", "coulomb", "correction", "total", "branch"],
        &point_rows,
    )?;
    manifest.add_file(&point_path);

    let svg = out(config, "vacuum.svg");
    emit_plot(
        &vac_path,
        &PlotSpec {
            x_column: "r_over_re".into(),
            y_columns: vec!["V".into()],
            log_x: false,
            log_y: true,
            title: "vacuum decaying branch".into(),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    Ok(())
}

fn slit_field(config: &ScenarioConfig) -> Result<(ComplexField, f64, f64, f64), ScenarioError> {
    let lambda = config.f64("lambda")?;
    let d = config.f64("d")? * lambda;
    let w = config.f64("w")? * lambda;
    let screen = config.f64("screen")? * lambda;
    let drift = config.f64("phase_drift")?;
    Ok((
        ComplexField::double_slit(d, w, lambda, drift),
        ComplexField::double_slit_mass(lambda),
        screen,
        d,
    ))
}

fn run_trajectories(
    config: &ScenarioConfig,
    manifest: &mut ArtifactManifest,
) -> Result<(), ScenarioError> {
    let n = config.usize("n")?;
    let seed = config.seed.wrapping_add(config.i64("seed")? as u64);
    let dt = config.f64("dt")?;
    let mut rng = Rng::seeded(seed);
    let mut rows: Vec<Vec<f64>> = Vec::new();

    if config.bool("entangled")? {
        // Entangled pair: two-mode state of Gaussian-slit modes; columns
        // traj_id, t, x, y, x2, y2 with y the propagation coordinate.
        let lambda = config.f64("lambda")?;
        let d = config.f64("d")? * lambda;
        let w = config.f64("w")? * lambda;
        let screen = config.f64("screen")? * lambda;
        let z0 = config.f64("z0")? * lambda;
        let k = ComplexField::double_slit_mass(lambda);
        let mode = |xs: f64, amp: f64| {
            let z_r = k * w * w;
            ComplexField::new(1, move |x: &[f64], z: f64| {
                let q = num_complex::Complex64::new(z, -z_r);
                let pre = (num_complex::Complex64::new(0.0, 1.0) / q).sqrt() * amp;
                let dx = x[0] - xs;
                pre * (num_complex::Complex64::new(0.0, 0.5 * k) * dx * dx / q).exp()
            })
        };
        let field = TwoBodyField::two_mode(
            mode(-d / 2.0, 1.0),
            mode(d / 2.0, 1.0),
            mode(d / 2.0, 0.7),
            mode(-d / 2.0, 0.7),
        );
        let law = GuidanceLaw::Schrodinger { mass: k };
        for id in 0..n {
            let x1 = rng.uniform_in(-d, d);
            let x2 = rng.uniform_in(-d, d);
            let Ok(traj) = integrate_pair(&field, &law, &[x1], &[x2], (z0, screen), dt) else {
                continue;
            };
            for (t, p) in traj.times.iter().zip(&traj.positions) {
                rows.push(vec![id as f64, *t, p[0], *t, p[1], *t]);
            }
        }
        let path = out(config, "trajectories.csv");
        write_csv(&path, &["traj_id", "t", "x", "y", "x2", "y2"], &rows)?;
        manifest.add_file(&path);
        return Ok(());
    }

    let (field, mass, screen, d) = match config.str("field") {
        "double-slit" => slit_field(config)?,
        "plane-wave" => {
            let lambda = config.f64("lambda")?;
            let k = 2.0 * std::f64::consts::PI / lambda;
            (
                ComplexField::plane_wave(vec![k], k * k / 2.0),
                1.0,
                config.f64("screen")? * lambda,
                lambda,
            )
        }
        other => {
            return Err(ScenarioError::Config(ConfigError::BadValue {
                key: "field".into(),
                value: other.into(),
            }))
        }
    };
    let z0 = config.f64("z0")? * config.f64("lambda")?;
    let law = GuidanceLaw::Schrodinger { mass };
    let mut halted = 0usize;
    for id in 0..n {
        let x0 = rng.uniform_in(-d, d);
        match integrate_trajectory(&field, &law, &[x0], (z0, screen), dt) {
            Ok(traj) => {
                if traj.outcome != crate::pilot::TrajectoryOutcome::Completed {
                    halted += 1;
                }
                for (t, p) in traj.times.iter().zip(&traj.positions) {
                    // y is the propagation coordinate (= t in these units)
                    rows.push(vec![id as f64, *t, p[0], *t]);
                }
            }
            Err(_) => halted += 1,
        }
    }
    let path = out(config, "trajectories.csv");
    write_csv(&path, &["traj_id", "t", "x", "y"], &rows)?;
    manifest.add_file(&path);
    manifest.add_report("halted", &halted.to_string());

    let svg = out(config, "trajectories.svg");
    emit_plot(
        &path,
        &PlotSpec {
            x_column: "x".into(),
            y_columns: vec!["y".into()],
            log_x: false,
            log_y: false,
            title: "guidance trajectories".into(),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    Ok(())
}

fn run_equivariance(
    config: &ScenarioConfig,
    manifest: &mut ArtifactManifest,
) -> Result<(), ScenarioError> {
    let n = config.usize("n")?;
    let seed = config.seed.wrapping_add(config.i64("seed")? as u64);
    let bins = config.usize("bins")?;
    let (field, law, t_span, dt, sample_range, bin_range) = match config.str("field") {
        "gaussian" => {
            let sigma0 = config.f64("sigma0")?;
            let k0 = config.f64("k0")?;
            let t_spread = 2.0 * sigma0 * sigma0;
            let t_end = config.f64("spreading_times")? * t_spread;
            let sigma_t = sigma0 * (1.0 + (t_end / t_spread).powi(2)).sqrt();
            (
                ComplexField::gaussian_packet(sigma0, k0),
                GuidanceLaw::Schrodinger { mass: 1.0 },
                (0.0, t_end),
                config.f64("dt")?,
                (-6.0 * sigma0, 6.0 * sigma0),
                (
                    -4.0 * sigma_t + k0 * t_end,
                    4.0 * sigma_t + k0 * t_end,
                ),
            )
        }
        "double-slit" => {
            let lambda = config.f64("lambda")?;
            let d = config.f64("d")? * lambda;
            let w = config.f64("w")? * lambda;
            let screen = config.f64("screen")? * lambda;
            let mass = ComplexField::double_slit_mass(lambda);
            let fringe = lambda * screen / d;
            (
                ComplexField::double_slit(d, w, lambda, 0.0),
                GuidanceLaw::Schrodinger { mass },
                (1.0 * lambda, screen),
                config.f64("dt")?.max(screen / 4000.0),
                (-d, d),
                (-3.0 * fringe, 3.0 * fringe),
            )
        }
        "plane-wave" => {
            let k = 1.0;
            (
                ComplexField::plane_wave(vec![k], 0.5 * k * k),
                GuidanceLaw::Schrodinger { mass: 1.0 },
                (0.0, 2.0),
                config.f64("dt")?,
                (0.0, 10.0),
                (2.0, 12.0),
            )
        }
        other => {
            return Err(ScenarioError::Config(ConfigError::BadValue {
                key: "field".into(),
                value: other.into(),
            }))
        }
    };
    let report = equivariance_check(
        &field,
        &law,
        n,
        t_span,
        dt,
        sample_range,
        bin_range,
        bins,
        seed,
    )
    .map_err(|e| ScenarioError::NonConvergence(e.to_string()))?;

    let rows: Vec<Vec<f64>> = report
        .histogram
        .iter()
        .map(|b| vec![b.center, b.count as f64, b.psi2])
        .collect();
    let path = out(config, "histogram.csv");
    write_csv(&path, &["bin_center", "count", "psi2"], &rows)?;
    manifest.add_file(&path);
    manifest.add_report(
        "equivariance",
        &format!(
            "divergence={:.6e}, samples_used={}, halted={}",
            report.divergence, report.samples_used, report.halted
        ),
    );
    let svg = out(config, "histogram.svg");
    emit_plot(
        &path,
        &PlotSpec {
            x_column: "bin_center".into(),
            y_columns: vec!["count".into()],
            log_x: false,
            log_y: false,
            title: format!("equivariance histogram, divergence {:.4}", report.divergence),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    Ok(())
}

fn run_bloch(config: &ScenarioConfig, manifest: &mut ArtifactManifest) -> Result<(), ScenarioError> {
    let params = DriveParams {
        omega: config.f64("omega")?,
        omega_a: config.f64("omega_a")?,
        epsilon: config.f64("epsilon")?,
        tau0: config.f64("tau0")?,
        x0: config.f64("x0")?,
        mass: config.f64("mass")?,
        charge: config.f64("charge")?,
    };
    params
        .validate()
        .map_err(ScenarioError::NonConvergence)?;
    let state0 = BlochState {
        u: config.f64("u0")?,
        v: config.f64("v0")?,
        w: config.f64("w0")?,
    };
    let cycles = config.f64("cycles")?;
    let steps = (config.f64("steps_per_cycle")? * cycles) as usize;
    let t_end = cycles * 2.0 * std::f64::consts::PI / params.omega;
    let trace = integrate_bloch(state0, &params, t_end, steps.max(1));
    let rows: Vec<Vec<f64>> = trace
        .iter()
        .map(|(t, s)| {
            let fd = force_diagram(s, &params);
            vec![
                *t,
                s.u,
                s.v,
                s.w,
                fd.restoring,
                fd.dissipation,
                fd.driving,
                fd.quantum,
            ]
        })
        .collect();
    let path = out(config, "bloch.csv");
    write_csv(
        &path,
        &[
            "t",
            "u",
            "v",
            "w",
            "F_restoring",
            "F_dissipation",
            "F_driving",
            "F_quantum",
        ],
        &rows,
    )?;
    manifest.add_file(&path);
    // Closure check at the final state goes in the manifest.
    let (t_last, s_last) = trace[trace.len() - 1];
    let fd = force_diagram(&s_last, &params);
    let resultant = crate::bloch::resultant_from_rhs(&s_last, &params);
    manifest.add_report(
        "force_closure",
        &format!(
            "t={t_last:.4}, |sum-resultant|={:.3e}",
            (fd.resultant() - resultant).abs()
        ),
    );
    let (du, dv, dw) = bloch_rhs(&s_last, &params);
    manifest.add_report("final_rhs", &format!("du={du:.3e}, dv={dv:.3e}, dw={dw:.3e}"));

    let svg = out(config, "bloch.svg");
    emit_plot(
        &path,
        &PlotSpec {
            x_column: "t".into(),
            y_columns: vec!["u".into(), "v".into(), "w".into()],
            log_x: false,
            log_y: false,
            title: "Bloch components".into(),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    Ok(())
}

fn run_dipole_decay(
    config: &ScenarioConfig,
    manifest: &mut ArtifactManifest,
) -> Result<(), ScenarioError> {
    let constants = PhysicalConstants::codata();
    let lo = config.f64("omega_lo")?;
    let hi = config.f64("omega_hi")?;
    let n = config.usize("points")?.max(2);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let omega = lo * (hi / lo).powf(i as f64 / (n - 1) as f64);
        let d = dipole_decay_params(omega, &constants).map_err(ScenarioError::NonConvergence)?;
        rows.push(vec![omega, d.tau, d.gamma, d.phase_alpha, d.delta_omega]);
    }
    let path = out(config, "decay.csv");
    write_csv(
        &path,
        &["omega", "tau", "gamma", "phase_alpha", "delta_omega"],
        &rows,
    )?;
    manifest.add_file(&path);

    let omega_ex = config.f64("omega_example")?;
    let d = dipole_decay_params(omega_ex, &constants).map_err(ScenarioError::NonConvergence)?;
    manifest.add_report(
        "example",
        &format!(
            "omega={omega_ex:.4e}: tau={:.4e} s, Gamma={:.4e} 1/s, sin_alpha={:.4e}, delta_omega={:.4e}",
            d.tau,
            d.gamma,
            d.phase_alpha.sin(),
            d.delta_omega
        ),
    );

    let svg = out(config, "decay.svg");
    emit_plot(
        &path,
        &PlotSpec {
            x_column: "omega".into(),
            y_columns: vec!["gamma".into(), "delta_omega".into()],
            log_x: true,
            log_y: true,
            title: "dipole decay constants".into(),
        },
        &svg,
    )?;
    manifest.add_file(&svg);
    Ok(())
}
