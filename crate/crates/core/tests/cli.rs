//! End-to-end checks of the scenario front end: artifact schemas, byte
//! determinism, and the binary's exit-code contract.

use solq_core::cli::{read_csv, run_scenario, ScenarioConfig};
use std::process::Command;

fn temp_out(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("solq_cli_tests").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(pairs: &[(&str, &str)], out: &std::path::Path) -> solq_core::cli::ArtifactManifest {
    let overrides: Vec<(String, String)> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    let config = ScenarioConfig::parse(None, &overrides, Some(out.to_str().unwrap())).unwrap();
    run_scenario(&config).unwrap()
}

#[test]
fn dirac_member_emits_profiles_and_observables_schemas() {
    let out = temp_out("dirac_member");
    let manifest = run(
        &[
            ("scenario", "dirac-soliton"),
            ("full_solve", "false"),
            ("beta", "0.35"),
            ("amplitude", "0.05"),
            ("trace_points", "400"),
        ],
        &out,
    );
    assert!(manifest.converged);
    let profiles = read_csv(&out.join("profiles.csv")).unwrap();
    assert_eq!(profiles.columns, vec!["rho", "f", "g", "V", "dV"]);
    assert!(profiles.rows.len() >= 400);
    // observables.csv is name,value; spot-check it parses as text
    let text = std::fs::read_to_string(out.join("observables.csv")).unwrap();
    assert!(text.starts_with("name,value"));
    assert!(text.contains("spin,"));
    assert!(text.contains("charge_integral,"));
    // manifest lists every emitted csv
    let rendered = manifest.render();
    for file in ["profiles.csv", "observables.csv", "kg_effective_potential.csv"] {
        assert!(rendered.contains(file), "manifest missing {file}");
    }
}

#[test]
fn trajectories_are_byte_identical_for_fixed_seed() {
    let out1 = temp_out("traj1");
    let out2 = temp_out("traj2");
    let args = [
        ("scenario", "trajectories"),
        ("n", "40"),
        ("seed", "7"),
        ("dt", "25"),
    ];
    run(&args, &out1);
    run(&args, &out2);
    let a = std::fs::read(out1.join("trajectories.csv")).unwrap();
    let b = std::fs::read(out2.join("trajectories.csv")).unwrap();
    assert_eq!(a, b, "same config + seed must give identical bytes");
    let svg_a = std::fs::read(out1.join("trajectories.svg")).unwrap();
    let svg_b = std::fs::read(out2.join("trajectories.svg")).unwrap();
    assert_eq!(svg_a, svg_b);
}

#[test]
fn photon_family_schema_matches() {
    let out = temp_out("photon");
    run(
        &[
            ("scenario", "photon-soliton"),
            ("grid_points", "1500"),
            ("rho_max", "15"),
            ("family_members", "5"),
        ],
        &out,
    );
    let fam = read_csv(&out.join("family.csv")).unwrap();
    assert_eq!(
        fam.columns,
        vec!["a", "radius_re", "energy_mec2", "central_field_Ecl"]
    );
    assert_eq!(fam.rows.len(), 5);
    let energies = fam.column("energy_mec2").unwrap();
    assert!(energies.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn bloch_csv_has_the_force_columns() {
    let out = temp_out("bloch");
    run(&[("scenario", "bloch"), ("cycles", "3")], &out);
    let table = read_csv(&out.join("bloch.csv")).unwrap();
    assert_eq!(
        table.columns,
        vec![
            "t",
            "u",
            "v",
            "w",
            "F_restoring",
            "F_dissipation",
            "F_driving",
            "F_quantum"
        ]
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_solq");
    // config error: unknown scenario
    let status = Command::new(bin)
        .arg("frobnicate")
        .output()
        .expect("binary runs");
    assert_eq!(status.status.code(), Some(2));
    // config error: unknown key
    let status = Command::new(bin)
        .args(["bloch", "--bananas=1"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    // io error: unreadable config file
    let status = Command::new(bin)
        .args(["bloch", "--config", "/nonexistent/solq.conf"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(4));
    // success on a fast scenario
    let out = temp_out("bin_ok");
    let status = Command::new(bin)
        .args([
            "dipole-decay",
            &format!("--out={}", out.display()),
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0), "{:?}", status);
    let stdout = String::from_utf8_lossy(&status.stdout);
    assert!(stdout.contains("schema_version=1"));
}

#[test]
fn config_file_plus_flag_override() {
    let out = temp_out("bin_config");
    let conf = out.join("run.conf");
    std::fs::write(
        &conf,
        "# two-level run\nscenario=bloch\nomega=2\ncycles=4\n",
    )
    .unwrap();
    let bin = env!("CARGO_BIN_EXE_solq");
    let status = Command::new(bin)
        .args([
            "--config",
            conf.to_str().unwrap(),
            "--cycles=2",
            &format!("--out={}", out.display()),
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0), "{:?}", status);
    let manifest = std::fs::read_to_string(out.join("manifest.txt")).unwrap();
    assert!(manifest.contains("param.omega=2"));
    assert!(manifest.contains("param.cycles=2"), "flag must override file");
}

#[test]
fn non_convergence_exits_3_and_still_writes_the_manifest() {
    // A beta bracket where the mass balance never changes sign: the solver
    // reports non-convergence, the binary exits 3, and the manifest is
    // written anyway.
    let out = temp_out("bin_nonconv");
    let bin = env!("CARGO_BIN_EXE_solq");
    let status = Command::new(bin)
        .args([
            "dirac-soliton",
            "--beta_lo=0.06",
            "--beta_hi=0.10",
            "--beta_steps=3",
            "--trace_points=300",
            &format!("--out={}", out.display()),
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3), "{:?}", status);
    let manifest = std::fs::read_to_string(out.join("manifest.txt")).unwrap();
    assert!(manifest.contains("scenario=dirac-soliton"));
}

#[test]
fn env_var_overrides_output_dir() {
    let out = temp_out("env_out");
    let bin = env!("CARGO_BIN_EXE_solq");
    let status = Command::new(bin)
        .arg("dipole-decay")
        .env("SOLQ_OUT", out.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(out.join("decay.csv").exists());
}
