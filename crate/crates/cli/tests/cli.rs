use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use maxwell_cli::{load_scenario, save_scenario, VerifyReport};
use maxwell_core::constitutive::MediaSpec;
use maxwell_core::maxwell::Helicity;
use maxwell_core::sampling::Sampler;
use maxwell_core::scenario::{FieldScenario, PlaneWaveEntry, UnitMode};
use maxwell_core::so3c::{boost, BoostSpec};

fn maxwell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxwell"))
        .args(args)
        .env_remove("MAXWELL_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn algebra_suite_lists_identities_and_passes() {
    let o = maxwell(&["verify", "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    for needle in ["(alpha^1)^2 = -I", "beta^1 beta^2 = -beta^3", "alpha^1 = i gamma^0 gamma^2", "Gamma^3"] {
        assert!(text.contains(needle), "missing {needle}");
    }
    assert!(text.contains("generated:"));
}

#[test]
fn unknown_suite_exits_with_usage_error() {
    let o = maxwell(&["verify", "--suite", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite"));
    assert!(stderr(&o).contains("--help"));
}

#[test]
fn bad_arguments_exit_with_usage_error() {
    assert_eq!(maxwell(&["verify", "--seed", "abc"]).status.code(), Some(2));
    assert_eq!(maxwell(&["planewave", "--k", "0,0,1", "--helicity", "2"]).status.code(), Some(2));
    assert_eq!(maxwell(&["planewave", "--k", "0,1"]).status.code(), Some(2));
    assert_eq!(maxwell(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn covariance_report_is_deterministic() {
    let a = maxwell(&["verify", "--suite", "covariance", "--seed", "1", "--json"]);
    let b = maxwell(&["verify", "--suite", "covariance", "--seed", "1", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: VerifyReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report.suite, "covariance");
    assert_eq!(report.seed, 1);
    assert!(report.pass);
    assert!(!stdout(&a).contains("generated"));
}

#[test]
fn environment_seed_overrides_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_maxwell"))
        .args(["verify", "--suite", "group", "--seed", "1", "--json"])
        .env("MAXWELL_SEED", "0x2A")
        .output()
        .unwrap();
    let report: VerifyReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.seed, 42);
    let o = Command::new(env!("CARGO_BIN_EXE_maxwell"))
        .args(["verify", "--suite", "group"])
        .env("MAXWELL_SEED", "seven")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn boost_then_residual_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "s.json",
        r#"{"E": [1, 0.5, 0], "B": [0, 0, 2], "media": {"kind": "uniform", "eps": 2, "mu": 3},
            "plane_wave": {"k": [0, 1, 1], "helicity": "-1"}}"#,
    );
    let boosted = dir.path().join("b.json");
    let o = maxwell(&["boost", "--rapidity", "-0.8", "--axis", "1,0,0", "--in", &input, "--out", boosted.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rotated = dir.path().join("r.json");
    let o = maxwell(&["rotate", "--angle", "0.3", "--axis", "0,0,1", "--in", boosted.to_str().unwrap(), "--out", rotated.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = load_scenario(&rotated).unwrap();
    assert!(s.frame.is_some());

    let csv = dir.path().join("r.csv");
    let o = maxwell(&["residual", "--in", rotated.to_str().unwrap(), "--points", "12", "--seed", "3", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x0,x1,x2,x3,res0_re,res0_im,res1_re,res1_im,res2_re,res2_im,res3_re,res3_im");
    assert_eq!(lines.len(), 13);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 12));
}

#[test]
fn inconsistent_scenario_fails_residual_check() {
    // uniform E with a charge density is not a solution
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s.json", r#"{"E": [1, 0, 0], "rho": 0.5}"#);
    let o = maxwell(&["residual", "--in", &input, "--points", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn malformed_scenario_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s.json", r#"{"E": [1, 0, 0], "B": [0, 0]}"#);
    let o = maxwell(&["residual", "--in", &input]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("B"), "{}", stderr(&o));
    let o = maxwell(&["residual", "--in", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn esposito_scenario_residual() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "s.json",
        r#"{"plane_wave": {"k": [1, 0, 0], "helicity": "+1"}, "u": [1.4142135623730951, 0, 1, 0]}"#,
    );
    let o = maxwell(&["residual", "--in", &input, "--points", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let bad = write(dir.path(), "bad.json", r#"{"u": [1, 1, 0, 0]}"#);
    assert_eq!(maxwell(&["residual", "--in", &bad]).status.code(), Some(2));
}

#[test]
fn planewave_check_in_media() {
    let o = maxwell(&["planewave", "--eps", "2", "--mu", "3", "--k", "0,0,1", "--helicity", "-1", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("helicity: -1"));
    assert_eq!(text.matches("PASS").count(), 2);
    assert_eq!(maxwell(&["planewave", "--eps", "-2", "--k", "0,0,1"]).status.code(), Some(2));
}

#[test]
fn constitutive_blocks_for_general_media() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", "[[0.1, 0, 0], [0, 0.1, 0], [0, 0, 0.1]]");
    let o = maxwell(&["constitutive", "--eps", "2", "--mu", "1", "--alpha-m", &a, "--beta-m", &a, "--boost", "0.5,0,0,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["forward_a", "forward_b", "inverse_c", "inverse_d"] {
        assert_eq!(v[key].as_array().unwrap().len(), 3);
    }
    let o = maxwell(&["constitutive", "--eps", "2", "--mu", "1", "--boost", "0.5,0,0,1", "--emit", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 37);
    let bad = write(dir.path(), "bad.json", "[[1, 0], [0, 1]]");
    assert_eq!(maxwell(&["constitutive", "--eps", "2", "--mu", "1", "--alpha-m", &bad]).status.code(), Some(2));
    assert_eq!(maxwell(&["constitutive", "--eps", "2", "--mu", "1", "--boost", "0.5,1,1,0"]).status.code(), Some(2));
}

#[test]
fn minimal_scenario_loads_with_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s.json", r#"{"E": [1, 0, 0], "B": [0, 0, 0]}"#);
    let s = load_scenario(Path::new(&p)).unwrap();
    assert_eq!(s.mode, UnitMode::Natural);
    assert_eq!((s.rho, s.j), (0.0, [0.0; 3]));
    assert_eq!(s.media, MediaSpec::vacuum());
}

#[test]
fn save_then_load_is_identity_on_random_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = Sampler::new(99);
    for i in 0..25 {
        let v = |r: &mut Sampler| r.vector3(1e3).into();
        let s = FieldScenario {
            mode: if i % 2 == 0 { UnitMode::Natural } else { UnitMode::Si },
            e: v(&mut rng),
            b: v(&mut rng),
            rho: rng.uniform(-1.0, 1.0),
            j: v(&mut rng),
            media: MediaSpec::general(rng.matrix3(3.0), rng.matrix3(3.0), rng.matrix3(1.0), rng.matrix3(1.0))
                .unwrap(),
            plane_wave: Some(PlaneWaveEntry {
                k: v(&mut rng),
                helicity: if i % 3 == 0 { Helicity::Positive } else { Helicity::Negative },
                amplitude: rng.uniform(0.0, 2.0),
            }),
            ..FieldScenario::default()
        }
        .with_frame(&boost(&BoostSpec::new(rng.uniform(-2.0, 2.0), rng.unit_axis()).unwrap()));
        let p = dir.path().join(format!("{i}.json"));
        save_scenario(&s, &p).unwrap();
        assert_eq!(load_scenario(&p).unwrap(), s);
    }
}
