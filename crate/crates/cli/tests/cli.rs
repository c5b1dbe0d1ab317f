use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;

use gradedcone_cli::{load_ideal, run_scenario, CliError, DChoice, IdealFile, Options};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gradedcone"))
}

#[test]
fn loads_the_bundled_curve_ideal() {
    let ideal = load_ideal(&data("rc2q.json")).unwrap();
    assert_eq!(ideal.generators().len(), 9);
    let degrees: Vec<u32> = ideal.degrees().iter().map(|d| d.unwrap()).collect();
    assert_eq!(degrees, [4, 5, 6, 6, 7, 8, 8, 9, 10]);
}

#[test]
fn inhomogeneous_generator_is_rejected() {
    let f = IdealFile::parse(r#"{"variables": ["x2", "y"], "weights": [1, 2], "generators": ["x2 + y"]}"#).unwrap();
    match f.build() {
        Err(CliError::Input(msg)) => assert!(msg.contains("not homogeneous"), "{msg}"),
        other => panic!("expected an input error, got {other:?}"),
    }
}

#[test]
fn bad_weights_are_rejected() {
    let f = IdealFile::parse(r#"{"variables": ["x", "y"], "weights": [1], "generators": []}"#).unwrap();
    assert!(matches!(f.build(), Err(CliError::Input(_))));
    let f = IdealFile::parse(r#"{"variables": ["x"], "weights": [0], "generators": []}"#).unwrap();
    assert!(matches!(f.build(), Err(CliError::Input(_))));
}

#[test]
fn empty_generator_list_is_the_zero_ideal() {
    let f = IdealFile::parse(r#"{"variables": ["x", "y"], "weights": [1, 2], "generators": []}"#).unwrap();
    let ideal = f.build().unwrap();
    assert_eq!(ideal.hilbert_function(4).coeffs(), &[1, 1, 2, 2, 3]);
}

#[test]
fn same_seed_gives_the_same_report() {
    let opts = Options { d_poly: DChoice::Sample, max_degree: None, seed: 7 };
    for name in ["t1-dimensions", "ci66-hilbert"] {
        let a = run_scenario(name, &opts).unwrap();
        let b = run_scenario(name, &opts).unwrap();
        assert!(a.pass, "{name}");
        assert_eq!(a.without_timings(), b.without_timings());
    }
}

#[test]
fn unknown_scenario_is_a_usage_error() {
    let err = run_scenario("no-such-scenario", &Options::default()).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn d_poly_of_wrong_degree_is_an_input_error() {
    let f = temp_file("x2^6");
    let opts = Options { d_poly: DChoice::parse(f.path().to_str().unwrap()), ..Options::default() };
    assert!(matches!(run_scenario("hilbert-rc2q", &opts), Err(CliError::Input(_))));
}

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["verify", "hilbert-rc2q", "--json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(reports[0]["scenario"], "hilbert-rc2q");
    assert_eq!(reports[0]["pass"], true);

    let usage = bin().args(["verify", "no-such-scenario"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let bad = temp_file(r#"{"variables": ["x2", "y"], "weights": [1, 2], "generators": ["x2 + y"]}"#);
    let input = bin().arg("gb").arg(bad.path()).output().unwrap();
    assert_eq!(input.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&input.stderr).contains("not homogeneous"));

    let hilbert = bin().arg("hilbert").arg(data("rc2q.json")).args(["--max-degree", "6"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&hilbert.stdout).trim(), "1 1 2 4 5 7 9");
}

#[test]
fn lift2_reports_the_obstruction() {
    let ok = bin()
        .arg("lift2")
        .arg(data("rc2q.json"))
        .arg("--params")
        .arg(data("lift2_params.json"))
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("lifts to second order: true"));

    let params = temp_file(r#"{"c0": "1", "d7": 1}"#);
    let blocked = bin().arg("lift2").arg(data("rc2q.json")).arg("--params").arg(params.path()).output().unwrap();
    assert_eq!(blocked.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&blocked.stdout).contains("lifts to second order: false"));

    let unknown = temp_file(r#"{"zz": "1"}"#);
    let bad = bin().arg("lift2").arg(data("rc2q.json")).arg("--params").arg(unknown.path()).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn t1_from_a_file_matches_the_table() {
    let out = bin().arg("t1").arg(data("rc2q.json")).args(["--k", "2"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "16");
}
