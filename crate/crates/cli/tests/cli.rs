use std::io::Write;
use std::process::{Command, Stdio};

use braidforge::compiler::ProbeStatistics;
use braidforge::{AbelianizationResult, CompilationResult, CoverReport, GroupPresentation, InvariantReport};
use braidforge_cli::{run, CommandOutcome, EXIT_DOMAIN, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

const S4_S2: &str = r#"{"euler_M": 2, "signature_M": 0, "euler_Sigma": 2, "self_intersection": 0,
    "cone_order": 2, "sigma_orientable": true}"#;

const TREFOIL: &str = "3\n1 2 -1 -3\n2 3 -2 -1\n3 1 -3 -2\n";

fn cli(args: &[&str]) -> CommandOutcome {
    run(std::iter::once("braidforge").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = cli(&full);
    assert_eq!(out.exit_code, EXIT_OK, "{args:?}: {:?}", out.diagnostic);
    let v: Value = serde_json::from_str(&out.stdout()).expect("stdout is JSON");
    assert_eq!(v["schema"], "braidforge/1");
    v
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn invariants_from_file_and_flags() {
    let f = temp_file(S4_S2);
    let v = json(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!((&v["chi_orb"], &v["tau_orb"], &v["index_K"]), (&"1".into(), &"0".into(), &"7".into()));
    let report: InvariantReport = serde_json::from_value(v.clone()).unwrap();
    assert!(report.einstein_plus_ok && report.einstein_minus_ok);

    let flags = json(&[
        "invariants", "--euler-m", "2", "--signature-m", "0", "--euler-sigma", "2", "--self-intersection", "0",
        "--cone-order", "2",
    ]);
    assert_eq!(flags["index_K"], v["index_K"]);
    let negative = json(&[
        "invariants", "--euler-m", "3", "--signature-m", "-1", "--euler-sigma", "2", "--self-intersection", "-4",
        "--cone-order", "2",
    ]);
    assert_eq!(negative["tau_orb"], "0");

    let table = cli(&["invariants", f.path().to_str().unwrap()]).stdout();
    assert!(table.lines().any(|l| l.starts_with("index_K") && l.ends_with(" 7")));
}

#[test]
fn hurwitz_orbit_of_standard_system() {
    let v = json(&["hurwitz-orbit", "--degree", "4", "--standard"]);
    assert_eq!(v["size"], 16);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["expected_size"], "16");
    let capped = json(&["hurwitz-orbit", "--degree", "5", "--standard", "--cap", "10"]);
    assert_eq!(capped["truncated"], true);
    let listed = json(&["hurwitz-orbit", "--degree", "3", "--standard", "--list"]);
    assert_eq!(listed["systems"].as_array().unwrap().len(), 3);
}

#[test]
fn braid_subcommands() {
    assert_eq!(json(&["braid", "eq", "1 2 1", "2 1 2", "--strands", "3"])["equal"], true);
    assert_eq!(json(&["braid", "eq", "1 2", "2 1", "--strands", "3"])["equal"], false);
    assert_eq!(cli(&["braid", "eq", "1 2 1", "2 1 2", "--strands", "3"]).stdout(), "true\n");
    let nf = json(&["braid", "nf", "1 2 1 1 2 1", "--strands", "3"]);
    assert_eq!(nf["delta_power"], 2);
    assert_eq!(nf["factors"], serde_json::json!([]));
    let inv = json(&["braid", "nf", "-1 -2", "--strands", "3"]);
    assert_eq!(inv["delta_power"], -1);
    let perm = json(&["braid", "perm", "1", "--strands", "3"]);
    assert_eq!(perm["images"], serde_json::json!([2, 1, 3]));
}

#[test]
fn presentation_subcommands() {
    let f = temp_file(TREFOIL);
    let path = f.path().to_str().unwrap();
    let ab = json(&["presentation", "abelianize", path]);
    assert_eq!(ab["group"], "Z^1");
    let parsed: AbelianizationResult = serde_json::from_value(ab).unwrap();
    assert_eq!(parsed.free_rank, 1);
    let c = json(&["presentation", "c-group", path]);
    assert_eq!(c["is_c_group"], true);
    let q = json(&["presentation", "orbifold-quotient", path, "--loop", "1", "--order", "2"]);
    assert_eq!(q["group"], "Z/2");
    let p: GroupPresentation = serde_json::from_value(q["presentation"].clone()).unwrap();
    assert_eq!(p.relators().len(), 4);
    assert_eq!(cli(&["presentation", "abelianize", path]).stdout(), "Z^1\n");
}

#[test]
fn representation_payload() {
    let v = json(&["rep", "--n", "3", "--p", "1", "--a", "2pi/5"]);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["unitarized"], true);
    assert!(v["unitarity_residual"].as_f64().unwrap() < 1e-10);
    assert!(v["braid_relation_residual"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["sigma"].as_array().unwrap().len(), 2);
    assert_eq!(v["eigenvalues"][0].as_array().unwrap().len(), 2);
    let raw = json(&["rep", "--raw", "--a", "-2pi/5"]);
    assert_eq!(raw["unitarized"], false);
}

#[test]
fn compile_and_probe_payloads_reparse() {
    let v = json(&["compile", "--target", "h", "--depth", "8"]);
    let r: CompilationResult = serde_json::from_value(v["result"].clone()).unwrap();
    assert!(r.word.len() <= 8);
    assert_eq!(v["config"]["max_depth"], 8);

    let gate = temp_file(r#"{"dimension": 2, "entries": [[0,0],[1,0],[1,0],[0,0]]}"#);
    let from_file = json(&["compile", "--target", gate.path().to_str().unwrap(), "--depth", "6"]);
    let named = json(&["compile", "--target", "x", "--depth", "6"]);
    assert_eq!(from_file["result"], named["result"]);

    let p = json(&["density-probe", "--samples", "10", "--depth", "5", "--seed", "4"]);
    let stats: ProbeStatistics = serde_json::from_value(p).unwrap();
    assert_eq!(stats.distances.len(), 10);

    let c = json(&["cover-report", "--standard", "--degree", "5"]);
    let report: CoverReport = serde_json::from_value(c).unwrap();
    assert_eq!(report.cover_euler, 1);
}

#[test]
fn seeded_runs_are_identical() {
    let args = ["--json", "compile", "--target", "haar", "--seed", "11", "--depth", "9"];
    assert_eq!(cli(&args).stdout(), cli(&args).stdout());
    let probe = ["--json", "density-probe", "--samples", "12", "--depth", "6", "--seed", "5"];
    assert_eq!(cli(&probe).stdout(), cli(&probe).stdout());
    let other = ["--json", "density-probe", "--samples", "12", "--depth", "6", "--seed", "6"];
    assert_ne!(cli(&probe).stdout(), cli(&other).stdout());
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["frobnicate"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&[]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["--help"]).exit_code, EXIT_OK);
    assert_eq!(cli(&["presentation", "--help"]).exit_code, EXIT_OK);
    assert_eq!(cli(&["braid", "eq", "1 0", "1", "--strands", "3"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["braid", "nf", "1 x", "--strands", "3"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["invariants", "/definitely/missing.json"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["invariants", "--euler-m", "2"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["hurwitz-orbit"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["rep", "--n", "3", "--p", "2"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["rep", "--a", "banana"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["compile", "--target", "nope"]).exit_code, EXIT_INPUT);
    assert_eq!(cli(&["compile", "--target", "h", "--depth", "0"]).exit_code, EXIT_INPUT);
    // well-formed requests the mathematics rejects
    assert_eq!(cli(&["rep", "--n", "2", "--p", "0", "--a", "pi/4"]).exit_code, EXIT_DOMAIN);
    assert_eq!(cli(&["compile", "--target", "cnot", "--depth", "2"]).exit_code, EXIT_DOMAIN);
    assert_eq!(cli(&["density-probe", "--n", "5", "--p", "1", "--a", "0.3"]).exit_code, EXIT_DOMAIN);

    let bad = temp_file("not json");
    let out = cli(&["--json", "invariants", bad.path().to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_INPUT);
    let v: Value = serde_json::from_str(&out.stdout()).unwrap();
    assert_eq!(v["error"]["kind"], "input");
    assert_eq!(v["error"]["exit_code"], EXIT_INPUT);
    assert!(out.diagnostic.is_some());
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidforge"))
}

#[test]
fn binary_streams_and_stdin() {
    let mut child = binary()
        .args(["--json", "invariants", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(S4_S2.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["index_K"], "7");

    let out = binary().args(["braid", "eq", "1", "3", "--strands", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a generator"));

    let out = binary().args(["--json", "braid", "eq", "1", "3", "--strands", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "input");

    let out = binary().env("BRAIDFORGE_THREADS", "zero").args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let out = binary()
        .env("BRAIDFORGE_THREADS", "zero")
        .args(["braid", "eq", "1", "1", "--strands", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    let out = binary()
        .env("BRAIDFORGE_THREADS", "1")
        .args(["hurwitz-orbit", "--standard", "--degree", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("125"));
}
