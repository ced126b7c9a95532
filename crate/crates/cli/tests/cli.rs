use std::path::PathBuf;
use std::process::Command;

use cleanideal::format::parse;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cleanideal")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_on(command: &str, file: &str, extra: &[&str]) -> (i32, String) {
    let path = data(file);
    let mut args = vec![command, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn machine(command: &str, file: &str) -> serde_json::Value {
    let (code, out) = run_on(command, file, &["--format", "machine"]);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn pretty_clean_on_the_four_variable_example() {
    let (code, out) = run_on("pretty-clean", "i44.txt", &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with("no\n"), "{out}");
    assert!(out.contains("adeg = 6"));
    assert!(out.contains("length of any prime filtration ≥ 7"));
    let v = machine("pretty-clean", "i44.txt");
    assert_eq!(v["result"]["pretty_clean"], false);
    assert_eq!(v["result"]["min_filtration_length"], 7);
}

#[test]
fn pretty_clean_witness_in_three_variables() {
    let dir = std::env::temp_dir().join(format!("cleanideal-witness-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let witness = dir.join("f.txt");
    let (code, out) = run_on("pretty-clean", "three_vars.txt", &["--witness", witness.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("yes\n"), "{out}");
    let (code, out) = run(&["verify-filtration", witness.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["valid"], true);
    assert!(v["result"]["classification"].as_str().unwrap().starts_with("pretty_clean"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn filtration_and_decomposition_files() {
    let v = machine("verify-filtration", "i44_filtration.txt");
    assert_eq!(v["result"]["classification"], "neither");
    assert_eq!(v["result"]["supp_equals_ass"], true);
    assert_eq!(v["result"]["length"], 7);

    let (code, out) = run_on("correspond", "product_decomposition.txt", &[]);
    assert_eq!((code, out.lines().next()), (0, Some("none")));
    let v = machine("verify-stanley", "product_decomposition.txt");
    assert_eq!(v["result"]["valid"], true);

    let v = machine("correspond", "xy_decomposition.txt");
    assert_eq!(v["result"]["ordering"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["result"]["filtration"], serde_json::json!(["x", "y", "1"]));
}

#[test]
fn invariant_commands() {
    let v = machine("adeg", "i44.txt");
    assert_eq!(v["result"]["adeg"], 6);
    let v = machine("facets", "two_edges.txt");
    assert_eq!(v["result"]["facets"], serde_json::json!(["(0,0,inf,inf)", "(inf,inf,0,0)"]));
    let v = machine("depth", "rp2.txt");
    assert_eq!(v["result"]["depth"], 3);
    assert_eq!(v["result"]["dimension"], 3);
    let v = machine("hilbert", "i44.txt");
    assert_eq!(v["result"]["dimension"], 2);
    assert_eq!(v["result"]["multiplicity"], 2);
    let v = machine("clean", "rp2.txt");
    assert_eq!(v["result"]["clean"], false);
    let v = machine("stanley", "three_vars.txt");
    assert_eq!(v["result"]["source"], "pretty_clean");
}

#[test]
fn polarize_round_trip() {
    let (code, out) = run_on("polarize", "three_vars.txt", &[]);
    assert_eq!(code, 0);
    let text: String = out.lines().filter(|l| !l.starts_with("time:")).map(|l| format!("{l}\n")).collect();
    let polarized = parse(&text).unwrap().ideal();
    let original = parse(&std::fs::read_to_string(data("three_vars.txt")).unwrap()).unwrap().ideal();
    let (ring, p) = cleanideal::core::polarization::polarize_ideal(&original).unwrap();
    assert_eq!(polarized.generators(), p.generators());
    assert_eq!(ring.specialization().ideal(&p).unwrap(), original);
}

#[test]
fn machine_output_is_deterministic() {
    for (cmd, file) in [("pretty-clean", "three_vars.txt"), ("adeg", "i44.txt"), ("stanley", "i44.txt")] {
        let a = run_on(cmd, file, &["--format", "machine"]);
        let b = run_on(cmd, file, &["--format", "machine"]);
        assert_eq!(a, b);
    }
    let a = run(&["random-audit", "--count", "5", "--seed", "3", "--format", "machine"]);
    let b = run(&["random-audit", "--count", "5", "--seed", "3", "--format", "machine"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["adeg", "/no/such/file"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["adeg"]).0, 2);
    let dir = std::env::temp_dir().join(format!("cleanideal-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "vars: x y\ngen: x+y\n").unwrap();
    let (code, out) = run(&["adeg", bad.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2"));
    std::fs::write(&bad, "vars: x y\ngen: 1\n").unwrap();
    assert_eq!(run(&["adeg", bad.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(dir).unwrap();
    let (code, out) = run(&["random-audit", "--count", "4", "--vars", "4", "--max-degree", "2"]);
    assert_eq!(code, 0, "{out}");
}
