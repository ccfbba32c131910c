//! Acceptance criterion 10: golden-file tests for every subcommand, the
//! JSON round-trip property, exit codes, and rank-override invariance.

use std::process::Command;

use ola_core::weights::parse_weight;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ola"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}.golden", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("golden file {path}: {e}"))
}

fn check_golden(name: &str, args: &[&str]) -> bool {
    let actual = run_ok(args);
    let expected = golden(name);
    if actual != expected {
        eprintln!("golden mismatch for {name}:\n--- expected\n{expected}\n--- actual\n{actual}");
        return false;
    }
    true
}

#[test]
fn acceptance_10_golden_files() {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        (
            "mult_standard",
            vec!["mult", "standard", "--n", "1", "--lambda", "0", "--mu", "e[-1,1]-e[1,1]"],
        ),
        (
            "mult_verma",
            vec!["mult", "verma", "--n", "1", "--lambda", "0", "--mu", "-e[1,1]+e[2,1]"],
        ),
        (
            "mult_parabolic",
            vec![
                "mult", "parabolic", "--n", "1", "--rank", "2", "--lambda", "0", "--mu",
                "-e[1,1]+e[2,1]",
            ],
        ),
        (
            "flag_injective",
            vec!["flag", "injective", "--n", "1", "--lambda", "-e[1,1]+e[2,1]"],
        ),
        (
            "flag_psi",
            vec!["flag", "psi", "--n", "1", "--lambda", "0", "--degree", "-1", "--rank", "2"],
        ),
        ("socle", vec!["socle", "--n", "1", "--lambda", "[1]", "--mu", "[1]"]),
        ("ladual", vec!["ladual", "--n", "1", "--lambda", "[1]", "--mu", "[1]"]),
        (
            "order_check",
            vec!["order", "check", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"],
        ),
        (
            "order_interval",
            vec!["order", "interval", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"],
        ),
        (
            "order_hasse",
            vec![
                "order", "hasse", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0",
                "--dot",
            ],
        ),
        ("block", vec!["block", "--n", "2", "--weight", "w[1]"]),
        ("kl", vec!["kl", "--x", "[1,3,2,4]", "--w", "[3,4,1,2]"]),
        ("lr", vec!["lr", "--lambda", "[2,1]", "--mu", "[2,1]", "--nu", "[3,2,1]"]),
        ("certify", vec!["certify"]),
        (
            "mult_standard_text",
            vec![
                "mult", "standard", "--n", "1", "--lambda", "0", "--mu", "e[-1,1]-e[1,1]",
                "--format", "text",
            ],
        ),
    ];
    let mut pass = true;
    for (name, args) in &cases {
        if !check_golden(name, args) {
            pass = false;
        }
    }
    println!(
        "acceptance 10a (CLI golden files): {} — {} subcommand invocations",
        if pass { "PASS" } else { "FAIL" },
        cases.len()
    );
    assert!(pass);
}

#[test]
fn acceptance_10_exit_codes() {
    // success
    let ok = bin()
        .args(["lr", "--lambda", "[1]", "--mu", "[1]", "--nu", "[2]"])
        .output()
        .unwrap();
    let mut pass = ok.status.code() == Some(0);

    // parse error → 2
    let parse = bin()
        .args(["mult", "standard", "--lambda", "junk", "--mu", "0"])
        .output()
        .unwrap();
    pass &= parse.status.code() == Some(2);

    // domain error (index out of range) → 2
    let domain = bin()
        .args(["block", "--n", "1", "--weight", "w[2]"])
        .output()
        .unwrap();
    pass &= domain.status.code() == Some(2);

    // not-covered constituent → 2
    let not_covered = bin()
        .args([
            "mult",
            "parabolic",
            "--rank",
            "1",
            "--lambda",
            "0",
            "--mu",
            "e[-2,1]-e[2,1]",
        ])
        .output()
        .unwrap();
    pass &= not_covered.status.code() == Some(2);

    // resource cap → 3
    let resource = bin()
        .args(["kl", "--x", "[1,2,3,4,5,6,7,8,9]", "--w", "[1,2,3,4,5,6,7,8,9]"])
        .output()
        .unwrap();
    pass &= resource.status.code() == Some(3);

    println!(
        "acceptance 10b (exit codes): {} — 0/2/3 as specified",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn acceptance_10_json_round_trip() {
    let mut pass = true;
    // every weight string in the output re-parses to an equal weight
    let outputs = [
        run_ok(&["flag", "injective", "--n", "1", "--lambda", "-e[1,1]+e[2,1]"]),
        run_ok(&["order", "interval", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"]),
        run_ok(&["flag", "psi", "--n", "1", "--lambda", "0", "--degree", "-1"]),
    ];
    let mut checked = 0;
    for out in &outputs {
        let doc: serde_json::Value = serde_json::from_str(out).expect("valid json");
        let n = doc["n"].as_u64().unwrap() as u32;
        let mut stack = vec![&doc["result"], &doc["query"]];
        while let Some(v) = stack.pop() {
            match v {
                serde_json::Value::Object(map) => {
                    for (key, val) in map {
                        if let Some(text) = val.as_str() {
                            if ["mu", "lambda", "weight", "base", "lower", "upper"]
                                .contains(&key.as_str())
                                && (text.contains('e') || text.contains('w') || text == "0")
                            {
                                let w = parse_weight(text, n).expect("round trip parse");
                                if w.render() != *text {
                                    pass = false;
                                    eprintln!("weight does not round trip: {text:?}");
                                }
                                checked += 1;
                            }
                        } else {
                            stack.push(val);
                        }
                    }
                }
                serde_json::Value::Array(items) => stack.extend(items),
                _ => {}
            }
        }
    }
    println!(
        "acceptance 10c (JSON round trip): {} — {checked} weight strings re-parsed",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass && checked > 4);
}

#[test]
fn acceptance_10_rank_override_keeps_stable_results() {
    // a stabilized result must not change when --rank raises the truncation
    let base = run_ok(&["mult", "verma", "--n", "1", "--lambda", "0", "--mu", "-e[1,1]+e[2,1]"]);
    let raised = run_ok(&[
        "mult", "verma", "--n", "1", "--lambda", "0", "--mu", "-e[1,1]+e[2,1]", "--rank", "5",
    ]);
    let base: serde_json::Value = serde_json::from_str(&base).unwrap();
    let raised: serde_json::Value = serde_json::from_str(&raised).unwrap();
    let mut pass = base["result"] == raised["result"];
    pass &= base["stabilized"] == serde_json::Value::Bool(true);
    pass &= raised["stabilized"] == serde_json::Value::Bool(true);

    let base_std =
        run_ok(&["mult", "standard", "--n", "1", "--lambda", "0", "--mu", "e[-1,1]-e[1,1]"]);
    let raised_std = run_ok(&[
        "mult", "standard", "--n", "1", "--lambda", "0", "--mu", "e[-1,1]-e[1,1]", "--rank", "4",
    ]);
    let base_std: serde_json::Value = serde_json::from_str(&base_std).unwrap();
    let raised_std: serde_json::Value = serde_json::from_str(&raised_std).unwrap();
    pass &= base_std["result"] == raised_std["result"];

    println!(
        "acceptance 10d (rank override invariance): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}
