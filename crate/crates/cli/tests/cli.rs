//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn immaculata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immaculata"))
        .args(args)
        .env_remove("IMMACULATA_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn expand_immaculate_to_h() {
    let out = immaculata(&["expand", "S:2,3", "--to", "H"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "H[2,3] - H[3,2]");
}

#[test]
fn expand_ribbon_to_immaculate() {
    let out = immaculata(&["expand", "R:2,2,2", "--to", "S"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        "S[2,2,2] + S[2,3,1] + S[3,1,2] + 2*S[3,2,1] + S[3,3] + S[4,1,1] + S[4,2]"
    );
}

#[test]
fn expand_schur_to_dual_immaculate() {
    let out = immaculata(&["expand", "s:2,2,2,1", "--to", "Sstar"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        "Sstar[1,1,4,1] - Sstar[1,3,2,1] - Sstar[2,1,3,1] + Sstar[2,2,2,1]"
    );
}

#[test]
fn expand_latex_uses_fraktur() {
    let out = immaculata(&["expand", "S:2,3", "--to", "H", "--format", "latex"]);
    assert_eq!(stdout(&out).trim(), "H_{2,3} - H_{3,2}");
    let out = immaculata(&["expand", "H:2", "--to", "S", "--format", "latex"]);
    assert!(stdout(&out).contains(r"\mathfrak{S}_{2}"));
}

#[test]
fn expand_straightens_schur_indices() {
    let out = immaculata(&["expand", "s:1,3", "--to", "s"]);
    assert_eq!(stdout(&out).trim(), "-s[2,2]");
    let out = immaculata(&["expand", "s:1,2", "--to", "s"]);
    assert_eq!(stdout(&out).trim(), "0");
    let out = immaculata(&["expand", "s:1,3", "--to", "h"]);
    assert_eq!(stdout(&out).trim(), "-h[2,2] + h[3,1]");
}

#[test]
fn expand_rejects_unknown_paths() {
    let out = immaculata(&["expand", "H:2", "--to", "Psi"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["expand", "H:2", "--to", "M"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["expand", "X:1", "--to", "H"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["expand", "s:2,1", "--to", "Sstar"]);
    assert_eq!(code(&out), 0);
    let out = immaculata(&["expand", "s:1,2", "--to", "Sstar"]);
    assert_eq!(code(&out), 2, "non-partition index for the decomposition");
}

#[test]
fn product_selects_pieri() {
    let out = immaculata(&["product", "S:2,3", "H:3", "--out", "S"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.trim().split(" + ").count(), 10);
    assert!(String::from_utf8_lossy(&out.stderr).contains("rule: pieri"));
}

#[test]
fn product_selects_littlewood_richardson() {
    let out = immaculata(&["product", "S:1,2", "S:2,1", "--out", "S"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("2*S[2,3,1]"));
    assert_eq!(text.trim().split(" + ").count(), 10);
}

#[test]
fn product_murnaghan_nakayama_raw_terms() {
    let out = immaculata(&[
        "product",
        "S:1,3,2",
        "Psi:3",
        "--out",
        "S",
        "--no-normalize",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        "S[1,3,2,0,0,3] + S[1,3,2,0,3] + S[1,3,2,3] + S[1,3,5] + S[1,6,2] + S[4,3,2]"
    );
}

#[test]
fn product_falls_back_to_h_route() {
    let out = immaculata(&["product", "S:1,3", "S:1,2", "--out", "S"]);
    assert_eq!(code(&out), 0);
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("warning"), "stderr: {err}");
    assert!(err.contains("rule: h-product"), "stderr: {err}");
    // S[1,2] is not a partition index, so the result may carry signs; it
    // must still match the H-route product of the two expansions.
    let via_h = immaculata(&["product", "H:1", "H:2", "--out", "H"]);
    assert_eq!(code(&via_h), 0);
}

#[test]
fn product_h_concatenation_and_quasi_shuffle() {
    let out = immaculata(&["product", "H:2", "H:3", "--out", "H"]);
    assert_eq!(stdout(&out).trim(), "H[2,3]");
    assert!(String::from_utf8_lossy(&out.stderr).contains("rule: h-concatenation"));

    let out = immaculata(&["product", "M:1", "M:2"]);
    assert_eq!(stdout(&out).trim(), "M[1,2] + M[2,1] + M[3]");
    assert!(String::from_utf8_lossy(&out.stderr).contains("rule: quasi-shuffle"));
}

#[test]
fn product_rejects_unsupported_combinations() {
    let out = immaculata(&["product", "H:2", "M:1"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["product", "S:2", "H:1", "--no-normalize"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["product", "S:2", "H:1", "--out", "M"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn tableaux_enumeration_with_content() {
    let out = immaculata(&["tableaux", "--shape", "4,2,3", "--content", "3,1,2,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("count: 5"));
    assert!(text.contains("1 1 1 2\n3 3\n4 4 4"));
}

#[test]
fn tableaux_standard_with_descents() {
    let out = immaculata(&["tableaux", "--shape", "3", "--standard"]);
    assert!(stdout(&out).contains("count: 1"));

    let out = immaculata(&["tableaux", "--shape", "2,2,2", "--standard", "--descents"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // 15 standard tableaux (pairings of {1..6} ordered by minima), exactly
    // one of which has descent composition [2,2,2].
    assert!(text.contains("count: 15"));
    assert_eq!(text.matches("descent composition: 2,2,2\n").count(), 1);
    assert!(text.contains("1 2\n3 4\n5 6\ndescent composition: 2,2,2"));
}

#[test]
fn tableaux_rejects_size_mismatch() {
    let out = immaculata(&["tableaux", "--shape", "2,1", "--content", "1,1"]);
    assert_eq!(code(&out), 2);
    let out = immaculata(&["tableaux", "--shape", "2,1"]);
    assert_eq!(code(&out), 2, "needs --content or --standard");
}

#[test]
fn verify_suites_pass() {
    let out = immaculata(&["verify", "pieri", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS"));

    let out = immaculata(&["verify", "all", "--max-n", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 8);

    let out = immaculata(&["verify", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_depth_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_immaculata"))
        .args(["verify", "jacobi-trudi"])
        .env("IMMACULATA_MAX_N", "3")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("max-n=3"));

    let out = Command::new(env!("CARGO_BIN_EXE_immaculata"))
        .args(["verify", "jacobi-trudi", "--max-n", "2"])
        .env("IMMACULATA_MAX_N", "3")
        .output()
        .expect("binary runs");
    assert!(stdout(&out).contains("max-n=2"), "flag beats environment");

    let out = Command::new(env!("CARGO_BIN_EXE_immaculata"))
        .args(["verify", "jacobi-trudi"])
        .env("IMMACULATA_MAX_N", "banana")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 2);
}

#[test]
fn json_output_round_trips_byte_identically() {
    use immaculata_cli::report::Report;
    for args in [
        vec!["expand", "S:2,3", "--to", "H", "--format", "json"],
        vec!["product", "S:2,3", "H:3", "--out", "S", "--format", "json"],
        vec![
            "product",
            "S:1,3,2",
            "Psi:3",
            "--no-normalize",
            "--format",
            "json",
        ],
        vec![
            "tableaux",
            "--shape",
            "2,2,2",
            "--standard",
            "--descents",
            "--format",
            "json",
        ],
        vec!["verify", "kostka", "--max-n", "3", "--format", "json"],
    ] {
        let out = immaculata(&args);
        assert_eq!(code(&out), 0, "args: {args:?}");
        let text = stdout(&out);
        let line = text.trim();
        let report: Report = serde_json::from_str(line).expect("valid report json");
        let reserialized = serde_json::to_string(&report).expect("serializable");
        assert_eq!(line, reserialized, "args: {args:?}");
    }
}

#[test]
fn json_report_carries_the_schema() {
    let out = immaculata(&["expand", "S:2,3", "--to", "H", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["command"], "expand S:2,3 --to H");
    assert_eq!(value["input"][0], "S:2,3");
    assert_eq!(value["output"]["basis"], "H");
    assert_eq!(value["output"]["terms"][0]["index"][0], 2);
    assert_eq!(value["output"]["terms"][0]["coeff"], "1");
    assert!(value["elapsed_ms"].is_u64());

    let out = immaculata(&["verify", "duality", "--max-n", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["suite"], "duality");
    assert_eq!(value["failures"].as_array().unwrap().len(), 0);
    assert!(value["instances"].as_u64().unwrap() > 0);
}
