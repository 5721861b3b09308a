//! The `abid` binary end to end.

use std::process::{Command, Output};

fn abid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abid")).args(args).env_remove("ABID_MAX_RANK").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_c2_lists_four_ideals() {
    let o = abid(&["enumerate", "--family", "C", "--rank", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("word=")).count(), 4);

    let o = abid(&["enumerate", "--family", "A", "--rank", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "abid/1");
    assert_eq!(v["ideals"].as_array().unwrap().len(), 8);
    let keys: Vec<&String> = v["ideals"][1].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["phi", "antichain", "word", "weight_fw", "eta"]);
}

#[test]
fn hasse_a3_dot_has_eight_nodes_and_eight_labelled_edges() {
    let o = abid(&["hasse", "--family", "A", "--rank", "3", "--format", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"s") || l.contains("[label=\"e\"]")).count(), 8);
    assert_eq!(dot.lines().filter(|l| l.contains(" -> ")).count(), 8);
    assert_eq!(dot, include_str!("fixtures/a3_hasse.dot"));
}

#[test]
fn verify_all_at_rank_four_passes() {
    let o = abid(&["verify", "--suite", "all", "--max-rank", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all: "));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_json_report_rows() {
    let o = abid(&["verify", "--suite", "theorem-t", "--max-rank", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "abid/1");
    let rows = v["rows"].as_array().unwrap();
    let c3 = rows.iter().find(|r| r["case"] == "C3 |Aut(Ab)|, |Aut(Π)|").unwrap();
    assert_eq!(c3["expected"], serde_json::json!([2, 1]));
    assert_eq!(c3["computed"], serde_json::json!([2, 1]));
    assert!(rows.iter().all(|r| r["pass"] == true));
    // E8 is part of this sweep regardless of the rank bound
    assert!(rows.iter().any(|r| r["case"].as_str().unwrap().starts_with("E8 ")));
}

#[test]
fn max_rank_can_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_abid"))
        .args(["verify", "--suite", "edges"])
        .env("ABID_MAX_RANK", "2")
        .output()
        .unwrap();
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.contains("G2 ") && !text.contains("A3 "), "{text}");
}

#[test]
fn aut_objects() {
    for (obj, order) in [("poset", 2), ("graph", 4), ("dynkin", 1), ("extended", 2), ("center", 2)] {
        let o = abid(&["aut", "-f", "C", "-r", "3", "--object", obj, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["order"], order, "{obj}");
    }
}

#[test]
fn young_orbit_and_verify() {
    let o = abid(&["young", "--n", "5", "--orbit", "3"]);
    assert_eq!(stdout(&o), "(3)\n(1)\n(1,1,1)\n(2,2,1)\n(3,2)\n");
    let o = abid(&["young", "--n", "7", "--verify"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS  Y7 order of ⟨τ, σ⟩  expected 14 computed 14"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["hasse", "-f", "D", "-r", "4", "--format", "json"][..],
        &["aut", "-f", "D", "-r", "4", "--object", "graph"][..],
        &["verify", "--suite", "center", "--max-rank", "4", "--format", "json"][..],
    ] {
        assert_eq!(abid(args).stdout, abid(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["enumerate", "--family", "D", "--rank", "3"][..],
        &["enumerate", "--family", "X", "--rank", "3"][..],
        &["verify", "--max-rank", "0"][..],
        &["young", "--n", "5"][..],
        &["young", "--n", "5", "--orbit", "4,1"][..],
        &["roots", "-f", "A", "-r", "2", "--format", "dot"][..],
        &["frobnicate"][..],
    ] {
        let o = abid(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
