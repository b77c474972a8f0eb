//! End-to-end command behaviour: exit codes, printed formats, and file
//! outputs, exercised through the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn romdom(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_romdom"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn romdom")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["solve", "--graph", "x.graph", "--param", "fancy"]);
    assert_eq!(out.status.code(), Some(2));
    let out = romdom(dir.path(), &["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unreadable_and_malformed_graphs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["solve", "--graph", "missing.graph", "--param", "roman"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("missing.graph"), "{}", stderr(&out));

    fs::write(dir.path().join("dup.graph"), "2 2\n0 1\n0 1\n").unwrap();
    let out = romdom(dir.path(), &["solve", "--graph", "dup.graph", "--param", "roman"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn gen_refuses_oversized_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["gen", "--graph", "complete:2", "--t", "25", "--out", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("size limit"), "{}", stderr(&out));
    assert!(!dir.path().join("x").exists());
}

#[test]
fn gen_sidecar_lists_extremes_and_words() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["gen", "--graph", "complete:2", "--t", "3", "--out", "p.graph"]);
    assert_eq!(out.status.code(), Some(0));

    let graph = fs::read_to_string(dir.path().join("p.graph")).unwrap();
    assert_eq!(graph.lines().next(), Some("8 7"));

    let words = fs::read_to_string(dir.path().join("p.graph.words")).unwrap();
    let mut lines = words.lines();
    assert_eq!(lines.next(), Some("extremes 0 7"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 8);
    assert_eq!(body[0], "0 0.0.0");
    assert_eq!(body[5], "5 1.0.1");
    assert_eq!(body[7], "7 1.1.1");
}

#[test]
fn solve_budget_truncation_exits_three_with_valid_witness() {
    let dir = tempfile::tempdir().unwrap();
    romdom(dir.path(), &["gen", "--graph", "complete:3", "--t", "2", "--out", "s.graph"]);
    let out = romdom(
        dir.path(),
        &[
            "solve",
            "--graph",
            "s.graph",
            "--param",
            "double-roman",
            "--budget-nodes",
            "2",
            "--out",
            "w.assign",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("parameter=gamma_dr weight="), "{}", stdout(&out));
    assert!(stdout(&out).contains("optimal=false"), "{}", stdout(&out));

    // Even a truncated witness must verify.
    let check = romdom(
        dir.path(),
        &["verify", "--graph", "s.graph", "--assignment", "w.assign", "--param", "double-roman"],
    );
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn verify_reports_the_failing_vertex_and_condition() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p3.graph"), "3 2\n0 1\n1 2\n").unwrap();
    fs::write(dir.path().join("f.assign"), "0 2\n1 0\n2 0\n").unwrap();
    let out = romdom(
        dir.path(),
        &["verify", "--graph", "p3.graph", "--assignment", "f.assign", "--param", "double-roman"],
    );
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stdout(&out).trim(), "fail at vertex 2, condition (i)");

    fs::write(dir.path().join("r.assign"), "0 1\n1 0\n2 1\n").unwrap();
    let out = romdom(
        dir.path(),
        &["verify", "--graph", "p3.graph", "--assignment", "r.assign", "--param", "roman"],
    );
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stdout(&out).trim(), "fail at vertex 1, condition (rdf)");
}

#[test]
fn verify_rejects_shape_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p3.graph"), "3 2\n0 1\n1 2\n").unwrap();
    fs::write(dir.path().join("short.assign"), "0 2\n1 0\n").unwrap();
    let out = romdom(
        dir.path(),
        &["verify", "--graph", "p3.graph", "--assignment", "short.assign", "--param", "roman"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_writes_a_verifiable_lift() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("f.assign"), "0 3\n1 3\n2 0\n").unwrap();
    fs::write(dir.path().join("p3.graph"), "3 2\n0 1\n1 2\n").unwrap();
    let out = romdom(
        dir.path(),
        &[
            "construct",
            "--graph",
            "p3.graph",
            "--t",
            "2",
            "--assignment",
            "f.assign",
            "--stage",
            "g2",
            "--out",
            "lift.assign",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "stage=g2 predicted=12 actual=12");

    romdom(dir.path(), &["gen", "--graph", "p3.graph", "--t", "2", "--out", "s.graph"]);
    let check = romdom(
        dir.path(),
        &["verify", "--graph", "s.graph", "--assignment", "lift.assign", "--param", "double-roman"],
    );
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check).trim(), "pass");
}

#[test]
fn construct_rejects_labelings_with_ones() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("f.assign"), "0 3\n1 1\n2 3\n").unwrap();
    let out = romdom(
        dir.path(),
        &["construct", "--graph", "path:3", "--t", "2", "--assignment", "f.assign", "--stage", "g"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("vertex 1"), "{}", stderr(&out));
}

#[test]
fn bounds_report_is_exact_and_ordered() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["bounds", "--graph", "complete:2", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "lower=3\nw_g=6\nw_g1=5\nw_g2=5\nupper_theorem=5\nv3=1\nd3=0\nexact=5\nverdict=pass\n"
    );
}

#[test]
fn bounds_with_skipped_exact_prints_none() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(dir.path(), &["bounds", "--graph", "complete:3", "--t", "2", "--skip-exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("exact=none"), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("verdict=pass\n"), "{}", stdout(&out));
}

#[test]
fn bounds_with_spent_budget_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(
        dir.path(),
        &["bounds", "--graph", "complete:3", "--t", "2", "--budget-seconds", "0"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("exact=none"), "{}", stdout(&out));
}

#[test]
fn table_without_closed_forms_prints_placeholders() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(
        dir.path(),
        &["table", "--family", "star", "--t", "2", "--n-min", "3", "--n-max", "4"],
    );
    assert_eq!(out.status.code(), Some(0));
    for row in stdout(&out).lines().skip(1) {
        let cols: Vec<&str> = row.split(' ').collect();
        assert_eq!(cols.len(), 6, "`{row}`");
        assert_eq!(cols[2], "-", "`{row}`");
        assert_eq!(cols[4], "-", "`{row}`");
        assert_eq!(cols[5], "-", "`{row}`");
    }
}

#[test]
fn table_marks_exhausted_rows_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let out = romdom(
        dir.path(),
        &[
            "table",
            "--family",
            "complete",
            "--t",
            "2",
            "--n-min",
            "2",
            "--n-max",
            "3",
            "--budget-seconds",
            "0",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
    for row in stdout(&out).lines().skip(1) {
        assert!(row.ends_with(" inconclusive"), "`{row}`");
        assert!(row.contains(" - "), "`{row}`");
    }
}

#[test]
fn random_family_is_reproducible_for_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = romdom(
        dir.path(),
        &["solve", "--graph", "random:9:0.4", "--seed", "7", "--param", "roman"],
    );
    let b = romdom(
        dir.path(),
        &["solve", "--graph", "random:9:0.4", "--seed", "7", "--param", "roman"],
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).lines().next(), stdout(&b).lines().next());

    let gen = romdom(
        dir.path(),
        &["gen", "--graph", "random:9:0.4", "--seed", "7", "--t", "1", "--out", "r.graph"],
    );
    assert_eq!(gen.status.code(), Some(0));
    let from_file = romdom(dir.path(), &["solve", "--graph", "r.graph", "--param", "roman"]);
    assert_eq!(stdout(&a).lines().next(), stdout(&from_file).lines().next());
}

#[test]
fn solve_handles_a_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k1.graph"), "1 0\n").unwrap();
    let out = romdom(dir.path(), &["solve", "--graph", "k1.graph", "--param", "double-roman"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "parameter=gamma_dr weight=2 optimal=true\n0 2\n");
}
