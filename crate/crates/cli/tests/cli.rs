use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn conjlab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjlab"))
        .args(args)
        .current_dir(dir)
        .env_remove("CONJLAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gamma_prints_edges_and_primitivity() {
    let dir = tempfile::tempdir().unwrap();
    let o = conjlab(&["gamma", "3,6,8", "--dot", "g.dot"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 -> 6\nprimitive: false\n");
    let dot = std::fs::read_to_string(dir.path().join("g.dot")).unwrap();
    assert!(dot.contains("    3 -> 6;\n"));

    let o = conjlab(&["gamma", "72,90,120"], dir.path());
    assert_eq!(stdout(&o), "edges: none\nprimitive: true\n");

    let o = conjlab(&["gamma", "2,4,12"], dir.path());
    assert_eq!(stdout(&o), "2 -> 4\n4 -> 12\nprimitive: false\n");

    assert_eq!(conjlab(&["gamma", "1,4"], dir.path()).status.code(), Some(1));
    assert_eq!(conjlab(&["gamma", "4,x"], dir.path()).status.code(), Some(1));
}

#[test]
fn construct_then_analyze_remark() {
    let dir = tempfile::tempdir().unwrap();
    let o = conjlab(&["construct", "remark", "3", "-o", "r3.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let o = conjlab(&["analyze", "r3.json", "--json", "r3.report.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("N: {3, 9}"), "{text}");
    assert!(text.contains("sp: false  ch: true  ca: true"), "{text}");
    let v: Value = serde_json::from_slice(&std::fs::read(dir.path().join("r3.report.json")).unwrap()).unwrap();
    assert_eq!(v["report"]["order"], 81);
    assert_eq!(v["report"]["predicates"]["sp"], false);
}

#[test]
fn analyze_sl2_9() {
    let dir = tempfile::tempdir().unwrap();
    conjlab(&["construct", "sl2", "9", "-o", "sl2_9.json"], dir.path());
    let o = conjlab(&["analyze", "sl2_9.json", "--dot", "g.dot"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("order: 720"));
    assert!(text.contains("N: {40, 72, 90}"));
    assert!(text.contains("verdict: TypeIV"));
    let dot = std::fs::read_to_string(dir.path().join("g.dot")).unwrap();
    assert!(!dot.contains("->"));
}

#[test]
fn round_trip_matches_family_sets() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str, &str); 4] = [
        (&["type3", "7", "3"], "order: 1029", "N: {21, 49}"),
        (&["gl2", "4"], "order: 180", "N: {12, 15, 20}"),
        (&["product", "agl1 5", "cyclic 3"], "order: 60", "N: {4, 5}"),
        (&["dihedral", "4"], "order: 8", "N: {2}"),
    ];
    for (family, order, n) in cases {
        let mut args = vec!["construct"];
        args.extend_from_slice(family);
        args.extend(["-o", "g.json"]);
        assert_eq!(conjlab(&args, dir.path()).status.code(), Some(0));
        let text = stdout(&conjlab(&["analyze", "g.json"], dir.path()));
        assert!(text.contains(order) && text.contains(n), "{family:?}: {text}");
    }
}

#[test]
fn json_report_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    conjlab(&["construct", "agl1", "8", "-o", "a.json"], dir.path());
    let report = |out: &str| {
        conjlab(&["analyze", "a.json", "--json", out], dir.path());
        let mut v: Value = serde_json::from_slice(&std::fs::read(dir.path().join(out)).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timings_ms");
        serde_json::to_vec(&v).unwrap()
    };
    assert_eq!(report("one.json"), report("two.json"));
}

#[test]
fn invalid_inputs_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"kind":"permutation","degree":3,"generators":[[0,0,1]]}"#,
    )
    .unwrap();
    let o = conjlab(&["analyze", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("generator 0"), "{err}");

    assert_eq!(conjlab(&["analyze", "missing.json"], dir.path()).status.code(), Some(1));
    assert_eq!(
        conjlab(&["construct", "nosuch", "3", "-o", "x.json"], dir.path())
            .status
            .code(),
        Some(1)
    );
    assert_eq!(conjlab(&["frobnicate"], dir.path()).status.code(), Some(1));
    assert_eq!(conjlab(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn order_cap_exits_3_and_flag_beats_env() {
    let dir = tempfile::tempdir().unwrap();
    conjlab(&["construct", "sym", "5", "-o", "s5.json"], dir.path());
    let o = conjlab(&["analyze", "s5.json", "--max-order", "100"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    let o = conjlab(
        &["construct", "sym", "6", "-o", "s6.json", "--max-order", "100"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));

    let with_env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_conjlab"))
            .args(args)
            .current_dir(dir.path())
            .env("CONJLAB_MAX_ORDER", "50")
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(with_env(&["analyze", "s5.json"]), Some(3));
    assert_eq!(with_env(&["analyze", "s5.json", "--max-order", "200"]), Some(0));
}

#[test]
fn verify_reports_corpus_failures_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    conjlab(&["construct", "sym", "3", "-o", "corpus/s3.json"], dir.path());
    std::fs::write(
        corpus.join("expectations.json"),
        r#"{"sym(3)": {"order": 6, "N": [2, 4], "provenance": "derived"}}"#,
    )
    .unwrap();
    let o = conjlab(&["verify", "--corpus", "corpus", "--threads", "2"], dir.path());
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("FAIL") && text.contains("expected [2, 4]"), "{text}");
    assert!(text.contains("SKIPPED cover of PSL(2,9)"));
}
