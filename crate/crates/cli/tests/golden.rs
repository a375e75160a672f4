//! Runs the CLI against the files under `repro/` and compares with the
//! golden outputs. Regenerate with `repro/regenerate.sh`.

use std::path::PathBuf;
use std::process::{Command, Output};

fn repro_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../repro")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geolang"))
        .current_dir(repro_dir().parent().expect("workspace root"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn assert_golden(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{name}: stderr {}", String::from_utf8_lossy(&out.stderr));
    let expected = std::fs::read_to_string(repro_dir().join("golden").join(name)).expect("golden file");
    assert_eq!(stdout(&out), expected, "{name} differs from its golden file");
}

#[test]
fn repro_reports_match_golden() {
    for t in ["q8", "d8", "qxq", "extension", "quotients", "lift", "cannon"] {
        assert_golden(&format!("repro_{t}.txt"), &["repro", t], 0);
    }
}

#[test]
fn table1_matches_golden() {
    assert_golden("repro_table1.txt", &["repro", "table1"], 0);
}

#[test]
fn znc2_matches_golden() {
    assert_golden("repro_znc2.txt", &["repro", "znc2"], 0);
}

#[test]
fn commands_match_golden() {
    let g = "repro/groups";
    let cases: &[(&str, Vec<String>)] = &[
        ("ball_bs12.txt", vec!["ball".into(), "--group".into(), format!("{g}/bs12.grp"), "--radius".into(), "3".into()]),
        ("geo_q8.txt", vec!["geo".into(), "enumerate".into(), "--group".into(), format!("{g}/q8.grp"), "--exact".into()]),
        (
            "geo_cannon_acdt.txt",
            vec![
                "geo".into(),
                "enumerate".into(),
                "--group".into(),
                format!("{g}/cannon.grp"),
                "--genset".into(),
                format!("{g}/cannon_acdt.genset"),
                "--maxlen".into(),
                "3".into(),
            ],
        ),
        (
            "check_bs12.txt",
            vec!["geo".into(), "check".into(), "--group".into(), format!("{g}/bs12.grp"), "--word".into(), "t^-1 a t".into()],
        ),
        ("pe_d8_ab.txt", vec!["pe".into(), "check".into(), "--group".into(), format!("{g}/d8.grp"), "--exact".into()]),
        (
            "forbidden_d8_abt.txt",
            vec![
                "pe".into(),
                "forbidden".into(),
                "--group".into(),
                format!("{g}/d8.grp"),
                "--genset".into(),
                format!("{g}/d8_abt.genset"),
                "--exact".into(),
            ],
        ),
        ("pe_z5z.txt", vec!["pe".into(), "check".into(), "--group".into(), format!("{g}/z5z.grp"), "--maxlen".into(), "4".into()]),
        ("coset_sl2_3.txt", vec!["coset".into(), "--presentation".into(), format!("{g}/sl2_3.pres")]),
        ("fingerprint_qxq.txt", vec!["fingerprint".into(), "--group".into(), format!("{g}/qxq.grp")]),
    ];
    for (name, args) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_golden(name, &args, 0);
    }
}

#[test]
fn documented_examples() {
    let out = run(&["repro", "q8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("8 generating sets, 8 PE"));

    let out = run(&["pe", "check", "--group", "repro/groups/d8.grp", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: NotPE\nwitness: a b a\n"));

    let out = run(&["geo", "check", "--group", "repro/groups/bs12.grp", "--word", "t^-1 a t"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("geodesic: true"));
}

#[test]
fn exit_codes() {
    // refuted when PE is asserted
    let out = run(&["pe", "check", "--group", "repro/groups/d8.grp", "--exact", "--expect-pe"]);
    assert_eq!(out.status.code(), Some(1));
    // inconclusive is a success with a warning
    let out = run(&["pe", "check", "--group", "repro/groups/q8.grp", "--maxlen", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    // input errors
    assert_eq!(run(&["fingerprint", "--group", "repro/groups/missing.grp"]).status.code(), Some(2));
    assert_eq!(run(&["fingerprint", "--group", "repro/groups/bs12.grp"]).status.code(), Some(2));
    let out = run(&["geo", "check", "--group", "repro/groups/bs12.grp", "--word", "a z"]);
    assert_eq!(out.status.code(), Some(2));
    // resource cap
    let out = run(&["coset", "--presentation", "repro/groups/z3z_cell.pres"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("partial sphere sizes: [1, 4, 6, 6, 6, 6]"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = run(&["--threads", "1", "repro", "all", "--samples", "20"]);
    let four = run(&["--threads", "4", "repro", "all", "--samples", "20"]);
    assert_eq!(one.status.code(), Some(0), "{}", String::from_utf8_lossy(&one.stderr));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("geolang-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q8.txt");
    let out = run(&["repro", "q8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let golden = std::fs::read_to_string(repro_dir().join("golden/repro_q8.txt")).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);
    std::fs::remove_dir_all(&dir).unwrap();
}
