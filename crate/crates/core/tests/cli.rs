use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szczarba"))
        .args(args)
        .env_remove("SZCZARBA_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hin_prints_the_tuple() {
    let out = run(&["hin", "--n", "5", "--subset", "0,2,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(d_1 g_4, d_1 d_0 g_3, d_1^3 g_2, d_1^3 d_0 g_1)\n");
}

#[test]
fn compute_prints_the_tuple() {
    let out = run(&["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(s_0^2 g_3, s_0 g_2, g_1)\n");
    let out = run(&["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "1,2"]);
    assert_eq!(stdout(&out), "(s_0^2 g_3, s_1 g_2, s_0 d_1 g_1)\n");
}

#[test]
fn explain_shows_the_alpha_table() {
    let out = run(&["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "2,1", "--explain"]);
    let text = stdout(&out);
    assert!(text.contains("α_3(∅) = 0, α_2(∅) = 1, α_1(∅) = 2"), "{text}");
    assert!(text.contains("ω_∅(2) = 0; α_3(2) = 0, α_2(2) = 0, α_1(2) = 1"), "{text}");
    assert!(text.contains("ω_(2)(1) = 0; α_3(2,1) = 0, α_2(2,1) = 0, α_1(2,1) = 0"), "{text}");
    assert!(text.contains("k=1: d_2^2 s_1^2 d_1 s_0 = id on [0 1 2] -> [0 1 2]"), "{text}");
}

#[test]
fn verify_succeeds() {
    let out = run(&["verify", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("up to n=4: 0 mismatches\n"));
}

#[test]
fn verify_reads_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_szczarba"))
        .args(["verify"])
        .env("SZCZARBA_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last(), Some("verified 5 instances up to n=2: 0 mismatches"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "1,1"][..],
        &["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "3"],
        &["hin", "--n", "3", "--subset", "0,2,4"],
        &["hin", "--n", "3", "--subset", "x"],
        &["hom", "--n", "2", "--p", "2", "--q", "1"],
        &["diagram", "--n", "3", "--format", "text"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_carries_the_schema_version() {
    let out = run(&["compute", "--n", "3", "--p", "0", "--q", "3", "--seq", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "compute");
    let out = run(&["verify", "--max-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--max-n", "5", "--format", "json"][..],
        &["diagram", "--n", "3", "--kind", "sz"],
        &["hom", "--n", "4", "--p", "0", "--q", "4", "--family", "g", "--length", "2"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("szczarba-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.dot");
    let out = run(&["diagram", "--n", "3", "--kind", "sz", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"), "{dot}");
    let tikz = run(&["diagram", "--n", "3", "--kind", "sz", "--format", "tikz"]);
    assert!(stdout(&tikz).contains("tikzpicture"));
    std::fs::remove_dir_all(&dir).unwrap();
}
