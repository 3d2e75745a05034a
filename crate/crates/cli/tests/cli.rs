use std::process::{Command, Output};

fn unimodal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimodal"))
        .args(args)
        .env_remove("UNIMODAL_CACHE")
        .output()
        .expect("binary runs")
}

#[test]
fn table_prints_header_and_rows() {
    let out = unimodal(&["table", "--n-max", "10", "--m-max", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,p,N0,M0,ospt,u0,u1,u2");
    assert_eq!(lines.len(), 12);
    assert!(lines[11].starts_with("10,42,"));
}

#[test]
fn passing_verify_exits_zero() {
    let out = unimodal(&["verify", "--n-max", "60", "--targets", "unimodality,ospt-bounds"]);
    assert_eq!(out.status.code(), Some(0));
    let log = String::from_utf8(out.stderr).unwrap();
    assert!(log.lines().all(|l| l.starts_with("PASS")), "{log}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_array() || v.is_object());
}

#[test]
fn failing_check_exits_one() {
    let out = unimodal(&["verify", "--n-max", "40", "--targets", "log-concavity"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("FAIL log-concavity"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(unimodal(&["verify", "--targets", "nonsense"]).status.code(), Some(2));
    assert_eq!(unimodal(&["table", "--threads", "0"]).status.code(), Some(2));
}

#[test]
fn corrupt_cache_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = unimodal(&["table", "--n-max", "5", "--cache-path", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_writes_readable_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = unimodal(&["export", "--n-max", "30", "--m-max", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let t = unimodal_cli::export::from_json(&text).unwrap();
    assert_eq!(t.n_max, 30);
    assert_eq!(t.m_max(), 3);
}
