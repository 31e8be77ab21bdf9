use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn g5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g5census"))
        .args(args)
        .env_remove("G5_THREADS")
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn resumed_census_matches_uninterrupted_run() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.txt");
    let resumed = dir.path().join("resumed.txt");
    let ck = dir.path().join("hyp.ck");
    assert_eq!(g5(&["census", "--stratum", "hyp", "--out", path(&full)]).status.code(), Some(0));
    let first = g5(&[
        "census", "--stratum", "hyp", "--out", path(&resumed), "--checkpoint", path(&ck),
        "--checkpoint-every", "4", "--stop-after-units", "8", "--threads", "2",
    ]);
    assert_eq!(first.status.code(), Some(0));
    assert!(!resumed.exists());
    assert!(ck.exists());
    let second = g5(&[
        "census", "--stratum", "hyp", "--out", path(&resumed), "--checkpoint", path(&ck), "--resume",
        "--checkpoint-every", "4", "--threads", "1",
    ]);
    assert_eq!(second.status.code(), Some(0));
    let a = fs::read(&full).unwrap();
    assert_eq!(a, fs::read(&resumed).unwrap());
    assert_eq!(a.iter().filter(|&&b| b == b'\n').count(), 1070);
}

#[test]
fn corrupt_checkpoint_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    let out = g5(&[
        "census", "--stratum", "hyp", "--genus", "3", "--checkpoint", path(&ck), "--stop-after-units", "1",
        "--checkpoint-every", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&ck).unwrap().replacen("HYP", "HYQ", 1);
    fs::write(&ck, text).unwrap();
    let out = g5(&["census", "--stratum", "hyp", "--genus", "3", "--checkpoint", path(&ck), "--resume"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt"));
}

#[test]
fn analyze_rejects_inconsistent_records() {
    let dir = tempfile::tempdir().unwrap();
    let census = dir.path().join("g3.txt");
    assert_eq!(g5(&["census", "--stratum", "hyp", "--genus", "3", "--out", path(&census)]).status.code(), Some(0));
    let annotated = dir.path().join("a.txt");
    let ok = g5(&["analyze", path(&census), "--out", path(&annotated)]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(fs::read_to_string(&annotated).unwrap().lines().all(|l| l.contains(" key=")));

    let text = fs::read_to_string(&census).unwrap();
    let first = text.lines().next().unwrap();
    let (head, tail) = first.split_once(" N=").unwrap();
    let (n1, rest) = tail.split_once(',').unwrap();
    let bad = format!("{head} N={},{rest}\n", n1.parse::<u64>().unwrap() + 1);
    let broken = dir.path().join("broken.txt");
    fs::write(&broken, bad).unwrap();
    let out = g5(&["analyze", path(&broken), "--out", path(&annotated)]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn report_check_fails_on_partial_data() {
    let dir = tempfile::tempdir().unwrap();
    let census = dir.path().join("hyp.txt");
    assert_eq!(g5(&["census", "--stratum", "hyp", "--out", path(&census)]).status.code(), Some(0));
    let rep = dir.path().join("rep");
    let out = g5(&["report", path(&census), "--out", path(&rep), "--check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(rep.join("newton.csv").exists());
    let md = fs::read_to_string(rep.join("report.md")).unwrap();
    assert!(md.contains("| [1^2] | 1023 |"), "{md}");
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(g5(&["census", "--stratum", "elliptic"]).status.code(), Some(1));
    assert_eq!(g5(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(g5(&["--help"]).status.code(), Some(0));
}

#[test]
fn thread_count_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_g5census"))
        .args(["census", "--stratum", "hyp", "--genus", "4", "--out", path(&a)])
        .env("G5_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let b = dir.path().join("b.txt");
    assert_eq!(g5(&["census", "--stratum", "hyp", "--genus", "4", "--out", path(&b)]).status.code(), Some(0));
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
}
