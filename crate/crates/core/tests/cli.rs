use std::path::PathBuf;
use std::process::{Command, Output};

fn toricgb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toricgb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toricgb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_config(name: &str, body: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_reports_both_orders() {
    let cfg = write_config("two.json", r#"{"alpha":4,"d":2,"generators":[[3,1],[1,3]]}"#);
    let o = toricgb(&["run", "--config", cfg.to_str().unwrap(), "--order", "lex", "--order", "grevlex", "--emit", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["maxdeg_revlex"], 3);
    assert_eq!(v["maxdeg_lex"], 4);
    assert_eq!(v["conjecture_holds"], true);
    assert_eq!(v["basis_grevlex"].as_array().unwrap().len(), 4);
    assert_eq!(v["basis_lex"].as_array().unwrap().len(), 5);
}

#[test]
fn run_table_output() {
    let cfg = write_config("table.json", r#"{"alpha":3,"d":3,"generators":[[3,0,0],[1,1,1],[2,1,0]]}"#);
    let o = toricgb(&["run", "--config", cfg.to_str().unwrap(), "--normality", "--ja-maxdeg"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("r(S)"));
    assert!(s.contains("grevlex basis"));
}

#[test]
fn malformed_input_exits_2() {
    let bad = write_config("bad.json", r#"{"alpha":4,"d":2,"generators":[[3,2]]}"#);
    assert_eq!(toricgb(&["run", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    let garbage = write_config("garbage.json", "{ nope");
    assert_eq!(toricgb(&["run", "--config", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(toricgb(&["run", "--config", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(toricgb(&["reproduce", "no-such-preset"]).status.code(), Some(2));
    let out = scratch("never.jsonl");
    let o = toricgb(&["sweep", "--alpha", "3", "--dim", "3", "--delete", "1", "--check", "q ~ 1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_finding_exits_1() {
    let out = scratch("finding.jsonl");
    let o = toricgb(&["sweep", "--alpha", "3", "--dim", "3", "--delete", "1", "--check", "r == 3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_cap_exits_2() {
    let out = scratch("cap.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_toricgb"))
        .args(["sweep", "--alpha", "3", "--dim", "4", "--delete", "4", "--out", out.to_str().unwrap()])
        .env("TORICGB_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("TORICGB_CAP"));
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let mut bodies = Vec::new();
    for threads in ["1", "4"] {
        let out = scratch(&format!("det-{threads}.jsonl"));
        let o = Command::new(env!("CARGO_BIN_EXE_toricgb"))
            .args([
                "sweep", "--alpha", "3", "--dim", "4", "--delete", "4", "--predicate", "facet-min(2)", "--check", "r <= 8",
                "--out", out.to_str().unwrap(),
            ])
            .env("TORICGB_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        let text = std::fs::read_to_string(&out).unwrap();
        let mut lines = text.lines();
        let header: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(header["manifest"]["records"], 5);
        bodies.push(lines.map(str::to_owned).collect::<Vec<_>>().join("\n"));
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn reproduce_preset_passes() {
    let o = toricgb(&["reproduce", "example-A1A3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("11/11"));
}
