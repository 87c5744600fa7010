use std::process::{Command, Output};

fn qtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stat_perm_descents_and_maj() {
    let o = qtab(&["stat", "perm", "513697428"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("D={1,5,6,7} maj=19"));
}

#[test]
fn j2_counts_from_generating_function() {
    let o = qtab(&["j2", "count", "--max", "15", "--method", "gf"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1,1,1,2,4,8,15,29,55,105,200,381,725,1381,2629,5005");
}

#[test]
fn j2_brute_agrees_with_gf() {
    let gf = stdout(&qtab(&["j2", "count", "--max", "7"]));
    let brute = stdout(&qtab(&["j2", "count", "--max", "7", "--method", "brute"]));
    assert_eq!(gf, brute);
}

#[test]
fn verify_exits_zero_on_success() {
    let o = qtab(&["verify", "permcont2", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_json_schema() {
    let o = qtab(&["verify", "permcont1", "--max-size", "4", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theorem"], "permcont1");
    assert!(v["checked"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qtab(&["bogus"]).status.code(), Some(2));
    // decimals are refused to keep parameters exact
    assert_eq!(qtab(&["limit", "tlim", "--q", "0.5", "--n", "3"]).status.code(), Some(2));
    assert_eq!(qtab(&["stat", "perm", "1123"]).status.code(), Some(2));
}

#[test]
fn enumeration_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtab"))
        .args(["j2", "count", "--max", "9", "--method", "brute"])
        .env("QTAB_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn j2set_check_exit_codes() {
    assert_eq!(qtab(&["j2set", "check", "0,1,3"]).status.code(), Some(0));
    assert_eq!(qtab(&["j2set", "check", "0,2"]).status.code(), Some(1));
}

#[test]
fn rs_roundtrip_through_json_files() {
    let dir = std::env::temp_dir().join(format!("qtab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = qtab(&["rs", "513697428", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let p = dir.join("P.json");
    let q = dir.join("Q.json");
    std::fs::write(&p, v["P"].to_string()).unwrap();
    std::fs::write(&q, v["Q"].to_string()).unwrap();
    let back = qtab(&["rs", "--inverse", p.to_str().unwrap(), q.to_str().unwrap()]);
    assert!(back.status.success());
    assert_eq!(stdout(&back).trim(), "513697428");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn limit_csv_layout() {
    let o = qtab(&["limit", "tlim", "--q", "1/2", "--n", "12", "--from", "10", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,value,limit,gap");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("10,"));
}

#[test]
fn output_independent_of_thread_count() {
    let args = ["limit", "qlim1", "--sigma", "21", "--q", "1/3", "--n", "14", "--from", "4", "--json"];
    let one = qtab(&[&args[..], &["--threads", "1"]].concat());
    let four = qtab(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn probe_reports_exact_ratios() {
    let o = qtab(&["probe", "conjecture", "--tableaux", "1,2", "1|2", "--n", "3,4", "--brute"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n=3 ratio="));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn qpoly_binomial() {
    let o = qtab(&["qpoly", "binomial", "4", "2"]);
    assert_eq!(stdout(&o).trim(), "1 + q + 2*q^2 + q^3 + q^4");
}
