use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn econkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_econkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn worked_lp_solves() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "prob.json", r#"{"sense":"max","c":[3,2],"d":0.0,"A":[[1,1],[1,0]],"b":[4,2]}"#);
    let o = econkit(&["lp", "solve", &p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "Optimal");
    assert_eq!(v["x"], serde_json::json!([2.0, 2.0]));
    assert_eq!(v["z"], 10.0);
    assert_eq!(v["slacks"], serde_json::json!([0.0, 0.0]));
    assert!(v["iterations"].is_u64());
}

#[test]
fn infeasible_lp_exits_2() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "inf.json", r#"{"sense":"max","c":[1,1],"A":[[1,0],[-1,0]],"b":[2,-3]}"#);
    let o = econkit(&["lp", "solve", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("Infeasible"));
}

#[test]
fn unbounded_lp_exits_2() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "unb.json", r#"{"sense":"max","c":[1,1],"A":[[1,-1]],"b":[1]}"#);
    let o = econkit(&["lp", "solve", &p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["status"], "Unbounded");
}

#[test]
fn trace_prints_tableaus() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "prob.json", r#"{"sense":"max","c":[3,2],"A":[[1,1],[1,0]],"b":[4,2]}"#);
    let text = stdout(&econkit(&["lp", "solve", &p, "--trace"]));
    assert!(text.contains("# iteration 0"));
    assert!(text.contains("1,0,0,2,1,10"));
    let v = json(&econkit(&["lp", "solve", &p, "--trace", "--format", "json"]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 3);
}

#[test]
fn lp_graph_lists_vertices() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "prob.json", r#"{"sense":"max","c":[3,2],"A":[[1,1],[1,0]],"b":[4,2]}"#);
    let v = json(&econkit(&["lp", "graph", &p, "--format", "json"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["optimal_vertices"], serde_json::json!([[2.0, 2.0]]));
}

#[test]
fn pole_exits_3() {
    let o = econkit(&["calc", "integrate", "1/x", "--from", "-1", "--to", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_input_exits_1() {
    assert_eq!(econkit(&["calc", "diff", "ln(x"]).status.code(), Some(1));
    assert_eq!(econkit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(econkit(&["lp", "solve", "/nonexistent/prob.json"]).status.code(), Some(1));
    assert_eq!(econkit(&["finance", "effective", "--p-nom", "12", "--m", "12", "--format", "csv"]).status.code(), Some(1));
}

#[test]
fn solve_json_document() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "A.txt", "# coefficients\n1,1\n\n2,2\n");
    let b = write(dir.path(), "b.txt", "1\n3\n");
    let o = econkit(&["solve", &a, &b, "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["kind"], "None");
    assert_eq!(v["rank_A"], 1);
    assert_eq!(v["rank_Ab"], 2);

    let b = write(dir.path(), "b2.txt", "1,2\n");
    let v = json(&econkit(&["solve", &a, &b, "--format", "json"]));
    assert_eq!(v["kind"], "Multiple");
    assert_eq!(v["free_directions"], serde_json::json!([[-1.0, 1.0]]));
}

#[test]
fn linalg_matrix_output_is_matrix_text() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "A.txt", "1,2\n3,4\n");
    let o = econkit(&["linalg", "inverse", &a, "--format", "csv"]);
    let inv = econkit::text::parse_matrix(&stdout(&o)).unwrap();
    let want = econkit::Matrix::from_rows(&[vec![-2.0, 1.0], vec![1.5, -0.5]]).unwrap();
    assert!(inv.approx_eq(&want, 1e-12), "{inv:?}");
    let o = econkit(&["linalg", "det", &a, "--format", "json"]);
    assert_eq!(json(&o)["det"], -2.0);
    let o = econkit(&["linalg", "scale", &a, "--by", "-2", "--format", "csv"]);
    assert_eq!(stdout(&o), "-2,-4\n-6,-8\n");
}

#[test]
fn leontief_report_and_files() {
    let dir = TempDir::new().unwrap();
    let n = write(dir.path(), "n.txt", "0,2\n1,0\n");
    let y = write(dir.path(), "y.txt", "2,1\n");
    let r = write(dir.path(), "r.txt", "2,0\n0,3\n");
    let next = write(dir.path(), "next.txt", "4\n2\n");
    let out = dir.path().join("out");
    let o = econkit(&[
        "leontief", &n, &y, "--resources", &r, "--forecast", &next,
        "--emit-dir", out.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["q"], serde_json::json!([4.0, 2.0]));
    assert_eq!(v["P"], serde_json::json!([[0.0, 1.0], [0.25, 0.0]]));
    assert_eq!(v["v"], serde_json::json!([8.0, 6.0]));
    assert_eq!(v["forecast"]["output"]["values"], serde_json::json!([8.0, 4.0]));
    assert_eq!(std::fs::read_to_string(out.join("P.txt")).unwrap(), "0,1\n0.25,0\n");
    assert_eq!(std::fs::read_to_string(out.join("q.txt")).unwrap(), "4,2\n");
}

#[test]
fn redemption_schedule_csv() {
    let o = econkit(&["finance", "redemption", "--r0", "100000", "--p", "5", "--t", "5", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("year,interest,payment,balance"));
    assert_eq!(lines.next(), Some("1,5000.00,5000.00,95000.00"));
    assert_eq!(text.lines().count(), 16);
    assert!(text.trim_end().ends_with(",0.00"));
}

#[test]
fn json_round_trips_at_full_precision() {
    let o = econkit(&["finance", "pension", "--k0", "100000", "--p", "5", "--m", "12", "--a", "500", "--format", "json"]);
    let v = json(&o);
    let plan: econkit::finmath::PensionPlan = serde_json::from_value(v).unwrap();
    let direct = econkit::finmath::pension_plan(100_000.0, 5.0, 12, 500.0, None).unwrap();
    assert_eq!(plan, direct);
    assert_eq!(format!("{:.2}", plan.first_year_interest), "4837.50");

    let v = json(&econkit(&["finance", "redemption", "--r0", "80000", "--p", "4.5", "--annuity", "7000", "--format", "json"]));
    let plan: econkit::finmath::RedemptionPlan = serde_json::from_value(v).unwrap();
    let direct = econkit::finmath::redemption_plan(80_000.0, 4.5, econkit::finmath::Repayment::Annuity(7000.0), None).unwrap();
    assert_eq!(plan, direct);
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("k.json");
    let o = econkit(&["finance", "compound", "--k0", "100", "--p", "5", "--n", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!((v["kn"].as_f64().unwrap() - 110.25).abs() < 1e-9);
}

#[test]
fn deterministic_output() {
    let args = ["calc", "report", "x^3 - 3*x", "--window", "-3:3"];
    let (a, b) = (econkit(&args), econkit(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    for k in 1..=9 {
        assert!(text.contains(&format!("\n{k} ")), "section {k} missing:\n{text}");
    }
    assert!(text.contains("odd"));
}

#[test]
fn calc_commands() {
    let v = json(&econkit(&["calc", "diff", "x^2", "--format", "json"]));
    assert_eq!(v["derivative"], "2*x");
    let v = json(&econkit(&["calc", "elasticity", "x^2", "--at", "3", "--format", "json"]));
    assert_eq!(v["elasticity"], 2.0);
    assert_eq!(v["class"], "elastic");
    let v = json(&econkit(&["calc", "roots", "x^2 - 1", "--window", "-2:2", "--format", "json"]));
    assert_eq!(v["roots"], serde_json::json!([-1.0, 1.0]));
    let v = json(&econkit(&["calc", "integrate", "x", "--from", "0", "--to", "2", "--format", "json"]));
    assert_eq!(v["value"], 2.0);
    assert_eq!(v["primitive"], "0.5*x^2");
}

#[test]
fn econ_commands() {
    let v = json(&econkit(&["econ", "cost", "--a3", "1", "--a2", "-6", "--a1", "15", "--a0", "40", "--format", "json"]));
    assert_eq!(v["x_w"], 2.0);
    assert_eq!(v["x_g1"], 3.0);
    let v = json(&econkit(&["econ", "profit", "--price", "20 - x", "--cost", "1,-6,15,4", "--window", "0:20", "--format", "json"]));
    assert!((v["profit"]["x_m"].as_f64().unwrap() - 3.775).abs() < 1e-3);
    assert!(v["cournot"]["price"].is_f64());
    let v = json(&econkit(&["econ", "surplus", "--demand", "10 - x", "--supply", "x", "--pu", "0", "--po", "10", "--format", "json"]));
    assert_eq!(v["u2"], 37.5);
    let v = json(&econkit(&["econ", "value", "--a", "1", "--x", "-9", "--format", "json"]));
    assert_eq!(v["value"], -2.0);
}
