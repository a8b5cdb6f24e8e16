use std::process::{Command, Output};

use wmfposet::gradings::GradingReport;
use wmfposet::report::VerificationReport;
use wmfposet::WeightPoset;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wmfposet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn e8_alpha4_grading_json() {
    let o = run(&["grading", "E8", "--color", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""degree":1,"dim":40,"edges":78"#), "{text}");
    assert_eq!(stdout(&run(&["grading", "E8", "--color", "4", "--format", "json"])), text);
    let r: GradingReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap() + "\n", text);
}

#[test]
fn inadmissible_rank_is_a_usage_error() {
    let o = run(&["poset", "A0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("A0") && err.contains("rank"), "{err}");
}

#[test]
fn domain_errors_name_the_token() {
    for (args, token) in [
        (vec!["roots", "H3"], "H3"),
        (vec!["poset", "C3", "0,x,1"], "0,x,1"),
        (vec!["poset", "C3", "0,1"], "0,1"),
        (vec!["grading", "E8", "--color", "9"], "9"),
        (vec!["verify", "--suite", "nope"], "nope"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8(o.stderr).unwrap().contains(token), "{args:?}");
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn defect_table_via_verify() {
    let o = run(&["verify", "--suite", "z-defect-bounds", "--max-rank", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("E8: defects by vertex: expected [28, 9, 4, 2, 1, 3, 16, 7]"));

    let o = run(&["verify", "--suite", "cartan-determinant", "--max-rank", "5", "--format", "json"]);
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.pass);
}

#[test]
fn poset_round_trips() {
    let o = run(&["poset", "C3:0,0,1xA2:1,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 42);
    assert_eq!(v["ratio"], "79/42");
    let p: WeightPoset = serde_json::from_value(v["poset"].clone()).unwrap();
    assert_eq!(p.edge_count(), 14 * 2 + 3 * 17);

    let o = run(&["poset", "C3", "0,0,1"]);
    assert!(stdout(&o).contains("edges: 17"));
}

#[test]
fn periodic_and_iso() {
    let o = run(&["periodic", "E8", "--color", "4", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("1,50,100,0,1 + 10t + 27t^2 + 12t^3"));

    let o = run(&["iso", "A7:0,0,0,1,0,0,0", "extended:E7:7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isomorphic"], true);
    let o = run(&["iso", "A3:0,1,0", "usual:D4:2"]);
    assert!(stdout(&o).contains("≇"));
}

#[test]
fn table_written_to_file() {
    let dir = std::env::temp_dir().join(format!("wmfposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let p = path.to_str().unwrap();
    let o = run(&["table1", "--max-rank", "4", "--format", "csv", "--output", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("C_3 ϖ_3,\"C3:0,0,1\",14,17,")));
    assert!(text.lines().any(|l| l.starts_with("G_2 ϖ_1,\"G2:1,0\",7,6,7/6,7,6,6/7")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn roots_summary() {
    let o = run(&["roots", "F4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coxeter_number"], 12);
    assert_eq!(v["dual_coxeter_number"], 9);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 24);
}
