use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvechar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn table_formats_agree() {
    for which in ["characters", "dangling", "predictions"] {
        let doc = json(&["table", which, "--k-max", "4"]);
        assert_eq!(doc["command"], "table");
        let rows = doc["rows"].as_array().unwrap();

        let csv_text = stdout(&["table", which, "--k-max", "4", "--format", "csv"]);
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        let header = rdr.headers().unwrap().clone();
        let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
        assert_eq!(records.len(), rows.len());

        let text = stdout(&["table", which, "--k-max", "4"]);
        let text_rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(text_rows.len(), rows.len());

        for ((row, rec), words) in rows.iter().zip(&records).zip(&text_rows) {
            for name in ["lambda", "lambda2", "delta", "alpha", "slope"] {
                let Some(i) = header.iter().position(|h| h == name) else { continue };
                match &row[name] {
                    Value::String(v) => {
                        assert_eq!(&rec[i], v);
                        assert!(words.contains(&v.as_str()), "{v} missing from {words:?}");
                    }
                    Value::Null => assert_eq!(&rec[i], ""),
                    other => panic!("non-string rational {other}"),
                }
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    for fmt in ["text", "json", "csv"] {
        let args = ["table", "characters", "--k-max", "6", "--format", fmt];
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn table_examples() {
    let doc = json(&["table", "characters", "--k-max", "1"]);
    let rows = doc["rows"].as_array().unwrap();
    let e7 = rows.iter().find(|r| r["label"] == "E_7").unwrap();
    let vals: Vec<&str> = ["lambda", "lambda2", "delta", "alpha", "slope"]
        .iter()
        .map(|k| e7[*k].as_str().unwrap())
        .collect();
    assert_eq!(vals, ["7", "31", "60", "29/60", "60/7"]);

    let doc = json(&["table", "predictions"]);
    let a56 = doc["rows"].as_array().unwrap().iter().find(|r| r["label"] == "A_{5/6}").unwrap();
    assert_eq!(a56["instance"], "5/9");
    assert_eq!(a56["alpha"], "32/55");
}

#[test]
fn char_record() {
    let doc = json(&["char", "--family", "A_odd", "--k", "2", "--attach", "1"]);
    let row = &doc["rows"][0];
    assert_eq!(row["chi_lambda"], "3");
    assert_eq!(row["chi_delta"], "29");
    assert_eq!(row["chi_K"], "-19");
    assert_eq!(row["alpha"], "19/29");
    assert_eq!(doc["params"]["k"], 2);

    let doc = json(&["char", "--family", "unibranch", "--gaps", "1,2,5"]);
    assert_eq!(doc["rows"][0]["slope"], "71/8");

    let doc = json(&["char", "--family", "ribbon", "--g", "5", "--l", "2"]);
    assert_eq!(doc["rows"][0]["alpha"], Value::Null);

    let doc = json(&["char", "--family", "E6", "--attach", "{}"]);
    assert_eq!(doc["rows"][0]["chi_delta"], "72");
}

#[test]
fn semigroup_csv() {
    let out = stdout(&["semigroup", "--p", "3", "--q", "5", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("generators,gaps,frobenius,genus,gap_sum_enumerated,gap_sum_closed_form,symmetric")
    );
    assert_eq!(lines.next(), Some("\"3,5\",\"1,2,4,7\",7,4,14,14,true"));
}

#[test]
fn family_threshold_and_crosscheck() {
    let doc = json(&["family", "--name", "Hk", "--k", "2", "--threshold", "--crosscheck"]);
    let row = &doc["rows"][0];
    assert_eq!(row["threshold"], "19/29");
    assert_eq!(row["crosscheck"]["agrees"], true);
    let doc = json(&["family", "--name", "BHk", "--k", "2", "--threshold"]);
    assert_eq!(doc["rows"][0]["threshold"], "5/9");
    let doc = json(&["family", "--name", "toric", "--p", "3", "--q", "4", "--crosscheck"]);
    assert_eq!(doc["rows"][0]["crosscheck"]["agrees"], true);
}

#[test]
fn git_commands() {
    let doc = json(&["ribbon-stability", "--g", "5", "--l", "2", "--n", "1", "--m", "3"]);
    assert_eq!(doc["rows"][0]["status"], "StrictlySemistableWitness");
    let doc = json(&["ribbon-stability", "--g", "4", "--l", "1", "--n", "2", "--m", "2"]);
    assert_eq!(doc["rows"][0]["status"], "Unstable");
    let doc = json(&["git-index", "--chi-lambda", "-2", "--chi-delta", "-18", "--g", "4", "--n", "1", "--chow"]);
    assert_eq!(doc["rows"][0]["index"], "0");
    let doc = json(&["git-index", "--chi-lambda", "-2", "--chi-delta", "-18", "--g", "4", "--n", "1", "--m", "2"]);
    // g (g + m - gm) (l - (g-1)/2) = 4 * (-2) * (-1/2)
    assert_eq!(doc["rows"][0]["index"], "4");
}

#[test]
fn disc_with_oracle() {
    let doc = json(&["disc", "--n", "5", "--wx", "3", "--oracle"]);
    assert_eq!(doc["rows"][0]["closed_form"], "60");
    assert_eq!(doc["rows"][0]["oracle"], "60");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["char", "--family", "A_odd", "--k", "2", "--attach", "3"]).status.code(), Some(2));
    assert_eq!(run(&["semigroup", "--p", "4", "--q", "6"]).status.code(), Some(2));
    assert_eq!(run(&["table", "characters", "--k-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["disc", "--n", "9", "--wx", "1", "--oracle"]).status.code(), Some(2));
    let err = run(&["char", "--family", "Z_9", "--k", "1"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}

#[test]
fn check_passes_with_two_warnings() {
    let out = run(&["check", "--k-max", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &doc["report"];
    assert_eq!(report["all_pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "FAIL"));
    let warns: Vec<&Value> = checks.iter().filter(|c| c["status"] == "WARN").collect();
    assert_eq!(warns.len(), 2);
    assert!(warns.iter().all(|w| w["pass"] == true));
}
