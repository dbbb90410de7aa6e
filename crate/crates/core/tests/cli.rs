// Copyright 2026 The Potentia Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! End-to-end runs of the `potentia` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_potentia"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn derive_reports_both_branches() {
    let out = run(&["derive", "--k", "1,1,-1", "--branch", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["determinant"], 0.0);
    assert_eq!(v["solutions"][0]["omega3"]["re"], 1.0);
    assert_eq!(v["solutions"][1]["omega3"]["re"], -1.0);
    assert_eq!(v["branch"], 1);
    assert_eq!(v["table"]["entries"][1][2], "-e3");
    assert_eq!(v["verified"], true);
}

#[test]
fn derive_rejects_zero_square() {
    let out = run(&["derive", "--k", "1,0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_text_and_json() {
    let out = run(&["table", "--signature", "1,1,1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);
    let out = run(&["table", "--signature", "1,1,1", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["basis"].as_array().unwrap().len(), 8);
    assert_eq!(v["entries"][4][4], "-1");
    assert_eq!(v["entries"][3][1], "e31");
}

#[test]
fn eval_prints_canonical_form() {
    let out = run(&["eval", "(1+e3)/2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["canonical"], "0.5 + 0.5*e3");
    assert_eq!(v["coefficients"][3], 0.5);

    let out = run(&["eval", "e1*(e2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 6"));

    let out = run(&["eval", "-e1*e1"]);
    assert_eq!(json(&out)["canonical"], "-1");
}

#[test]
fn collapse_outputs_probability_scalar() {
    let out = run(&[
        "collapse",
        "--c1",
        "0.6,0",
        "--c2",
        "0,0.8",
        "--outcome",
        "-1",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["outcome"], -1);
    assert!((v["scalar"].as_f64().unwrap() - 0.64).abs() < 1e-12);
    assert!((v["trace"].as_f64().unwrap() - 1.28).abs() < 1e-12);
    assert_eq!(v["coefficients"][1], 0.0);

    let out = run(&[
        "collapse",
        "--c1",
        "0.6,0",
        "--c2",
        "0,0.8",
        "--outcome",
        "+1",
        "--renormalize",
    ]);
    let v = json(&out);
    assert!((v["trace"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let out = run(&["collapse", "--c1", "1,0", "--c2", "1,0", "--outcome", "+1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn feasibility_exit_codes() {
    let out = run(&["feasibility", "--means", "1,1,0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["feasible"], false);
    assert_eq!(v["norm_sq"], 2.0);

    let out = run(&["feasibility", "--p1", "0.75", "--p2", "0.5", "--p3", "0.5"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["means"][0], 0.5);

    let out = run(&["feasibility", "--p1", "1.5", "--p2", "0.5", "--p3", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["feasibility"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_writes_csv_and_is_reproducible() {
    let dir = std::env::temp_dir().join(format!("potentia-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv_a = dir.join("a.csv");
    let csv_b = dir.join("b.csv");
    let args = |csv: &str| {
        vec![
            "simulate".to_string(),
            "--psi0".into(),
            "0.3".into(),
            "--phi0".into(),
            "-0.1".into(),
            "--steps".into(),
            "8".into(),
            "--trials".into(),
            "25".into(),
            "--seed".into(),
            "42".into(),
            "--csv".into(),
            csv.to_string(),
        ]
    };
    let run_owned = |a: Vec<String>| {
        Command::new(env!("CARGO_BIN_EXE_potentia"))
            .args(&a)
            .output()
            .unwrap()
    };
    let a = run_owned(args(csv_a.to_str().unwrap()));
    let b = run_owned(args(csv_b.to_str().unwrap()));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let (ca, cb) = (
        std::fs::read(&csv_a).unwrap(),
        std::fs::read(&csv_b).unwrap(),
    );
    assert_eq!(ca, cb);
    let text = String::from_utf8(ca).unwrap();
    assert!(text.starts_with("trial,step,psi_a,phi_p,actualized,value"));
    assert_eq!(text.lines().count(), 1 + 25 * 9);
    assert_eq!(json(&a)["summary"]["trials"], 25);
    std::fs::remove_dir_all(&dir).ok();

    let out = run(&[
        "simulate",
        "--psi0",
        "0.3",
        "--phi0",
        "0.1",
        "--steps",
        "1",
        "--trials",
        "3",
        "--seed",
        "1",
        "--q",
        "1",
        "--fixed-step",
        "0",
    ]);
    let v = json(&out);
    for x in v["final_values"].as_array().unwrap() {
        assert!((x.as_f64().unwrap() - 0.16).abs() < 1e-15);
    }
}

#[test]
fn repcheck_passes() {
    let out = run(&["repcheck", "--trials", "200", "--seed", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"], 0);
}
