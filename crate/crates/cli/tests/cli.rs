use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const RUNNING_EXAMPLE: &str = r#"{"l":4,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1],[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0],[0,0,0,0,0,0,0,0,0,0,0,1,-1,1],[0,0,0,0,0,0,0,0,0,0,0,1],[0,0,0,0,0,1,0,0,0,0],[0,1,0,0,-1,0,0,1],[0,0,0,0,0,1],[0,0,0,1]]}"#;

fn astz(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_astz"))
        .args(args)
        .env_remove("ASTZ_SCALE_OVERRIDE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn verify_roundtrip_passes() {
    let o = astz(&["verify", "roundtrip", "--n-max", "5", "--l-max", "4"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "roundtrip");
    assert_eq!(report["status"], "pass");
    assert_eq!(
        report["bounds"],
        serde_json::json!({"n_max": 5, "l_max": 4})
    );
    assert!(report["counterexample"].is_null());
}

#[test]
fn verify_qast_warns_but_succeeds() {
    let o = astz(&["verify", "qast"], "");
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "warn");
    assert_eq!(
        report["counts"]["multisets_differ_at_n"],
        serde_json::json!([3, 4])
    );
}

#[test]
fn map_reproduces_the_running_example() {
    let o = astz(
        &["map", "--d", "1", "--rotation", "cw", "--reflection", "v"],
        RUNNING_EXAMPLE,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rec = &json_lines(&o)[0];
    assert_eq!(
        rec["output"]["rows"],
        serde_json::json!([[11, 9, 7, 6, 5, 4, 1, 1]])
    );
    assert_eq!(
        rec["config"],
        serde_json::json!({"d": 1, "rotation": "cw", "reflection": "v"})
    );
    assert_eq!(rec["stats"]["mu"], 2);
    assert_eq!(
        rec["input"],
        serde_json::from_str::<Value>(RUNNING_EXAMPLE).unwrap()
    );
}

#[test]
fn unmap_inverts_map_for_every_variant() {
    for d in ["1", "2", "3"] {
        for rot in ["cw", "ccw"] {
            for refl in ["h", "v"] {
                let flags = ["--d", d, "--rotation", rot, "--reflection", refl];
                let fwd = astz(&[&["map"][..], &flags].concat(), RUNNING_EXAMPLE);
                assert_eq!(fwd.status.code(), Some(0));
                let partition = json_lines(&fwd)[0]["output"].to_string();
                let back = astz(&[&["unmap", "--n", "9"][..], &flags].concat(), &partition);
                assert_eq!(back.status.code(), Some(0), "{}", stderr(&back));
                assert_eq!(
                    json_lines(&back)[0]["output"],
                    serde_json::from_str::<Value>(RUNNING_EXAMPLE).unwrap()
                );
            }
        }
    }
}

#[test]
fn repro_outputs() {
    let t = astz(&["repro", "table1"], "");
    assert_eq!(t.status.code(), Some(0));
    let pairs = json_lines(&t);
    assert_eq!(pairs.len(), 12);
    assert!(pairs.iter().all(|p| p["matches"] == true));

    let f = astz(&["repro", "figure8"], "");
    assert_eq!(f.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&f)).unwrap();
    assert_eq!(doc["counts"], serde_json::json!({"astz": 5, "csspp": 7}));
    assert_eq!(doc["astz"].as_array().unwrap().len(), 5);

    let r = astz(&["repro", "running-example"], "");
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(
        json_lines(&r)[0]["forward"]["rows"],
        serde_json::json!([[11, 9, 7, 6, 5, 4, 1, 1]])
    );
}

#[test]
fn enumeration_is_sorted_and_deterministic() {
    let a = astz(&["enumerate", "astz", "--n", "3", "--l", "2"], "");
    let b = astz(&["enumerate", "astz", "--n", "3", "--l", "2"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 30);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));

    let p = astz(
        &[
            "enumerate",
            "partitions",
            "--n",
            "5",
            "--k",
            "1",
            "--j",
            "5",
        ],
        "",
    );
    assert_eq!(json_lines(&p).len(), 126);
    let c = astz(&["enumerate", "csspp", "--n", "2", "--k", "1"], "");
    assert_eq!(json_lines(&c).len(), 6);
    let s = astz(
        &[
            "enumerate",
            "astz",
            "--n",
            "4",
            "--l",
            "3",
            "--i",
            "2",
            "--j",
            "3",
        ],
        "",
    );
    assert!(json_lines(&s).iter().all(|v| v["l"] == 3));
}

#[test]
fn usage_errors_exit_with_two() {
    let o = astz(&["verify", "everything"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("<SUITE>"));

    let o = astz(&["map", "--rotation", "sideways"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--rotation"));

    let o = astz(&["map", "--d", "4"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--d"));

    let o = astz(&["enumerate", "astz", "--n", "7", "--l", "2"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ASTZ_SCALE_OVERRIDE"));

    let o = astz(&["verify", "single-counts", "--n-max", "9"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_input_names_line_and_field() {
    let input = format!("{RUNNING_EXAMPLE}\n{{\"l\": 4, \"rows\": [[0, 1]\n");
    let o = astz(&["map"], &input);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = astz(&["map"], "{\"rows\": [[1, 0]]}\n");
    assert!(
        stderr(&o).contains("line 1") && stderr(&o).contains("`l`"),
        "{}",
        stderr(&o)
    );

    let o = astz(&["map"], "\n{\"l\": 2, \"rows\": [[1, -1]]}\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("line 2") && stderr(&o).contains("`rows`"),
        "{}",
        stderr(&o)
    );

    let o = astz(
        &["unmap", "--n", "3"],
        "{\"class\": 1, \"rows\": \"6 5\"}\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`rows`"), "{}", stderr(&o));
}

#[test]
fn render_prints_both_kinds() {
    let input =
        format!("{RUNNING_EXAMPLE}\n{{\"class\": 3, \"rows\": [[11, 9, 7, 6, 5, 4, 1, 1]]}}\n");
    let o = astz(&["render"], &input);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("-1"));
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["0", "0", "0", "1"]));
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()
            == ["11", "9", "7", "6", "5", "4", "1", "1"]));
}
