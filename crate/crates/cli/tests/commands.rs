use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn sbez(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbez")).args(args).output().expect("sbez runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn basis_csv_has_one_row_per_sample_and_index() {
    let out = sbez(&["basis", "--degree", "3", "--alpha", "4", "--beta", "6", "--samples", "50"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("t,k,value"));
    assert_eq!(text.lines().count(), 50 * 4 + 1);
}

#[test]
fn basis_json_carries_the_domain() {
    let out = sbez(&["basis", "--degree", "2", "--alpha", "1", "--beta", "2", "--samples", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["domain"]["lo"].as_f64().unwrap(), 0.25);
    assert_eq!(v["domain"]["hi"].as_f64().unwrap(), 0.75);
    assert_eq!(v["samples"].as_array().unwrap().len(), 9);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&sbez(&["basis", "--degree", "3", "--alpha", "7", "--beta", "6"])), 1);
    assert_eq!(code(&sbez(&["basis", "--degree", "0"])), 1);
    assert_eq!(code(&sbez(&["basis", "--degree", "3", "--alpha", "4", "--beta", "6", "--from", "0.1"])), 1);
    assert_eq!(code(&sbez(&["basis", "--degree", "3", "--samples", "1"])), 1);
    assert_eq!(code(&sbez(&["basis", "--degree", "x"])), 2);
    assert_eq!(code(&sbez(&["frobnicate"])), 2);
    assert_eq!(code(&sbez(&["curve-eval", &data("curve_planar.json"), "--t", "0"])), 1);
    assert_eq!(code(&sbez(&["curve-eval", &data("bad_shape.json"), "--t", "0.5"])), 2);
    assert_eq!(code(&sbez(&["curve-eval", &data("bad_knots.json"), "--t", "0.5"])), 1);
    assert_eq!(code(&sbez(&["curve-eval", &data("missing.json"), "--t", "0.5"])), 2);
    let help = sbez(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(stdout(&help).contains("curve-sample"));
    assert!(help.stderr.is_empty());
}

#[test]
fn clamped_range_is_cut_to_the_domain() {
    let out = sbez(&[
        "basis", "--degree", "3", "--alpha", "4", "--beta", "6", "--from", "0", "--to", "2", "--clamp",
        "--samples", "5",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.first().unwrap()[0], 4.0 / 9.0);
    assert_eq!(rows.last().unwrap()[0], 7.0 / 9.0);
}

#[test]
fn curve_eval_hits_end_points_with_every_algorithm() {
    for algorithm in ["direct", "decasteljau", "matrix"] {
        for (t, want) in [("0.4444444444444444", [0.0, 0.0]), ("0.7777777777777778", [5.0, 0.0])] {
            let out = sbez(&["curve-eval", &data("curve_planar.json"), "--t", t, "--algorithm", algorithm]);
            assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
            let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
            assert_eq!(v["algorithm"], algorithm);
            let p: Vec<f64> = v["point"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
            assert_eq!(p, want);
        }
    }
}

#[test]
fn algorithms_agree_through_the_cli() {
    let point = |algorithm: &str| -> Vec<f64> {
        let out = sbez(&["curve-eval", &data("curve_space.json"), "--t", "0.6", "--algorithm", algorithm]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v["point"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
    };
    let a = point("direct");
    for other in [point("decasteljau"), point("matrix")] {
        for (x, y) in a.iter().zip(&other) {
            assert!((x - y).abs() <= 1e-12);
        }
    }
}

#[test]
fn elevate_writes_a_readable_curve_with_the_same_ends() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("up.json");
    let path = path.to_str().unwrap();
    let out = sbez(&["elevate", &data("curve_planar.json"), "--levels", "2", "--output", path]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["degree"], 5);
    let ctrl = v["control"].as_array().unwrap();
    assert_eq!(ctrl.len(), 6);
    assert_eq!(ctrl[0], serde_json::json!([0, 0]));
    assert_eq!(ctrl[5][0].as_f64().unwrap(), 5.0);

    let sampled = sbez(&["curve-sample", path, "--samples", "2"]);
    assert_eq!(code(&sampled), 0);
    let rows = csv_rows(&stdout(&sampled));
    assert_eq!(&rows[0][1..], &[0.0, 0.0]);
    assert_eq!(&rows[1][1..], &[5.0, 0.0]);
}

#[test]
fn curve_sample_formats() {
    let csv = sbez(&["curve-sample", &data("curve_space.json"), "--samples", "11"]);
    let text = stdout(&csv);
    assert_eq!(text.lines().next(), Some("t,x,y,z"));
    assert_eq!(text.lines().count(), 12);

    let svg = stdout(&sbez(&["curve-sample", &data("curve_planar.json"), "--format", "svg"]));
    assert!(svg.contains("id=\"control-polygon\""));
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.contains("id=\"curve\""));
}

#[test]
fn surface_sample_interpolates_corners() {
    let out = sbez(&["surface-sample", &data("patch.json"), "--samples", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("u,v,x,y,z"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 16);
    assert_eq!(&rows[0][2..], &[0.0, 0.0, 0.0]);
    assert_eq!(&rows[3][2..], &[0.0, 3.0, 0.0]);
    assert_eq!(&rows[12][2..], &[2.0, 0.0, 0.0]);
    assert_eq!(&rows[15][2..], &[2.0, 3.0, 0.0]);

    let svg = stdout(&sbez(&["surface-sample", &data("patch.json"), "--samples", "5", "--format", "svg", "--drop-axis", "x"]));
    assert_eq!(svg.matches("<polyline").count(), 10);
}

#[test]
fn output_is_deterministic() {
    let args = ["surface-sample", &data("patch.json"), "--samples", "7", "--format", "json"];
    assert_eq!(sbez(&args).stdout, sbez(&args).stdout);
}
