use std::io::Write;
use std::process::{Command, Output, Stdio};

use alhazen_core::disk::{pa_points_disk, PointPair};
use alhazen_core::C64;
use serde_json::Value;

fn alhazen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alhazen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = alhazen(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn complex(v: &Value) -> C64 {
    C64::new(v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

/// Structural equality with numbers compared to a relative `1e-13`. The binary
/// and this test may be compiled at different optimization levels.
fn assert_close(a: &Value, b: &Value) {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            assert!(
                (x - y).abs() <= 1e-13 * x.abs().max(y.abs()).max(1.0),
                "{x} vs {y}"
            );
        }
        (Value::Array(x), Value::Array(y)) => {
            assert_eq!(x.len(), y.len());
            x.iter().zip(y).for_each(|(x, y)| assert_close(x, y));
        }
        (Value::Object(x), Value::Object(y)) => {
            assert_eq!(x.keys().collect::<Vec<_>>(), y.keys().collect::<Vec<_>>());
            x.iter().for_each(|(k, v)| assert_close(v, &y[k]));
        }
        _ => assert_eq!(a, b),
    }
}

#[test]
fn disk_document_matches_library() {
    let doc = json(&["disk", "--z1", "0.5+0i", "--z2", "0+0.5i"]);
    assert_eq!(doc["request"]["command"], "disk");
    assert_eq!(doc["versions"]["alhazen-core"], alhazen_core::VERSION);
    assert!(doc["tolerances"]["unimodular"].is_f64());
    let result = &doc["result"];
    let roots = result["solution"]["all_roots"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 4);
    let pair = PointPair::new(C64::new(0.5, 0.0), C64::new(0.0, 0.5)).unwrap();
    let lib = serde_json::to_value(pa_points_disk(&pair).unwrap()).unwrap();
    assert_close(&result["solution"], &lib);
    let s = result["smetric"].as_f64().unwrap();
    assert!(s > 0.0 && s < 1.0);
}

#[test]
fn conic_document_reproduces_printed_roots() {
    let doc = json(&[
        "conic",
        "--foci",
        "2+0i,1+2i",
        "--r",
        "2.449489742783178",
        "--kind",
        "sum-greater",
    ]);
    let result = &doc["result"];
    let printed = [
        C64::new(1.923740, -0.117041),
        C64::new(1.772166, 0.309916),
        C64::new(1.259144, 0.426617),
        C64::new(2.808489, 0.435057),
        C64::new(0.825548, 1.934592),
        C64::new(1.235845, 2.067480),
    ];
    let found: Vec<C64> = result["f4_roots"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(complex)
        .collect();
    assert_eq!(found.len(), 6);
    for u in printed {
        assert!(found.iter().any(|z| (z - u).norm() < 1e-5), "{u}");
    }
    // the reported minimizer has the smallest focal sum among ellipse tangencies
    let best = result["tangency"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["tangency_kind"] == "Ellipse")
        .map(|p| p["sum"].as_f64().unwrap())
        .fold(f64::INFINITY, f64::min);
    assert_eq!(result["minimizer"]["sum"].as_f64().unwrap(), best);
    let s = result["smetric"]["value"].as_f64().unwrap();
    assert!((s - 2.0 / best).abs() < 1e-12);
}

#[test]
fn levelset_csv_has_one_block_per_level() {
    let csv = stdout(&[
        "levelset",
        "--domain",
        "ellipse:1.5+0i,-0.333333-0.5i,2.2",
        "--center",
        "0",
        "--levels",
        "0.05:1.0:0.05",
        "--format",
        "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("level,re,im"));
    let mut blocks: Vec<(String, usize)> = Vec::new();
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 3);
        for c in &cols {
            assert!(c.parse::<f64>().unwrap().is_finite());
        }
        match blocks.last_mut() {
            Some((level, n)) if level == cols[0] => *n += 1,
            _ => blocks.push((cols[0].to_string(), 1)),
        }
    }
    assert_eq!(blocks.len(), 20);
    assert_eq!(blocks[0].0, "0.05");
    assert_eq!(blocks[2].0, "0.15");
    assert_eq!(blocks[19].0, "1");
    assert!(blocks.iter().all(|(_, n)| *n == 720));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| alhazen(args).status.code();
    assert_eq!(code(&["classify", "--z1", "2", "--z2", "0.3i"]), Some(0));
    // parse failures
    assert_eq!(code(&["disk", "--z1", "nan", "--z2", "1"]), Some(2));
    assert_eq!(code(&["disk", "--z1", "1+2j", "--z2", "1"]), Some(2));
    assert_eq!(
        code(&["smetric", "--z1", "0", "--z2", "0.1", "--domain", "blob:1"]),
        Some(2)
    );
    assert_eq!(
        code(&["disk", "--z1", "0.5", "--z2", "0.1", "--format", "csv"]),
        Some(2)
    );
    assert_eq!(code(&[]), Some(2));
    // solver failures carry the library's message
    let out = alhazen(&["disk", "--z1", "0.5", "--z2", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("coincident points"));
    let out = alhazen(&["smetric", "--z1", "5", "--z2", "0", "--domain", "disk:0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

fn assert_round_trip(args: &[&str]) {
    let first = stdout(args);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    std::fs::write(&path, &first).unwrap();
    let second = stdout(&["--from-json", path.to_str().unwrap()]);
    assert_eq!(first, second);
}

#[test]
fn json_round_trips_bit_for_bit() {
    assert_round_trip(&["disk", "--z1", "0.3-0.1i", "--z2", "-0.2+0.45i"]);
    assert_round_trip(&["apollonius", "--z1", "0.3-0.1i", "--z2", "-0.2+0.45i"]);
    assert_round_trip(&[
        "conic",
        "--foci",
        "3,1+2i",
        "--r",
        "2.23606797749979",
        "--kind",
        "diff-less",
    ]);
    assert_round_trip(&[
        "conic",
        "--coeffs",
        "-3-4i,38+20i,-14,-71",
        "--z1",
        "0.1+0.2i",
        "--z2",
        "1.7",
    ]);
    assert_round_trip(&[
        "smetric",
        "--z1",
        "0.2",
        "--z2",
        "0.6-0.3i",
        "--domain",
        "ellipse:1.5,-0.3333333333333333-0.5i,2.2",
        "--bruteforce",
        "1000",
    ]);
    assert_round_trip(&["caustic", "--z1", "0.8", "--samples", "90"]);
    assert_round_trip(&[
        "levelset",
        "--domain",
        "hyperbola:-0.5-0.5i,1-i,0.8",
        "--center",
        "0",
        "--levels",
        "0.3,0.7",
        "--rays",
        "36",
    ]);
}

#[test]
fn bare_request_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alhazen"))
        .args(["--from-json", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"command":"classify","z1":[2.0,0.0],"z2":[0.0,0.3]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let direct = stdout(&["classify", "--z1", "2", "--z2", "0.3i"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), direct);
}

#[test]
fn format_flag_overrides_the_stored_request() {
    let doc = stdout(&["caustic", "--z1", "0.8", "--samples", "60"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    std::fs::write(&path, &doc).unwrap();
    let csv = stdout(&["--from-json", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(
        csv,
        stdout(&[
            "caustic",
            "--z1",
            "0.8",
            "--samples",
            "60",
            "--format",
            "csv"
        ])
    );
}

#[test]
fn caustic_exports() {
    let csv = stdout(&[
        "caustic",
        "--z1",
        "0.8",
        "--samples",
        "120",
        "--format",
        "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("phi,re,im"));
    assert_eq!(lines.count(), 120);

    let svg = stdout(&["caustic", "--z1", "0.5", "--clip", "3", "--format", "svg"]);
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("viewBox="));
    assert!(svg.contains("<polyline"));
    let coords = svg
        .split("points=\"")
        .skip(1)
        .flat_map(|s| s.split('"').next().unwrap().split(' '))
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse::<f64>().unwrap(), y.parse::<f64>().unwrap())
        });
    for (x, y) in coords {
        assert!(x.hypot(y) <= 3.0 + 1e-12);
    }
}

#[test]
fn levelset_svg_draws_closed_contours() {
    let svg = stdout(&[
        "levelset", "--domain", "disk:0,1", "--center", "0", "--levels", "0.2,0.5", "--rays", "24",
        "--format", "svg",
    ]);
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert!(svg.contains(r#"data-label="t=0.5""#));
}
