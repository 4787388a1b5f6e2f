use std::fs;
use std::process::{Command, Output};

fn pantsdrill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pantsdrill"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn path_drill_triangulate_chain() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let c = dir.path().join("c.json");
    let t = dir.path().join("t.tri");
    let ps = p.to_str().unwrap();
    let cs = c.to_str().unwrap();

    assert!(pantsdrill(&["path", "gen", "-n", "6", "-o", ps]).status.success());
    let v = pantsdrill(&["path", "validate", ps]);
    assert!(v.status.success());
    assert!(stdout(&v).contains("\"length\": 18"));

    assert!(pantsdrill(&["drill", ps, "-o", cs]).status.success());
    let tri = pantsdrill(&["triangulate", cs, "-o", t.to_str().unwrap()]);
    assert!(tri.status.success());
    assert!(fs::read_to_string(&t).unwrap().starts_with("tets 144\n"));
    assert!(String::from_utf8_lossy(&tri.stderr).contains("\"cusps\": 24"));

    let json = pantsdrill(&["triangulate", cs, "--format", "json"]);
    assert!(stdout(&json).contains("\"tetrahedra\""));
}

#[test]
fn open_path_fails_validation_and_drilling() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let ps = p.to_str().unwrap();
    let text = r#"{"n": 5, "monodromy": 0, "start": [[1, 3], [1, 4]], "moves": [{"kind": "A", "removed": [1, 3], "inserted": [2, 4]}]}"#;
    fs::write(&p, text).unwrap();
    let v = pantsdrill(&["path", "validate", ps]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("\"closes\": false"));
    let d = pantsdrill(&["drill", ps]);
    assert_eq!(d.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&d.stderr).contains("open"));
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, "{\n  \"n\": 5,\n  \"monodromy\": \n").unwrap();
    let o = pantsdrill(&["path", "validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn surfaces_enumerate_emits_orbits_and_witness() {
    let o = pantsdrill(&["surfaces", "enumerate", "-n", "6", "--annuli-only"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\"orbit_count\": 1"));
    assert!(text.contains("\"normal_form_status\": \"reduced\""));
    assert!(text.contains("\"witness\""));
    let capped = pantsdrill(&["surfaces", "enumerate", "-n", "5", "--annuli-only", "--cap", "3"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn stats_and_pipeline() {
    let s = pantsdrill(&["stats", "-n", "5"]);
    assert!(s.status.success());
    assert!(stdout(&s).contains("73.2772475342"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let o = pantsdrill(&["pipeline", "-n", "5", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    for name in [
        "path.json",
        "complex.json",
        "triangulation.tri",
        "surfaces.json",
        "report.json",
    ] {
        assert!(out.join(name).exists(), "{name}");
    }
    assert_eq!(fs::read_to_string(out.join("report.json")).unwrap(), stdout(&o));

    let bad = pantsdrill(&["pipeline", "-n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));

    let open = pantsdrill(&[
        "pipeline",
        "-n",
        "7",
        "--rounds",
        "1",
        "--out",
        dir.path().join("open").to_str().unwrap(),
    ]);
    assert!(open.status.success());
    assert!(stdout(&open).contains("\"stage\": \"path\""));
}
