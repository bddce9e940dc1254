use std::path::PathBuf;
use std::process::{Command, Output};

use ladderdet_cli::format::{emit_grid, emit_json, parse_problem};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn ladderdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladderdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn fixture_parses_in_both_formats_with_d_44() {
    for name in ["ladder_8x9.json", "ladder_8x9.grid"] {
        let o = ladderdet(&["hvec", fixture(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).contains("d = 44\n"), "{name}");
    }
}

#[test]
fn emitted_forms_load_back() {
    let json = std::fs::read_to_string(fixture("ladder_8x9.json")).unwrap();
    let grid = std::fs::read_to_string(fixture("ladder_8x9.grid")).unwrap();
    let spec = parse_problem(&json, "json").unwrap();
    assert_eq!(parse_problem(&grid, "grid").unwrap(), spec);
    assert_eq!(emit_json(&spec).unwrap(), json);
    assert_eq!(emit_grid(&spec), grid);
}

#[test]
fn rectangle_hvec_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_temp(
        &dir,
        "rect.json",
        r#"{"a":2,"b":2,"lower":[0,0,0],"upper":[2,2,2],"minor":{"u":[1],"v":[1]}}"#,
    );
    let o = ladderdet(&["hvec", &f]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("h = (1, 4, 1)\n"));
    assert!(s.contains("d = 5\n"));
    assert!(s.contains("series: (1 + 4z + z^2)/(1 - z)^5\n"));
    assert!(s.contains("log-concave: yes\n"));
}

#[test]
fn decreasing_minor_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_temp(
        &dir,
        "bad.json",
        r#"{"a":2,"b":2,"lower":[0,0,0],"upper":[2,2,2],"minor":{"u":[2,1],"v":[1,2]}}"#,
    );
    assert_eq!(ladderdet(&["hvec", &f]).status.code(), Some(2));
}

#[test]
fn grid_errors_report_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_temp(&dir, "bad.grid", "###\n#?#\n###\nM: 1|1\n");
    let o = ladderdet(&["hvec", &f]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.grid:2:2"), "{err}");
}

#[test]
fn missing_file_and_bad_usage_exit_two() {
    assert_eq!(ladderdet(&["hvec", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(ladderdet(&["enumerate"]).status.code(), Some(2));
    assert_eq!(ladderdet(&["verify", "--suite", "3by4", "--kmax", "2"]).status.code(), Some(2));
}

#[test]
fn suite_verification_passes() {
    let o = ladderdet(&["verify", "--suite", "3x4", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("seed: 0\n"));
    assert!(s.contains("violations: 0\n"));
}

#[test]
fn oracle_refuses_the_large_fixture() {
    let o = ladderdet(&["oracle", fixture("ladder_8x9.json").to_str().unwrap(), "--max-ell", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("54 cells"), "{err}");
}

#[test]
fn oracle_agrees_on_small_rectangle() {
    let o = ladderdet(&["oracle", fixture("rect_2x2.grid").to_str().unwrap(), "--max-ell", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("H(5) = 441 faces 441\n"));
    assert!(s.contains("preimage formula: ok\n"));
}

#[test]
fn oracle_face_mode_prints_reduced_turns() {
    let o = ladderdet(&[
        "oracle",
        fixture("ladder_8x9.json").to_str().unwrap(),
        "--face",
        fixture("ladder_8x9_face.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("reduced ((2),(7))\n"));
    assert!(s.contains("reduced ((3),(6))\n"));
    assert!(s.contains("reduced ((2,4),(1,5))\n"));
}

#[test]
fn enumerate_and_hilbert() {
    let rect = fixture("rect_2x2.grid");
    let o = ladderdet(&["enumerate", rect.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("count: 4\n"));
    let o = ladderdet(&["hilbert", rect.to_str().unwrap(), "--ell", "3"]);
    assert!(stdout(&o).contains("H(3) = 100\n"));
    let o = ladderdet(&["enumerate", rect.to_str().unwrap(), "--k", "1", "--level", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inject_reports_cut_and_image() {
    let dir = tempfile::tempdir().unwrap();
    let rect = write_temp(
        &dir,
        "r.json",
        r#"{"a":4,"b":4,"lower":[0,0,0,0,0],"upper":[4,4,4,4,4],"minor":{"u":[1],"v":[1]}}"#,
    );
    let pair = write_temp(
        &dir,
        "p.json",
        r#"{"first":{"top":[1,2,3],"bottom":[1,2,3]},"second":{"top":[2],"bottom":[2]}}"#,
    );
    let o = ladderdet(&["inject", &rect, "--pair", &pair]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("k = 2\n"));
    assert!(s.contains("optimal: "));
    assert!(s.contains("image: "));
    let short = write_temp(
        &dir,
        "q.json",
        r#"{"first":{"top":[1],"bottom":[1]},"second":{"top":[2],"bottom":[2]}}"#,
    );
    assert_eq!(ladderdet(&["inject", &rect, "--pair", &short]).status.code(), Some(2));
}

#[test]
fn render_is_deterministic_and_counts_marks() {
    let dir = tempfile::tempdir().unwrap();
    let svg1 = dir.path().join("a.svg");
    let svg2 = dir.path().join("b.svg");
    let file = fixture("ladder_8x9.json");
    let paths = fixture("ladder_8x9_paths.json");
    for out in [&svg1, &svg2] {
        let o = ladderdet(&[
            "render",
            file.to_str().unwrap(),
            "--paths",
            paths.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let a = std::fs::read(&svg1).unwrap();
    assert_eq!(a, std::fs::read(&svg2).unwrap());
    let s = String::from_utf8(a).unwrap();
    assert_eq!(s.matches("<polyline").count(), 3);
    assert_eq!(s.matches(r#"r="5""#).count(), 7);
    assert_eq!(s.matches(r#"r="8""#).count(), 6);
    assert_eq!(s.matches(r#"r="2""#).count(), 54);
}

#[test]
fn render_region_only_and_bad_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.svg");
    let file = fixture("ladder_8x9.json");
    let o = ladderdet(&["render", file.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap().matches("<polyline").count(), 0);

    let crossing = write_temp(
        &dir,
        "x.json",
        r#"[{"top":[2,3],"bottom":[6,7]},{"top":[2,5],"bottom":[6,8]},{"top":[2,4,6],"bottom":[1,3,4]}]"#,
    );
    let o = ladderdet(&["render", file.to_str().unwrap(), "--paths", &crossing, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
