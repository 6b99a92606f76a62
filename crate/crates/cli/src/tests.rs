use std::fs;

use bandforge::Tolerances;

use super::execute_with;

struct Run {
    code: u8,
    out: String,
    err: String,
}

fn run_with(args: &[&str], tol: Tolerances) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bandforge").chain(args.iter().copied());
    let code = execute_with(argv, tol, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, Tolerances::default())
}

fn json(r: &Run) -> serde_json::Value {
    serde_json::from_str(&r.out).expect("valid JSON on stdout")
}

#[test]
fn acute_preset_certifies() {
    let r = run(&["verify", "--preset", "acute"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert_eq!(v["counterexample"], true);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 36);
    assert_eq!(v["classes"].as_array().unwrap().len(), 6);
}

#[test]
fn control_prism_exits_one() {
    let r = run(&[
        "verify",
        "--params",
        "s=1,y=0,z=0.3",
        "--hexagon",
        "regular",
    ]);
    assert_eq!(r.code, 1);
    let v = json(&r);
    assert_eq!(v["counterexample"], false);
    assert!(v["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == "CLEAR"));
}

#[test]
fn flat_shape_is_a_geometry_error() {
    let r = run(&["verify", "--params", "z=0"]);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("flat"), "{}", r.err);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--preset", "fig3", "--params", "z=1"][..],
        &["verify", "--preset", "acute", "--target-epsilon", "1"],
        &["verify", "--params", "q=1"],
        &["verify", "--params", "z"],
        &["verify", "--preset", "nope"],
        &["sweep", "--grid", "0:1"],
        &["unfold", "--cut", "6"],
        &["bogus"],
        &[],
    ] {
        assert_eq!(run(args).code, 2, "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("verify"));
}

#[test]
fn default_source_is_fig3() {
    let a = run(&["curvature"]);
    let b = run(&["curvature", "--preset", "fig3"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
}

#[test]
fn solve_reports_targets() {
    let r = run(&["solve", "--target-epsilon", "1", "--ratio", "0.5"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    let eps = v["curvatures"]["epsilon_deg"].as_f64().unwrap();
    let delta = v["curvatures"]["delta_deg"].as_f64().unwrap();
    assert!((eps - 1.0).abs() < 1e-7 && (delta - 0.5).abs() < 1e-7);
    assert!(v["z_over_y"].as_f64().unwrap() > 0.0);
}

#[test]
fn infeasible_target_is_a_geometry_error() {
    assert_eq!(
        run(&["solve", "--target-epsilon", "1", "--ratio", "2"]).code,
        3
    );
}

#[test]
fn render_writes_panels_deterministically() {
    let first = tempfile::tempdir().unwrap();
    let second = tempfile::tempdir().unwrap();
    for dir in [&first, &second] {
        let r = run(&[
            "render",
            "--preset",
            "fig3",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(r.code, 0, "{}", r.err);
    }
    let names = [
        "cut3_attach0",
        "cut3_attach1",
        "cut3_attach2",
        "cut0_attach3",
        "cut0_attach4",
        "cut0_attach5",
        "overhead",
    ];
    for name in names {
        let a = fs::read(first.path().join(format!("{name}.svg"))).unwrap();
        let b = fs::read(second.path().join(format!("{name}.svg"))).unwrap();
        assert_eq!(a, b, "{name}");
        assert!(a.starts_with(b"<?xml"));
    }
}

#[test]
fn export_obj_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shape.obj");
    let r = run(&[
        "export",
        "--preset",
        "fig1a",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.out.is_empty());
    let text = fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 12);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 8);
}

#[test]
fn unwritable_output_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("shape.obj");
    assert_eq!(run(&["export", "--out", path.to_str().unwrap()]).code, 2);
}

#[test]
fn validate_flags_flat_shape() {
    let r = run(&["validate", "--params", "z=0"]);
    assert_eq!(r.code, 3);
    assert_eq!(json(&r)["report"]["degenerate"], true);
}

#[test]
fn build_lists_twelve_vertices() {
    let v = json(&run(&["build", "--preset", "acute"]));
    assert_eq!(v["a"].as_array().unwrap().len(), 6);
    assert_eq!(v["b"].as_array().unwrap().len(), 6);
}

#[test]
fn sweep_grid_dimensions() {
    let r = run(&[
        "sweep",
        "--preset",
        "acute",
        "--grid",
        "0.03:0.07:3,0:0.2:4",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert_eq!(v["cells"].as_array().unwrap().len(), 12);
    assert_eq!(v["grid"]["h"]["steps"], 3);
    // z = 0 row
    assert_eq!(v["skipped"], 3);
}

#[test]
fn tolerances_reach_threshold() {
    let threshold = |tol| {
        json(&run_with(&["verify", "--preset", "control"], tol))["threshold"]
            .as_f64()
            .unwrap()
    };
    let ratio = threshold(Tolerances::scaled(10.0)) / threshold(Tolerances::default());
    assert!((ratio - 10.0).abs() < 1e-9);
}

#[test]
fn unfold_without_attachment_has_no_edge() {
    let r = run(&["unfold", "--preset", "fig3", "--cut", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("class=\"rim\""));
    assert!(!r.out.contains("class=\"attach\""));
    assert!(!r.out.contains("overlap-marker"));
}

#[test]
fn unfold_with_attachment_reports_verdict() {
    let r = run(&["unfold", "--preset", "acute", "--cut", "0", "--attach", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("class=\"attach\""));
    assert!(r.err.contains("OVERLAP"));
}

#[test]
fn verify_with_oracle_seed() {
    let r = run(&["verify", "--preset", "acute", "--seed", "11"]);
    assert_eq!(r.code, 0);
    assert!(r.err.contains("oracle: worst deviation"));
    assert!(!r.err.contains("disagreement"), "{}", r.err);
}
