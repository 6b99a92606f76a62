use bandforge::render::{
    export_obj, parse_obj, render_overhead_svg, render_unfolding_svg, report_json, FigureStyle,
    SweepReport, ValidateReport, VerifyReport,
};
use bandforge::{
    build_prismatoid, develop_band, overlap, place_top, reduce_by_symmetry, sweep, validate,
    verdict_matrix, GridAxis, Preset, PrismatoidParams, SweepSpec, Tolerances,
};

fn attr<'a>(svg: &'a str, class: &str, name: &str) -> Vec<&'a str> {
    svg.lines()
        .filter(|l| l.contains(&format!("class=\"{class}\"")))
        .filter_map(|l| {
            let key = format!(" {name}=\"");
            let start = l.find(&key)? + key.len();
            Some(&l[start..start + l[start..].find('"')?])
        })
        .collect()
}

#[test]
fn rim_polyline_matches_development() {
    let p = build_prismatoid(Preset::Fig3.params().unwrap()).unwrap();
    let style = FigureStyle::default();
    for cut in 0..6 {
        let dev = develop_band(&p, cut).unwrap();
        let svg = render_unfolding_svg(&dev, None, None, &style);
        let rims = attr(&svg, "rim", "points");
        assert_eq!(rims.len(), 1);
        let pts: Vec<(f64, f64)> = rims[0]
            .split_whitespace()
            .map(|xy| {
                let (x, y) = xy.split_once(',').unwrap();
                (x.parse().unwrap(), y.parse().unwrap())
            })
            .collect();
        assert_eq!(pts.len(), 7);
        for (&(x, y), r) in pts.iter().zip(dev.rim.iter()) {
            // y axis is flipped on the canvas
            assert!((x - r.x).abs() <= 5e-9 * r.x.abs().max(1e-9));
            assert!((-y - r.y).abs() <= 5e-9 * r.y.abs().max(1e-9));
        }
        assert_eq!(attr(&svg, "quad", "d").len(), 6);
        assert!(attr(&svg, "attach", "x1").is_empty());
    }
}

#[test]
fn panel_layers_and_colors() {
    let p = build_prismatoid(Preset::Acute.params().unwrap()).unwrap();
    let style = FigureStyle::default();
    let dev = develop_band(&p, 3).unwrap();
    let placement = place_top(&dev, 1).unwrap();
    let report = overlap(&placement, &dev, &Tolerances::default());
    let svg = render_unfolding_svg(&dev, Some(&placement), Some(&report), &style);
    assert_eq!(attr(&svg, "top", "d").len(), 1);
    assert_eq!(attr(&svg, "rim", "stroke"), vec!["red"]);
    assert_eq!(attr(&svg, "attach", "stroke"), vec!["blue"]);
    assert_eq!(attr(&svg, "overlap-marker", "r").len(), report.faces.len());
    assert!(!report.faces.is_empty());
    let again = render_unfolding_svg(&dev, Some(&placement), Some(&report), &style);
    assert_eq!(svg, again);
}

#[test]
fn overhead_view_labels_and_coincidence() {
    let style = FigureStyle::default();
    let p = build_prismatoid(Preset::Fig3.params().unwrap()).unwrap();
    let svg = render_overhead_svg(&p, &style);
    assert_eq!(svg.matches("class=\"vertex-label\"").count(), 12);
    for name in ["a0", "a5", "b0", "b5"] {
        assert!(svg.contains(&format!(">{name}<")), "{name}");
    }
    assert_eq!(svg, render_overhead_svg(&p, &style));

    let prism = build_prismatoid(PrismatoidParams::new(1.0, 0.1, 0.0, 0.3)).unwrap();
    let svg = render_overhead_svg(&prism, &style);
    let top = attr(&svg, "top-outline", "points");
    let bottom = attr(&svg, "bottom-outline", "points");
    assert_eq!(top, bottom);
}

#[test]
fn obj_round_trip() {
    for preset in Preset::ALL {
        let p = build_prismatoid(preset.params().unwrap()).unwrap();
        let text = export_obj(&p);
        assert_eq!(text, export_obj(&p));
        let mesh = parse_obj(&text).unwrap();
        assert_eq!(mesh.vertices.len(), 12);
        assert_eq!(mesh.faces.len(), 8);
        assert_eq!(mesh.euler_characteristic(), 2);
        for (id, v) in mesh.vertices.iter().enumerate() {
            assert!(v.distance(p.vertex(id)) <= 1e-8);
        }
    }
}

#[test]
fn json_reports_round_trip_byte_for_byte() {
    let tol = Tolerances::default();
    let p = build_prismatoid(Preset::Fig3.params().unwrap()).unwrap();
    let m = verdict_matrix(&p, &tol).unwrap();
    let report = VerifyReport::new(&m, &reduce_by_symmetry(&m).unwrap());
    let text = report_json(&report);
    let back: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report_json(&back), text);

    let spec = SweepSpec {
        s: 1.0,
        y: 0.5,
        h: GridAxis::new(0.05, 0.15, 3),
        z: GridAxis::new(0.0, 0.2, 3),
    };
    let sw = SweepReport::from(&sweep(&spec, &tol));
    let text = report_json(&sw);
    let back: SweepReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report_json(&back), text);

    let shape = bandforge::Prismatoid::construct(PrismatoidParams::new(1.0, 0.05, 0.5, 0.0));
    let report = validate(&shape);
    let v = ValidateReport {
        params: shape.params,
        valid: report.valid(),
        report,
    };
    let text = report_json(&v);
    let back: ValidateReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report_json(&back), text);
}

#[test]
fn report_schema_fields() {
    let tol = Tolerances::default();
    let control = build_prismatoid(Preset::Control.params().unwrap()).unwrap();
    let m = verdict_matrix(&control, &tol).unwrap();
    let value: serde_json::Value =
        serde_json::to_value(VerifyReport::new(&m, &reduce_by_symmetry(&m).unwrap())).unwrap();
    assert_eq!(value["counterexample"], false);
    assert_eq!(value["matrix"].as_array().unwrap().len(), 36);
    assert_eq!(value["classes"].as_array().unwrap().len(), 6);
    for key in ["delta_rad", "epsilon_rad"] {
        assert!(value["curvatures"][key].is_f64());
    }
    for key in ["cut", "attach", "verdict", "area"] {
        assert!(!value["matrix"][0][key].is_null(), "{key}");
    }
}
