use bandforge::{reduce_by_symmetry, validate, verdict_matrix, Preset, Prismatoid, Tolerances};

fn main() {
    for preset in Preset::ALL {
        let params = preset.params().expect("preset");
        let prism = Prismatoid::construct(params);
        let report = validate(&prism);
        println!(
            "{preset:8} {params:?} odd angle {:.4}° curvatures {:?}",
            report.interior_angles_deg[1], report.curvatures
        );
        let m = verdict_matrix(&prism, &Tolerances::default()).expect("matrix");
        for c in reduce_by_symmetry(&m).expect("classes") {
            println!(
                "    {:20} {:8} area/τ in [{:.3e}, {:.3e}]",
                c.label,
                c.verdict.to_string(),
                c.min_area / m.threshold,
                c.max_area / m.threshold
            );
        }
        println!("    counterexample: {}", m.counterexample());
    }
}
