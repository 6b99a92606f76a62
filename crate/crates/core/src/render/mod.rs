//! Output formats: SVG figures, Wavefront OBJ and JSON reports.

mod obj;
mod report;
mod svg;

pub use obj::{export_obj, parse_obj, ObjError, ObjMesh};
pub use report::{
    report_json, ClassReport, CurvatureReport, MatrixCellReport, SolveReport, SweepReport,
    ValidateReport, VerifyReport,
};
pub use svg::{
    figure_panels, render_overhead_svg, render_unfolding_svg, FigureStyle, Panel, PANEL_LAYOUT,
};

/// Formats `v` with 9 significant digits, shortest form, no negative zero.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let rounded: f64 = format!("{v:.8e}").parse().unwrap_or(v);
    format!("{rounded}")
}
