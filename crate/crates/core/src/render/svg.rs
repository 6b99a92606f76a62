//! Deterministic SVG 1.1 output.
//!
//! Planar geometry uses y-up coordinates; the SVG is emitted with y negated
//! so figures read the usual way up. Every coordinate goes through
//! [`fmt_num`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::fmt_num;
use crate::geom::Vec2;
use crate::model::Prismatoid;
use crate::tolerance::Tolerances;
use crate::unfold::{
    develop_band, overlap, place_top, Development, OverlapReport, TopPlacement, UnfoldError,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureStyle {
    pub rim_color: String,
    pub attach_color: String,
    pub quad_fill: String,
    pub top_fill: String,
    pub overlap_fill: String,
    pub marker_color: String,
    /// Stroke width as a fraction of the drawing extent.
    pub stroke_width: f64,
    /// Overlap marker radius as a fraction of the drawing extent.
    pub marker_radius: f64,
    /// Output width in pixels.
    pub canvas_width: f64,
}

impl Default for FigureStyle {
    fn default() -> Self {
        Self {
            rim_color: "red".into(),
            attach_color: "blue".into(),
            quad_fill: "#e8e8e8".into(),
            top_fill: "#fff3c4".into(),
            overlap_fill: "#ff00ff".into(),
            marker_color: "#8000ff".into(),
            stroke_width: 0.002,
            marker_radius: 0.02,
            canvas_width: 800.0,
        }
    }
}

impl FigureStyle {
    /// Names the first field that is not a plausible CSS color
    /// (a keyword, `#rgb`, `#rrggbb`, or an `rgb(...)` / `hsl(...)` form).
    pub fn validate(&self) -> Result<(), String> {
        let colors = [
            ("rim_color", &self.rim_color),
            ("attach_color", &self.attach_color),
            ("quad_fill", &self.quad_fill),
            ("top_fill", &self.top_fill),
            ("overlap_fill", &self.overlap_fill),
            ("marker_color", &self.marker_color),
        ];
        for (name, c) in colors {
            if !is_css_color(c) {
                return Err(format!("{name}: `{c}` is not a CSS color"));
            }
        }
        if !(self.stroke_width > 0.0 && self.marker_radius > 0.0 && self.canvas_width > 0.0) {
            return Err("sizes must be positive".into());
        }
        Ok(())
    }
}

fn is_css_color(c: &str) -> bool {
    if let Some(hex) = c.strip_prefix('#') {
        return matches!(hex.len(), 3 | 6) && hex.chars().all(|ch| ch.is_ascii_hexdigit());
    }
    for func in ["rgb(", "rgba(", "hsl(", "hsla("] {
        if c.starts_with(func) && c.ends_with(')') {
            return true;
        }
    }
    !c.is_empty() && c.chars().all(|ch| ch.is_ascii_alphabetic())
}

struct Canvas {
    lo: Vec2,
    hi: Vec2,
    extent: f64,
    body: String,
}

impl Canvas {
    fn new(points: &[Vec2]) -> Self {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(-p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(-p.y);
        }
        let extent = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
        let margin = 0.05 * extent;
        lo -= Vec2::new(margin, margin);
        hi += Vec2::new(margin, margin);
        Self {
            lo,
            hi,
            extent,
            body: String::new(),
        }
    }

    fn pt(p: Vec2) -> String {
        format!("{} {}", fmt_num(p.x), fmt_num(-p.y))
    }

    fn path_d(points: &[Vec2]) -> String {
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            d.push_str(if i == 0 { "M " } else { " L " });
            d.push_str(&Self::pt(*p));
        }
        d.push_str(" Z");
        d
    }

    fn polygon(&mut self, class: &str, points: &[Vec2], fill: &str, stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<path class="{class}" d="{}" fill="{fill}" stroke="{stroke}" stroke-width="{}"/>"#,
            Self::path_d(points),
            fmt_num(width)
        );
    }

    fn polyline(&mut self, class: &str, points: &[Vec2], stroke: &str, width: f64, dash: bool) {
        let pts: Vec<String> = points
            .iter()
            .map(|p| format!("{},{}", fmt_num(p.x), fmt_num(-p.y)))
            .collect();
        let dash = if dash {
            format!(r#" stroke-dasharray="{}""#, fmt_num(4.0 * width))
        } else {
            String::new()
        };
        let _ = writeln!(
            self.body,
            r#"<polyline class="{class}" points="{}" fill="none" stroke="{stroke}" stroke-width="{}"{dash}/>"#,
            pts.join(" "),
            fmt_num(width)
        );
    }

    fn line(&mut self, class: &str, a: Vec2, b: Vec2, stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}"/>"#,
            fmt_num(a.x),
            fmt_num(-a.y),
            fmt_num(b.x),
            fmt_num(-b.y),
            fmt_num(width)
        );
    }

    fn circle(&mut self, class: &str, c: Vec2, r: f64, stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" fill="none" stroke="{stroke}" stroke-width="{}"/>"#,
            fmt_num(c.x),
            fmt_num(-c.y),
            fmt_num(r),
            fmt_num(width)
        );
    }

    fn text(&mut self, class: &str, at: Vec2, size: f64, label: &str) {
        let _ = writeln!(
            self.body,
            r#"<text class="{class}" x="{}" y="{}" font-size="{}" font-family="sans-serif">{label}</text>"#,
            fmt_num(at.x),
            fmt_num(-at.y),
            fmt_num(size)
        );
    }

    fn finish(self, title: &str, canvas_width: f64) -> String {
        let (w, h) = (self.hi.x - self.lo.x, self.hi.y - self.lo.y);
        let height = canvas_width * h / w;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
            fmt_num(self.lo.x),
            fmt_num(self.lo.y),
            fmt_num(w),
            fmt_num(h),
            fmt_num(canvas_width),
            fmt_num(height)
        );
        let _ = writeln!(out, "<title>{title}</title>");
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// One panel: the developed band with its rim, and optionally the placed top
/// face (attachment edge highlighted) and the overlap regions with circle
/// markers at their centroids.
pub fn render_unfolding_svg(
    dev: &Development,
    placement: Option<&TopPlacement>,
    overlaps: Option<&OverlapReport>,
    style: &FigureStyle,
) -> String {
    let mut points: Vec<Vec2> = dev
        .quads
        .iter()
        .flat_map(|q| q.vertices().to_vec())
        .collect();
    if let Some(p) = placement {
        points.extend_from_slice(p.hexagon.vertices());
    }
    let mut c = Canvas::new(&points);
    let w = style.stroke_width * c.extent;

    for q in &dev.quads {
        c.polygon("quad", q.vertices(), &style.quad_fill, "black", w);
    }
    if let Some(p) = placement {
        c.polygon("top", p.hexagon.vertices(), &style.top_fill, "black", w);
    }
    c.polyline("rim", &dev.rim, &style.rim_color, 1.5 * w, false);
    if let Some(p) = placement {
        let e = p.attachment_edge();
        c.line("attach", e.start, e.end, &style.attach_color, 2.0 * w);
    }
    if let Some(r) = overlaps {
        let radius = style.marker_radius * c.extent;
        for f in &r.faces {
            c.polygon(
                "overlap",
                f.region.vertices(),
                &style.overlap_fill,
                "none",
                w,
            );
        }
        for f in &r.faces {
            c.circle(
                "overlap-marker",
                f.region.centroid(),
                radius,
                &style.marker_color,
                w,
            );
        }
    }
    let title = match placement {
        Some(p) => format!(
            "cut a{} attach a{}a{}",
            dev.cut,
            p.attach,
            (p.attach + 1) % 6
        ),
        None => format!("cut a{}", dev.cut),
    };
    c.finish(&title, style.canvas_width)
}

/// Orthogonal projection onto the top plane: both hexagons, the lateral
/// edges, vertex labels, and the `h` and `y` offsets at `a_0`.
pub fn render_overhead_svg(p: &Prismatoid, style: &FigureStyle) -> String {
    let top: Vec<Vec2> = p.a.iter().map(|v| v.xy()).collect();
    let bottom: Vec<Vec2> = p.b.iter().map(|v| v.xy()).collect();
    let mut all = top.clone();
    all.extend_from_slice(&bottom);
    let mut c = Canvas::new(&all);
    let w = style.stroke_width * c.extent;
    let font = 0.03 * c.extent;

    let mut closed_b = bottom.clone();
    closed_b.push(bottom[0]);
    c.polyline("bottom-outline", &closed_b, "black", w, false);
    for i in 0..6 {
        c.line("lateral", top[i], bottom[i], "gray", w);
    }
    let mut closed_a = top.clone();
    closed_a.push(top[0]);
    c.polyline("top-outline", &closed_a, &style.rim_color, 1.5 * w, false);
    let triangle = [top[1], top[3], top[5], top[1]];
    c.polyline("triangle", &triangle, "gray", w, true);

    let h_foot = Vec2::ZERO;
    c.line("dim-h", h_foot, top[0], &style.attach_color, w);
    c.text(
        "dim-label",
        (h_foot + top[0]) * 0.5 + Vec2::new(font * 0.4, 0.0),
        font,
        "h",
    );
    c.line("dim-y", top[0], bottom[0], &style.attach_color, w);
    c.text(
        "dim-label",
        (top[0] + bottom[0]) * 0.5 + Vec2::new(font * 0.4, 0.0),
        font,
        "y",
    );

    let centre = Vec2::new(0.0, p.params.s * 3f64.sqrt() / 6.0);
    for (name, pts) in [("a", &top), ("b", &bottom)] {
        for (i, &v) in pts.iter().enumerate() {
            let out = v - centre;
            let offset = if out.norm() > 0.0 {
                out.normalized() * font
            } else {
                Vec2::ZERO
            };
            c.text("vertex-label", v + offset, font, &format!("{name}{i}"));
        }
    }
    c.finish("overhead view", style.canvas_width)
}

/// Cut / attachment pairs of the six figure panels: the apex cut `a_3` with
/// its three attachment classes, then the side cut `a_0` with its three.
pub const PANEL_LAYOUT: [(usize, usize); 6] = [(3, 0), (3, 1), (3, 2), (0, 3), (0, 4), (0, 5)];

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub cut: usize,
    pub attach: usize,
    pub name: String,
    pub svg: String,
    pub report: OverlapReport,
}

pub fn figure_panels(
    p: &Prismatoid,
    style: &FigureStyle,
    tol: &Tolerances,
) -> Result<Vec<Panel>, UnfoldError> {
    let mut out = Vec::with_capacity(PANEL_LAYOUT.len());
    for (cut, attach) in PANEL_LAYOUT {
        let dev = develop_band(p, cut)?;
        let placement = place_top(&dev, attach)?;
        let report = overlap(&placement, &dev, tol);
        out.push(Panel {
            cut,
            attach,
            name: format!("cut{cut}_attach{attach}"),
            svg: render_unfolding_svg(&dev, Some(&placement), Some(&report), style),
            report,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_prismatoid, PrismatoidParams};

    fn prism() -> Prismatoid {
        build_prismatoid(PrismatoidParams::new(1.0, 0.05, 0.5, 0.1)).unwrap()
    }

    #[test]
    fn development_only_has_no_optional_layers() {
        let dev = develop_band(&prism(), 3).unwrap();
        let svg = render_unfolding_svg(&dev, None, None, &FigureStyle::default());
        assert_eq!(svg.matches(r#"class="quad""#).count(), 6);
        assert_eq!(svg.matches(r#"class="rim""#).count(), 1);
        assert!(!svg.contains(r#"class="attach""#));
        assert!(!svg.contains("overlap-marker"));
    }

    #[test]
    fn full_panel_layers() {
        let p = prism();
        let panels = figure_panels(&p, &FigureStyle::default(), &Tolerances::default()).unwrap();
        assert_eq!(panels.len(), 6);
        for panel in &panels {
            assert_eq!(panel.svg.matches(r#"class="top""#).count(), 1);
            assert!(
                panel.svg.contains(r#"class="attach""#) && panel.svg.contains(r#"stroke="blue""#)
            );
            assert!(panel.svg.contains(r#"stroke="red""#));
            assert!(panel.svg.matches("overlap-marker").count() >= 1);
        }
    }

    #[test]
    fn overhead_labels() {
        let svg = render_overhead_svg(&prism(), &FigureStyle::default());
        assert_eq!(svg.matches(r#"class="vertex-label""#).count(), 12);
        assert!(svg.contains(">a0<") && svg.contains(">b5<"));
        assert_eq!(svg, render_overhead_svg(&prism(), &FigureStyle::default()));
    }

    #[test]
    fn style_colors() {
        assert!(FigureStyle::default().validate().is_ok());
        let bad = FigureStyle {
            rim_color: "#12".into(),
            ..FigureStyle::default()
        };
        assert!(bad.validate().is_err());
        assert!(is_css_color("rgb(1, 2, 3)"));
        assert!(!is_css_color("red;"));
    }
}
