//! Deterministic SVG rendering of chains and annuli.
//!
//! Geometry is written in model units inside a single `scale(1,-1)` group so
//! the picture keeps the mathematical orientation; labels live outside that
//! group so the text stays upright. Every number goes through [`fmt6`].

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::chain::{ChainConstruction, Orientation};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::poly_bounds::Annulus;
use crate::roots::RootSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palette {
    pub sums: String,
    pub probes: String,
    pub centers: String,
    pub circles: String,
    pub axes: String,
    pub segments: String,
    pub roots: String,
}

impl Default for Palette {
    fn default() -> Self {
        Self {
            sums: "#0000ff".into(),
            probes: "#00bcd4".into(),
            centers: "#ff00ff".into(),
            circles: "#000000".into(),
            axes: "#808080".into(),
            segments: "#ff8c00".into(),
            roots: "#d00000".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureStyle {
    pub width_px: u32,
    pub height_px: u32,
    /// Padding around the bounding box as a fraction of its larger side.
    pub margin_frac: f64,
    pub palette: Palette,
    pub label_toggle: bool,
    /// Stroke width in pixels.
    pub stroke_width: f64,
}

impl Default for FigureStyle {
    fn default() -> Self {
        Self {
            width_px: 800,
            height_px: 800,
            margin_frac: 0.08,
            palette: Palette::default(),
            label_toggle: true,
            stroke_width: 1.5,
        }
    }
}

impl FigureStyle {
    fn check(&self) -> Result<()> {
        if self.width_px == 0 || self.height_px == 0 {
            return Err(Error::Parse("figure size must be positive".into()));
        }
        if !(0.0..0.4).contains(&self.margin_frac) {
            return Err(Error::Parse("margin_frac must lie in [0, 0.4)".into()));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::Parse("stroke_width must be positive".into()));
        }
        Ok(())
    }
}

/// Six fractional digits, round-half-even on the exact binary value, and
/// never a negative zero.
pub fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn around(p: Point2) -> Self {
        Self {
            min_x: p.x,
            max_x: p.x,
            min_y: p.y,
            max_y: p.y,
        }
    }

    fn add_point(&mut self, p: Point2) {
        self.add_disc(p, 0.0);
    }

    fn add_disc(&mut self, c: Point2, r: f64) {
        self.min_x = self.min_x.min(c.x - r);
        self.max_x = self.max_x.max(c.x + r);
        self.min_y = self.min_y.min(c.y - r);
        self.max_y = self.max_y.max(c.y + r);
    }

    fn padded(mut self, margin_frac: f64) -> Self {
        let span = (self.max_x - self.min_x).max(self.max_y - self.min_y);
        let span = if span > 0.0 { span } else { 1.0 };
        let m = margin_frac * span;
        self.min_x -= m;
        self.max_x += m;
        self.min_y -= m;
        self.max_y += m;
        // flat figures (all points on the axis) still need some height
        let floor = 0.1 * span;
        for (lo, hi) in [
            (&mut self.min_x, &mut self.max_x),
            (&mut self.min_y, &mut self.max_y),
        ] {
            let extra = floor - (*hi - *lo);
            if extra > 0.0 {
                *lo -= 0.5 * extra;
                *hi += 0.5 * extra;
            }
        }
        self
    }
}

/// Accumulates the document in the fixed element order.
struct Canvas<'a> {
    style: &'a FigureStyle,
    bounds: Bounds,
    px: f64,
    body: String,
    labels: String,
}

impl<'a> Canvas<'a> {
    fn new(style: &'a FigureStyle, bounds: Bounds) -> Self {
        let bounds = bounds.padded(style.margin_frac);
        let w = bounds.max_x - bounds.min_x;
        let h = bounds.max_y - bounds.min_y;
        let px = (w / style.width_px as f64).max(h / style.height_px as f64);
        Self {
            style,
            bounds,
            px,
            body: String::new(),
            labels: String::new(),
        }
    }

    fn axes(&mut self) {
        let b = self.bounds;
        let color = &self.style.palette.axes;
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="0.000000" x2="{}" y2="0.000000" stroke="{color}"/>"#,
            fmt6(b.min_x),
            fmt6(b.max_x)
        );
        let _ = writeln!(
            self.body,
            r#"<line x1="0.000000" y1="{}" x2="0.000000" y2="{}" stroke="{color}"/>"#,
            fmt6(b.min_y),
            fmt6(b.max_y)
        );
    }

    fn circle(&mut self, c: Point2, r: f64, color: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{}" cy="{}" r="{}" stroke="{color}"/>"#,
            fmt6(c.x),
            fmt6(c.y),
            fmt6(r)
        );
    }

    fn polyline(&mut self, pts: &[Point2], color: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| format!("{},{}", fmt6(p.x), fmt6(p.y)))
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polyline points="{}" stroke="{color}"/>"#,
            coords.join(" ")
        );
    }

    fn segment(&mut self, a: Point2, b: Point2, color: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-dasharray="{}"/>"#,
            fmt6(a.x),
            fmt6(a.y),
            fmt6(b.x),
            fmt6(b.y),
            fmt6(4.0 * self.px)
        );
    }

    // Dots are ellipses so that <circle> only ever means a model circle.
    fn dot(&mut self, p: Point2, color: &str) {
        let r = fmt6(3.0 * self.px);
        let _ = writeln!(
            self.body,
            r#"<ellipse cx="{}" cy="{}" rx="{r}" ry="{r}" fill="{color}" stroke="none"/>"#,
            fmt6(p.x),
            fmt6(p.y)
        );
    }

    fn label(&mut self, p: Point2, text: &str, color: &str) {
        if !self.style.label_toggle {
            return;
        }
        let off = 4.0 * self.px;
        let _ = writeln!(
            self.labels,
            r#"<text x="{}" y="{}" fill="{color}">{text}</text>"#,
            fmt6(p.x + off),
            fmt6(-p.y - off)
        );
    }

    fn finish(self) -> Vec<u8> {
        let b = self.bounds;
        let s = self.style;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
            s.width_px,
            s.height_px,
            fmt6(b.min_x),
            fmt6(-b.max_y),
            fmt6(b.max_x - b.min_x),
            fmt6(b.max_y - b.min_y)
        );
        let _ = writeln!(
            out,
            r#"<g transform="scale(1,-1)" fill="none" stroke-width="{}">"#,
            fmt6(s.stroke_width * self.px)
        );
        out.push_str(&self.body);
        out.push_str("</g>\n");
        if !self.labels.is_empty() {
            let _ = writeln!(
                out,
                r#"<g font-family="sans-serif" font-size="{}">"#,
                fmt6(12.0 * self.px)
            );
            out.push_str(&self.labels);
            out.push_str("</g>\n");
        }
        out.push_str("</svg>\n");
        out.into_bytes()
    }
}

pub fn render_chain_svg(chain: &ChainConstruction, style: &FigureStyle) -> Result<Vec<u8>> {
    style.check()?;
    if chain.sums.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut bounds = Bounds::around(Point2::ORIGIN);
    for p in chain.sums.iter().chain(&chain.probes) {
        bounds.add_point(*p);
    }
    for c in &chain.circles {
        bounds.add_disc(c.center, c.radius);
    }

    let (sum_name, center_name) = match chain.orientation {
        Orientation::External => ("R", "C"),
        Orientation::Internal => ("Q", "O"),
    };
    let pal = &style.palette;
    let mut canvas = Canvas::new(style, bounds);
    canvas.axes();
    for c in &chain.circles {
        canvas.circle(c.center, c.radius, &pal.circles);
    }

    let path: Vec<Point2> = std::iter::once(Point2::ORIGIN)
        .chain(chain.sums.iter().copied())
        .collect();
    canvas.polyline(&path, &pal.segments);
    for (k, c) in chain.circles.iter().enumerate().skip(1) {
        canvas.segment(chain.sums[k - 1], c.center, &pal.segments);
    }

    for p in &chain.sums {
        canvas.dot(*p, &pal.sums);
    }
    for p in &chain.probes {
        canvas.dot(*p, &pal.probes);
    }
    for c in &chain.circles {
        canvas.dot(c.center, &pal.centers);
    }

    canvas.label(Point2::ORIGIN, "O", &pal.axes);
    for (k, p) in chain.sums.iter().enumerate() {
        canvas.label(*p, &format!("{sum_name}{k}"), &pal.sums);
    }
    for (k, p) in chain.probes.iter().enumerate() {
        canvas.label(*p, &format!("S{}", k + 1), &pal.probes);
    }
    for (k, c) in chain.circles.iter().enumerate() {
        canvas.label(c.center, &format!("{center_name}{k}"), &pal.centers);
    }
    Ok(canvas.finish())
}

/// Concentric inner/outer circles (one when degenerate) plus root markers.
pub fn render_annulus_svg(
    a: &Annulus,
    roots: Option<&RootSet>,
    style: &FigureStyle,
) -> Result<Vec<u8>> {
    style.check()?;
    let mut bounds = Bounds::around(Point2::ORIGIN);
    bounds.add_disc(Point2::ORIGIN, a.outer.max(a.inner));
    let zs: Vec<Point2> = roots
        .map(|r| r.roots.iter().map(|z| Point2::new(z.re, z.im)).collect())
        .unwrap_or_default();
    for z in &zs {
        bounds.add_point(*z);
    }

    let pal = &style.palette;
    let mut canvas = Canvas::new(style, bounds);
    canvas.axes();
    canvas.circle(Point2::ORIGIN, a.inner, &pal.circles);
    if !a.degenerate {
        canvas.circle(Point2::ORIGIN, a.outer, &pal.circles);
    }
    for z in &zs {
        canvas.dot(*z, &pal.roots);
    }
    for (k, z) in zs.iter().enumerate() {
        canvas.label(*z, &format!("z{k}"), &pal.roots);
    }
    Ok(canvas.finish())
}
