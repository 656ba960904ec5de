//! Deterministic SVG rendering of figures with optional overlays: extra
//! outlines and measure atoms drawn as outward arrows at their boundary
//! contact points. All coordinates are emitted with fixed 6-decimal
//! formatting, so identical inputs produce byte-identical documents.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::measure::DiscreteMeasure;
use crate::support::ConvexFigure;

/// Rendering options; all dimensions in SVG user units.
#[derive(Clone, Debug)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub fill: bool,
    /// Viewport padding as a fraction of the content extent.
    pub padding: f64,
    /// Pixel size of the longer viewport side.
    pub size: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { stroke_width: 1.5, fill: true, padding: 0.08, size: 600.0 }
    }
}

/// Extra content drawn on top of the main figure.
#[derive(Clone, Debug)]
pub enum Overlay {
    /// A secondary outline (for example the constraint body).
    Outline(ConvexFigure),
    /// Measure atoms as arrows leaving the main figure's boundary along
    /// their directions, lengths proportional to weight.
    Atoms(DiscreteMeasure),
}

fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

struct Frame {
    min: Vec2,
    scale: f64,
    height: f64,
    width: f64,
}

impl Frame {
    fn map(&self, p: Vec2) -> (String, String) {
        let x = (p.x - self.min.x) * self.scale;
        let y = self.height - (p.y - self.min.y) * self.scale;
        (fmt6(x), fmt6(y))
    }
}

fn path_of(fig: &ConvexFigure, frame: &Frame) -> String {
    let mut d = String::new();
    for (i, &p) in fig.vertices().iter().enumerate() {
        let (x, y) = frame.map(p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd} {x} {y} ");
    }
    d.push('Z');
    d
}

/// Boundary point of `fig` supporting direction `u` (a vertex attaining the
/// maximal inner product; ties resolved by the first vertex in canonical
/// order, so the choice is deterministic).
fn support_point(fig: &ConvexFigure, u: Vec2) -> Vec2 {
    let mut best = fig.vertices()[0];
    let mut best_val = best.dot(u);
    for &p in &fig.vertices()[1..] {
        let v = p.dot(u);
        if v > best_val + 1e-15 {
            best = p;
            best_val = v;
        }
    }
    best
}

/// Render the figure and overlays as a standalone SVG document.
pub fn render_svg(
    fig: &ConvexFigure,
    overlays: &[Overlay],
    style: &RenderStyle,
) -> Result<String> {
    if !(style.stroke_width > 0.0) || !(style.size > 0.0) || style.padding < 0.0 {
        return Err(Error::InvalidInput("render style dimensions must be positive".into()));
    }
    // Bounds over the main figure and every overlay outline.
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut absorb = |f: &ConvexFigure| {
        for &p in f.vertices() {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
    };
    absorb(fig);
    for ov in overlays {
        if let Overlay::Outline(f) = ov {
            absorb(f);
        }
    }
    let extent = (hi.x - lo.x).max(hi.y - lo.y);
    if !(extent > 0.0) || !extent.is_finite() {
        return Err(Error::DegenerateViewport);
    }
    let pad = style.padding * extent;
    let lo = lo - Vec2::new(pad, pad);
    let hi = hi + Vec2::new(pad, pad);
    let scale = style.size / (hi.x - lo.x).max(hi.y - lo.y);
    let frame = Frame {
        min: lo,
        scale,
        width: (hi.x - lo.x) * scale,
        height: (hi.y - lo.y) * scale,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt6(frame.width),
        fmt6(frame.height),
        fmt6(frame.width),
        fmt6(frame.height)
    );
    let fill = if style.fill { "#dfe8f5" } else { "none" };
    let _ = writeln!(
        svg,
        "  <path d=\"{}\" fill=\"{}\" stroke=\"#1f4e8c\" stroke-width=\"{}\"/>",
        path_of(fig, &frame),
        fill,
        fmt6(style.stroke_width)
    );
    for ov in overlays {
        match ov {
            Overlay::Outline(f) => {
                let _ = writeln!(
                    svg,
                    "  <path d=\"{}\" fill=\"none\" stroke=\"#b3442e\" stroke-width=\"{}\" stroke-dasharray=\"6 4\"/>",
                    path_of(f, &frame),
                    fmt6(style.stroke_width)
                );
            }
            Overlay::Atoms(mu) => {
                let wmax = mu.atoms().iter().map(|a| a.weight).fold(0.0, f64::max);
                if wmax <= 0.0 {
                    continue;
                }
                for a in mu.atoms() {
                    let u = a.direction.unit();
                    let base = support_point(fig, u);
                    let len = 0.18 * extent * (a.weight / wmax);
                    let tip = base + u * len;
                    let (x1, y1) = frame.map(base);
                    let (x2, y2) = frame.map(tip);
                    let _ = writeln!(
                        svg,
                        "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#2e7d32\" stroke-width=\"{}\"/>",
                        fmt6(0.75 * style.stroke_width)
                    );
                }
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
