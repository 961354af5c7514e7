//! Minimal SVG output for 2D figures: closed curves as stroked paths.

use std::fmt::Write as _;

/// One closed curve with its stroke color and opacity.
struct Curve {
    points: Vec<(f64, f64)>,
    stroke: &'static str,
    opacity: f64,
}

/// A figure assembled from closed curves. Rendering computes a bounding box
/// with a small margin, flips the y axis (SVG grows downward), and scales
/// the stroke width to the drawing extent, so callers work purely in model
/// coordinates.
#[derive(Default)]
pub struct Figure {
    curves: Vec<Curve>,
}

impl Figure {
    pub fn new() -> Self {
        Figure::default()
    }

    /// Adds a closed curve; empty point lists are ignored.
    pub fn add_curve(&mut self, points: Vec<(f64, f64)>, stroke: &'static str, opacity: f64) {
        if !points.is_empty() {
            self.curves.push(Curve { points, stroke, opacity });
        }
    }

    pub fn render(&self) -> String {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &self.curves {
            for &(x, y) in &c.points {
                lo = (lo.0.min(x), lo.1.min(-y));
                hi = (hi.0.max(x), hi.1.max(-y));
            }
        }
        if self.curves.is_empty() {
            lo = (0.0, 0.0);
            hi = (1.0, 1.0);
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        let margin = 0.05 * span;
        let (w, h) = (hi.0 - lo.0 + 2.0 * margin, hi.1 - lo.1 + 2.0 * margin);
        let stroke_width = 0.004 * span;

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" \
             viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
            lo.0 - margin,
            lo.1 - margin,
            w,
            h
        );
        for c in &self.curves {
            let mut d = String::new();
            for (i, &(x, y)) in c.points.iter().enumerate() {
                let cmd = if i == 0 { 'M' } else { 'L' };
                let _ = write!(d, "{cmd} {x:.6},{:.6} ", -y);
            }
            d.push('Z');
            let _ = writeln!(
                out,
                "  <path d=\"{d}\" fill=\"none\" stroke=\"{}\" \
                 stroke-width=\"{stroke_width:.6}\" stroke-opacity=\"{:.2}\"/>",
                c.stroke, c.opacity
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
