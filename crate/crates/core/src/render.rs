//! SVG drawing of a dissected polygon.

use std::fmt::Write;

use crate::geometry::{Arc, Dissection};
use crate::ring::QuadInt;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 190.0;

fn position(v: usize, n: usize, radius: f64) -> (f64, f64) {
    // Vertex 0 at the top, counterclockwise.
    let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * v as f64 / n as f64;
    (SIZE / 2.0 + radius * angle.cos(), SIZE / 2.0 - radius * angle.sin())
}

/// Vertices on a circle with their labels, the polygon sides, the dissection
/// arcs as solid chords, and each `overlay` arc dashed with its weight written
/// at the midpoint.
pub fn render_svg(d: &Dissection, overlay: &[(Arc, QuadInt)]) -> String {
    let n = d.n();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let points: Vec<String> = (0..n)
        .map(|v| {
            let (x, y) = position(v, n, RADIUS);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(s, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, points.join(" "));

    for a in d.arcs() {
        let (x1, y1) = position(a.u(), n, RADIUS);
        let (x2, y2) = position(a.v(), n, RADIUS);
        let _ = writeln!(
            s,
            r#"<line class="arc" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#
        );
    }

    for (a, w) in overlay {
        let (x1, y1) = position(a.u(), n, RADIUS);
        let (x2, y2) = position(a.v(), n, RADIUS);
        let _ = writeln!(
            s,
            r#"<line class="unit" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="steelblue" stroke-width="1.5" stroke-dasharray="6 4"/>"#
        );
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let _ = writeln!(
            s,
            r#"<text x="{mx:.2}" y="{my:.2}" font-family="sans-serif" font-size="11" fill="steelblue" text-anchor="middle">{w}</text>"#
        );
    }

    for v in 0..n {
        let (x, y) = position(v, n, RADIUS);
        let (lx, ly) = position(v, n, RADIUS + 18.0);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="central">{v}</text>"#
        );
    }
    s.push_str("</svg>\n");
    s
}
