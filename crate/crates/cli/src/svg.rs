//! Deterministic SVG rendering of an instance on the circle.
//!
//! Vertex 0 sits at angle 90 degrees (top of the circle) and indices run
//! clockwise. Stroke classes separate the polygon boundary, the forbidden
//! chords, and an optional witness layer; coordinates are fixed to four
//! decimals so identical inputs render identical bytes.

use std::f64::consts::PI;
use std::fmt::Write;

use gangulate_core::convex_core::{Edge, GAngulation, Instance};

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 170.0;
const LABEL_RADIUS: f64 = RADIUS + 16.0;

fn point(n: u32, v: u32, radius: f64) -> (f64, f64) {
    // Angle 90 degrees minus the clockwise step; SVG's y axis grows
    // downward, so subtracting the sine keeps vertex 0 on top.
    let theta = PI / 2.0 - 2.0 * PI * f64::from(v) / f64::from(n);
    (CENTER + radius * theta.cos(), CENTER - radius * theta.sin())
}

fn push_line(out: &mut String, class: &str, n: u32, e: Edge) {
    let (x1, y1) = point(n, e.lo(), RADIUS);
    let (x2, y2) = point(n, e.hi(), RADIUS);
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{x1:.4}" y1="{y1:.4}" x2="{x2:.4}" y2="{y2:.4}"/>"#
    );
}

/// Renders the instance, with the witness diagonals as an extra layer when
/// given. The returned string is the complete SVG document.
pub fn render(inst: &Instance, witness: Option<&GAngulation>) -> String {
    let n = inst.n();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    out.push_str(
        "  <style>\n    .boundary { stroke: #b0b0b0; stroke-width: 1; }\n    .forbidden { stroke: #c62828; stroke-width: 2; }\n    .witness { stroke: #1565c0; stroke-width: 1.5; stroke-dasharray: 5 3; }\n    .vertex { fill: #202020; }\n    .label { font-family: monospace; font-size: 11px; fill: #202020; text-anchor: middle; dominant-baseline: middle; }\n  </style>\n",
    );
    for v in 0..n {
        push_line(&mut out, "boundary", n, Edge::new(v, (v + 1) % n));
    }
    for &e in inst.forbidden() {
        push_line(&mut out, "forbidden", n, e);
    }
    if let Some(w) = witness {
        for &e in &w.diagonals {
            push_line(&mut out, "witness", n, e);
        }
    }
    for v in 0..n {
        let (x, y) = point(n, v, RADIUS);
        let _ = writeln!(out, r#"  <circle class="vertex" cx="{x:.4}" cy="{y:.4}" r="2.5"/>"#);
    }
    for v in 0..n {
        let (x, y) = point(n, v, LABEL_RADIUS);
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{x:.4}" y="{y:.4}">v{v}</text>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
