//! Static SVG drawing of a color diagram.
//!
//! Points are numbered clockwise from the top. A dark rim sits under the
//! arcs, so white arcs read as outlined gaps next to the solid black ones.
//! Output is byte-for-byte deterministic.

use std::f64::consts::PI;
use std::fmt::Write;

use chord_census::{ArcColor, ColorDiagram};

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 150.0;
const LABEL_RADIUS: f64 = 175.0;

/// Fixed three-decimal formatting with negative zero folded to zero.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

/// Position of point `i` (1-based) among `points`, at distance `r` from the center.
fn position(i: usize, points: usize, r: f64) -> (String, String) {
    let phi = 2.0 * PI * (i - 1) as f64 / points as f64;
    (num(CENTER + r * phi.sin()), num(CENTER - r * phi.cos()))
}

pub fn render_svg(diagram: &ColorDiagram) -> String {
    let g = diagram.gluing();
    let points = g.points();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    let _ = writeln!(out, "<title>{g}</title>");
    let _ = writeln!(
        out,
        r#"<circle class="rim" cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="8"/>"#,
        c = num(CENTER),
        r = num(RADIUS)
    );
    for start in 1..=points {
        let end = start % points + 1;
        let (x1, y1) = position(start, points, RADIUS);
        let (x2, y2) = position(end, points, RADIUS);
        let (class, stroke, width) = match ArcColor::of_arc_from(start) {
            ArcColor::Black => ("black", "black", 8),
            ArcColor::White => ("white", "white", 4),
        };
        let _ = writeln!(
            out,
            r#"<path class="arc {class}" d="M {x1} {y1} A {r} {r} 0 0 1 {x2} {y2}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
            r = num(RADIUS)
        );
    }
    for (a, b) in g.chords() {
        let (x1, y1) = position(a, points, RADIUS);
        let (x2, y2) = position(b, points, RADIUS);
        let _ = writeln!(
            out,
            r##"<line class="chord" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#1f5fa8" stroke-width="2"/>"##
        );
    }
    for i in 1..=points {
        let (x, y) = position(i, points, RADIUS);
        let _ = writeln!(
            out,
            r##"<circle class="point" cx="{x}" cy="{y}" r="4" fill="#c0392b"/>"##
        );
        let (x, y) = position(i, points, LABEL_RADIUS);
        let _ = writeln!(
            out,
            r#"<text class="label" x="{x}" y="{y}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{i}</text>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
