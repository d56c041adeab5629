//! SVG drawing of a single tiling, for debugging.

use std::fmt::Write as _;

use crate::oracle::{Hexagon, Tiling, TriCell};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 10.0;
const FILLS: [&str; 3] = ["#f2c14e", "#5b8e7d", "#bc4b51"];

// Lattice point (a, b, c), a + b + c = 0, to page coordinates with y down.
fn project(p: [i32; 3], n: u32) -> (f64, f64) {
    let [a, b, c] = p.map(f64::from);
    let s = UNIT / 3f64.sqrt();
    let x = s * (a - 0.5 * b - 0.5 * c);
    let y = s * (3f64.sqrt() / 2.0) * (c - b);
    let half = UNIT * n as f64;
    (x + half + MARGIN, y + half + MARGIN)
}

fn lozenge_outline(a: TriCell, b: TriCell) -> ([[i32; 3]; 4], usize) {
    let ca = a.corners();
    let cb = b.corners();
    let only_a = *ca.iter().find(|p| !cb.contains(p)).expect("lozenge corner");
    let only_b = *cb.iter().find(|p| !ca.contains(p)).expect("lozenge corner");
    let shared: Vec<[i32; 3]> = ca.iter().filter(|p| cb.contains(p)).copied().collect();
    let axis = (0..3)
        .find(|&i| a.cube()[i] != b.cube()[i])
        .expect("adjacent cells differ in one coordinate");
    ([only_a, shared[0], only_b, shared[1]], axis)
}

/// Renders `tiling` as outlined parallelograms shaded by direction.
pub fn render(hex: &Hexagon, tiling: &Tiling) -> String {
    let size = 2.0 * UNIT * hex.n() as f64 + 2.0 * MARGIN;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    )
    .unwrap();
    for l in tiling.lozenges() {
        let (corners, axis) = lozenge_outline(hex.cell(l.a), hex.cell(l.b));
        let points: Vec<String> = corners
            .iter()
            .map(|&p| {
                let (x, y) = project(p, hex.n());
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r#"  <polygon points="{}" fill="{}" stroke="black" stroke-width="1"/>"#,
            points.join(" "),
            FILLS[axis]
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
