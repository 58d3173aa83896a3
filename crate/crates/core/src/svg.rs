//! Static SVG 1.1 rendering of a point set, its visibility edges and an
//! optional colouring.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::geometry::PointSet;
use crate::graph::{Colouring, VisibilityGraph};

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 24.0;
const RADIUS: f64 = 5.0;

const PALETTE: [&str; 8] = [
    "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const UNCOLOURED: &str = "#404040";

/// Renders `ps` scaled into an 800×800 canvas with y pointing up. Colours
/// beyond the palette cycle through it.
pub fn render_svg(ps: &PointSet, g: &VisibilityGraph, colouring: Option<&Colouring>) -> String {
    let coords: Vec<(f64, f64)> = ps
        .points()
        .iter()
        .map(|p| (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0)))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &coords {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let extent = (x1 - x0).max(y1 - y0);
    let scale = if extent > 0.0 { (CANVAS - 2.0 * MARGIN) / extent } else { 1.0 };
    let place = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, CANVAS - MARGIN - (y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(out, r##"<g stroke="#9a9a9a" stroke-width="0.8">"##);
    for (u, v) in g.edges() {
        let (ax, ay) = place(coords[u]);
        let (bx, by) = place(coords[v]);
        let _ = writeln!(out, r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g stroke="#000000" stroke-width="0.8">"##);
    for (i, &c) in coords.iter().enumerate() {
        let (x, y) = place(c);
        let fill = colouring.map_or(UNCOLOURED, |col| PALETTE[col.colour(i) % PALETTE.len()]);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{RADIUS}" fill="{fill}"><title>{i}</title></circle>"#
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
