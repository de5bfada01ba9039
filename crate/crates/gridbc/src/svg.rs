//! SVG drawings of covers.
//!
//! One lattice step is 32 px with a 16 px margin, row 1 at the bottom. The
//! grid is drawn in light gray, 4-cycles as shaded squares, stars as dark
//! arms with a dot at the center, and thick edges in red on top of
//! everything except the star centers. Output depends only on the cover.

use std::fmt::Write;

use gridbc_core::diagnostics::thick_edges;
use gridbc_core::{Biclique, Cover, Grid, Vertex};

pub const STEP: u32 = 32;
pub const MARGIN: u32 = 16;

fn x(v: Vertex) -> u32 {
    MARGIN + (v.col - 1) * STEP
}

fn y(grid: &Grid, v: Vertex) -> u32 {
    MARGIN + (grid.p() - v.row) * STEP
}

fn line(out: &mut String, grid: &Grid, a: Vertex, b: Vertex, class: &str) {
    writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        x(a),
        y(grid, a),
        x(b),
        y(grid, b)
    )
    .unwrap();
}

pub fn render_svg(cover: &Cover) -> String {
    let grid = Grid::from_dims(cover.dims());
    let width = 2 * MARGIN + (grid.q() - 1) * STEP;
    let height = 2 * MARGIN + (grid.p() - 1) * STEP;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    out.push_str(concat!(
        "  <style>\n",
        "    .grid { stroke: #d0d0d0; stroke-width: 1; }\n",
        "    .cycle { fill: #6baed6; fill-opacity: 0.45; stroke: #2171b5; stroke-width: 2; }\n",
        "    .arm { stroke: #222222; stroke-width: 3; stroke-linecap: round; }\n",
        "    .thick { stroke: #d62728; stroke-width: 4; }\n",
        "    .star { fill: #000000; }\n",
        "  </style>\n",
    ));
    out.push_str(r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    out.push('\n');
    for e in grid.edges() {
        line(&mut out, &grid, e.lo(), e.hi(), "grid");
    }
    for b in cover.elements() {
        if let (Biclique::FourCycle { anchor }, true) = (b, b.fits(grid.dims())) {
            let top_left = Vertex::new(anchor.col, anchor.row + 1);
            writeln!(
                out,
                r#"  <rect class="cycle" x="{}" y="{}" width="{STEP}" height="{STEP}"/>"#,
                x(top_left),
                y(&grid, top_left)
            )
            .unwrap();
        }
    }
    for b in cover.elements() {
        if let (Biclique::Star { center, .. }, true) = (b, b.fits(grid.dims())) {
            for leaf in b.leaves() {
                line(&mut out, &grid, *center, leaf, "arm");
            }
        }
    }
    for e in thick_edges(&grid, cover) {
        line(&mut out, &grid, e.lo(), e.hi(), "thick");
    }
    for b in cover.elements() {
        if let (Biclique::Star { center, .. }, true) = (b, b.fits(grid.dims())) {
            writeln!(out, r#"  <circle class="star" cx="{}" cy="{}" r="5"/>"#, x(*center), y(&grid, *center))
                .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
