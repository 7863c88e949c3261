//! SVG rendering of permutation diagrams: two rails, the segments colored by
//! an optional coloring, and dashed scanlines at gap midpoints.

use crate::perm::{Color, Coloring, Permutation, ScanlineChain};

const MARGIN: f64 = 30.0;
const SPACING: f64 = 28.0;
const RAIL_TOP: f64 = 30.0;
const RAIL_BOT: f64 = 130.0;

fn x_of_position(i: usize) -> f64 {
    MARGIN + (i as f64 - 1.0) * SPACING
}

fn x_of_gap(g: usize) -> f64 {
    MARGIN + (g as f64 - 0.5) * SPACING
}

fn stroke(color: Color) -> &'static str {
    match color {
        Color::Black => "#000000",
        Color::White => "#ffffff",
        Color::Uncolored => "#9e9e9e",
    }
}

/// Renders the diagram of `p` as an SVG 1.1 document. Segments are stroked
/// black, white, or grey according to `coloring` (all black when absent);
/// scanlines in `chain` are drawn dashed at their gap midpoints.
pub fn render_diagram(
    p: &Permutation,
    coloring: Option<&Coloring>,
    chain: Option<&ScanlineChain>,
) -> String {
    let n = p.n();
    let width = 2.0 * MARGIN + (n as f64 - 1.0) * SPACING;
    let height = RAIL_BOT + 30.0;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#dce3ea\"/>\n"
    ));
    for y in [RAIL_TOP, RAIL_BOT] {
        svg.push_str(&format!(
            "  <line class=\"rail\" x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" \
             stroke=\"#555555\" stroke-width=\"1\"/>\n",
            MARGIN - SPACING / 2.0,
            width - MARGIN + SPACING / 2.0,
        ));
    }
    if let Some(chain) = chain {
        for s in &chain.scanlines {
            svg.push_str(&format!(
                "  <line class=\"scanline\" x1=\"{}\" y1=\"{RAIL_TOP}\" x2=\"{}\" y2=\"{RAIL_BOT}\" \
                 stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"5,4\"/>\n",
                x_of_gap(s.a),
                x_of_gap(s.b),
            ));
        }
    }
    for k in 1..=n {
        let color = coloring.map_or(Color::Black, |c| c.color(k));
        svg.push_str(&format!(
            "  <line class=\"segment\" x1=\"{}\" y1=\"{RAIL_TOP}\" x2=\"{}\" y2=\"{RAIL_BOT}\" \
             stroke=\"{}\" stroke-width=\"2.5\"/>\n",
            x_of_position(k),
            x_of_position(p.pos(k)),
            stroke(color),
        ));
    }
    for k in 1..=n {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{k}</text>\n",
            x_of_position(k),
            RAIL_TOP - 8.0,
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            x_of_position(k),
            RAIL_BOT + 18.0,
            p.label_at_bottom(k),
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
