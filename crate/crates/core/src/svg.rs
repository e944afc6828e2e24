//! SVG rendering of a coset diagram: dashed concentric guide circles at the
//! integer radii, solid rays from the origin, filled dots at polar positions
//! (radius, angle). Layout constants are cosmetic.

use crate::diagram::Diagram;
use crate::rat::Rat;
use std::f64::consts::TAU;

const CANVAS: f64 = 640.0;

fn to_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn polar(radius: f64, angle_turns: f64, unit: f64) -> (f64, f64) {
    let a = angle_turns * TAU;
    let c = CANVAS / 2.0;
    // SVG y grows downward; angles run anticlockwise
    (c + radius * unit * a.cos(), c - radius * unit * a.sin())
}

pub fn render_diagram_svg(diagram: &Diagram) -> String {
    let n = diagram.weights.len();
    let unit = (CANVAS / 2.0 - 30.0) / (n as f64 + 2.0);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{CANVAS}\" height=\"{CANVAS}\" fill=\"white\"/>\n"
    ));
    out.push_str(&format!(
        "  <title>coset diagram for g = {}</title>\n",
        diagram.rep
    ));
    let c = CANVAS / 2.0;
    for r in 1..=n + 1 {
        out.push_str(&format!(
            "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{:.2}\" fill=\"none\" \
             stroke=\"#c0c0c0\" stroke-width=\"0.6\" stroke-dasharray=\"5 3\"/>\n",
            r as f64 * unit
        ));
    }
    for ray in &diagram.rays {
        let (x, y) = polar(n as f64 + 2.0, to_f64(ray.angle), unit);
        out.push_str(&format!(
            "  <line x1=\"{c}\" y1=\"{c}\" x2=\"{x:.2}\" y2=\"{y:.2}\" \
             stroke=\"black\" stroke-width=\"1\"/>\n"
        ));
    }
    for dot in &diagram.dots {
        let (x, y) = polar(dot.radius as f64, to_f64(dot.angle), unit);
        out.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4.5\" fill=\"black\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
