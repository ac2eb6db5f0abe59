//! SVG rendering of paths and g-bases: punctures on a horizontal axis,
//! the base point at the bottom center, one polyline per path through the
//! link waypoints, a circle marking the terminal puncture.

use crate::error::{Error, Result};
use crate::path_codec::{GBase, Link, PathList};
use std::fmt::Write;

const SPACING: f64 = 70.0;
const MARGIN: f64 = 60.0;
const AXIS_Y: f64 = 90.0;
const OFFSET: f64 = 26.0;
const HEIGHT: f64 = 260.0;
const PALETTE: [&str; 6] = ["#b2182b", "#2166ac", "#1b7837", "#762a83", "#b35806", "#636363"];

fn puncture_x(n: usize, point: i32) -> f64 {
    debug_assert!(point >= 1 && point as usize <= n);
    MARGIN + (point as f64 - 1.0) * SPACING
}

fn base_point(n: usize) -> (f64, f64) {
    (MARGIN + (n as f64 - 1.0) * SPACING / 2.0, HEIGHT - 50.0)
}

fn waypoint(n: usize, link: Link) -> (f64, f64) {
    if link.is_base() {
        return base_point(n);
    }
    let x = puncture_x(n, link.point());
    let y = AXIS_Y - OFFSET * link.position() as f64;
    (x, y)
}

fn polyline(out: &mut String, n: usize, path: &PathList, color: &str) {
    let mut points = String::new();
    for &link in path.links() {
        let (x, y) = waypoint(n, link);
        let _ = write!(points, "{x:.1},{y:.1} ");
    }
    let _ = writeln!(
        out,
        "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\" points=\"{}\"/>",
        points.trim_end()
    );
    let term = path.terminal_point();
    if term >= 1 {
        let x = puncture_x(n, term as i32);
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.1}\" cy=\"{AXIS_Y:.1}\" r=\"10\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.3\"/>"
        );
    }
}

fn document(n: usize, body: &str) -> String {
    let width = 2.0 * MARGIN + (n as f64 - 1.0) * SPACING;
    let (ux, uy) = base_point(n);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{HEIGHT:.0}\" viewBox=\"0 0 {width:.0} {HEIGHT:.0}\">"
    );
    for i in 1..=n {
        let x = puncture_x(n, i as i32);
        let _ = writeln!(out, "  <circle cx=\"{x:.1}\" cy=\"{AXIS_Y:.1}\" r=\"3\" fill=\"#000\"/>");
        let _ = writeln!(
            out,
            "  <text x=\"{x:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{i}</text>",
            AXIS_Y + OFFSET + 16.0
        );
    }
    let _ = writeln!(out, "  <circle cx=\"{ux:.1}\" cy=\"{uy:.1}\" r=\"3\" fill=\"#000\"/>");
    let _ = writeln!(
        out,
        "  <text x=\"{ux:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">u</text>",
        uy + 16.0
    );
    out.push_str(body);
    out.push_str("</svg>\n");
    out
}

/// Renders a single validated path.
pub fn render_path_svg(path: &PathList) -> Result<String> {
    if let Some(v) = path.validate().into_iter().next() {
        return Err(Error::InvalidPath(v));
    }
    let mut body = String::new();
    polyline(&mut body, path.n(), path, PALETTE[0]);
    Ok(document(path.n(), &body))
}

/// Renders a whole g-base, one colored polyline per path.
pub fn render_gbase_svg(gbase: &GBase) -> String {
    let mut body = String::new();
    for (i, path) in gbase.paths().iter().enumerate() {
        polyline(&mut body, gbase.n(), path, PALETTE[i % PALETTE.len()]);
    }
    document(gbase.n(), &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_gbase_renders_four_polylines() {
        let svg = render_gbase_svg(&GBase::standard(4).unwrap());
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 4);
        // 4 terminal markers, 4 puncture dots, the base dot.
        assert_eq!(svg.matches("<circle").count(), 9);
    }

    #[test]
    fn example_path_renders() {
        let p = PathList::parse(5, "(-1,0),(3,1),(2,0)").unwrap();
        let svg = render_path_svg(&p).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("r=\"10\""));
    }

    #[test]
    fn invalid_path_is_rejected() {
        let p = PathList::parse(5, "(-1,0),(2,-1),(2,0)").unwrap();
        assert!(render_path_svg(&p).is_err());
    }
}
