//! Standalone SVG 1.1 emission for disk representations and filled-triangle
//! collections. Coordinates are rendered through `f64`; exactness matters
//! for verification, not for pictures.

use super::Representation;
use crate::hardness::TriangleGadget;
use crate::rat::rational_to_f64;
use std::fmt::Write;

fn header(min_x: f64, min_y: f64, width: f64, height: f64) -> String {
    format!(
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.6} {:.6} {:.6} {:.6}" width="800" height="800">
"#,
        min_x, min_y, width, height
    )
}

/// One `<circle>` per disk plus a centered label.
pub fn representation_to_svg(rep: &Representation) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let circles: Vec<(f64, f64, f64)> = rep
        .disks()
        .iter()
        .map(|d| {
            (
                rational_to_f64(&d.center.x),
                rational_to_f64(&d.center.y),
                rational_to_f64(&d.radius),
            )
        })
        .collect();
    for &(x, y, r) in &circles {
        min_x = min_x.min(x - r);
        min_y = min_y.min(y - r);
        max_x = max_x.max(x + r);
        max_y = max_y.max(y + r);
    }
    let pad = 0.05 * ((max_x - min_x).max(max_y - min_y)).max(1e-9);
    let mut out = header(
        min_x - pad,
        min_y - pad,
        max_x - min_x + 2.0 * pad,
        max_y - min_y + 2.0 * pad,
    );
    for (v, &(x, y, r)) in circles.iter().enumerate() {
        writeln!(
            out,
            r##"  <circle cx="{x:.9}" cy="{y:.9}" r="{r:.9}" fill="#d62728" fill-opacity="0.18" stroke="#333333" stroke-width="{:.9}"/>"##,
            r / 200.0,
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{x:.9}" y="{y:.9}" font-size="{:.9}" text-anchor="middle">{}</text>"#,
            r / 4.0,
            rep.label_of(v),
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Filled polygons with opacity, vertex triangles and edge triangles in
/// different hues.
pub fn gadget_to_svg(gadget: &TriangleGadget) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut polys: Vec<(String, &str)> = Vec::new();
    let mut extend = |pts: &[(f64, f64)]| {
        for &(x, y) in pts {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
    };
    for (idx, tri) in gadget.all_triangles().iter().enumerate() {
        let pts: Vec<(f64, f64)> = tri
            .points()
            .iter()
            .map(|p| (rational_to_f64(&p.x), rational_to_f64(&p.y)))
            .collect();
        extend(&pts);
        let color = if idx < gadget.vertex_triangles().len() {
            "#d62728"
        } else if (idx - gadget.vertex_triangles().len()) % 2 == 0 {
            "#1f77b4"
        } else {
            "#2ca02c"
        };
        let coords = pts
            .iter()
            .map(|(x, y)| format!("{x:.9},{y:.9}"))
            .collect::<Vec<_>>()
            .join(" ");
        polys.push((coords, color));
    }
    let pad = 0.05 * ((max_x - min_x).max(max_y - min_y)).max(1e-9);
    let mut out = header(
        min_x - pad,
        min_y - pad,
        max_x - min_x + 2.0 * pad,
        max_y - min_y + 2.0 * pad,
    );
    for (coords, color) in polys {
        writeln!(
            out,
            r#"  <polygon points="{coords}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="0.02"/>"#,
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Disk, Point};
    use crate::rat::rat;

    #[test]
    fn representation_svg_is_standalone() {
        let rep = Representation::new(vec![
            Disk::new(Point::new(rat(0), rat(0)), rat(1)).unwrap(),
            Disk::new(Point::new(rat(3), rat(0)), rat(2)).unwrap(),
        ])
        .unwrap();
        let svg = representation_to_svg(&rep);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains(r#"xmlns="http://www.w3.org/2000/svg""#));
        assert!(svg.contains(r#"version="1.1""#));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
