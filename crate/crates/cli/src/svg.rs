//! SVG 1.1 drawings of a family and its stabbing points.
//!
//! The y axis points up, so coordinates are written with `y` negated.

use std::fmt::Write;

use diskstab_core::geometry::{GeneralizedDisk, Halfplane, Point};

const WIDTH: f64 = 800.0;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Viewport {
    min: Point,
    max: Point,
}

impl Viewport {
    /// Bounding box of the disks and points (halfplane feet when there are
    /// none), grown by 10% of its larger side on every edge.
    fn fit(family: &[GeneralizedDisk], points: &[Point]) -> Viewport {
        let mut corners: Vec<Point> = Vec::new();
        for g in family {
            if let GeneralizedDisk::Disk(d) = g {
                corners.push(d.center - Point::new(d.radius, d.radius));
                corners.push(d.center + Point::new(d.radius, d.radius));
            }
        }
        corners.extend_from_slice(points);
        if corners.is_empty() {
            corners.extend(family.iter().filter_map(|g| match g {
                GeneralizedDisk::Halfplane(h) => Some(h.foot()),
                GeneralizedDisk::Disk(_) => None,
            }));
        }
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &corners {
            min = Point::new(min.x.min(c.x), min.y.min(c.y));
            max = Point::new(max.x.max(c.x), max.y.max(c.y));
        }
        if corners.is_empty() {
            min = Point::new(0.0, 0.0);
            max = min;
        }
        let side = (max.x - min.x).max(max.y - min.y);
        let margin = if side > 0.0 { 0.1 * side } else { 1.0 };
        Viewport { min: min - Point::new(margin, margin), max: max + Point::new(margin, margin) }
    }

    fn size(&self) -> Point {
        self.max - self.min
    }

    fn corners(&self) -> [Point; 4] {
        [self.min, Point::new(self.max.x, self.min.y), self.max, Point::new(self.min.x, self.max.y)]
    }
}

/// The part of the viewport inside `h` (one Sutherland-Hodgman step).
fn clip(corners: &[Point], h: &Halfplane) -> Vec<Point> {
    let side = |p: Point| h.normal.dot(p) - h.offset;
    let mut out = Vec::new();
    for (i, &a) in corners.iter().enumerate() {
        let b = corners[(i + 1) % corners.len()];
        let (sa, sb) = (side(a), side(b));
        if sa <= 0.0 {
            out.push(a);
        }
        if (sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0) {
            out.push(a + (b - a) * (sa / (sa - sb)));
        }
    }
    out
}

fn coords(p: Point) -> String {
    format!("{},{}", p.x, -p.y)
}

/// Renders every disk as one `<circle>`, every halfplane as a hatched
/// polygon clipped to the viewport, and every point as a cross.
pub fn render(family: &[GeneralizedDisk], points: &[Point]) -> String {
    let view = Viewport::fit(family, points);
    let size = view.size();
    let height = WIDTH * size.y / size.x;
    let unit = size.x.max(size.y);
    let stroke = unit * 0.002;
    let hatch = unit * 0.02;
    let arm = unit * 0.012;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{height}\" viewBox=\"{} {} {} {}\">",
        view.min.x, -view.max.y, size.x, size.y
    );
    let _ = writeln!(
        svg,
        "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"{hatch}\" height=\"{hatch}\" patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"{hatch}\" stroke=\"#b05020\" stroke-width=\"{stroke}\"/></pattern></defs>"
    );
    let _ = writeln!(svg, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>", view.min.x, -view.max.y, size.x, size.y);

    for g in family {
        if let GeneralizedDisk::Halfplane(h) = g {
            let poly = clip(&view.corners(), h);
            if poly.len() >= 3 {
                let pts: Vec<String> = poly.iter().map(|&p| coords(p)).collect();
                let _ = writeln!(
                    svg,
                    "<polygon id=\"halfplane-{}\" points=\"{}\" fill=\"url(#hatch)\" fill-opacity=\"0.5\" stroke=\"#b05020\" stroke-width=\"{stroke}\"/>",
                    h.id,
                    pts.join(" ")
                );
            }
        }
    }
    for g in family {
        if let GeneralizedDisk::Disk(d) = g {
            let _ = writeln!(
                svg,
                "<circle id=\"disk-{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#3070c0\" fill-opacity=\"0.08\" stroke=\"#3070c0\" stroke-width=\"{stroke}\"/>",
                d.id, d.center.x, -d.center.y, d.radius
            );
        }
    }
    for (i, p) in points.iter().enumerate() {
        let (x, y) = (p.x, -p.y);
        let _ = writeln!(
            svg,
            "<g id=\"point-{i}\" stroke=\"#c02020\" stroke-width=\"{}\"><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/></g>",
            2.0 * stroke,
            x - arm,
            y - arm,
            x + arm,
            y + arm,
            x - arm,
            y + arm,
            x + arm,
            y - arm
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use diskstab_core::geometry::Disk;

    #[test]
    fn viewport_has_ten_percent_margin() {
        let fam = vec![GeneralizedDisk::Disk(Disk::new(0, Point::new(0.0, 0.0), 1.0).unwrap())];
        let v = Viewport::fit(&fam, &[]);
        assert_eq!(v.min, Point::new(-1.2, -1.2));
        assert_eq!(v.max, Point::new(1.2, 1.2));
    }

    #[test]
    fn clipping_keeps_the_inside() {
        let view = Viewport { min: Point::new(-1.0, -1.0), max: Point::new(1.0, 1.0) };
        let lower = Halfplane::new(0, Point::new(0.0, 1.0), 0.0).unwrap();
        let poly = clip(&view.corners(), &lower);
        assert_eq!(poly.len(), 4);
        assert!(poly.iter().all(|p| p.y <= 0.0));
        let outside = Halfplane::new(1, Point::new(0.0, 1.0), -5.0).unwrap();
        assert!(clip(&view.corners(), &outside).is_empty());
    }
}
