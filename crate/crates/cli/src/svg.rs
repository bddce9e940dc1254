//! Static SVG drawings of a region, its path bounds and optional path
//! families. Output depends only on the input, so identical inputs give
//! byte-identical files.

use std::fmt::Write;

use ladderdet::{LadderRegion, PathSystemData, Point, TwoRowedArray};

const SCALE: i64 = 30;
const MARGIN: i64 = 30;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

struct Frame {
    b: i64,
}

impl Frame {
    fn x(&self, x: i64) -> i64 {
        MARGIN + x * SCALE
    }

    fn y(&self, y: i64) -> i64 {
        MARGIN + (self.b - y) * SCALE
    }
}

/// Vertices of the east/north path from `start` to `end` whose north-east
/// turns are the points of `t`.
pub fn path_vertices(t: &TwoRowedArray, start: Point, end: Point) -> Vec<Point> {
    let mut out = vec![start];
    let mut y = start.y;
    for p in t.points() {
        out.push(Point::new(p.x, y));
        out.push(p);
        y = p.y;
    }
    out.push(Point::new(end.x, y));
    out.push(end);
    out.dedup();
    out
}

pub fn render(region: &LadderRegion, psd: &PathSystemData, paths: &[TwoRowedArray]) -> String {
    let f = Frame { b: region.b() };
    let width = 2 * MARGIN + region.a() * SCALE;
    let height = 2 * MARGIN + region.b() * SCALE;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();

    s.push_str("<g id=\"region\" fill=\"black\">\n");
    for p in region.points() {
        writeln!(s, r#"<circle cx="{}" cy="{}" r="2"/>"#, f.x(p.x), f.y(p.y)).unwrap();
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"paths\" fill=\"none\" stroke-width=\"2\">\n");
    for (i, t) in paths.iter().enumerate() {
        let pts: Vec<String> = path_vertices(t, psd.starts[i], psd.ends[i])
            .iter()
            .map(|p| format!("{},{}", f.x(p.x), f.y(p.y)))
            .collect();
        writeln!(
            s,
            r#"<polyline stroke="{}" points="{}"/>"#,
            COLORS[i % COLORS.len()],
            pts.join(" ")
        )
        .unwrap();
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"turns\">\n");
    for (i, t) in paths.iter().enumerate() {
        for p in t.points() {
            writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="5" fill="{}"/>"#,
                f.x(p.x),
                f.y(p.y),
                COLORS[i % COLORS.len()]
            )
            .unwrap();
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"bounds\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n");
    for p in psd.starts.iter().chain(&psd.ends) {
        writeln!(s, r#"<circle cx="{}" cy="{}" r="8"/>"#, f.x(p.x), f.y(p.y)).unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use ladderdet::ladder::derive_path_system;
    use ladderdet::Cogenerator;

    #[test]
    fn vertices_follow_turns() {
        let t = TwoRowedArray::new(vec![2, 3], vec![6, 7]).unwrap();
        let v = path_vertices(&t, Point::new(0, 3), Point::new(5, 9));
        let expected = [(0, 3), (2, 3), (2, 6), (3, 6), (3, 7), (5, 7), (5, 9)];
        assert_eq!(v, expected.map(Point::from).to_vec());
        let empty = path_vertices(&TwoRowedArray::empty(), Point::new(0, 0), Point::new(2, 2));
        assert_eq!(empty, [(0, 0), (2, 0), (2, 2)].map(Point::from).to_vec());
    }

    #[test]
    fn region_only_has_no_polylines() {
        let r = LadderRegion::rectangle(2, 2);
        let psd = derive_path_system(&r, &Cogenerator::two_by_two()).unwrap();
        let svg = render(&r, &psd, &[]);
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert_eq!(svg.matches(r#"r="2""#).count(), 9);
        assert_eq!(svg.matches(r#"r="8""#).count(), 2);
    }
}
