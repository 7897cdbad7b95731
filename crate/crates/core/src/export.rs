//! Text artifacts: CSV tables, word lists, polyomino JSON and SVG.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::oracle::{DistanceBall, GrowthRow};
use crate::polyomino::{boundary_word, Orientation, OrientedBoundary, Polyomino};
use crate::word::{format_word, Word};

/// `n,m,k,dist` rows sorted by `(n, m, k)`, with a header line.
pub fn ball_csv(ball: &DistanceBall) -> String {
    let mut out = String::from("n,m,k,dist\n");
    for (g, d) in ball.sorted_entries() {
        writeln!(out, "{},{},{},{}", g.n, g.m, g.k, d).unwrap();
    }
    out
}

/// `n,sphere,gamma` rows, with a header line.
pub fn growth_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("n,sphere,gamma\n");
    for r in rows {
        writeln!(out, "{},{},{}", r.n, r.sphere, r.gamma).unwrap();
    }
    out
}

/// One word per line in compact syntax, sorted lexicographically by text.
pub fn word_list<'a>(words: impl IntoIterator<Item = &'a Word>) -> String {
    let sorted: BTreeSet<String> = words.into_iter().map(format_word).collect();
    let mut out = String::new();
    for w in sorted {
        out.push_str(&w);
        out.push('\n');
    }
    out
}

/// JSON shape of a polyomino: `{"cells":[[x,y],…],"area":…,"perimeter":…}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyominoRecord {
    pub cells: Vec<[i32; 2]>,
    pub area: u64,
    pub perimeter: u64,
}

impl From<&Polyomino> for PolyominoRecord {
    fn from(p: &Polyomino) -> Self {
        PolyominoRecord {
            cells: p.cells().iter().map(|&(x, y)| [x, y]).collect(),
            area: p.area(),
            perimeter: p.perimeter(),
        }
    }
}

pub fn polyomino_json(p: &Polyomino) -> String {
    serde_json::to_string(&PolyominoRecord::from(p)).expect("plain data serializes")
}

const UNIT: i32 = 20;
const MARGIN: i32 = 10;

/// SVG drawing of an oriented polyomino: filled cells, stroked boundary, a
/// dot on the basepoint and an arrow along the first boundary edge. The
/// y-axis points up.
pub fn polyomino_svg(ob: &OrientedBoundary) -> String {
    let poly = ob.polyomino();
    let (w, h) = poly.bounding_box();
    let (w, h) = (w as i32, h as i32);
    let width = w * UNIT + 2 * MARGIN;
    let height = h * UNIT + 2 * MARGIN;
    let px = |x: i32| MARGIN + x * UNIT;
    let py = |y: i32| MARGIN + (h - y) * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="crimson"/></marker></defs>"#
    )
    .unwrap();
    out.push_str("<g fill=\"lightsteelblue\" stroke=\"none\">\n");
    for &(x, y) in poly.cells() {
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}"/>"#,
            px(x),
            py(y + 1)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    let word = boundary_word(ob);
    let (bx, by) = ob.basepoint();
    let mut points = vec![(bx, by)];
    for l in word.letters() {
        let (x, y) = *points.last().unwrap();
        let (dx, dy) = l.step();
        points.push((x + dx as i32, y + dy as i32));
    }
    let path: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        path[..path.len() - 1].join(" ")
    )
    .unwrap();
    if points.len() > 1 {
        let ((x0, y0), (x1, y1)) = (points[0], points[1]);
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="crimson" stroke-width="3" marker-end="url(#arrow)"/>"#,
            px(x0),
            py(y0),
            (px(x0) + px(x1)) / 2,
            (py(y0) + py(y1)) / 2
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<circle cx="{}" cy="{}" r="4" fill="crimson"/>"#,
        px(bx),
        py(by)
    )
    .unwrap();
    writeln!(
        out,
        "<!-- word {} orientation {} -->",
        word,
        match ob.orientation() {
            Orientation::Positive => "positive",
            Orientation::Negative => "negative",
        }
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{geodesic_growth, Limits};
    use crate::word::parse_word;

    #[test]
    fn ball_csv_is_sorted() {
        let ball = DistanceBall::unbounded(1);
        assert_eq!(
            ball_csv(&ball),
            "n,m,k,dist\n-1,0,0,1\n0,-1,0,1\n0,0,0,0\n0,1,0,1\n1,0,0,1\n"
        );
    }

    #[test]
    fn growth_csv_rows() {
        let rows = geodesic_growth(2, &Limits::default()).unwrap();
        assert_eq!(growth_csv(&rows), "n,sphere,gamma\n0,1,1\n1,4,4\n2,12,12\n");
    }

    #[test]
    fn word_list_sorted() {
        let words = [
            parse_word("b").unwrap(),
            parse_word("a2").unwrap(),
            parse_word("A").unwrap(),
        ];
        assert_eq!(word_list(&words), "A\na2\nb\n");
    }

    #[test]
    fn json_and_svg() {
        let sq = Polyomino::rectangle(2, 2).unwrap();
        assert_eq!(
            polyomino_json(&sq),
            r#"{"cells":[[0,0],[0,1],[1,0],[1,1]],"area":4,"perimeter":8}"#
        );
        let ob = OrientedBoundary::new(sq, (0, 0), Orientation::Positive).unwrap();
        let svg = polyomino_svg(&ob);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<rect").count(), 4);
        assert!(svg.contains("<circle cx=\"10\" cy=\"50\""));
        assert!(svg.contains("word a2b2A2B2"));
    }
}
