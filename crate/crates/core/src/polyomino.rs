//! Polyominoes of minimal perimeter and their boundary words.
//!
//! A polyomino is a finite edge-connected set of unit cells, each cell named
//! by its lower-left corner. Polyominoes are compared up to translation only:
//! the stored cell set is shifted so that the minimum `x` and minimum `y`
//! are both zero.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::arith::ceil_two_sqrt;
use crate::element::try_evaluate;
use crate::error::{check_ceiling, Error, Result};
use crate::metric::is_simple_path;
use crate::word::{Letter, Word};

pub type Cell = (i32, i32);
pub type Vertex = (i32, i32);

/// Largest area accepted by the constructive enumeration by default.
pub const DEFAULT_AREA_CEILING: u64 = 64;
/// Largest area accepted by the exhaustive enumeration.
pub const BRUTE_FORCE_CEILING: u64 = 14;

/// Minimal perimeter of a polyomino of area `k`: `2⌈2√k⌉`.
pub fn p(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidArgument("area must be positive".to_owned()));
    }
    Ok(2 * ceil_two_sqrt(k))
}

/// `(q₋(k), q₊(k))`: the range of side lengths `q` of rectangles with
/// half-perimeter `H = ⌈2√k⌉` and area `q(H − q) ≥ k`.
///
/// With `s = ⌊√(H² − 4k)⌋`, `q₋ = ⌈(H − s)/2⌉` and `q₊ = ⌊(H + s)/2⌋`; taking
/// the floor of the square root first does not change either rounding.
pub fn q_range(k: u64) -> Result<(u64, u64)> {
    let half = p(k)? / 2;
    let disc = (half as u128 * half as u128 - 4 * k as u128).isqrt() as u64;
    Ok(((half - disc).div_ceil(2), (half + disc) / 2))
}

pub fn q_minus(k: u64) -> Result<u64> {
    q_range(k).map(|r| r.0)
}

pub fn q_plus(k: u64) -> Result<u64> {
    q_range(k).map(|r| r.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

const NEIGHBOURS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

impl Polyomino {
    /// Validates and normalizes a cell set.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Polyomino> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let Some(min_x) = cells.iter().map(|c| c.0).min() else {
            return Err(Error::InvalidPolyomino("no cells"));
        };
        let min_y = cells.iter().map(|c| c.1).min().unwrap_or(0);
        let poly = Polyomino {
            cells: cells.iter().map(|&(x, y)| (x - min_x, y - min_y)).collect(),
        };
        if !poly.is_connected() {
            return Err(Error::InvalidPolyomino("cells are not edge-connected"));
        }
        Ok(poly)
    }

    /// `width × height` rectangle.
    pub fn rectangle(width: u32, height: u32) -> Result<Polyomino> {
        Polyomino::new((0..width as i32).flat_map(|x| (0..height as i32).map(move |y| (x, y))))
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn area(&self) -> u64 {
        self.cells.len() as u64
    }

    /// Number of unit edges between a cell and a non-cell.
    pub fn perimeter(&self) -> u64 {
        self.cells
            .iter()
            .map(|&(x, y)| {
                NEIGHBOURS
                    .iter()
                    .filter(|(dx, dy)| !self.cells.contains(&(x + dx, y + dy)))
                    .count() as u64
            })
            .sum()
    }

    /// `(width, height)` of the bounding box.
    pub fn bounding_box(&self) -> (u32, u32) {
        let w = self.cells.iter().map(|c| c.0).max().unwrap_or(-1) + 1;
        let h = self.cells.iter().map(|c| c.1).max().unwrap_or(-1) + 1;
        (w as u32, h as u32)
    }

    fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((x, y)) = stack.pop() {
            for (dx, dy) in NEIGHBOURS {
                let c = (x + dx, y + dy);
                if self.cells.contains(&c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Boundary edges oriented with the polyomino on the left, keyed by
    /// start vertex.
    pub fn boundary_edges(&self) -> HashMap<Vertex, Vec<Letter>> {
        let mut out: HashMap<Vertex, Vec<Letter>> = HashMap::new();
        for &(x, y) in &self.cells {
            if !self.cells.contains(&(x, y - 1)) {
                out.entry((x, y)).or_default().push(Letter::A);
            }
            if !self.cells.contains(&(x + 1, y)) {
                out.entry((x + 1, y)).or_default().push(Letter::B);
            }
            if !self.cells.contains(&(x, y + 1)) {
                out.entry((x + 1, y + 1)).or_default().push(Letter::AInv);
            }
            if !self.cells.contains(&(x - 1, y)) {
                out.entry((x, y + 1)).or_default().push(Letter::BInv);
            }
        }
        out
    }

    /// The boundary as a single counter-clockwise word starting from `start`,
    /// or `None` if the boundary is not one simple closed chain through it.
    fn trace_from(&self, edges: &HashMap<Vertex, Vec<Letter>>, start: Vertex) -> Option<Word> {
        if edges.values().any(|out| out.len() != 1) || !edges.contains_key(&start) {
            return None;
        }
        let mut word = Word::new();
        let mut v = start;
        loop {
            let l = edges[&v][0];
            word.push(l);
            let (dx, dy) = l.step();
            v = (v.0 + dx as i32, v.1 + dy as i32);
            if v == start {
                break;
            }
            if word.len() > edges.len() {
                return None;
            }
        }
        (word.len() == edges.len()).then_some(word)
    }

    /// True iff the boundary is a single simple closed chain, i.e. no holes
    /// and no cells meeting only at a corner.
    pub fn is_simply_connected(&self) -> bool {
        let edges = self.boundary_edges();
        let start = *self.cells.iter().next().expect("nonempty");
        self.trace_from(&edges, start).is_some()
    }

    /// Boundary vertices in sorted order.
    pub fn boundary_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<_> = self.boundary_edges().into_keys().collect();
        vs.sort_unstable();
        vs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    /// Counter-clockwise; the region lies to the left.
    Positive,
    Negative,
}

/// A simply connected polyomino with a chosen boundary vertex and direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedBoundary {
    polyomino: Polyomino,
    basepoint: Vertex,
    orientation: Orientation,
}

impl OrientedBoundary {
    pub fn new(polyomino: Polyomino, basepoint: Vertex, orientation: Orientation) -> Result<Self> {
        let edges = polyomino.boundary_edges();
        if !edges.contains_key(&basepoint) {
            return Err(Error::InvalidPolyomino("basepoint is not on the boundary"));
        }
        if polyomino.trace_from(&edges, basepoint).is_none() {
            return Err(Error::InvalidPolyomino(
                "boundary is not a single simple closed chain",
            ));
        }
        Ok(OrientedBoundary {
            polyomino,
            basepoint,
            orientation,
        })
    }

    pub fn polyomino(&self) -> &Polyomino {
        &self.polyomino
    }

    pub fn basepoint(&self) -> Vertex {
        self.basepoint
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Every basepoint and both orientations of a simply connected polyomino.
    pub fn all_of(polyomino: &Polyomino) -> Result<Vec<OrientedBoundary>> {
        let mut out = Vec::new();
        for v in polyomino.boundary_vertices() {
            for o in [Orientation::Positive, Orientation::Negative] {
                out.push(OrientedBoundary::new(polyomino.clone(), v, o)?);
            }
        }
        Ok(out)
    }
}

/// Reads the boundary from the basepoint. The positive direction keeps the
/// cells on the left; the negative word is the inverse of the positive one.
pub fn boundary_word(ob: &OrientedBoundary) -> Word {
    let edges = ob.polyomino.boundary_edges();
    let ccw = ob
        .polyomino
        .trace_from(&edges, ob.basepoint)
        .expect("validated on construction");
    match ob.orientation {
        Orientation::Positive => ccw,
        Orientation::Negative => ccw.inverse(),
    }
}

/// Inverse of [`boundary_word`]: the polyomino enclosed by a simple closed
/// word, with the start of the word as basepoint.
pub fn word_to_polyomino(w: &Word) -> Result<OrientedBoundary> {
    if w.is_empty() || w.displacement() != (0, 0) {
        return Err(Error::NotClosed(w.to_string()));
    }
    if !is_simple_path(w) {
        return Err(Error::NotSimple(w.to_string()));
    }
    let area = try_evaluate(w)?.k;
    let orientation = if area > 0 {
        Orientation::Positive
    } else {
        Orientation::Negative
    };
    // Scanline fill: each row of cells lies between consecutive pairs of
    // vertical edges crossing it.
    let mut crossings: HashMap<i32, Vec<i32>> = HashMap::new();
    let trace = w.plane_trace();
    for pair in trace.windows(2) {
        let ((x0, y0), (x1, y1)) = (pair[0], pair[1]);
        if x0 == x1 {
            crossings
                .entry(y0.min(y1) as i32)
                .or_default()
                .push(x0 as i32);
        }
    }
    let mut cells = Vec::new();
    for (y, mut xs) in crossings {
        xs.sort_unstable();
        for span in xs.chunks(2) {
            cells.extend((span[0]..span[1]).map(|x| (x, y)));
        }
    }
    let min_x = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let min_y = cells.iter().map(|c| c.1).min().unwrap_or(0);
    let polyomino = Polyomino::new(cells)?;
    if polyomino.area() != area.unsigned_abs() {
        return Err(Error::Internal(
            "enclosed area disagrees with the word's area",
        ));
    }
    let ob = OrientedBoundary::new(polyomino, (-min_x, -min_y), orientation)?;
    if boundary_word(&ob) != *w {
        return Err(Error::Internal(
            "boundary word does not reproduce the input",
        ));
    }
    Ok(ob)
}

/// Weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<YoungDiagram> {
        if rows.contains(&0) || rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidArgument(format!(
                "{rows:?} is not a weakly decreasing sequence of positive rows"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn area(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// All diagrams of the given area with at most `max_rows` rows, each of
    /// length at most `max_width`.
    pub fn all_in_box(area: u32, max_width: u32, max_rows: u32) -> Vec<YoungDiagram> {
        fn go(
            rest: u32,
            cap: u32,
            rows_left: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<YoungDiagram>,
        ) {
            if rest == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for r in (1..=cap.min(rest)).rev() {
                cur.push(r);
                go(rest - r, r, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(area, max_width, max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// Cells of the diagram anchored in the lower-left corner.
    fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len as i32).map(move |x| (x, y as i32)))
    }
}

/// All ways to write `total` as an ordered sum of four nonnegative parts.
fn four_part_compositions(total: u32) -> impl Iterator<Item = [u32; 4]> {
    (0..=total).flat_map(move |a| {
        (0..=total - a)
            .flat_map(move |b| (0..=total - a - b).map(move |c| [a, b, c, total - a - b - c]))
    })
}

/// Every polyomino of area `k` and perimeter `p(k)`, obtained by deleting
/// four corner Young diagrams from each rectangle of perimeter `p(k)` and
/// area at least `k`. Candidates are verified after deletion. Sorted.
pub fn enumerate_min_perimeter(k: u64, ceiling: u64) -> Result<Vec<Polyomino>> {
    check_ceiling("polyomino area", k, ceiling)?;
    let target = p(k)?;
    let half = target / 2;
    let (lo, hi) = q_range(k)?;
    let mut found = BTreeSet::new();
    for width in lo..=hi {
        let height = half - width;
        let (w, h) = (width as i32, height as i32);
        let surplus = (width * height - k) as u32;
        for parts in four_part_compositions(surplus) {
            let choices: Vec<Vec<YoungDiagram>> = parts
                .iter()
                .map(|&a| YoungDiagram::all_in_box(a, width as u32, height as u32))
                .collect();
            for bl in &choices[0] {
                for br in &choices[1] {
                    for tl in &choices[2] {
                        for tr in &choices[3] {
                            let mut removed = BTreeSet::new();
                            removed.extend(bl.cells());
                            removed.extend(br.cells().map(|(x, y)| (w - 1 - x, y)));
                            removed.extend(tl.cells().map(|(x, y)| (x, h - 1 - y)));
                            removed.extend(tr.cells().map(|(x, y)| (w - 1 - x, h - 1 - y)));
                            if removed.len() as u32 != surplus {
                                continue;
                            }
                            let cells = (0..w)
                                .flat_map(|x| (0..h).map(move |y| (x, y)))
                                .filter(|c| !removed.contains(c));
                            let Ok(poly) = Polyomino::new(cells) else {
                                continue;
                            };
                            if poly.area() == k
                                && poly.perimeter() == target
                                && poly.is_simply_connected()
                            {
                                found.insert(poly);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Exhaustive generation of all fixed polyominoes of area `k` (Redelmeier's
/// method), filtered to perimeter `p(k)`. Sorted.
pub fn brute_force_min_perimeter(k: u64) -> Result<Vec<Polyomino>> {
    check_ceiling("brute-force polyomino area", k, BRUTE_FORCE_CEILING)?;
    let target = p(k)?;
    let size = k as usize;
    let mut found = Vec::new();
    for_each_fixed_polyomino(size, |cells, perimeter| {
        if perimeter as u64 == target {
            found.push(Polyomino::new(cells.iter().copied()).expect("generated connected"));
        }
    });
    found.sort();
    Ok(found)
}

/// Calls `visit(cells, perimeter)` once per fixed polyomino of `size` cells.
pub fn for_each_fixed_polyomino(size: usize, mut visit: impl FnMut(&[Cell], u32)) {
    struct Search<'a, F> {
        size: usize,
        width: usize,
        seen: Vec<bool>,
        occupied: Vec<bool>,
        poly: Vec<Cell>,
        visit: &'a mut F,
    }

    impl<F: FnMut(&[Cell], u32)> Search<'_, F> {
        // x in [-size, size], y in [-1, size]; the margins are never entered.
        fn index(&self, (x, y): Cell) -> usize {
            (y + 1) as usize * self.width + (x + self.size as i32) as usize
        }

        fn admissible(&self, (x, y): Cell) -> bool {
            y > 0 || (y == 0 && x >= 0)
        }

        fn run(&mut self, mut untried: Vec<Cell>, perimeter: u32) {
            while let Some(c) = untried.pop() {
                let ci = self.index(c);
                let touching = NEIGHBOURS
                    .iter()
                    .filter(|(dx, dy)| self.occupied[self.index((c.0 + dx, c.1 + dy))])
                    .count() as u32;
                let perimeter = perimeter + 4 - 2 * touching;
                self.occupied[ci] = true;
                self.poly.push(c);
                if self.poly.len() == self.size {
                    (self.visit)(&self.poly, perimeter);
                } else {
                    let mut next = untried.clone();
                    let mut marked = Vec::new();
                    for (dx, dy) in NEIGHBOURS {
                        let nb = (c.0 + dx, c.1 + dy);
                        let ni = self.index(nb);
                        if self.admissible(nb) && !self.seen[ni] {
                            self.seen[ni] = true;
                            marked.push(ni);
                            next.push(nb);
                        }
                    }
                    self.run(next, perimeter);
                    for ni in marked {
                        self.seen[ni] = false;
                    }
                }
                self.poly.pop();
                self.occupied[ci] = false;
            }
        }
    }

    if size == 0 {
        return;
    }
    let width = 2 * size + 1;
    let cells = width * (size + 2);
    let mut search = Search {
        size,
        width,
        seen: vec![false; cells],
        occupied: vec![false; cells],
        poly: Vec::with_capacity(size),
        visit: &mut visit,
    };
    let origin = search.index((0, 0));
    search.seen[origin] = true;
    search.run(vec![(0, 0)], 0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::evaluate;
    use crate::word::w;

    fn cells(list: &[Cell]) -> Polyomino {
        Polyomino::new(list.iter().copied()).unwrap()
    }

    #[test]
    fn perimeter_formulas() {
        assert_eq!(p(1).unwrap(), 4);
        assert_eq!(q_range(1).unwrap(), (1, 1));
        assert_eq!(p(19).unwrap(), 18);
        assert_eq!(q_range(19).unwrap(), (4, 5));
        assert_eq!(p(4).unwrap(), 8);
        assert_eq!(q_range(4).unwrap(), (2, 2));
        assert!(p(0).is_err());
    }

    #[test]
    fn q_range_characterisation() {
        for k in 1..=2000u64 {
            let half = p(k).unwrap() / 2;
            assert_eq!(p(k).unwrap() % 2, 0);
            let (lo, hi) = q_range(k).unwrap();
            assert!(lo <= hi);
            for q in 0..=half {
                assert_eq!(q * (half - q) >= k, (lo..=hi).contains(&q), "k={k} q={q}");
            }
        }
    }

    #[test]
    fn area_and_perimeter() {
        let unit = Polyomino::rectangle(1, 1).unwrap();
        assert_eq!((unit.area(), unit.perimeter()), (1, 4));
        let rect = Polyomino::rectangle(4, 5).unwrap();
        assert_eq!((rect.area(), rect.perimeter()), (20, 18));
        let ell = cells(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!((ell.area(), ell.perimeter()), (3, 8));
        assert_eq!(ell.perimeter(), p(3).unwrap());
    }

    #[test]
    fn normalization_and_validation() {
        assert_eq!(cells(&[(5, 7), (6, 7)]), cells(&[(0, 0), (1, 0)]));
        assert!(Polyomino::new([(0, 0), (1, 1)]).is_err());
        assert!(Polyomino::new(Vec::<Cell>::new()).is_err());
        assert!(YoungDiagram::new(vec![2, 3]).is_err());
        assert_eq!(YoungDiagram::new(vec![3, 1, 1]).unwrap().area(), 5);
    }

    #[test]
    fn holes_and_pinches_are_not_simply_connected() {
        let ring: Vec<Cell> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&c| c != (1, 1))
            .collect();
        assert!(!cells(&ring).is_simply_connected());
        // (1,2) and (2,1) meet only at the vertex (2,2).
        let pinch = cells(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)]);
        assert!(!pinch.is_simply_connected());
        assert!(cells(&[(0, 0), (1, 0), (1, 1)]).is_simply_connected());
        let corner = cells(&[
            (0, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (2, 0),
            (3, 0),
            (1, -1),
            (2, -1),
        ]);
        assert!(!corner.is_simply_connected());
    }

    #[test]
    fn partitions_in_box() {
        let all = YoungDiagram::all_in_box(4, 4, 4);
        assert_eq!(all.len(), 5);
        assert_eq!(YoungDiagram::all_in_box(4, 2, 2).len(), 1);
        assert_eq!(
            YoungDiagram::all_in_box(0, 3, 3),
            vec![YoungDiagram { rows: vec![] }]
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_min_perimeter(1, 64).unwrap(),
            vec![Polyomino::rectangle(1, 1).unwrap()]
        );
        assert_eq!(enumerate_min_perimeter(3, 64).unwrap().len(), 6);
        assert_eq!(
            enumerate_min_perimeter(4, 64).unwrap(),
            vec![Polyomino::rectangle(2, 2).unwrap()]
        );
        let dominoes = brute_force_min_perimeter(2).unwrap();
        let mut expected = vec![
            Polyomino::rectangle(1, 2).unwrap(),
            Polyomino::rectangle(2, 1).unwrap(),
        ];
        expected.sort();
        assert_eq!(dominoes, expected);
        assert_eq!(
            brute_force_min_perimeter(1).unwrap(),
            vec![Polyomino::rectangle(1, 1).unwrap()]
        );
        assert!(enumerate_min_perimeter(65, 64).is_err());
        assert!(brute_force_min_perimeter(15).is_err());
    }

    #[test]
    fn fixed_polyomino_counts() {
        // Fixed polyomino counts 1, 2, 6, 19, 63, 216, 760, 2725.
        let expected = [1usize, 2, 6, 19, 63, 216, 760, 2725];
        for (i, &count) in expected.iter().enumerate() {
            let mut seen = 0;
            for_each_fixed_polyomino(i + 1, |_, _| seen += 1);
            assert_eq!(seen, count, "size {}", i + 1);
        }
    }

    #[test]
    fn boundary_words() {
        let unit = Polyomino::rectangle(1, 1).unwrap();
        let ob = OrientedBoundary::new(unit, (0, 0), Orientation::Positive).unwrap();
        assert_eq!(boundary_word(&ob), w("abAB"));
        let tall = Polyomino::rectangle(1, 2).unwrap();
        let ob = OrientedBoundary::new(tall, (0, 0), Orientation::Positive).unwrap();
        let word = boundary_word(&ob);
        assert_eq!(word, w("ab2AB2"));
        assert_eq!(evaluate(&word).k, 2);
        let neg =
            OrientedBoundary::new(ob.polyomino().clone(), (0, 0), Orientation::Negative).unwrap();
        assert_eq!(boundary_word(&neg), w("ab2AB2").inverse());
        assert!(OrientedBoundary::new(
            Polyomino::rectangle(3, 3).unwrap(),
            (1, 1),
            Orientation::Positive
        )
        .is_err());
    }

    #[test]
    fn negative_staircase_word_is_not_minimal() {
        let word = w("bababa3B3ABABA3b2");
        let ob = word_to_polyomino(&word).unwrap();
        assert_eq!(ob.orientation(), Orientation::Negative);
        assert_eq!(ob.polyomino().area(), 19);
        assert_eq!(ob.polyomino().perimeter(), 20);
        assert!(ob.polyomino().perimeter() > p(19).unwrap());
        assert_eq!(boundary_word(&ob), word);
    }

    #[test]
    fn word_to_polyomino_rejects() {
        assert!(matches!(
            word_to_polyomino(&w("ab")),
            Err(Error::NotClosed(_))
        ));
        assert!(matches!(
            word_to_polyomino(&w("")),
            Err(Error::NotClosed(_))
        ));
        assert!(matches!(
            word_to_polyomino(&w("aA")),
            Err(Error::NotSimple(_))
        ));
        assert!(matches!(
            word_to_polyomino(&w("ababABAB")),
            Err(Error::NotSimple(_))
        ));
    }
}
