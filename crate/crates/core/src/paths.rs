//! Lattice paths: the osculating-path picture of an ASTZ, the single-path
//! encoding when there is one left 1-column, left-turn coordinates, and the
//! pair operations (switching, shifting, LGV counting).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::binomial;
use crate::arrays::{ArrayError, Astz, ColumnKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("cannot parse path `{0}`")]
    Parse(String),
    #[error("the two paths do not intersect")]
    NoIntersection,
    #[error("expected exactly one left 1-column, found {0}")]
    NotSingle(u32),
    #[error("path geometry: {0}")]
    Geometry(String),
    #[error("row {row:?} violates bounds [{low}, {high}] or is not strictly increasing")]
    RowBounds { row: Vec<i64>, low: i64, high: i64 },
    #[error(transparent)]
    Array(#[from] ArrayError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    R,
    U,
    D,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::R => (1, 0),
            Step::U => (0, 1),
            Step::D => (0, -1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::R => 'R',
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// Parses a word over {R, U, D}.
pub fn steps_from_str(s: &str) -> Result<Vec<Step>, PathError> {
    s.chars()
        .map(|ch| match ch {
            'R' => Ok(Step::R),
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            _ => Err(PathError::Parse(s.to_string())),
        })
        .collect()
}

pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn shifted(self, dx: i64, dy: i64) -> Self {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn points(&self) -> Vec<Point> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = p.shifted(dx, dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, s| {
            let (dx, dy) = s.delta();
            p.shifted(dx, dy)
        })
    }

    pub fn shifted(&self, dx: i64, dy: i64) -> LatticePath {
        LatticePath::new(self.start.shifted(dx, dy), self.steps.clone())
    }

    pub fn intersects(&self, other: &LatticePath) -> bool {
        let mine: HashSet<Point> = self.points().into_iter().collect();
        other.points().iter().any(|p| mine.contains(p))
    }

    pub fn count(&self, s: Step) -> usize {
        self.steps.iter().filter(|&&t| t == s).count()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, steps_to_string(&self.steps))
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PathError::Parse(s.to_string());
        let s = s.trim();
        let (head, word) = s.split_once(':').ok_or_else(bad)?;
        let inner = head
            .strip_prefix('(')
            .and_then(|h| h.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (x, y) = inner.split_once(',').ok_or_else(bad)?;
        let x = x.trim().parse().map_err(|_| bad())?;
        let y = y.trim().parse().map_err(|_| bad())?;
        Ok(LatticePath::new(Point::new(x, y), steps_from_str(word)?))
    }
}

/// An r = 1 trapezoid as a monotone path: the left 1-column is at position
/// `-i`, the right 0-column at position `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinglePath {
    pub i: usize,
    pub j: usize,
    pub path: LatticePath,
}

/// Start point of the single path for left position `-i`.
pub fn single_start(l: usize, i: usize) -> Point {
    Point::new(3 - l as i64 - 2 * i as i64, 0)
}

// Cell (r, c) has coordinates x = c - (n + l - 2 + i), y = n + 1 - i - r.
fn origin_col(a: &Astz, i: usize) -> i64 {
    (a.n() + a.l() - 2 + i) as i64
}

/// Follows one path from the bottom of left column `c0` through the array.
/// Moving up it turns right at a 1; moving right it turns up at a -1, at
/// the bottom of a right 1-column and at a crossing (which makes the
/// crossing an osculation). It stops at the bottom of a right 0-column.
fn trace(a: &Astz, c0: usize) -> Result<(Vec<Step>, usize), PathError> {
    let (n, l) = (a.n(), a.l());
    let (mut r, mut c) = (c0, c0);
    let mut dir = if a.entry(r, c) == 1 { Step::R } else { Step::U };
    let mut steps = Vec::new();
    let limit = 4 * (n + l) * (n + l);
    loop {
        if steps.len() > limit {
            return Err(PathError::Geometry("path tracing did not terminate".into()));
        }
        match dir {
            Step::U => {
                if r == 1 {
                    return Err(PathError::Geometry(format!(
                        "path leaves the top at column {c}"
                    )));
                }
                r -= 1
            }
            _ => c += 1,
        }
        steps.push(dir);
        let (_, hi) = a.row_range(r);
        if c > hi {
            return Err(PathError::Geometry(format!("path leaves row {r}")));
        }
        if dir == Step::R && c >= n + l - 1 && r == a.bottom_row(c) {
            match a.column_kind(c) {
                ColumnKind::Zero => return Ok((steps, c)),
                ColumnKind::Ten => {
                    dir = Step::U;
                    continue;
                }
                ColumnKind::Eleven => {
                    return Err(PathError::Geometry(format!(
                        "path enters 11-column {c} sideways"
                    )))
                }
            }
        }
        match (dir, a.entry(r, c)) {
            (Step::U, 1) => dir = Step::R,
            (Step::R, -1) => dir = Step::U,
            (Step::U, -1) | (Step::R, 1) => {
                return Err(PathError::Geometry(format!(
                    "inconsistent vertex at ({r}, {c})"
                )))
            }
            (_, 0) if crossing(a, r, c) => {
                dir = if dir == Step::U { Step::R } else { Step::U };
            }
            _ => {}
        }
    }
}

// A zero entry with both a vertical and a horizontal edge through it.
fn crossing(a: &Astz, r: usize, c: usize) -> bool {
    let col: i64 = (1..=r).map(|t| a.entry(t, c) as i64).sum();
    let (lo, _) = a.row_range(r);
    let row: i64 = (lo..c).map(|t| a.entry(r, t) as i64).sum();
    col == 1 && row == 1
}

/// One path of the osculating family with its start and end positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsculatingPath {
    /// Left position, negative.
    pub from: i64,
    /// Right position, positive.
    pub to: i64,
    pub path: LatticePath,
}

/// The family of osculating paths, one per left 1-column, in the frame
/// x = c - (n + l - 1), y = n - r.
pub fn astz_to_osculating(a: &Astz) -> Result<Vec<OsculatingPath>, PathError> {
    if a.l() < 2 {
        return Err(ArrayError::WrongVariant("osculating paths need l >= 2".into()).into());
    }
    let (n, l) = (a.n(), a.l());
    let mut out = Vec::new();
    for c in 1..=n {
        if a.column_kind(c) == ColumnKind::Zero {
            continue;
        }
        let (steps, end_col) = trace(a, c)?;
        out.push(OsculatingPath {
            from: c as i64 - n as i64 - 1,
            to: (end_col - (n + l - 2)) as i64,
            path: LatticePath::new(
                Point::new(c as i64 - (n + l - 1) as i64, n as i64 - c as i64),
                steps,
            ),
        });
    }
    Ok(out)
}

pub fn single_astz_to_path(a: &Astz) -> Result<SinglePath, PathError> {
    let (i, j) = match a.single_indices() {
        Some(ij) => ij,
        None => {
            let r = (1..=a.n())
                .filter(|&c| a.column_kind(c) != ColumnKind::Zero)
                .count();
            return Err(PathError::NotSingle(r as u32));
        }
    };
    let c0 = a.left_col(i);
    let (steps, end_col) = trace(a, c0)?;
    if end_col != a.right_col(j) {
        return Err(PathError::Geometry(
            "single path ends at the wrong column".into(),
        ));
    }
    let path = LatticePath::new(Point::new(c0 as i64 - origin_col(a, i), 0), steps);
    Ok(SinglePath { i, j, path })
}

/// Rebuilds the unique r = 1 trapezoid whose single path is `path`.
pub fn path_to_single_astz(path: &LatticePath, n: usize, l: usize) -> Result<Astz, PathError> {
    let geo = |m: &str| PathError::Geometry(m.to_string());
    if l < 2 {
        return Err(geo("single paths need l >= 2"));
    }
    let s = path.start;
    let ii = 3 - l as i64 - s.x;
    if s.y != 0 || ii < 2 || ii % 2 != 0 {
        return Err(geo("start point is not of the form (-l-2i+3, 0)"));
    }
    let i = (ii / 2) as usize;
    let e = path.end();
    if e.x != e.y {
        return Err(geo("end point is not on the diagonal"));
    }
    let j = e.x + i as i64;
    if j < i as i64 || j > n as i64 || i > n {
        return Err(geo("need 1 <= i <= j <= n"));
    }
    let pts = path.points();
    if path.steps.contains(&Step::D) || pts.iter().any(|p| p.y < p.x) {
        return Err(geo("path must be a right/up path weakly above y = x"));
    }
    if path.steps.last() != Some(&Step::R) {
        return Err(geo("path must end with a right step"));
    }
    // Horizontal edges give row partial sums of 1; the row end is always 1.
    let ox = (n + l - 2 + i) as i64;
    let mut horiz = HashSet::new();
    for (t, st) in path.steps.iter().enumerate() {
        if *st == Step::R {
            let p = pts[t];
            let r = n as i64 + 1 - i as i64 - p.y;
            horiz.insert((r as usize, (p.x + ox) as usize));
        }
    }
    let mut rows = Vec::with_capacity(n);
    for r in 1..=n {
        let (lo, hi) = (r, 2 * n + l - 1 - r);
        let mut prev = 0i64;
        let mut row = Vec::with_capacity(hi - lo + 1);
        for c in lo..=hi {
            let s = i64::from(c == hi || horiz.contains(&(r, c)));
            row.push(s - prev);
            prev = s;
        }
        rows.push(row);
    }
    let a = Astz::new(l, rows)?;
    let back = single_astz_to_path(&a)?;
    if back.path != *path {
        return Err(geo("path does not follow the turning grammar"));
    }
    Ok(a)
}

/// Left-turn coordinates: `xs[m], ys[m]` is the corner of the m-th R step
/// immediately followed by a U step.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoRowedArray {
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurnBounds {
    pub x_low: i64,
    pub x_high: i64,
    pub y_low: i64,
    pub y_high: i64,
}

impl TurnBounds {
    pub fn for_indices(i: usize, j: usize, l: usize, p: u32) -> Self {
        let (i, j, l) = (i as i64, j as i64, l as i64);
        TurnBounds {
            x_low: -2 * i - l + 4,
            x_high: j - i - 1,
            y_low: p as i64,
            y_high: j - i - 1,
        }
    }
}

impl TwoRowedArray {
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Bounds, strict increase of both rows, and `xs[m] <= ys[m]`.
    pub fn satisfies(&self, b: &TurnBounds) -> bool {
        let inc = |v: &[i64]| v.windows(2).all(|w| w[0] < w[1]);
        self.xs.len() == self.ys.len()
            && inc(&self.xs)
            && inc(&self.ys)
            && self.xs.iter().all(|&x| b.x_low <= x && x <= b.x_high)
            && self.ys.iter().all(|&y| b.y_low <= y && y <= b.y_high)
            && self.xs.iter().zip(&self.ys).all(|(x, y)| x <= y)
    }
}

pub fn left_turns(path: &LatticePath) -> TwoRowedArray {
    let pts = path.points();
    let mut out = TwoRowedArray::default();
    for (k, w) in path.steps.windows(2).enumerate() {
        if w == [Step::R, Step::U] {
            out.xs.push(pts[k + 1].x);
            out.ys.push(pts[k + 1].y);
        }
    }
    out
}

/// Inverse of [`left_turns`] for right/up paths with known endpoints.
pub fn path_from_turns(
    start: Point,
    end: Point,
    turns: &TwoRowedArray,
) -> Result<LatticePath, PathError> {
    let mut steps = Vec::new();
    let mut cur = start;
    let corners = turns
        .xs
        .iter()
        .zip(&turns.ys)
        .map(|(&x, &y)| Point::new(x, y));
    for p in corners.chain(std::iter::once(end)) {
        if p.x < cur.x || p.y < cur.y {
            return Err(PathError::Geometry(format!(
                "turn {p} is not reachable from {cur}"
            )));
        }
        steps.extend(std::iter::repeat_n(Step::U, (p.y - cur.y) as usize));
        steps.extend(std::iter::repeat_n(Step::R, (p.x - cur.x) as usize));
        cur = p;
    }
    let path = LatticePath::new(start, steps);
    if left_turns(&path) != *turns {
        return Err(PathError::Geometry("turn set is not realisable".into()));
    }
    Ok(path)
}

/// Path from (-c, a-b+c-1) to (0, 0) with a horizontal step at height
/// `z_m - m - b + c` for each entry `z_m` (m 1-based) of the row.
pub fn row_to_path(zs: &[i64], a: i64, b: i64) -> Result<LatticePath, PathError> {
    let ok = zs.windows(2).all(|w| w[0] < w[1])
        && zs.first().is_none_or(|&z| z >= a)
        && zs.last().is_none_or(|&z| z <= b);
    if !ok {
        return Err(PathError::RowBounds {
            row: zs.to_vec(),
            low: a,
            high: b,
        });
    }
    let c = zs.len() as i64;
    let start = Point::new(-c, a - b + c - 1);
    let mut y = start.y;
    let mut steps = Vec::new();
    for (idx, &z) in zs.iter().enumerate() {
        let h = z - (idx as i64 + 1) - b + c;
        steps.extend(std::iter::repeat_n(Step::U, (h - y) as usize));
        steps.push(Step::R);
        y = h;
    }
    steps.extend(std::iter::repeat_n(Step::U, (-y).max(0) as usize));
    Ok(LatticePath::new(start, steps))
}

/// Reads a row back from a step word starting at height `start_y`:
/// a horizontal step at height h as the m-th one gives `h + m + b - c`.
pub fn row_from_steps(steps: &[Step], start_y: i64, b: i64, c: i64) -> Vec<i64> {
    let mut y = start_y;
    let mut m = 0;
    let mut out = Vec::new();
    for s in steps {
        match s {
            Step::U => y += 1,
            Step::D => y -= 1,
            Step::R => {
                m += 1;
                out.push(y + m + b - c);
            }
        }
    }
    out
}

/// Exchanges the tails of two paths after their shared point with the
/// largest x, ties broken by the largest y. Each result keeps its start.
pub fn top_right_switch(
    a: &LatticePath,
    b: &LatticePath,
) -> Result<(LatticePath, LatticePath), PathError> {
    let pa = a.points();
    let pb = b.points();
    let in_b: HashSet<Point> = pb.iter().copied().collect();
    let meet = pa
        .iter()
        .filter(|p| in_b.contains(p))
        .max()
        .copied()
        .ok_or(PathError::NoIntersection)?;
    let ia = pa
        .iter()
        .position(|&p| p == meet)
        .expect("shared point on a");
    let ib = pb
        .iter()
        .position(|&p| p == meet)
        .expect("shared point on b");
    let na = [&a.steps[..ia], &b.steps[ib..]].concat();
    let nb = [&b.steps[..ib], &a.steps[ia..]].concat();
    Ok((LatticePath::new(a.start, na), LatticePath::new(b.start, nb)))
}

/// Number of right/up paths from `s` to `e`.
pub fn count_paths(s: Point, e: Point) -> BigInt {
    let (dx, dy) = (e.x - s.x, e.y - s.y);
    if dx < 0 || dy < 0 {
        return BigInt::from(0);
    }
    binomial(dx + dy, dx)
}

/// 2x2 LGV determinant: paths `starts[0] -> ends[0]` and `starts[1] -> ends[1]`.
pub fn lgv_count(starts: [Point; 2], ends: [Point; 2]) -> BigInt {
    count_paths(starts[0], ends[0]) * count_paths(starts[1], ends[1])
        - count_paths(starts[0], ends[1]) * count_paths(starts[1], ends[0])
}

/// All right/up paths from `s` to `e`, in lexicographic step order (R < U).
pub fn all_paths(s: Point, e: Point) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let (dx, dy) = (e.x - s.x, e.y - s.y);
    if dx < 0 || dy < 0 {
        return out;
    }
    let mut cur = Vec::with_capacity((dx + dy) as usize);
    fn rec(r: i64, u: i64, cur: &mut Vec<Step>, s: Point, out: &mut Vec<LatticePath>) {
        if r == 0 && u == 0 {
            out.push(LatticePath::new(s, cur.clone()));
            return;
        }
        for (st, nr, nu) in [(Step::R, r - 1, u), (Step::U, r, u - 1)] {
            if nr >= 0 && nu >= 0 {
                cur.push(st);
                rec(nr, nu, cur, s, out);
                cur.pop();
            }
        }
    }
    rec(dx, dy, &mut cur, s, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn text_form_round_trips() {
        let p = path("(-5,0):URRRU");
        assert_eq!(p.to_string(), "(-5,0):URRRU");
        assert_eq!(p.end(), Point::new(-2, 2));
        assert!("(1,2)URU".parse::<LatticePath>().is_err());
        assert!("(1,2):UXU".parse::<LatticePath>().is_err());
    }

    #[test]
    fn turns_of_small_path() {
        let t = left_turns(&path("(0,0):URUR"));
        assert_eq!((t.xs, t.ys), (vec![1], vec![1]));
        assert!(left_turns(&path("(0,0):UURR")).is_empty());
    }

    #[test]
    fn turns_rebuild_path() {
        let p = path("(-5,0):URRRURRRRUURURRUR");
        let t = left_turns(&p);
        assert_eq!(path_from_turns(p.start, p.end(), &t).unwrap(), p);
    }

    #[test]
    fn row_paths() {
        let p = row_to_path(&[1, 2, 4, 5], 1, 5).unwrap();
        assert_eq!(p.to_string(), "(-4,-1):RRURR");
        let e = row_to_path(&[], 0, 0).unwrap();
        assert_eq!(e.to_string(), "(0,-1):U");
        let x = row_to_path(&[-2, 2, 3, 5], -4, 5).unwrap();
        assert_eq!(x.start, Point::new(-4, -6));
        assert_eq!((x.count(Step::R), x.count(Step::U)), (4, 6));
        assert_eq!(x.end(), Point::new(0, 0));
        assert!(row_to_path(&[3, 2], 0, 5).is_err());
        assert!(row_to_path(&[7], 0, 5).is_err());
        let back = row_from_steps(&x.steps, x.start.y, 5, 4);
        assert_eq!(back, vec![-2, 2, 3, 5]);
    }

    #[test]
    fn switch_at_single_crossing() {
        let a = path("(-1,0):RU");
        let b = path("(0,-1):UR");
        let (na, nb) = top_right_switch(&a, &b).unwrap();
        assert_eq!(na.to_string(), "(-1,0):RR");
        assert_eq!(nb.to_string(), "(0,-1):UU");
        let (a2, b2) = top_right_switch(&na, &nb).unwrap();
        assert_eq!((a2, b2), (a, b));
        assert_eq!(
            top_right_switch(&path("(0,0):R"), &path("(0,1):R")),
            Err(PathError::NoIntersection)
        );
    }

    #[test]
    fn lgv_examples() {
        let s = [Point::new(-2, -6), Point::new(-5, -1)];
        let e = [Point::new(0, -1), Point::new(0, 0)];
        assert_eq!(lgv_count(s, e), BigInt::from(98));
        let p = Point::new(0, 0);
        let q = Point::new(3, 3);
        assert_eq!(lgv_count([p, q], [p, q]), BigInt::from(1));
        assert_eq!(lgv_count([q, q], [p, p]), BigInt::from(0));
    }

    #[test]
    fn all_paths_count() {
        let v = all_paths(Point::new(0, 0), Point::new(3, 2));
        assert_eq!(v.len(), 10);
        assert!(all_paths(Point::new(0, 0), Point::new(-1, 2)).is_empty());
    }
}
