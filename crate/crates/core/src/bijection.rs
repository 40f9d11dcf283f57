//! Weight-preserving bijection between r = 1 trapezoids with right 0-column
//! at position j and one-row partitions with j parts, its inverse, and the
//! simpler reflection-based bijection that keeps only (p, q).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrays::{astz_stats, csspp_stats, ArrayError, Astz, Csspp};
use crate::paths::{
    left_turns, path_from_turns, path_to_single_astz, row_from_steps, row_to_path,
    single_astz_to_path, single_start, top_right_switch, LatticePath, PathError, Point, Step,
    TwoRowedArray,
};

/// Pipeline stage, attached to internal invariant failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    PathExtraction,
    TurnEncoding,
    Truncation,
    Placement,
    Shuffle,
    Finishing,
    Readout,
    Unshuffle,
    Insertion,
    Reconstruction,
    Reflection,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("partition has {j} parts but n = {n}")]
    TooManyParts { j: usize, n: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invariant broken at stage {stage}: {detail}")]
    Invariant { stage: Stage, detail: String },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Array(#[from] ArrayError),
}

fn broken(stage: Stage, detail: impl Into<String>) -> BijectionError {
    BijectionError::Invariant {
        stage,
        detail: detail.into(),
    }
}

fn ensure(cond: bool, stage: Stage, detail: &str) -> Result<(), BijectionError> {
    if cond {
        Ok(())
    } else {
        Err(broken(stage, detail))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rotation {
    #[serde(rename = "cw")]
    Clockwise,
    #[serde(rename = "ccw")]
    Counterclockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reflection {
    #[serde(rename = "h")]
    HorizontalAxis,
    #[serde(rename = "v")]
    VerticalAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BijectionConfig {
    pub d: u32,
    pub rotation: Rotation,
    pub reflection: Reflection,
}

impl BijectionConfig {
    /// d = 1, clockwise, vertical axis: the convention of the printed examples.
    pub const CANONICAL: BijectionConfig = BijectionConfig {
        d: 1,
        rotation: Rotation::Clockwise,
        reflection: Reflection::VerticalAxis,
    };

    pub fn new(d: u32, rotation: Rotation, reflection: Reflection) -> Self {
        BijectionConfig {
            d,
            rotation,
            reflection,
        }
    }

    /// All rotation/reflection variants for every d in 1..=l-1.
    pub fn all(l: usize) -> Vec<BijectionConfig> {
        let mut v = Vec::new();
        for d in 1..l as u32 {
            for rot in [Rotation::Clockwise, Rotation::Counterclockwise] {
                for refl in [Reflection::VerticalAxis, Reflection::HorizontalAxis] {
                    v.push(BijectionConfig::new(d, rot, refl));
                }
            }
        }
        v
    }

    fn check(&self, k: u32) -> Result<(), BijectionError> {
        if self.d < 1 || self.d > k {
            return Err(BijectionError::Config(format!(
                "d = {} outside 1..={k}",
                self.d
            )));
        }
        Ok(())
    }
}

impl Default for BijectionConfig {
    fn default() -> Self {
        BijectionConfig::CANONICAL
    }
}

fn rotate(steps: &[Step], rot: Rotation) -> Vec<Step> {
    let mut s: Vec<Step> = steps
        .iter()
        .map(|&t| if t == Step::U { Step::R } else { Step::D })
        .collect();
    if rot == Rotation::Counterclockwise {
        s.reverse();
    }
    s
}

fn unrotate(steps: &[Step], rot: Rotation) -> Vec<Step> {
    let mut s: Vec<Step> = steps
        .iter()
        .map(|&t| if t == Step::D { Step::R } else { Step::U })
        .collect();
    if rot == Rotation::Counterclockwise {
        s.reverse();
    }
    s
}

fn reflect(steps: &[Step], refl: Reflection) -> Vec<Step> {
    let mut s: Vec<Step> = steps
        .iter()
        .map(|&t| if t == Step::U { Step::D } else { t })
        .collect();
    if refl == Reflection::VerticalAxis {
        s.reverse();
    }
    s
}

fn unreflect(steps: &[Step], refl: Reflection) -> Vec<Step> {
    let mut s: Vec<Step> = steps
        .iter()
        .map(|&t| if t == Step::D { Step::U } else { t })
        .collect();
    if refl == Reflection::VerticalAxis {
        s.reverse();
    }
    s
}

/// South-east path of a one-row partition: starts at height j+k-1 and
/// records each later part lambda as a right step at height lambda - 1.
fn partition_path(parts: &[u32], k: u32) -> Vec<Step> {
    let j = parts.len() as i64;
    let mut y = j + k as i64 - 1;
    let mut s = Vec::new();
    for &lam in &parts[1..] {
        let h = lam as i64 - 1;
        s.extend(std::iter::repeat_n(Step::D, (y - h).max(0) as usize));
        s.push(Step::R);
        y = h;
    }
    s.extend(std::iter::repeat_n(Step::D, y.max(0) as usize));
    s
}

fn path_parts(steps: &[Step], j: usize, k: u32) -> Vec<i64> {
    let mut y = (j as i64) + k as i64 - 1;
    let mut parts = vec![y + 1];
    for s in steps {
        match s {
            Step::D => y -= 1,
            _ => parts.push(y + 1),
        }
    }
    parts
}

fn to_partition(parts: Vec<i64>, k: u32, stage: Stage) -> Result<Csspp, BijectionError> {
    if parts.iter().any(|&v| v < 1) {
        return Err(broken(stage, format!("non-positive part in {parts:?}")));
    }
    Csspp::partition(k, parts.into_iter().map(|v| v as u32).collect())
        .map_err(|e| broken(stage, e.to_string()))
}

/// Appends the vertical step and the q height-0 right steps, then puts the
/// p-step (R if p = 1, else D) back at index `idx`.
fn insert_tail(lower: &[Step], idx: usize, p: u32, q: u32) -> Result<Vec<Step>, BijectionError> {
    let mut s = lower.to_vec();
    s.push(Step::D);
    s.extend(std::iter::repeat_n(Step::R, q as usize));
    ensure(idx <= s.len(), Stage::Finishing, "tail index out of range")?;
    s.insert(idx, if p == 1 { Step::R } else { Step::D });
    Ok(s)
}

fn remove_tail(lower: &[Step], idx: usize, q: u32) -> Result<(Vec<Step>, u32), BijectionError> {
    ensure(
        idx < lower.len(),
        Stage::Finishing,
        "tail index out of range",
    )?;
    let mut s = lower.to_vec();
    let p = u32::from(s.remove(idx) == Step::R);
    let q = q as usize;
    let ok = s.len() > q
        && s[s.len() - q..].iter().all(|&t| t == Step::R)
        && s[s.len() - q - 1] == Step::D;
    ensure(ok, Stage::Finishing, "tail does not end with D R^q")?;
    s.truncate(s.len() - q - 1);
    Ok((s, p))
}

/// The unique trapezoid with i = j and its partition (j + l - 1)^j.
pub fn special_case_ij(j: usize, n: usize, l: usize) -> Result<(Astz, Csspp), BijectionError> {
    if j < 1 || j > n || l < 2 {
        return Err(BijectionError::Config(format!(
            "need 1 <= j <= n and l >= 2 (j={j}, n={n}, l={l})"
        )));
    }
    let mut rows: Vec<Vec<i64>> = (1..=n)
        .map(|r| {
            let mut row = vec![0; 2 * n + l - 2 * r];
            *row.last_mut().expect("rows are non-empty") = 1;
            row
        })
        .collect();
    let row = &mut rows[n - j];
    *row.last_mut().expect("non-empty") = 0;
    row[0] = 1;
    let a = Astz::new(l, rows)?;
    let c = Csspp::partition((l - 1) as u32, vec![(j + l - 1) as u32; j])?;
    Ok((a, c))
}

/// Shifts `y` down and `x` up by one unit and switches their tails at the
/// top-right shared point. Returns the new (x, y): the path ending where `x`
/// ended and the one ending where `y` ended.
pub fn shuffle_once(
    x: &LatticePath,
    y: &LatticePath,
) -> Result<(LatticePath, LatticePath), PathError> {
    let (ny, nx) = top_right_switch(&y.shifted(0, -1), &x.shifted(0, 1))?;
    Ok((nx, ny))
}

/// Start points (S_x, S_y) of the path pair at shuffle level `t`.
pub fn pair_starts(t: i64, j: i64, l: i64, mu: i64, p: i64, q: i64) -> (Point, Point) {
    (
        Point::new(-mu, -j - t - l + 4 + mu + q),
        Point::new(-mu - p - q, -j + t + mu + p + q),
    )
}

pub const END_X: Point = Point::new(0, -1);
pub const END_Y: Point = Point::new(0, 0);

pub fn astz_to_partition(a: &Astz, cfg: &BijectionConfig) -> Result<Csspp, BijectionError> {
    let l = a.l();
    if l < 2 {
        return Err(BijectionError::Config("the bijection needs l >= 2".into()));
    }
    let k = (l - 1) as u32;
    cfg.check(k)?;
    let sp = single_astz_to_path(a)?;
    let st = astz_stats(a)?;
    let (i, j) = (sp.i, sp.j);
    let (mu, p, q) = (st.mu, st.p, st.q);
    if i == j {
        return Ok(special_case_ij(j, a.n(), l)?.1);
    }
    if l == 2 && i == 1 && mu == 0 && p == 0 && q as usize == j - 1 {
        let mut parts = vec![(j + 1) as u32];
        parts.extend(std::iter::repeat_n(1, j - 1));
        return Ok(Csspp::partition(k, parts)?);
    }
    let (ii, jj, ll) = (i as i64, j as i64, l as i64);
    let (mu_, p_, q_) = (mu as i64, p as i64, q as i64);

    let turns = left_turns(&sp.path);
    ensure(
        turns.len() == (mu + q) as usize,
        Stage::TurnEncoding,
        "turn count differs from mu + q",
    )?;
    let b = jj - ii - 1;

    let xpath = row_to_path(&turns.xs, -2 * ii - ll + 4, b)?;
    let diag: Vec<usize> = (0..turns.len())
        .filter(|&m| turns.xs[m] == turns.ys[m])
        .collect();
    ensure(
        diag.len() == q as usize,
        Stage::Truncation,
        "diagonal turns differ from q",
    )?;
    let mut xst = Vec::new();
    let mut r_idx = 0;
    for &s in &xpath.steps {
        if s == Step::R {
            let drop = diag.contains(&r_idx);
            r_idx += 1;
            if drop {
                continue;
            }
        }
        xst.push(s);
    }
    let mut yst = row_to_path(&turns.ys, p_, b)?.steps;
    if p == 0 {
        ensure(
            yst.first() == Some(&Step::R),
            Stage::Truncation,
            "y-path must open with R when p = 0",
        )?;
        yst.remove(0);
    }
    ensure(
        xst.last() == Some(&Step::U),
        Stage::Truncation,
        "x-path must close with U",
    )?;
    xst.pop();
    yst.push(Step::R);

    let (sx, sy) = pair_starts(ii, jj, ll, mu_, p_, q_);
    let mut x = LatticePath::new(sx, xst);
    let mut y = LatticePath::new(sy, yst);
    ensure(
        x.end() == END_X && y.end() == END_Y,
        Stage::Placement,
        "wrong end points",
    )?;
    ensure(
        !x.intersects(&y),
        Stage::Placement,
        "placed paths intersect",
    )?;

    for _ in 1..i {
        let (nx, ny) = shuffle_once(&x, &y).map_err(|e| broken(Stage::Shuffle, e.to_string()))?;
        ensure(
            nx.end() == END_X && ny.end() == END_Y,
            Stage::Shuffle,
            "wrong end points",
        )?;
        x = nx;
        y = ny;
    }

    let upper = rotate(&y.steps, cfg.rotation);
    let lower = reflect(&x.steps, cfg.reflection);
    let tail = insert_tail(&lower, (k - cfg.d) as usize, p, q)?;
    let full = [upper, tail].concat();
    to_partition(path_parts(&full, j, k), k, Stage::Readout)
}

/// Adds one entry to `xs` using `ys`, searching from index `from`: at the
/// first a with `xs[a] >= ys[a]` the entry `ys[a]` goes in and every later
/// entry moves up by one; without such a, `ys[len]` is appended. Returns the
/// new row and the index after the inserted entry.
pub fn insert_entry_from(xs: &[i64], ys: &[i64], from: usize) -> (Vec<i64>, usize) {
    match (from..xs.len()).find(|&a| xs[a] >= ys[a]) {
        Some(a) => {
            let mut out = xs[..a].to_vec();
            out.push(ys[a]);
            out.extend(xs[a..].iter().map(|v| v + 1));
            (out, a + 1)
        }
        None => {
            let a = xs.len();
            let mut out = xs.to_vec();
            out.push(ys[a]);
            (out, a + 1)
        }
    }
}

pub fn insert_entry(xs: &[i64], ys: &[i64]) -> Vec<i64> {
    insert_entry_from(xs, ys, 0).0
}

fn partition_profile(c: &Csspp, d: u32) -> Result<(usize, u32, u32, u32, u32), BijectionError> {
    if !c.is_one_row() || c.parts().is_empty() {
        return Err(BijectionError::Malformed(
            "expected a one-row partition with at least one part".into(),
        ));
    }
    let k = c.class();
    if k < 1 {
        return Err(BijectionError::Config("class must be at least 1".into()));
    }
    let s = csspp_stats(c, d)?;
    Ok((c.parts().len(), k, s.mu, s.p, s.q))
}

pub fn partition_to_astz(
    c: &Csspp,
    n: usize,
    cfg: &BijectionConfig,
) -> Result<Astz, BijectionError> {
    cfg.check(c.class())?;
    let (j, k, mu, p, q) = partition_profile(c, cfg.d)?;
    if j > n {
        return Err(BijectionError::TooManyParts { j, n });
    }
    let l = (k + 1) as usize;
    if mu == 0 && p == 0 && q == 0 {
        return Ok(special_case_ij(j, n, l)?.0);
    }
    if k == 1 && mu == 0 && p == 0 && q as usize == j - 1 {
        let mut steps = vec![Step::R];
        for _ in 1..j {
            steps.extend([Step::U, Step::R]);
        }
        return Ok(path_to_single_astz(
            &LatticePath::new(single_start(l, 1), steps),
            n,
            l,
        )?);
    }
    let (jj, kk, ll) = (j as i64, k as i64, l as i64);
    let (mu_, p_, q_) = (mu as i64, p as i64, q as i64);

    let full = partition_path(c.parts(), k);
    ensure(
        full.len() >= j - 1,
        Stage::Finishing,
        "partition path too short",
    )?;
    let (upper, lower_full) = full.split_at(j - 1);
    let (lower, pp) = remove_tail(lower_full, (k - cfg.d) as usize, q)?;
    ensure(
        pp == p,
        Stage::Finishing,
        "p-step disagrees with the statistics",
    )?;

    let mut y = LatticePath::new(
        Point::new(-mu_ - p_ - q_, -jj + mu_ + p_ + q_ + 1),
        unrotate(upper, cfg.rotation),
    );
    let mut x = LatticePath::new(
        Point::new(-mu_, -jj - kk + mu_ + q_ + 2),
        unreflect(&lower, cfg.reflection),
    );
    ensure(
        x.end() == END_X && y.end() == END_Y,
        Stage::Placement,
        "wrong end points",
    )?;

    let mut i = 1usize;
    while x.intersects(&y) {
        let (a, bb) =
            top_right_switch(&y, &x).map_err(|e| broken(Stage::Unshuffle, e.to_string()))?;
        x = bb.shifted(0, -1);
        y = a.shifted(0, 1);
        i += 1;
        ensure(i <= j, Stage::Unshuffle, "too many switches")?;
    }
    let ii = i as i64;

    ensure(
        y.steps.last() == Some(&Step::R),
        Stage::Unshuffle,
        "y-path must close with R",
    )?;
    let mut yst = y.steps[..y.steps.len() - 1].to_vec();
    let mut xst = x.steps.clone();
    xst.push(Step::U);
    if p == 0 {
        yst.insert(0, Step::R);
    }
    let b = jj - ii - 1;
    let cc = mu_ + q_;
    let ys = row_from_steps(&yst, p_ - b + cc - 1, b, cc);
    let mut xs = row_from_steps(&xst, -2 * ii - ll + 4 - b + cc - 1, b, cc);
    ensure(
        ys.len() == xs.len() + q as usize,
        Stage::Insertion,
        "row lengths disagree",
    )?;
    let mut pos = 0;
    for _ in 0..q {
        let (nx, np) = insert_entry_from(&xs, &ys, pos);
        xs = nx;
        pos = np;
    }
    let turns = TwoRowedArray { xs, ys };
    let path = path_from_turns(single_start(l, i), Point::new(jj - ii, jj - ii), &turns)
        .map_err(|e| broken(Stage::Reconstruction, e.to_string()))?;
    path_to_single_astz(&path, n, l).map_err(|e| broken(Stage::Reconstruction, e.to_string()))
}

fn swap_rest(steps: &mut [Step]) {
    for s in steps {
        *s = if *s == Step::R { Step::U } else { Step::R };
    }
}

fn last_diagonal_index(path: &LatticePath) -> Option<usize> {
    path.points().iter().rposition(|p| p.x == p.y)
}

/// Reflection-principle bijection. Preserves p and q but not the number
/// of -1 entries.
pub fn reflection_forward(a: &Astz, rotation: Rotation, d: u32) -> Result<Csspp, BijectionError> {
    let l = a.l();
    if l < 2 {
        return Err(BijectionError::Config("the bijection needs l >= 2".into()));
    }
    let k = (l - 1) as u32;
    BijectionConfig::new(d, rotation, Reflection::VerticalAxis).check(k)?;
    let sp = single_astz_to_path(a)?;
    let st = astz_stats(a)?;
    let (i, j) = (sp.i, sp.j);
    let (p, q) = (st.p, st.q);
    if j == 1 {
        return Ok(Csspp::partition(k, vec![l as u32])?);
    }
    let (ii, jj, ll) = (i as i64, j as i64, l as i64);
    let pts = sp.path.points();
    let last = sp.path.steps.len() - 1;
    let kept: Vec<Step> = sp
        .path
        .steps
        .iter()
        .enumerate()
        .filter(|&(t, &s)| t != 0 && t != last && !(s == Step::U && pts[t].x == pts[t].y))
        .map(|(_, &s)| s)
        .collect();
    let mut path = LatticePath::new(
        Point::new(-ll - 2 * ii - p as i64 + 4, (p + q) as i64),
        kept,
    );
    ensure(
        path.end() == Point::new(jj - ii - 1, jj - ii),
        Stage::Reflection,
        "stripped path ends elsewhere",
    )?;
    ensure(
        path.points().iter().all(|pt| pt.y > pt.x),
        Stage::Reflection,
        "stripped path touches y = x",
    )?;
    for _ in 1..i {
        path = path.shifted(2, 0);
        let t = last_diagonal_index(&path)
            .ok_or_else(|| broken(Stage::Reflection, "no diagonal point"))?;
        swap_rest(&mut path.steps[t..]);
    }
    ensure(
        path.start == Point::new(-ll - p as i64 + 2, (p + q) as i64)
            && path.end() == Point::new(jj - 2, jj - 1),
        Stage::Reflection,
        "reflected path has wrong end points",
    )?;
    let body = rotate(&path.steps, rotation);
    let full = insert_tail(&body, j + k as usize - 1 - d as usize, p, q)?;
    to_partition(path_parts(&full, j, k), k, Stage::Readout)
}

pub fn reflection_inverse(
    c: &Csspp,
    n: usize,
    rotation: Rotation,
    d: u32,
) -> Result<Astz, BijectionError> {
    BijectionConfig::new(d, rotation, Reflection::VerticalAxis).check(c.class())?;
    let (j, k, _mu, p, q) = partition_profile(c, d)?;
    if j > n {
        return Err(BijectionError::TooManyParts { j, n });
    }
    let l = (k + 1) as usize;
    if j == 1 {
        return Ok(special_case_ij(1, n, l)?.0);
    }
    let jj = j as i64;
    let full = partition_path(c.parts(), k);
    let (body, pp) = remove_tail(&full, j + k as usize - 1 - d as usize, q)?;
    ensure(
        pp == p,
        Stage::Finishing,
        "p-step disagrees with the statistics",
    )?;
    let mut path = LatticePath::new(
        Point::new(-(l as i64) - p as i64 + 2, (p + q) as i64),
        unrotate(&body, rotation),
    );
    let mut i = 1usize;
    while let Some(t) = last_diagonal_index(&path) {
        swap_rest(&mut path.steps[t..]);
        path = path.shifted(-2, 0);
        i += 1;
        ensure(i <= j, Stage::Reflection, "too many reflections")?;
    }
    let ii = i as i64;
    let mut steps = vec![if p == 1 { Step::U } else { Step::R }];
    steps.extend(path.steps);
    steps.push(Step::R);
    let end = Point::new(jj - ii, jj - ii);
    for _ in 0..q {
        let tmp = LatticePath::new(Point::new(0, 0), steps.clone());
        let e = tmp.end();
        let anchored = tmp.shifted(end.x - e.x, end.y - e.y);
        let t = anchored
            .points()
            .iter()
            .position(|pt| pt.y - pt.x == 1)
            .ok_or_else(|| broken(Stage::Reflection, "no point on y = x + 1"))?;
        steps.insert(t, Step::U);
    }
    let tmp = LatticePath::new(Point::new(0, 0), steps.clone());
    let e = tmp.end();
    let start = Point::new(end.x - e.x, end.y - e.y);
    ensure(
        start == single_start(l, i),
        Stage::Reconstruction,
        "rebuilt path starts elsewhere",
    )?;
    path_to_single_astz(&LatticePath::new(start, steps), n, l)
        .map_err(|e| broken(Stage::Reconstruction, e.to_string()))
}
