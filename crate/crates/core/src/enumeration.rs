//! Exhaustive generators and the closed-form / determinant counts they are
//! checked against.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{binomial, binomial_ext, poly_det, Monomial, MultiPoly, Var};
use crate::arrays::{astz_stats, csspp_stats, qast_weight, ArrayError, Astz, Csspp, StatProfile};
use crate::paths::{path_to_single_astz, single_start, LatticePath, PathError, Point, Step};

pub const SCALE_ENV: &str = "ASTZ_SCALE_OVERRIDE";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("(n, l) = ({n}, {l}) exceeds the desk-scale limit n, l <= {max}; set {SCALE_ENV}=1 to lift it")]
    ScaleExceeded { n: usize, l: usize, max: usize },
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Array(#[from] ArrayError),
}

/// Size limit for exhaustive generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaleGuard {
    pub max: Option<usize>,
}

impl ScaleGuard {
    pub const DESK: ScaleGuard = ScaleGuard { max: Some(6) };
    pub const UNBOUNDED: ScaleGuard = ScaleGuard { max: None };

    /// Desk scale unless `ASTZ_SCALE_OVERRIDE=1` is set.
    pub fn from_env() -> Self {
        match std::env::var(SCALE_ENV) {
            Ok(v) if v == "1" => ScaleGuard::UNBOUNDED,
            _ => ScaleGuard::DESK,
        }
    }

    pub fn check(&self, n: usize, l: usize) -> Result<(), EnumError> {
        match self.max {
            Some(max) if n > max || l > max => Err(EnumError::ScaleExceeded { n, l, max }),
            _ => Ok(()),
        }
    }
}

/// Conjunctive filter; `None` fields are unconstrained. Setting `i` or `j`
/// restricts to arrays with a single left 1-column.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub mu: Option<u32>,
    pub r: Option<u32>,
    pub p: Option<u32>,
    pub q: Option<u32>,
    /// Exact set of right positions holding a 0-column.
    pub right_zero: Option<Vec<usize>>,
}

impl EnumFilter {
    pub fn single(i: usize, j: usize) -> Self {
        EnumFilter {
            i: Some(i),
            j: Some(j),
            ..Default::default()
        }
    }

    fn wants_single(&self) -> bool {
        self.i.is_some() || self.j.is_some() || self.r == Some(1)
    }

    pub fn accepts(&self, a: &Astz) -> bool {
        if self.wants_single() {
            match a.single_indices() {
                Some((i, j)) => {
                    if self.i.is_some_and(|v| v != i) || self.j.is_some_and(|v| v != j) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        if let Some(z) = &self.right_zero {
            if a.right_zero_positions() != *z {
                return false;
            }
        }
        if self.mu.is_none() && self.r.is_none() && self.p.is_none() && self.q.is_none() {
            return true;
        }
        let Ok(s) = astz_stats(a) else {
            // l = 1: only mu and r are meaningful in the plain sense.
            return self.mu.is_none_or(|m| m == a.minus_ones())
                && self.p.is_none()
                && self.q.is_none();
        };
        self.mu.is_none_or(|v| v == s.mu)
            && self.r.is_none_or(|v| v == s.r)
            && self.p.is_none_or(|v| v == s.p)
            && self.q.is_none_or(|v| v == s.q)
    }
}

/// Visits every (n, l)-ASTZ (the quasi variant when l = 1), filling rows
/// top to bottom and keeping row and column partial sums in {0, 1}.
pub fn for_each_astz<F: FnMut(&Astz)>(n: usize, l: usize, mut f: F) {
    if n == 0 || l == 0 {
        return;
    }
    let ncols = 2 * n + l - 2;
    let mut cols = vec![0i8; ncols + 1];
    let mut grid: Vec<Vec<i8>> = (1..=n).map(|r| vec![0; 2 * n + l - 2 * r]).collect();
    fill_row(n, l, 1, &mut cols, &mut grid, &mut f);
}

fn fill_row<F: FnMut(&Astz)>(
    n: usize,
    l: usize,
    r: usize,
    cols: &mut [i8],
    grid: &mut Vec<Vec<i8>>,
    f: &mut F,
) {
    if r > n {
        if (n + 1..=n + l - 2).all(|c| cols[c] == 0) {
            f(&Astz::from_valid(l, grid.clone()));
        }
        return;
    }
    fill_cell(n, l, r, 0, 0, cols, grid, f);
}

#[allow(clippy::too_many_arguments)]
fn fill_cell<F: FnMut(&Astz)>(
    n: usize,
    l: usize,
    r: usize,
    t: usize,
    s: i8,
    cols: &mut [i8],
    grid: &mut Vec<Vec<i8>>,
    f: &mut F,
) {
    let len = grid[r - 1].len();
    if t == len {
        let ok = s == 1 || (l == 1 && r == n);
        if ok {
            fill_row(n, l, r + 1, cols, grid, f);
        }
        return;
    }
    let c = r + t;
    grid[r - 1][t] = 0;
    fill_cell(n, l, r, t + 1, s, cols, grid, f);
    let v: i8 = if s == 0 { 1 } else { -1 };
    if (v == 1 && cols[c] == 0) || (v == -1 && cols[c] == 1) {
        grid[r - 1][t] = v;
        cols[c] += v;
        fill_cell(n, l, r, t + 1, s + v, cols, grid, f);
        cols[c] -= v;
        grid[r - 1][t] = 0;
    }
}

/// Visits every monotone path from the start for left position `-i` to
/// (j - i, j - i) that stays weakly above y = x and ends with a right step.
pub fn for_each_single_path<F: FnMut(&LatticePath)>(l: usize, i: usize, j: usize, mut f: F) {
    if i > j || i == 0 {
        return;
    }
    let start = single_start(l, i);
    let end = Point::new((j - i) as i64, (j - i) as i64);
    let mut steps = Vec::new();
    walk(start, end, start, &mut steps, &mut f);
}

fn walk<F: FnMut(&LatticePath)>(
    start: Point,
    end: Point,
    at: Point,
    steps: &mut Vec<Step>,
    f: &mut F,
) {
    if at == end {
        if steps.last() == Some(&Step::R) {
            f(&LatticePath::new(start, steps.clone()));
        }
        return;
    }
    if at.x < end.x && at.x < at.y {
        steps.push(Step::R);
        walk(start, end, at.shifted(1, 0), steps, f);
        steps.pop();
    }
    if at.y < end.y {
        steps.push(Step::U);
        walk(start, end, at.shifted(0, 1), steps, f);
        steps.pop();
    }
}

/// Visits ASTZ^{i,j}_{n,l} through its single paths.
pub fn for_each_single_astz<F: FnMut(&Astz)>(
    n: usize,
    l: usize,
    i: usize,
    j: usize,
    mut f: F,
) -> Result<(), EnumError> {
    if j > n {
        return Ok(());
    }
    let mut err = None;
    for_each_single_path(l, i, j, |p| {
        if err.is_some() {
            return;
        }
        match path_to_single_astz(p, n, l) {
            Ok(a) => f(&a),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

/// All (n, l)-ASTZs passing the filter, sorted. Single-column filters use
/// the path generator; everything else fills arrays.
pub fn enumerate_astz(
    n: usize,
    l: usize,
    filter: &EnumFilter,
    guard: ScaleGuard,
) -> Result<Vec<Astz>, EnumError> {
    guard.check(n, l)?;
    if l == 0 {
        return Err(EnumError::Parameter("l must be at least 1".into()));
    }
    let mut out = Vec::new();
    if filter.wants_single() && l >= 2 {
        let is: Vec<usize> = filter.i.map_or_else(|| (1..=n).collect(), |i| vec![i]);
        let js: Vec<usize> = filter.j.map_or_else(|| (1..=n).collect(), |j| vec![j]);
        for &i in &is {
            for &j in &js {
                for_each_single_astz(n, l, i, j, |a| {
                    if filter.accepts(a) {
                        out.push(a.clone())
                    }
                })?;
            }
        }
    } else {
        for_each_astz(n, l, |a| {
            if filter.accepts(a) {
                out.push(a.clone())
            }
        });
    }
    out.sort();
    Ok(out)
}

/// One-row class-k partitions with exactly j parts (first part j + k),
/// or nothing when j > n.
pub fn enumerate_partitions(n: usize, k: u32, j: usize) -> Vec<Csspp> {
    if j > n {
        return vec![];
    }
    if j == 0 {
        return vec![Csspp::empty(k)];
    }
    let mut out = Vec::new();
    let mut parts = vec![j as u32 + k];
    fn rec(j: usize, k: u32, parts: &mut Vec<u32>, out: &mut Vec<Csspp>) {
        if parts.len() == j {
            out.push(Csspp::partition(k, parts.clone()).expect("generated partition is valid"));
            return;
        }
        let top = *parts.last().expect("non-empty");
        for v in (1..=top).rev() {
            parts.push(v);
            rec(j, k, parts, out);
            parts.pop();
        }
    }
    rec(j, k, &mut parts, &mut out);
    out
}

/// Strict partitions with largest part at most n, including the empty one.
pub fn strict_shapes(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in (1..=max).rev() {
            cur.push(v);
            rec(v - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut vec![], &mut out);
    out
}

/// All class-k fillings of a strict shape.
pub fn enumerate_csspp_shape(shape: &[usize], k: u32) -> Vec<Csspp> {
    let mut out = Vec::new();
    if shape.windows(2).any(|w| w[0] <= w[1]) || shape.contains(&0) {
        return out;
    }
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&m| Vec::with_capacity(m)).collect();
    fn rec(shape: &[usize], k: u32, row: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Csspp>) {
        if row == shape.len() {
            out.push(Csspp::new(k, rows.clone()).expect("generated filling is valid"));
            return;
        }
        let t = rows[row].len();
        if t == shape[row] {
            rec(shape, k, row + 1, rows, out);
            return;
        }
        let (lo, hi) = if t == 0 {
            let v = k + shape[row] as u32;
            (v, v)
        } else {
            let mut hi = rows[row][t - 1];
            if row > 0 {
                hi = hi.min(rows[row - 1][t + 1] - 1);
            }
            (1, hi)
        };
        if t == 0 && row > 0 && rows[row - 1][1] <= lo {
            return;
        }
        for v in (lo..=hi).rev() {
            rows[row].push(v);
            rec(shape, k, row, rows, out);
            rows[row].pop();
        }
    }
    rec(shape, k, 0, &mut rows, &mut out);
    out
}

/// All class-k CSSPPs whose shape has parts at most n.
pub fn enumerate_csspp(n: usize, k: u32) -> Vec<Csspp> {
    strict_shapes(n)
        .iter()
        .flat_map(|s| enumerate_csspp_shape(s, k))
        .collect()
}

/// Weight sum over ASTZ^{i,j}_{n,l}.
pub fn z_poly(n: usize, l: usize, i: usize, j: usize) -> Result<MultiPoly, EnumError> {
    if l < 2 {
        return Err(EnumError::Parameter("z_poly needs l >= 2".into()));
    }
    let mut acc = MultiPoly::zero();
    let mut err = None;
    for_each_single_astz(n, l, i, j, |a| match astz_stats(a) {
        Ok(s) => acc.add_term(Monomial::new(s.mu, s.r, s.p, s.q), BigInt::from(1)),
        Err(e) => err = Some(e),
    })?;
    match err {
        Some(e) => Err(e.into()),
        None => Ok(acc),
    }
}

/// Closed form for the number of ASTZ^{i,j}_{n,l} with statistics (mu, p, q).
/// The first factors count paths (ordinary binomials); the second factors
/// take the binomial with negative upper index where needed.
pub fn single_column_count(i: i64, j: i64, l: i64, mu: i64, p: i64, q: i64) -> BigInt {
    if p > 1 {
        return BigInt::zero();
    }
    let s = mu + p + q;
    binomial(j - i, s) * binomial_ext(j + i + l - q - 5, mu)
        - binomial(j - i - 1, s) * binomial_ext(j + i + l - q - 4, mu)
}

/// Number of one-row class-k partitions with j parts and statistics
/// (mu, p, q), for any admissible d.
pub fn one_row_count(j: i64, k: i64, mu: i64, p: i64, q: i64) -> BigInt {
    if p > 1 {
        return BigInt::zero();
    }
    binomial(j - 1, mu + p + q) * binomial_ext(j - q + k - 3, mu)
}

/// Determinant generating function for (n, l)-ASTZs; for l = 1 it is the
/// generating function of the modified weight.
pub fn genfunc_det(n: usize, l: usize) -> MultiPoly {
    let r = MultiPoly::var(Var::R);
    let l = l as i64;
    let mut mat = vec![vec![MultiPoly::zero(); n]; n];
    for (i, row) in mat.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut e = MultiPoly::zero();
            for k in 0..=i as i64 {
                for m in 0..=j as i64 {
                    let outer = binomial(j as i64, m);
                    let qe = (i as i64 - k) as u32;
                    let a = binomial_ext(k + l - 3, k - m);
                    if !a.is_zero() {
                        let mono = Monomial::new((k - m) as u32, 0, 0, qe);
                        e.add_term(mono, &outer * a);
                    }
                    let b = binomial_ext(k + l - 3, k - m - 1);
                    if !b.is_zero() {
                        // P * M^(k - m - 1); b != 0 forces k - m - 1 >= 0.
                        let mono = Monomial::new((k - m - 1) as u32, 0, 1, qe);
                        e.add_term(mono, &outer * b);
                    }
                }
            }
            *cell = &r * &e;
            if i == j {
                *cell += &MultiPoly::one();
            }
        }
    }
    poly_det(&mat).expect("square by construction")
}

/// Sum of weights over all (n, l)-ASTZs (modified weight for l = 1).
pub fn astz_weight_sum(n: usize, l: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for_each_astz(n, l, |a| {
        if l == 1 {
            acc += &qast_weight(a).expect("l = 1");
        } else {
            let s = astz_stats(a).expect("l >= 2");
            acc.add_term(Monomial::new(s.mu, s.r, s.p, s.q), BigInt::from(1));
        }
    });
    acc
}

/// Sum of d-weights over class-k CSSPPs with shape parts at most n.
pub fn csspp_weight_sum(n: usize, k: u32, d: u32) -> Result<MultiPoly, ArrayError> {
    let mut acc = MultiPoly::zero();
    for c in enumerate_csspp(n, k) {
        let s: StatProfile = csspp_stats(&c, d)?;
        acc.add_term(Monomial::new(s.mu, s.r, s.p, s.q), BigInt::from(1));
    }
    Ok(acc)
}
