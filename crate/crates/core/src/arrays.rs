//! Alternating sign trapezoids (including the l = 1 quasi variant) and
//! column strict shifted plane partitions, with their statistics.
//!
//! Coordinates: rows `r` and columns `c` are 1-based; row `r` of an
//! `(n, l)` trapezoid covers columns `r ..= 2n + l - 1 - r`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Monomial, MultiPoly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrayError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("shape mismatch at row {row}: expected {expected} entries, found {found}")]
    Shape {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at (row {row}, column {col}) is not in {{-1, 0, 1}}")]
    EntryValue { row: usize, col: usize, value: i64 },
    #[error("sign alternation violated at (row {row}, column {col})")]
    SignAlternation { row: usize, col: usize },
    #[error("topmost nonzero entry of column {col} is not 1 (row {row})")]
    TopmostNotOne { row: usize, col: usize },
    #[error("row {row} sums to {sum} (checked at column {col})")]
    RowSum { row: usize, col: usize, sum: i64 },
    #[error("central column {col} sums to {sum} (bottom row {row})")]
    CentralColumnSum { row: usize, col: usize, sum: i64 },
    #[error(
        "shifted shape violated at row {row}: lengths must be positive and strictly decreasing"
    )]
    CssppShape { row: usize },
    #[error("row {row} starts with {found}, class condition requires {expected}")]
    CssppClass {
        row: usize,
        expected: u32,
        found: u32,
    },
    #[error("entry at (row {row}, column {col}) breaks weak decrease along the row")]
    CssppRow { row: usize, col: usize },
    #[error("entry at (row {row}, column {col}) breaks strict decrease down the column")]
    CssppColumn { row: usize, col: usize },
    #[error("entry at (row {row}, column {col}) is not positive")]
    CssppEntry { row: usize, col: usize },
    #[error("statistic not defined here: {0}")]
    WrongVariant(String),
}

/// Alternating sign trapezoid with validated entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AstzJson", into = "AstzJson")]
pub struct Astz {
    n: usize,
    l: usize,
    rows: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
struct AstzJson {
    l: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<AstzJson> for Astz {
    type Error = ArrayError;
    fn try_from(j: AstzJson) -> Result<Self, ArrayError> {
        Astz::new(j.l, j.rows)
    }
}

impl From<Astz> for AstzJson {
    fn from(a: Astz) -> Self {
        AstzJson {
            l: a.l,
            rows: a
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| v as i64).collect())
                .collect(),
        }
    }
}

/// Length of row `r` in an `(n, l)` trapezoid.
pub fn row_len(n: usize, l: usize, r: usize) -> usize {
    2 * n + l - 2 * r
}

/// Validates a ragged array as an `(n, l)`-ASTZ, where `n` is the row count.
/// For `l = 1` the quasi rules apply (bottom row may sum to 0).
pub fn validate_astz(rows: Vec<Vec<i64>>, l: usize) -> Result<Astz, ArrayError> {
    Astz::new(l, rows)
}

impl Astz {
    pub fn new(l: usize, rows: Vec<Vec<i64>>) -> Result<Astz, ArrayError> {
        let n = rows.len();
        if l == 0 {
            return Err(ArrayError::Parameter("l must be at least 1".into()));
        }
        if n == 0 {
            return Err(ArrayError::Parameter(
                "an ASTZ needs at least one row".into(),
            ));
        }
        for (idx, row) in rows.iter().enumerate() {
            let r = idx + 1;
            let expected = row_len(n, l, r);
            if row.len() != expected {
                return Err(ArrayError::Shape {
                    row: r,
                    expected,
                    found: row.len(),
                });
            }
        }
        let ncols = 2 * n + l - 2;
        // Partial column sums and whether a nonzero entry has been seen.
        let mut col_sum = vec![0i64; ncols + 1];
        let mut col_seen = vec![false; ncols + 1];
        let mut out = Vec::with_capacity(n);
        for (idx, row) in rows.iter().enumerate() {
            let r = idx + 1;
            let mut row_sum = 0i64;
            let mut last: i64 = 0;
            for (t, &v) in row.iter().enumerate() {
                let c = r + t;
                if !(-1..=1).contains(&v) {
                    return Err(ArrayError::EntryValue {
                        row: r,
                        col: c,
                        value: v,
                    });
                }
                if v == 0 {
                    continue;
                }
                if !col_seen[c] && v == -1 {
                    return Err(ArrayError::TopmostNotOne { row: r, col: c });
                }
                if (col_seen[c] && col_sum[c] + v != 0 && col_sum[c] + v != 1) || last == v {
                    return Err(ArrayError::SignAlternation { row: r, col: c });
                }
                col_seen[c] = true;
                col_sum[c] += v;
                row_sum += v;
                last = v;
            }
            let ok = if l == 1 && r == n {
                row_sum == 0 || row_sum == 1
            } else {
                row_sum == 1
            };
            if !ok {
                return Err(ArrayError::RowSum {
                    row: r,
                    col: 2 * n + l - 1 - r,
                    sum: row_sum,
                });
            }
            out.push(row.iter().map(|&v| v as i8).collect());
        }
        if l >= 3 {
            for (c, &sum) in col_sum.iter().enumerate().take(n + l - 1).skip(n + 1) {
                if sum != 0 {
                    return Err(ArrayError::CentralColumnSum {
                        row: n,
                        col: c,
                        sum,
                    });
                }
            }
        }
        Ok(Astz { n, l, rows: out })
    }

    /// Wraps rows already known to be valid (used by the enumerators).
    pub(crate) fn from_valid(l: usize, rows: Vec<Vec<i8>>) -> Astz {
        Astz {
            n: rows.len(),
            l,
            rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        2 * self.n + self.l - 2
    }

    /// First and last column of row `r`.
    pub fn row_range(&self, r: usize) -> (usize, usize) {
        (r, 2 * self.n + self.l - 1 - r)
    }

    /// Entry at (row, column); zero outside the trapezoid.
    pub fn entry(&self, r: usize, c: usize) -> i8 {
        if r == 0 || r > self.n {
            return 0;
        }
        let (lo, hi) = self.row_range(r);
        if c < lo || c > hi {
            return 0;
        }
        self.rows[r - 1][c - r]
    }

    pub fn bottom_row(&self, c: usize) -> usize {
        c.min(2 * self.n + self.l - 1 - c).min(self.n)
    }

    pub fn col_sum(&self, c: usize) -> i64 {
        (1..=self.bottom_row(c))
            .map(|r| self.entry(r, c) as i64)
            .sum()
    }

    pub fn column_kind(&self, c: usize) -> ColumnKind {
        if self.col_sum(c) == 0 {
            ColumnKind::Zero
        } else if self.entry(self.bottom_row(c), c) == 0 {
            ColumnKind::Ten
        } else {
            ColumnKind::Eleven
        }
    }

    pub fn position(&self, c: usize) -> ColumnPosition {
        let (n, l) = (self.n, self.l);
        if l == 1 {
            return match c.cmp(&n) {
                std::cmp::Ordering::Less => ColumnPosition::Left((n - c) as u32),
                std::cmp::Ordering::Equal => ColumnPosition::Central(1),
                std::cmp::Ordering::Greater => ColumnPosition::Right((c - n) as u32),
            };
        }
        if c <= n {
            ColumnPosition::Left((n + 1 - c) as u32)
        } else if c <= n + l - 2 {
            ColumnPosition::Central((c - n) as u32)
        } else {
            ColumnPosition::Right((c - (n + l - 2)) as u32)
        }
    }

    /// Column index of left position `-k`.
    pub fn left_col(&self, k: usize) -> usize {
        self.n + 1 - k
    }

    /// Column index of right position `k`.
    pub fn right_col(&self, k: usize) -> usize {
        self.n + self.l - 2 + k
    }

    fn left_kinds(&self) -> Vec<ColumnKind> {
        (1..=self.n).map(|c| self.column_kind(c)).collect()
    }

    fn right_kinds(&self) -> Vec<ColumnKind> {
        (self.n + self.l - 1..=self.ncols())
            .map(|c| self.column_kind(c))
            .collect()
    }

    pub fn minus_ones(&self) -> u32 {
        self.rows.iter().flatten().filter(|&&v| v == -1).count() as u32
    }

    /// For `r = 1` arrays, the pair (i, j): the left 1-column sits at
    /// position `-i`, the right 0-column at position `j`.
    pub fn single_indices(&self) -> Option<(usize, usize)> {
        if self.l < 2 {
            return None;
        }
        let left: Vec<usize> = self
            .left_kinds()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k != ColumnKind::Zero)
            .map(|(t, _)| self.n - t)
            .collect();
        let right: Vec<usize> = self
            .right_kinds()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == ColumnKind::Zero)
            .map(|(t, _)| t + 1)
            .collect();
        match (left.as_slice(), right.as_slice()) {
            ([i], [j]) => Some((*i, *j)),
            _ => None,
        }
    }

    /// Positions `k` of right-half 0-columns, ascending.
    pub fn right_zero_positions(&self) -> Vec<usize> {
        self.right_kinds()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == ColumnKind::Zero)
            .map(|(t, _)| t + 1)
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (idx, row) in self.rows.iter().enumerate() {
            s.push_str(&" ".repeat(3 * idx));
            for v in row {
                s.push_str(&format!("{v:>3}"));
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ColumnKind {
    Zero,
    Ten,
    Eleven,
}

/// Signed column label: `Left(k)` is position `-k`, `Right(k)` is `k`;
/// central columns are numbered from 1 left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnPosition {
    Left(u32),
    Central(u32),
    Right(u32),
}

impl fmt::Display for ColumnPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnPosition::Left(k) => write!(f, "-{k}"),
            ColumnPosition::Central(k) => write!(f, "c{k}"),
            ColumnPosition::Right(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnClass {
    pub kind: ColumnKind,
    pub position: ColumnPosition,
}

pub fn classify_columns(a: &Astz) -> Vec<ColumnClass> {
    (1..=a.ncols())
        .map(|c| ColumnClass {
            kind: a.column_kind(c),
            position: a.position(c),
        })
        .collect()
}

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct StatProfile {
    pub mu: u32,
    pub r: u32,
    pub p: u32,
    pub q: u32,
    pub inv: i64,
}

impl StatProfile {
    pub fn weight(&self) -> MultiPoly {
        weight_of(self)
    }
}

pub fn weight_of(s: &StatProfile) -> MultiPoly {
    MultiPoly::term(Monomial::new(s.mu, s.r, s.p, s.q), 1)
}

pub fn astz_stats(a: &Astz) -> Result<StatProfile, ArrayError> {
    if a.l < 2 {
        return Err(ArrayError::WrongVariant(
            "l = 1 arrays use the modified weight (qast_weight)".into(),
        ));
    }
    let left = a.left_kinds();
    let right = a.right_kinds();
    let count = |ks: &[ColumnKind], k: ColumnKind| ks.iter().filter(|&&x| x == k).count() as u32;
    Ok(StatProfile {
        mu: a.minus_ones(),
        r: left.iter().filter(|&&k| k != ColumnKind::Zero).count() as u32,
        p: count(&left, ColumnKind::Ten),
        q: count(&right, ColumnKind::Ten),
        inv: inversions(a) + count(&left, ColumnKind::Eleven) as i64,
    })
}

/// Sum of a[r][c] * a[r'][c'] over r < r', c <= c'.
fn inversions(a: &Astz) -> i64 {
    let cells: Vec<(usize, usize, i64)> = (1..=a.n)
        .flat_map(|r| {
            let (lo, hi) = a.row_range(r);
            (lo..=hi).map(move |c| (r, c))
        })
        .map(|(r, c)| (r, c, a.entry(r, c) as i64))
        .filter(|t| t.2 != 0)
        .collect();
    let mut s = 0;
    for &(r1, c1, v1) in &cells {
        for &(r2, c2, v2) in &cells {
            if r1 < r2 && c1 <= c2 {
                s += v1 * v2;
            }
        }
    }
    s
}

/// Statistics plus the extra flag of the modified l = 1 / class 0 weight.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct ModifiedProfile {
    pub mu: u32,
    pub r: u32,
    pub p: u32,
    pub q: u32,
    pub flag: bool,
}

impl ModifiedProfile {
    /// M^mu R^r P^p Q^q, times (P + Q - M) when the flag is set.
    pub fn weight(&self) -> MultiPoly {
        let base = MultiPoly::term(Monomial::new(self.mu, self.r, self.p, self.q), 1);
        if self.flag {
            let extra =
                &(&MultiPoly::var(Var::P) + &MultiPoly::var(Var::Q)) - &MultiPoly::var(Var::M);
            &base * &extra
        } else {
            base
        }
    }
}

/// Profile of an l = 1 array. r counts 1-columns among the n leftmost
/// columns (central one included); p and q use the n - 1 outer columns on
/// each side; the flag marks a central 10-column.
pub fn qast_profile(a: &Astz) -> Result<ModifiedProfile, ArrayError> {
    if a.l != 1 {
        return Err(ArrayError::WrongVariant(
            "modified weight needs l = 1".into(),
        ));
    }
    let n = a.n;
    let kinds: Vec<ColumnKind> = (1..=a.ncols()).map(|c| a.column_kind(c)).collect();
    let left = &kinds[..n - 1];
    let right = &kinds[n..];
    Ok(ModifiedProfile {
        mu: a.minus_ones(),
        r: kinds[..n]
            .iter()
            .filter(|&&k| k != ColumnKind::Zero)
            .count() as u32,
        p: left.iter().filter(|&&k| k == ColumnKind::Ten).count() as u32,
        q: right.iter().filter(|&&k| k == ColumnKind::Ten).count() as u32,
        flag: kinds[n - 1] == ColumnKind::Ten,
    })
}

pub fn qast_weight(a: &Astz) -> Result<MultiPoly, ArrayError> {
    qast_profile(a).map(|p| p.weight())
}

/// Column strict shifted plane partition of class `k`. Row `i` (0-based)
/// starts on the diagonal cell (i, i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CssppJson", into = "CssppJson")]
pub struct Csspp {
    class: u32,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct CssppJson {
    class: u32,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<CssppJson> for Csspp {
    type Error = ArrayError;
    fn try_from(j: CssppJson) -> Result<Self, ArrayError> {
        Csspp::new(j.class, j.rows)
    }
}

impl From<Csspp> for CssppJson {
    fn from(c: Csspp) -> Self {
        CssppJson {
            class: c.class,
            rows: c.rows,
        }
    }
}

impl Csspp {
    pub fn new(class: u32, rows: Vec<Vec<u32>>) -> Result<Csspp, ArrayError> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || (i > 0 && row.len() >= rows[i - 1].len()) {
                return Err(ArrayError::CssppShape { row: i + 1 });
            }
            let expected = class + row.len() as u32;
            if row[0] != expected {
                return Err(ArrayError::CssppClass {
                    row: i + 1,
                    expected,
                    found: row[0],
                });
            }
            for (t, &v) in row.iter().enumerate() {
                let col = i + t + 1;
                if v == 0 {
                    return Err(ArrayError::CssppEntry { row: i + 1, col });
                }
                if t > 0 && v > row[t - 1] {
                    return Err(ArrayError::CssppRow { row: i + 1, col });
                }
                if i > 0 && rows[i - 1][t + 1] <= v {
                    return Err(ArrayError::CssppColumn { row: i + 1, col });
                }
            }
        }
        Ok(Csspp { class, rows })
    }

    /// One-row object with the given parts.
    pub fn partition(class: u32, parts: Vec<u32>) -> Result<Csspp, ArrayError> {
        if parts.is_empty() {
            return Csspp::new(class, vec![]);
        }
        Csspp::new(class, vec![parts])
    }

    pub fn empty(class: u32) -> Csspp {
        Csspp {
            class,
            rows: vec![],
        }
    }

    pub fn class(&self) -> u32 {
        self.class
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Parts of a one-row object (empty slice for the empty object).
    pub fn parts(&self) -> &[u32] {
        self.rows.first().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_one_row(&self) -> bool {
        self.rows.len() <= 1
    }

    /// Iterates (j - i, value) over all cells.
    fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rows
            .iter()
            .flat_map(|row| row.iter().enumerate().map(|(t, &v)| (t as u32, v)))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            s.push_str(&" ".repeat(4 * i));
            for v in row {
                s.push_str(&format!("{v:>4}"));
            }
            s.push('\n');
        }
        s
    }
}

pub fn csspp_stats(c: &Csspp, d: u32) -> Result<StatProfile, ArrayError> {
    let k = c.class;
    if d < 1 || d > k {
        return Err(ArrayError::Parameter(format!("d = {d} outside 1..={k}")));
    }
    let mut s = StatProfile {
        r: c.rows.len() as u32,
        ..Default::default()
    };
    for (t, v) in c.cells() {
        if v == 1 {
            s.q += 1;
        } else if v == t + d {
            s.p += 1;
        } else if v <= t + k {
            s.mu += 1;
        } else {
            s.inv += 1;
        }
    }
    Ok(s)
}

/// Class 0 profile: p counts parts equal to j - i > 1, q counts 1s with
/// j - i > 1, and the flag records a 1 at j - i = 1.
pub fn csspp_class0_stats(c: &Csspp) -> Result<ModifiedProfile, ArrayError> {
    if c.class != 0 {
        return Err(ArrayError::WrongVariant(
            "modified weight needs class 0".into(),
        ));
    }
    let mut s = ModifiedProfile {
        r: c.rows.len() as u32,
        ..Default::default()
    };
    for (t, v) in c.cells() {
        if v == 1 && t == 1 {
            s.flag = true;
        }
        if t > 1 && v == t {
            s.p += 1;
        }
        if t > 1 && v == 1 {
            s.q += 1;
        }
        if 2 <= v && v < t {
            s.mu += 1;
        }
    }
    Ok(s)
}

pub fn class0_weight(c: &Csspp) -> Result<MultiPoly, ArrayError> {
    csspp_class0_stats(c).map(|p| p.weight())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_path_rows() -> Vec<Vec<i64>> {
        vec![
            vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, -1, 1],
            vec![1, 0, -1, 0, 1],
        ]
    }

    #[test]
    fn flipped_top_entry_is_reported() {
        let mut rows = three_path_rows();
        rows[0][6] = -1;
        assert_eq!(
            Astz::new(5, rows),
            Err(ArrayError::TopmostNotOne { row: 1, col: 7 })
        );
    }

    #[test]
    fn shape_errors_carry_row() {
        let mut rows = three_path_rows();
        rows[2].pop();
        assert_eq!(
            Astz::new(5, rows),
            Err(ArrayError::Shape {
                row: 3,
                expected: 9,
                found: 8
            })
        );
    }

    #[test]
    fn alternation_and_sums() {
        // (1, 1) along a row.
        let e = Astz::new(2, vec![vec![1, 1]]).unwrap_err();
        assert_eq!(e, ArrayError::SignAlternation { row: 1, col: 2 });
        let e = Astz::new(2, vec![vec![0, 0]]).unwrap_err();
        assert!(matches!(e, ArrayError::RowSum { row: 1, sum: 0, .. }));
        // n = 1, l = 3: the middle column must sum to zero.
        let e = Astz::new(3, vec![vec![0, 1, 0]]).unwrap_err();
        assert_eq!(
            e,
            ArrayError::CentralColumnSum {
                row: 1,
                col: 2,
                sum: 1
            }
        );
        let e = Astz::new(2, vec![vec![2, 0]]).unwrap_err();
        assert!(matches!(e, ArrayError::EntryValue { value: 2, .. }));
    }

    #[test]
    fn osculating_example_profile() {
        let a = Astz::new(5, three_path_rows()).unwrap();
        let s = astz_stats(&a).unwrap();
        assert_eq!((s.mu, s.r, s.p, s.q), (3, 3, 1, 0));
        assert_eq!(a.single_indices(), None);
    }

    #[test]
    fn quasi_rules() {
        assert!(Astz::new(1, vec![vec![0]]).is_ok());
        assert!(Astz::new(1, vec![vec![1]]).is_ok());
        let zero = Astz::new(1, vec![vec![0]]).unwrap();
        assert_eq!(qast_weight(&zero).unwrap(), MultiPoly::one());
        let one = Astz::new(1, vec![vec![1]]).unwrap();
        assert_eq!(qast_weight(&one).unwrap(), MultiPoly::var(Var::R));
        assert!(astz_stats(&one).is_err());
        // Only the bottom row may sum to zero.
        assert!(Astz::new(1, vec![vec![0, 0, 0], vec![1]]).is_err());
    }

    #[test]
    fn csspp_validation() {
        assert!(Csspp::new(1, vec![vec![4, 3, 3], vec![2]]).is_ok());
        assert_eq!(
            Csspp::new(1, vec![vec![4, 3, 3], vec![3]]),
            Err(ArrayError::CssppClass {
                row: 2,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            Csspp::new(1, vec![vec![4, 3, 3], vec![3, 1]]),
            Err(ArrayError::CssppColumn { row: 2, col: 2 })
        );
        assert_eq!(
            Csspp::new(1, vec![vec![3, 2], vec![3, 1]]),
            Err(ArrayError::CssppShape { row: 2 })
        );
        let ok = Csspp::new(1, vec![vec![4, 4, 3], vec![2]]).unwrap();
        assert_eq!(ok.shape(), vec![3, 1]);
        assert!(Csspp::new(1, vec![vec![2, 3]]).is_err());
        assert!(Csspp::new(0, vec![vec![1]]).is_ok());
        assert!(Csspp::empty(3).rows().is_empty());
    }

    #[test]
    fn partition_stats() {
        let c = Csspp::partition(3, vec![11, 9, 7, 6, 5, 4, 1, 1]).unwrap();
        let s = csspp_stats(&c, 1).unwrap();
        assert_eq!((s.mu, s.r, s.p, s.q, s.inv), (2, 1, 1, 2, 3));
        let c = Csspp::partition(1, vec![6, 6, 6, 3, 1]).unwrap();
        let s = csspp_stats(&c, 1).unwrap();
        assert_eq!((s.mu, s.p, s.q), (1, 0, 1));
        assert!(csspp_stats(&c, 2).is_err());
        assert!(csspp_stats(&c, 0).is_err());
    }

    #[test]
    fn class0_flags() {
        let e = csspp_class0_stats(&Csspp::empty(0)).unwrap();
        assert_eq!(e, ModifiedProfile::default());
        let one = csspp_class0_stats(&Csspp::partition(0, vec![1]).unwrap()).unwrap();
        assert_eq!(
            one,
            ModifiedProfile {
                r: 1,
                ..Default::default()
            }
        );
        let two = csspp_class0_stats(&Csspp::partition(0, vec![2, 1]).unwrap()).unwrap();
        assert!(two.flag);
        assert!(csspp_class0_stats(&Csspp::partition(1, vec![2]).unwrap()).is_err());
    }

    #[test]
    fn weights() {
        let s = StatProfile {
            mu: 2,
            r: 1,
            p: 1,
            q: 2,
            inv: 0,
        };
        assert_eq!(weight_of(&s).to_string(), "M^2*R*P*Q^2");
        assert_eq!(weight_of(&StatProfile::default()), MultiPoly::one());
        let f = ModifiedProfile {
            flag: true,
            ..Default::default()
        };
        assert_eq!(f.weight().to_string(), "Q + P - M");
    }

    #[test]
    fn json_shapes() {
        let a = Astz::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"l":2,"rows":[[0,1]]}"#
        );
        let back: Astz = serde_json::from_str(r#"{"l":2,"rows":[[0,1]]}"#).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Astz>(r#"{"l":2,"rows":[[1,1]]}"#).is_err());
        let c = Csspp::partition(1, vec![3, 1]).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"class":1,"rows":[[3,1]]}"#
        );
    }
}
