//! Test-side oracles written directly from the definitions, sharing no code
//! with the library beyond the data types.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// Plain binomial on i128: zero outside 0 <= k <= n.
pub fn choose(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    acc
}

/// Falling factorial n(n-1)...(n-k+1) / k!, defined for negative n.
pub fn choose_ext(n: i64, k: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for t in 0..k {
        num *= (n - t) as i128;
        den *= (t + 1) as i128;
    }
    num / den
}

/// Closed form for the number of single-1-column arrays with indices (i, j)
/// and statistics (mu, p, q). At most one left 10-column can exist.
pub fn count_ij(i: i64, j: i64, l: i64, mu: i64, p: i64, q: i64) -> i128 {
    if p > 1 {
        return 0;
    }
    let s = mu + p + q;
    choose(j - i, s) * choose_ext(j + i + l - q - 5, mu)
        - choose(j - i - 1, s) * choose_ext(j + i + l - q - 4, mu)
}

/// Closed form for one-row class-k partitions with j parts.
pub fn count_partitions(j: i64, k: i64, mu: i64, p: i64, q: i64) -> i128 {
    if p > 1 {
        return 0;
    }
    choose(j - 1, mu + p + q) * choose_ext(j - q + k - 3, mu)
}

pub fn row_len(n: usize, l: usize, r: usize) -> usize {
    2 * n + l - 2 * r
}

/// Rows of the given length with entries in {-1, 0, 1}, nonzero entries
/// alternating and starting and ending with 1.
fn alternating_rows(len: usize) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    let total = 3usize.pow(len as u32);
    for code in 0..total {
        let mut c = code;
        let row: Vec<i8> = (0..len)
            .map(|_| {
                let v = (c % 3) as i8 - 1;
                c /= 3;
                v
            })
            .collect();
        let nz: Vec<i8> = row.iter().copied().filter(|&v| v != 0).collect();
        let ok = nz.first() == Some(&1)
            && nz.windows(2).all(|w| w[0] != w[1])
            && nz.iter().map(|&v| v as i32).sum::<i32>() == 1;
        if ok {
            out.push(row);
        }
    }
    out
}

/// All (n, l)-arrays for l >= 2 by brute force over alternating rows. Each
/// row r is left-aligned at column r (1-based) of a 2n + l - 2 wide grid.
pub fn naive_astz(n: usize, l: usize) -> Vec<Vec<Vec<i8>>> {
    assert!(l >= 2);
    let width = 2 * n + l - 2;
    let choices: Vec<Vec<Vec<i8>>> = (1..=n)
        .map(|r| alternating_rows(row_len(n, l, r)))
        .collect();
    let mut out = Vec::new();
    let mut rows = Vec::new();
    let mut colsum = vec![0i32; width];
    // column partial sums from the top must stay in {0, 1}; with
    // alternating columns starting at 1 this is equivalent
    fn go(
        r: usize,
        n: usize,
        l: usize,
        choices: &[Vec<Vec<i8>>],
        rows: &mut Vec<Vec<i8>>,
        colsum: &mut Vec<i32>,
        out: &mut Vec<Vec<Vec<i8>>>,
    ) {
        if r == n {
            // the l - 2 central columns n+1..=n+l-2 (1-based) sum to zero
            if (n + 1..=n + l - 2).all(|c| colsum[c - 1] == 0) {
                out.push(rows.clone());
            }
            return;
        }
        for row in &choices[r] {
            let off = r; // 0-based start column
            if row
                .iter()
                .enumerate()
                .all(|(k, &v)| (0..=1).contains(&(colsum[off + k] + v as i32)))
            {
                for (k, &v) in row.iter().enumerate() {
                    colsum[off + k] += v as i32;
                }
                rows.push(row.clone());
                go(r + 1, n, l, choices, rows, colsum, out);
                rows.pop();
                for (k, &v) in row.iter().enumerate() {
                    colsum[off + k] -= v as i32;
                }
            }
        }
    }
    go(0, n, l, &choices, &mut rows, &mut colsum, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stats {
    pub mu: u32,
    pub r: u32,
    pub p: u32,
    pub q: u32,
    pub inv: i64,
}

/// Statistics of an array given by its rows, straight from the definitions.
/// Columns 1..=n form the left half, n+l-1..=2n+l-2 the right half.
pub fn naive_stats(n: usize, l: usize, rows: &[Vec<i8>]) -> Stats {
    let width = 2 * n + l - 2;
    let at = |r: usize, c: usize| -> i8 {
        // r, c are 1-based
        if c < r || c >= r + rows[r - 1].len() {
            0
        } else {
            rows[r - 1][c - r]
        }
    };
    let bottom = |c: usize| {
        (1..=n)
            .filter(|&r| c >= r && c < r + rows[r - 1].len())
            .max()
            .unwrap()
    };
    let sum = |c: usize| (1..=n).map(|r| at(r, c) as i32).sum::<i32>();
    let mu = rows.iter().flatten().filter(|&&v| v == -1).count() as u32;
    let left = 1..=n;
    let right = n + l - 1..=width;
    let r = left.clone().filter(|&c| sum(c) == 1).count() as u32;
    let p = left
        .clone()
        .filter(|&c| sum(c) == 1 && at(bottom(c), c) == 0)
        .count() as u32;
    let eleven = left
        .clone()
        .filter(|&c| sum(c) == 1 && at(bottom(c), c) == 1)
        .count() as i64;
    let q = right
        .filter(|&c| sum(c) == 1 && at(bottom(c), c) == 0)
        .count() as u32;
    let mut inv = eleven;
    for r1 in 1..=n {
        for r2 in r1 + 1..=n {
            for c1 in 1..=width {
                for c2 in c1..=width {
                    inv += at(r1, c1) as i64 * at(r2, c2) as i64;
                }
            }
        }
    }
    Stats { mu, r, p, q, inv }
}

/// Statistics of a one-row partition for a given d, with parts indexed from
/// 0: parts equal to 1 give q, the part equal to its index plus d gives p,
/// other parts of size at most index plus k count in mu, larger parts count
/// as inversions.
pub fn naive_partition_stats(parts: &[u32], k: u32, d: u32) -> Stats {
    let mut s = Stats {
        mu: 0,
        r: 1,
        p: 0,
        q: 0,
        inv: 0,
    };
    for (idx, &v) in parts.iter().enumerate() {
        let t = idx as u32;
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
    if parts.is_empty() {
        s.r = 0;
    }
    s
}

pub fn tally<K: Ord, I: IntoIterator<Item = K>>(it: I) -> BTreeMap<K, u64> {
    let mut m = BTreeMap::new();
    for k in it {
        *m.entry(k).or_default() += 1;
    }
    m
}

/// One-row class-k partitions with j parts: first part j + k, the rest
/// weakly decreasing and positive.
pub fn naive_partitions(j: usize, k: u32) -> Vec<Vec<u32>> {
    fn go(j: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for v in 1..=cap {
            cur.push(v);
            go(j, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if j == 0 {
        return vec![vec![]];
    }
    let first = j as u32 + k;
    go(j, first, &mut vec![first], &mut out);
    out
}
