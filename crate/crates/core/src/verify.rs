//! Exhaustive verification suites with machine-readable reports.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::MultiPoly;
use crate::arrays::{
    astz_stats, class0_weight, csspp_stats, qast_weight, Astz, Csspp, StatProfile,
};
use crate::bijection::{
    astz_to_partition, partition_to_astz, reflection_forward, reflection_inverse, BijectionConfig,
    Rotation,
};
use crate::enumeration::{
    astz_weight_sum, csspp_weight_sum, enumerate_csspp, enumerate_partitions, for_each_astz,
    for_each_single_astz, genfunc_det, one_row_count, single_column_count, z_poly, EnumError,
    ScaleGuard,
};
use crate::repro::obstruction;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (expected one of: {list})", list = Suite::NAMES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    RowDeletion,
    SingleCounts,
    PartitionCounts,
    Genfunc,
    Roundtrip,
    Inversion,
    Qast,
    Counterexample,
    Reflection,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "row-deletion",
        "single-counts",
        "partition-counts",
        "genfunc",
        "roundtrip",
        "inversion",
        "qast",
        "counterexample",
        "reflection",
    ];

    pub const ALL: [Suite; 9] = [
        Suite::RowDeletion,
        Suite::SingleCounts,
        Suite::PartitionCounts,
        Suite::Genfunc,
        Suite::Roundtrip,
        Suite::Inversion,
        Suite::Qast,
        Suite::Counterexample,
        Suite::Reflection,
    ];

    pub fn name(self) -> &'static str {
        Suite::NAMES[Suite::ALL.iter().position(|&s| s == self).expect("listed")]
    }

    /// Bounds used when none are given.
    pub fn default_bounds(self) -> Bounds {
        let (n_max, l_max) = match self {
            Suite::RowDeletion => (5, 5),
            Suite::SingleCounts => (7, 5),
            Suite::PartitionCounts => (8, 5),
            Suite::Genfunc => (4, 4),
            Suite::Roundtrip => (5, 4),
            Suite::Inversion => (5, 5),
            Suite::Qast => (4, 1),
            Suite::Counterexample => (3, 2),
            Suite::Reflection => (5, 4),
        };
        Bounds { n_max, l_max }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|k| Suite::ALL[k])
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Largest parameter of a suite (n_max for most suites, j_max for the
/// counting suites) and largest l (class + 1 for partitions).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n_max: usize,
    pub l_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub bounds: Bounds,
    pub status: Status,
    pub counterexample: Option<Value>,
    pub counts: BTreeMap<String, Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Tallies checks and keeps the first failure.
struct Tally {
    counts: BTreeMap<String, u64>,
    extra: BTreeMap<String, Value>,
    failure: Option<Value>,
    warned: bool,
}

impl Tally {
    fn new() -> Self {
        Tally {
            counts: BTreeMap::new(),
            extra: BTreeMap::new(),
            failure: None,
            warned: false,
        }
    }

    fn check(&mut self, key: &str, ok: bool, detail: impl FnOnce() -> Value) {
        *self.counts.entry(key.to_string()).or_default() += 1;
        if !ok {
            *self.counts.entry(format!("{key}_failed")).or_default() += 1;
            if self.failure.is_none() {
                let mut v = detail();
                if let Value::Object(m) = &mut v {
                    m.insert("check".into(), json!(key));
                }
                self.failure = Some(v);
            }
        }
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn finish(self, suite: Suite, bounds: Bounds) -> Report {
        let status = if self.failure.is_some() {
            Status::Fail
        } else if self.warned {
            Status::Warn
        } else {
            Status::Pass
        };
        let mut counts: BTreeMap<String, Value> = self
            .counts
            .into_iter()
            .map(|(k, v)| (k, json!(v)))
            .collect();
        counts.extend(self.extra);
        Report {
            suite: suite.name().to_string(),
            bounds,
            status,
            counterexample: self.failure,
            counts,
        }
    }
}

fn stat_key(s: &StatProfile) -> (u32, u32, u32) {
    (s.mu, s.p, s.q)
}

/// Runs a suite. Bounds above n, l = 8 need the scale override.
pub fn verify_suite(suite: Suite, bounds: Bounds) -> Result<Report, VerifyError> {
    let guard = ScaleGuard::from_env();
    if guard.max.is_some() {
        ScaleGuard { max: Some(8) }.check(bounds.n_max, bounds.l_max)?;
    }
    let t = match suite {
        Suite::RowDeletion => row_deletion(bounds)?,
        Suite::SingleCounts => single_counts(bounds)?,
        Suite::PartitionCounts => partition_counts(bounds),
        Suite::Genfunc => genfunc(bounds),
        Suite::Roundtrip => roundtrip(bounds)?,
        Suite::Inversion => inversion(bounds)?,
        Suite::Qast => qast(bounds),
        Suite::Counterexample => counterexample()?,
        Suite::Reflection => reflection(bounds)?,
    };
    Ok(t.finish(suite, bounds))
}

/// Every r = 1 trapezoid of size (n, l), grouped by j.
fn singles_by_j(n: usize, l: usize) -> Result<BTreeMap<usize, Vec<Astz>>, EnumError> {
    let mut out: BTreeMap<usize, Vec<Astz>> = BTreeMap::new();
    for j in 1..=n {
        for i in 1..=j {
            for_each_single_astz(n, l, i, j, |a| out.entry(j).or_default().push(a.clone()))?;
        }
    }
    Ok(out)
}

fn is_plain_row(row: &[i8]) -> bool {
    row.iter().take(row.len() - 1).all(|&v| v == 0) && row.last() == Some(&1)
}

fn row_deletion(b: Bounds) -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    let mut cache: HashMap<(usize, usize, usize, usize), MultiPoly> = HashMap::new();
    let mut z = |n, l, i, j| -> Result<MultiPoly, EnumError> {
        if let Some(v) = cache.get(&(n, l, i, j)) {
            return Ok(v.clone());
        }
        let v = z_poly(n, l, i, j)?;
        cache.insert((n, l, i, j), v.clone());
        Ok(v)
    };
    let r = MultiPoly::var(crate::algebra::Var::R);
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            for i in 1..=n {
                for j in 1..=n {
                    let v = z(n, l, i, j)?;
                    let case = || json!({"n": n, "l": l, "i": i, "j": j, "z": v.to_string()});
                    if i > j {
                        t.check("vanishing", v.is_zero(), case);
                    } else if i == j {
                        t.check("diagonal", v == r, case);
                    }
                    if j < n {
                        let w = z(n - 1, l, i, j)?;
                        t.check("drop_top_row", v == w, || {
                            json!({"n": n, "l": l, "i": i, "j": j, "lhs": v.to_string(), "rhs": w.to_string()})
                        });
                    }
                    if j == n && i > 1 {
                        let w = z(n - 1, l + 2, i - 1, n - 1)?;
                        t.check("drop_bottom_row", v == w, || {
                            json!({"n": n, "l": l, "i": i, "lhs": v.to_string(), "rhs": w.to_string()})
                        });
                    }
                    if i <= j {
                        let mut bad = None;
                        for_each_single_astz(n, l, i, j, |a| {
                            let rows = a.rows();
                            let fixed = (0..n - j).chain(n + 1 - i..n);
                            if bad.is_none() && !fixed.into_iter().all(|r| is_plain_row(&rows[r])) {
                                bad = Some(a.clone());
                            }
                        })?;
                        t.check("fixed_rows", bad.is_none(), || json!({"astz": bad}));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn single_counts(b: Bounds) -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            let mut tally: HashMap<(usize, usize, u32, u32, u32), u64> = HashMap::new();
            for j in 1..=n {
                for i in 1..=j {
                    for_each_single_astz(n, l, i, j, |a| {
                        let s = astz_stats(a).expect("l >= 2");
                        *tally.entry((i, j, s.mu, s.p, s.q)).or_default() += 1;
                    })?;
                }
            }
            t.bump("objects", tally.values().sum());
            for i in 1..=n {
                for j in 1..=n {
                    for mu in 0..=(2 * n + l) as u32 {
                        for p in 0..=2u32 {
                            for q in 0..=n as u32 {
                                let seen = tally.get(&(i, j, mu, p, q)).copied().unwrap_or(0);
                                let f = single_column_count(
                                    i as i64, j as i64, l as i64, mu as i64, p as i64, q as i64,
                                );
                                t.check("tuples", f == BigInt::from(seen), || {
                                    json!({"n": n, "l": l, "i": i, "j": j, "mu": mu, "p": p, "q": q,
                                           "formula": f.to_string(), "enumerated": seen})
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

fn partition_counts(b: Bounds) -> Tally {
    let mut t = Tally::new();
    for j in 1..=b.n_max {
        for k in 1..b.l_max as u32 {
            let parts = enumerate_partitions(j, k, j);
            t.bump("partitions", parts.len() as u64);
            for d in 1..=k {
                let mut tally: HashMap<(u32, u32, u32), u64> = HashMap::new();
                for c in &parts {
                    let s = csspp_stats(c, d).expect("d in range");
                    *tally.entry(stat_key(&s)).or_default() += 1;
                }
                for mu in 0..=j as u32 {
                    for p in 0..=2u32 {
                        for q in 0..=j as u32 {
                            let seen = tally.get(&(mu, p, q)).copied().unwrap_or(0);
                            let f =
                                one_row_count(j as i64, k as i64, mu as i64, p as i64, q as i64);
                            t.check("tuples", f == BigInt::from(seen), || {
                                json!({"j": j, "k": k, "d": d, "mu": mu, "p": p, "q": q,
                                       "formula": f.to_string(), "enumerated": seen})
                            });
                        }
                    }
                }
            }
            for mu in 0..=j as i64 {
                for p in 0..=1 {
                    for q in 0..=j as i64 {
                        let (jj, kk) = (j as i64, k as i64);
                        let sum: BigInt = (1..=jj)
                            .map(|i| single_column_count(i, jj, kk + 1, mu, p, q))
                            .sum();
                        let f = one_row_count(jj, kk, mu, p, q);
                        t.check("telescoping", sum == f, || {
                            json!({"j": j, "k": k, "mu": mu, "p": p, "q": q,
                                   "sum": sum.to_string(), "formula": f.to_string()})
                        });
                    }
                }
            }
        }
    }
    t
}

fn genfunc(b: Bounds) -> Tally {
    let mut t = Tally::new();
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            let det = genfunc_det(n, l).to_string();
            let astz = astz_weight_sum(n, l).to_string();
            t.check(
                "astz",
                det == astz,
                || json!({"n": n, "l": l, "det": det, "brute_force": astz}),
            );
            for d in 1..l as u32 {
                let cs = csspp_weight_sum(n, (l - 1) as u32, d)
                    .expect("d in range")
                    .to_string();
                t.check(
                    "csspp",
                    det == cs,
                    || json!({"n": n, "l": l, "d": d, "det": det, "brute_force": cs}),
                );
            }
        }
    }
    t
}

fn roundtrip(b: Bounds) -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    let mut distinct_pairs = 0u64;
    let mut equal_pairs = 0u64;
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            let k = (l - 1) as u32;
            let by_j = singles_by_j(n, l)?;
            let mut images: HashMap<BijectionConfig, Vec<Csspp>> = HashMap::new();
            for cfg in BijectionConfig::all(l) {
                for (&j, arrays) in &by_j {
                    let mut seen = BTreeSet::new();
                    for a in arrays {
                        let ctx = || json!({"n": n, "l": l, "config": cfg, "astz": a});
                        let out = match astz_to_partition(a, &cfg) {
                            Ok(c) => c,
                            Err(e) => {
                                t.check(
                                    "forward",
                                    false,
                                    || json!({"error": e.to_string(), "case": ctx()}),
                                );
                                continue;
                            }
                        };
                        let sa = astz_stats(a).expect("l >= 2");
                        let sc = csspp_stats(&out, cfg.d).expect("d in range");
                        t.check(
                            "weight",
                            stat_key(&sa) == stat_key(&sc) && sc.r == 1,
                            || json!({"case": ctx(), "partition": out}),
                        );
                        let back = partition_to_astz(&out, n, &cfg);
                        t.check(
                            "astz_roundtrip",
                            back.as_ref() == Ok(a),
                            || json!({"case": ctx(), "partition": out, "back": back.as_ref().ok()}),
                        );
                        t.check(
                            "injective",
                            out.parts().len() == j && seen.insert(out.clone()),
                            || json!({"case": ctx(), "partition": out}),
                        );
                        images.entry(cfg).or_default().push(out);
                    }
                    let targets = enumerate_partitions(n, k, j);
                    t.check("surjective", seen.len() == targets.len(), || {
                        json!({"n": n, "l": l, "j": j, "config": cfg, "images": seen.len(), "partitions": targets.len()})
                    });
                    for c in &targets {
                        let back =
                            partition_to_astz(c, n, &cfg).and_then(|a| astz_to_partition(&a, &cfg));
                        t.check("partition_roundtrip", back.as_ref() == Ok(c), || {
                            json!({"n": n, "config": cfg, "partition": c,
                                   "result": back.as_ref().map_err(|e| e.to_string()).ok()})
                        });
                    }
                }
            }
            // Compare the four variants at each d (reported, not asserted).
            for d in 1..=k {
                let vs: Vec<&Vec<Csspp>> = BijectionConfig::all(l)
                    .iter()
                    .filter(|c| c.d == d)
                    .filter_map(|c| images.get(c))
                    .collect();
                for x in 0..vs.len() {
                    for y in x + 1..vs.len() {
                        if vs[x] == vs[y] {
                            equal_pairs += 1;
                        } else {
                            distinct_pairs += 1;
                        }
                    }
                }
            }
        }
    }
    t.extra
        .insert("variant_pairs_distinct".into(), json!(distinct_pairs));
    t.extra
        .insert("variant_pairs_identical".into(), json!(equal_pairs));
    Ok(t)
}

type Quintuple = (u32, u32, u32, u32, i64);

fn quintuple(s: &StatProfile) -> Quintuple {
    (s.mu, s.r, s.p, s.q, s.inv)
}

fn inversion(b: Bounds) -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            for (j, arrays) in singles_by_j(n, l)? {
                for a in &arrays {
                    let s = astz_stats(a).expect("l >= 2");
                    let want = j as i64 - (s.mu + s.p + s.q) as i64;
                    t.check(
                        "identity",
                        s.inv == want,
                        || json!({"n": n, "l": l, "astz": a, "inv": s.inv, "expected": want}),
                    );
                }
            }
        }
    }
    let mut conjecture_failures = Vec::new();
    for n in 1..=b.n_max.min(4) {
        for l in 2..=b.l_max.min(4) {
            let mut da: BTreeMap<Quintuple, u64> = BTreeMap::new();
            for_each_astz(n, l, |a| {
                *da.entry(quintuple(&astz_stats(a).expect("l >= 2")))
                    .or_default() += 1
            });
            let cs = enumerate_csspp(n, (l - 1) as u32);
            for d in 1..l as u32 {
                let mut dc: BTreeMap<Quintuple, u64> = BTreeMap::new();
                for c in &cs {
                    *dc.entry(quintuple(&csspp_stats(c, d).expect("d in range")))
                        .or_default() += 1;
                }
                if d == (l - 1) as u32 {
                    t.check("distribution", da == dc, || json!({"n": n, "l": l, "d": d}));
                } else {
                    t.bump("distribution_other_d", 1);
                    if da != dc {
                        conjecture_failures.push(json!({"n": n, "l": l, "d": d}));
                    }
                }
            }
        }
    }
    t.warned = !conjecture_failures.is_empty();
    t.extra.insert(
        "distribution_other_d_mismatches".into(),
        Value::Array(conjecture_failures),
    );
    Ok(t)
}

fn weight_multiset<I: Iterator<Item = MultiPoly>>(it: I) -> BTreeMap<String, u64> {
    let mut m = BTreeMap::new();
    for w in it {
        *m.entry(w.to_string()).or_default() += 1;
    }
    m
}

fn qast(b: Bounds) -> Tally {
    let mut t = Tally::new();
    let mut differ = Vec::new();
    for n in 1..=b.n_max {
        let det = genfunc_det(n, 1);
        let mut quasi = Vec::new();
        for_each_astz(n, 1, |a| quasi.push(qast_weight(a).expect("l = 1")));
        let class0: Vec<MultiPoly> = enumerate_csspp(n, 0)
            .iter()
            .map(|c| class0_weight(c).expect("class 0"))
            .collect();
        let sa: MultiPoly = quasi.iter().cloned().sum();
        let sc: MultiPoly = class0.iter().cloned().sum();
        t.check(
            "quasi_sum",
            sa == det,
            || json!({"n": n, "det": det.to_string(), "brute_force": sa.to_string()}),
        );
        t.check(
            "class0_sum",
            sc == det,
            || json!({"n": n, "det": det.to_string(), "brute_force": sc.to_string()}),
        );
        if weight_multiset(quasi.into_iter()) != weight_multiset(class0.into_iter()) {
            differ.push(n);
        }
    }
    t.warned = !differ.is_empty();
    t.extra
        .insert("multisets_differ_at_n".into(), json!(differ));
    t
}

fn counterexample() -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    let f = obstruction()?;
    t.check(
        "counts_differ",
        f.astz != f.csspp,
        || json!({"astz": f.astz, "csspp": f.csspp}),
    );
    t.extra.insert("astz".into(), json!(f.astz));
    t.extra.insert("csspp".into(), json!(f.csspp));
    Ok(t)
}

fn reflection(b: Bounds) -> Result<Tally, EnumError> {
    let mut t = Tally::new();
    for n in 1..=b.n_max {
        for l in 2..=b.l_max {
            let k = (l - 1) as u32;
            let by_j = singles_by_j(n, l)?;
            for rot in [Rotation::Clockwise, Rotation::Counterclockwise] {
                for d in 1..=k {
                    for (&j, arrays) in &by_j {
                        let mut seen = BTreeSet::new();
                        for a in arrays {
                            let ctx =
                                || json!({"n": n, "l": l, "d": d, "rotation": rot, "astz": a});
                            let out = match reflection_forward(a, rot, d) {
                                Ok(c) => c,
                                Err(e) => {
                                    t.check(
                                        "forward",
                                        false,
                                        || json!({"error": e.to_string(), "case": ctx()}),
                                    );
                                    continue;
                                }
                            };
                            let sa = astz_stats(a).expect("l >= 2");
                            let sc = csspp_stats(&out, d).expect("d in range");
                            t.check(
                                "pq",
                                (sa.p, sa.q) == (sc.p, sc.q),
                                || json!({"case": ctx(), "partition": out}),
                            );
                            t.bump(
                                if sa.mu == sc.mu {
                                    "mu_equal"
                                } else {
                                    "mu_changed"
                                },
                                1,
                            );
                            let back = reflection_inverse(&out, n, rot, d);
                            t.check(
                                "astz_roundtrip",
                                back.as_ref() == Ok(a),
                                || json!({"case": ctx(), "partition": out}),
                            );
                            t.check(
                                "injective",
                                seen.insert(out.clone()),
                                || json!({"case": ctx(), "partition": out}),
                            );
                        }
                        let targets = enumerate_partitions(n, k, j);
                        t.check(
                            "surjective",
                            seen.len() == targets.len(),
                            || json!({"n": n, "l": l, "j": j, "d": d, "rotation": rot}),
                        );
                        for c in &targets {
                            let back = reflection_inverse(c, n, rot, d)
                                .and_then(|a| reflection_forward(&a, rot, d));
                            t.check(
                                "partition_roundtrip",
                                back.as_ref() == Ok(c),
                                || json!({"n": n, "d": d, "rotation": rot, "partition": c}),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}
