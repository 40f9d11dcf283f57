//! Exact polynomials in the four weight variables M, R, P, Q, plus binomials
//! and determinants over them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("cannot parse polynomial term `{term}`: {reason}")]
    Parse { term: String, reason: String },
}

/// One of the four formal variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    M,
    R,
    P,
    Q,
}

/// Exponent vector (eM, eR, eP, eQ). The derived order is the lexicographic
/// order used by the canonical text form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub m: u32,
    pub r: u32,
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        m: 0,
        r: 0,
        p: 0,
        q: 0,
    };

    pub fn new(m: u32, r: u32, p: u32, q: u32) -> Self {
        Monomial { m, r, p, q }
    }

    pub fn var(v: Var) -> Self {
        let mut e = Monomial::ONE;
        *e.slot(v) = 1;
        e
    }

    fn slot(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::M => &mut self.m,
            Var::R => &mut self.r,
            Var::P => &mut self.p,
            Var::Q => &mut self.q,
        }
    }

    pub fn degree(&self) -> u32 {
        self.m + self.r + self.p + self.q
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial::new(self.m + o.m, self.r + o.r, self.p + o.p, self.q + o.q)
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("M", self.m), ("R", self.r), ("P", self.p), ("Q", self.q)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// Polynomial with arbitrary-precision integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v), 1)
    }

    pub fn term<T: Into<BigInt>>(mono: Monomial, coeff: T) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(mono, coeff.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Evaluates at integer values of (M, R, P, Q).
    pub fn eval(&self, m: &BigInt, r: &BigInt, p: &BigInt, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * m.pow(e.m) * r.pow(e.r) * p.pow(e.p) * q.pow(e.q))
            .sum()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, false) => {}
                (0, true) => f.write_str("- ")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let abs = c.abs();
            let vars = mono.render();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars)?;
            } else {
                write!(f, "{abs}*{vars}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(MultiPoly::zero());
        }
        // Split into signed chunks on the " + " / " - " separators.
        let mut out = MultiPoly::zero();
        let mut rest = s;
        let mut sign_neg = false;
        if let Some(r) = rest.strip_prefix("- ") {
            sign_neg = true;
            rest = r;
        }
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|p| (p, *sep)))
                .min_by_key(|(p, _)| *p);
            let (chunk, tail) = match next {
                Some((p, sep)) => (&rest[..p], Some((&rest[p + 3..], sep == " - "))),
                None => (rest, None),
            };
            let (mono, mut c) = parse_term(chunk)?;
            if sign_neg {
                c = -c;
            }
            out.add_term(mono, c);
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    sign_neg = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(chunk: &str) -> Result<(Monomial, BigInt), AlgebraError> {
    let err = |reason: &str| AlgebraError::Parse {
        term: chunk.to_string(),
        reason: reason.to_string(),
    };
    let mut coeff = BigInt::one();
    let mut mono = Monomial::ONE;
    for (idx, factor) in chunk.split('*').enumerate() {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(err("empty factor"));
        }
        if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            if idx != 0 {
                return Err(err("coefficient must come first"));
            }
            coeff = factor.parse().map_err(|_| err("bad coefficient"))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
            None => (factor, 1),
        };
        let v = match name {
            "M" => Var::M,
            "R" => Var::R,
            "P" => Var::P,
            "Q" => Var::Q,
            _ => return Err(err("unknown variable")),
        };
        *mono.slot(v) += exp;
    }
    if coeff.is_zero() {
        return Err(err("zero coefficient"));
    }
    Ok((mono, coeff))
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, p| acc + p)
    }
}

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    binomial_ext(n, k.min(n - k))
}

/// Binomial extended to negative upper index: n(n-1)...(n-k+1)/k! for
/// k >= 0, zero for k < 0. Agrees with [`binomial`] whenever n >= 0.
pub fn binomial_ext(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(n - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

/// Determinant by Laplace expansion along rows, memoised on the set of
/// columns still available.
pub fn poly_det(mat: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let n = mat.len();
    for (row, r) in mat.iter().enumerate() {
        if r.len() != n {
            return Err(AlgebraError::NotSquare {
                rows: n,
                row,
                len: r.len(),
            });
        }
    }
    assert!(n < 32, "matrix too large for the bitmask expansion");
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    Ok(minor(mat, (1u32 << n) - 1, &mut memo))
}

fn minor(mat: &[Vec<MultiPoly>], cols: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
    if cols == 0 {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let n = mat.len();
    let row = n - cols.count_ones() as usize;
    let mut acc = MultiPoly::zero();
    let mut sign_neg = false;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &mat[row][c];
        if !entry.is_zero() {
            let sub = minor(mat, cols & !(1 << c), memo);
            let t = entry * &sub;
            if sign_neg {
                acc = &acc - &t;
            } else {
                acc += &t;
            }
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}
