//! Exact integer and rational kernels: extended gcd, modular inverses,
//! fraction-free determinants, determinantal divisors, and the
//! continued-fraction engine.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// Shorthand for building an [`ExactInt`] from a machine integer.
pub fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) >= 0` and
/// `a*x + b*y = g`. `gcd(0, 0) = 0`.
pub fn gcd_ext(a: &ExactInt, b: &ExactInt) -> (ExactInt, ExactInt, ExactInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_mod_floor(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let nx = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, nx);
        let ny = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, ny);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// gcd of the absolute values of a slice; 0 for an empty or all-zero slice.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a ExactInt>>(values: I) -> ExactInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Canonical residue of `a` modulo `m` in `[0, m)`.
pub fn residue(a: &ExactInt, m: &ExactInt) -> ExactInt {
    a.mod_floor(m)
}

/// The inverse of `a` modulo `m`, in `[0, m)`. For `m = 1` the answer is 0.
pub fn mod_inverse(a: &ExactInt, m: &ExactInt) -> Result<ExactInt> {
    if *m < BigInt::one() {
        return Err(Error::InvalidModulus(m.to_string()));
    }
    let (g, x, _) = gcd_ext(a, m);
    if !g.is_one() {
        return Err(Error::NotInvertible {
            a: a.to_string(),
            m: m.to_string(),
        });
    }
    Ok(x.mod_floor(m))
}

/// Dense integer matrix, stored row-major. Cone edges are its columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: &[Vec<ExactInt>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch(
                "columns have different lengths".into(),
            ));
        }
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[ExactInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<ExactInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<ExactInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for t in 0..self.cols {
                    acc += &self[(i, t)] * &rhs[(t, j)];
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[ExactInt]) -> Result<Vec<ExactInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Submatrix picking the given rows and columns, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] += factor * row[source]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &ExactInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(source, j)];
            self[(target, j)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }

    /// Replace rows `a`, `b` by `(p*a + q*b, r*a + s*b)`.
    pub(crate) fn combine_rows(
        &mut self,
        a: usize,
        b: usize,
        coeffs: [&ExactInt; 4],
    ) {
        let [p, q, r, s] = coeffs;
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = ExactInt;
    fn index(&self, (i, j): (usize, usize)) -> &ExactInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<ExactInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// gcd of the absolute values of all `k x k` minors.
///
/// For `k = cols` and full column rank this is the index of the lattice
/// spanned by the columns inside the integer points of their span.
pub fn determinantal_divisor(m: &IntMatrix, k: usize) -> Result<ExactInt> {
    if k == 0 || k > m.rows().min(m.cols()) {
        return Err(Error::DimensionMismatch(format!(
            "minor size {k} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let row_sets = combinations(m.rows(), k);
    let col_sets = combinations(m.cols(), k);
    let mut g = BigInt::zero();
    for rows in &row_sets {
        for cols in &col_sets {
            g = g.gcd(&det(&m.select(rows, cols))?);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    if g.is_zero() {
        Err(Error::RankDeficient { k })
    } else {
        Ok(g)
    }
}

/// A point of the projective line over Q: `p/q` up to scaling, `(1, 0)`
/// being infinity. Always stored with `gcd(|p|, |q|) = 1` and `q >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjRat {
    p: ExactInt,
    q: ExactInt,
}

impl ProjRat {
    pub fn new(p: ExactInt, q: ExactInt) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::Degenerate("projective point (0:0)".into()));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(ProjRat { p, q })
    }

    pub fn infinity() -> Self {
        ProjRat {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn from_rational(r: &ExactRat) -> Self {
        ProjRat {
            p: r.numer().clone(),
            q: r.denom().clone(),
        }
    }

    pub fn numer(&self) -> &ExactInt {
        &self.p
    }

    pub fn denom(&self) -> &ExactInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<ExactRat> {
        (!self.is_infinite()).then(|| BigRational::new(self.p.clone(), self.q.clone()))
    }
}

impl fmt::Display for ProjRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// A finite continued-fraction sequence `[a_0; a_1 : ... : a_n]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CFSeq(pub Vec<ExactInt>);

impl CFSeq {
    pub fn from_i64(v: &[i64]) -> Self {
        CFSeq(v.iter().map(|&x| int(x)).collect())
    }

    pub fn elements(&self) -> &[ExactInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Regular: nonempty and every element after the first is positive.
    pub fn is_regular(&self) -> bool {
        !self.0.is_empty() && self.0.iter().skip(1).all(|a| a.is_positive())
    }

    pub fn eval(&self) -> ProjRat {
        cf_eval(&self.0)
    }

    pub fn reversed(&self) -> CFSeq {
        CFSeq(self.0.iter().rev().cloned().collect())
    }
}

impl fmt::Display for CFSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Value of `[a_0; a_1 : ... : a_n]` as a projective rational.
///
/// Evaluated left to right as a product of `[[a, 1], [1, 0]]` matrices, so
/// zero or negative elements never cause a division. The empty sequence
/// evaluates to infinity.
pub fn cf_eval(seq: &[ExactInt]) -> ProjRat {
    // columns (p_k, q_k) and (p_{k-1}, q_{k-1})
    let (mut p, mut p_prev) = (BigInt::one(), BigInt::zero());
    let (mut q, mut q_prev) = (BigInt::zero(), BigInt::one());
    for a in seq {
        let np = a * &p + &p_prev;
        p_prev = std::mem::replace(&mut p, np);
        let nq = a * &q + &q_prev;
        q_prev = std::mem::replace(&mut q, nq);
    }
    // the matrix has determinant ±1, so (p, q) is never (0, 0)
    ProjRat::new(p, q).expect("unimodular product has a nonzero column")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Odd,
    Even,
}

/// The canonical regular expansion: last element > 1 unless the length is 1.
pub fn regular_cf(q: &ExactRat) -> CFSeq {
    let (mut n, mut d) = (q.numer().clone(), q.denom().clone());
    let mut out = Vec::new();
    while !d.is_zero() {
        let (a, r) = n.div_mod_floor(&d);
        out.push(a);
        n = std::mem::replace(&mut d, r);
    }
    CFSeq(out)
}

/// Regular continued fraction of `q` with the requested length parity.
pub fn cf_expand(q: &ExactRat, parity: Parity) -> CFSeq {
    let mut seq = regular_cf(q).0;
    let want_odd = parity == Parity::Odd;
    if (seq.len() % 2 == 1) != want_odd {
        let last = seq.pop().expect("nonempty expansion");
        if seq.is_empty() || last > BigInt::one() {
            seq.push(last - 1u32);
            seq.push(BigInt::one());
        } else {
            // [..., a, 1] = [..., a + 1]
            *seq.last_mut().expect("checked nonempty") += 1u32;
        }
    }
    CFSeq(seq)
}
