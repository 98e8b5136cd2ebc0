//! Exact linear algebra over `ℚ` and over the polynomial ring `ℚ[t]`.
//!
//! [`Matrix`] is a small dense matrix with Gaussian elimination. [`UniPoly`]
//! and [`RatFunc`] are univariate polynomials and rational functions used to
//! solve systems whose entries depend polynomially on a free weight, and
//! [`echelon_over_poly`] performs unimodular row reduction over `ℚ[t]` so that
//! the product of the pivots generates the ideal of maximal minors.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// The matrix unit `E_ij` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Lie bracket `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square());
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let pivot = a[(c, c)].clone();
            det *= &pivot;
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] / &pivot;
                for j in c..n {
                    let v = &a[(c, j)] * &f;
                    a[(r, j)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pivot = a[(c, c)].recip();
            a.scale_row(c, &pivot);
            inv.scale_row(c, &pivot);
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                a.axpy_row(r, c, &f);
                inv.axpy_row(r, c, &f);
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        a.reduce(self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Rational) {
        for j in 0..self.cols {
            self[(r, j)] *= s;
        }
    }

    /// `row[target] -= f * row[source]`
    fn axpy_row(&mut self, target: usize, source: usize, f: &Rational) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * f;
            self[(target, j)] -= v;
        }
    }

    /// Reduced row echelon form on the first `pivot_cols` columns, in place.
    /// Returns the number of pivots.
    fn reduce(&mut self, pivot_cols: usize) -> usize {
        let mut r = 0;
        for c in 0..pivot_cols {
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].recip();
            self.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    self.axpy_row(i, r, &f);
                }
            }
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Rational>),
    /// Coefficient matrix has rank below the number of unknowns.
    Singular { rank: usize },
    Inconsistent,
}

/// Solves the (possibly overdetermined) system `a · x = b`.
pub fn solve(a: &Matrix, b: &[Rational]) -> SolveOutcome {
    assert_eq!(a.rows, b.len());
    let n = a.cols;
    let mut aug = Matrix::from_fn(a.rows, n + 1, |i, j| if j < n { a[(i, j)].clone() } else { b[i].clone() });
    let rank = aug.reduce(n);
    if (rank..aug.rows).any(|i| !aug[(i, n)].is_zero()) {
        return SolveOutcome::Inconsistent;
    }
    if rank < n {
        return SolveOutcome::Singular { rank };
    }
    SolveOutcome::Unique((0..n).map(|i| aug[(i, n)].clone()).collect())
}

/// Univariate polynomial over `ℚ`, coefficients from low to high degree, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &lc;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= c * &f;
            }
            quot[shift] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rational roots with multiplicities, plus the cofactor that has no
    /// rational roots. Returns `None` for the zero polynomial.
    pub fn rational_roots(&self) -> Option<(Vec<(Rational, u32)>, UniPoly)> {
        if self.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        for r in square_free(self).rational_root_candidates() {
            let factor = UniPoly::linear(-r.clone(), Rational::one());
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&factor);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort();
        Some((roots, rest))
    }

    /// Candidates `±p/q` with `p | a0`, `q | an` after clearing denominators;
    /// zero is included when the constant term vanishes.
    fn rational_root_candidates(&self) -> Vec<Rational> {
        let ints = integer_coeffs(self);
        let mut out = Vec::new();
        let first = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if first > 0 {
            out.push(Rational::zero());
        }
        let a0 = ints[first].abs();
        let an = ints.last().unwrap().abs();
        if ints.len() - first <= 1 {
            return out;
        }
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1, -1] {
                    let r = Rational::new(BigInt::from(sign) * &p, q.clone());
                    if self.eval(&r).is_zero() && !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = rational::format(&mag);
            match i {
                0 => out.push_str(&coef),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coef);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

fn square_free(p: &UniPoly) -> UniPoly {
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        p.clone()
    } else {
        p.div_rem(&g).0
    }
}

fn integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.to_u64().expect("coefficient too large for rational-root search");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(UniPoly::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().unwrap().recip();
        Self { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::constant(Rational::one()) }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&(&self.num * &other.den) - &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn mul_poly(&self, p: &UniPoly) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &UniPoly) -> Self {
        Self::new(self.num.clone(), &self.den * p)
    }
}

/// Result of [`echelon_over_poly`].
#[derive(Clone, Debug)]
pub struct PolyEchelon {
    /// Upper-triangular pivot block, one row per unknown.
    pub pivots: Vec<Vec<UniPoly>>,
    /// Transformed right-hand sides of the pivot rows.
    pub rhs: Vec<UniPoly>,
    /// Right-hand sides of the rows whose coefficient part reduced to zero.
    pub residual_rhs: Vec<UniPoly>,
}

impl PolyEchelon {
    /// Product of the diagonal pivots: generates the ideal of maximal minors.
    pub fn determinant(&self) -> UniPoly {
        self.pivots
            .iter()
            .enumerate()
            .fold(UniPoly::constant(Rational::one()), |acc, (i, row)| &acc * &row[i])
    }

    /// Solves the triangular system over `ℚ(t)`.
    pub fn back_substitute(&self) -> Vec<RatFunc> {
        let n = self.pivots.len();
        let mut sol: Vec<RatFunc> = vec![RatFunc::from_poly(UniPoly::zero()); n];
        for i in (0..n).rev() {
            let mut acc = RatFunc::from_poly(self.rhs[i].clone());
            for j in i + 1..n {
                acc = acc.sub(&sol[j].mul_poly(&self.pivots[i][j]));
            }
            sol[i] = acc.div_poly(&self.pivots[i][i]);
        }
        sol
    }
}

/// Unimodular row reduction of `[A | b]` over `ℚ[t]`, where each row holds the
/// coefficient entries followed by the right-hand side. Returns `None` when the
/// coefficient columns are rank-deficient over `ℚ(t)`.
pub fn echelon_over_poly(mut rows: Vec<Vec<UniPoly>>, unknowns: usize) -> Option<PolyEchelon> {
    rows.retain(|r| r.iter().any(|e| !e.is_zero()));
    let mut top = 0;
    for c in 0..unknowns {
        loop {
            let pivot = (top..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].degree().unwrap())?;
            rows.swap(top, pivot);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let (q, r) = rows[i][c].div_rem(&rows[top][c]);
                let sub: Vec<UniPoly> = rows[top].iter().map(|e| e * &q).collect();
                for (e, s) in rows[i].iter_mut().zip(sub) {
                    *e = &*e - &s;
                }
                if !r.is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        top += 1;
    }
    let rest = rows.split_off(top);
    let rhs = rows.iter().map(|r| r[unknowns].clone()).collect();
    let pivots = rows.into_iter().map(|mut r| {
        r.truncate(unknowns);
        r
    });
    Some(PolyEchelon {
        pivots: pivots.collect(),
        rhs,
        residual_rhs: rest.into_iter().map(|r| r[unknowns].clone()).collect(),
    })
}
