use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use crate::rational::{self, Rational};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in `x_0 … x_{m−1}` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    /// Random polynomial of degree at most `max_degree`, small integer coefficients.
    pub fn random(nvars: usize, max_degree: u32, rng: &mut impl Rng) -> Self {
        let mut p = Self::zero(nvars);
        for exps in monomials_up_to(nvars, max_degree) {
            let c: i64 = rng.gen_range(-4..=4);
            p.add_term(exps, rational::int(c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `self += s · other`
    pub fn add_scaled(&mut self, other: &Poly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *slot += c * s;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    /// `∂/∂x_i`
    pub fn deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.terms.insert(f, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// `∂^β`
    pub fn deriv_multi(&self, beta: &[u32]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        'terms: for (e, c) in &self.terms {
            let mut f = e.clone();
            let mut factor = c.clone();
            for (i, &b) in beta.iter().enumerate() {
                if e[i] < b {
                    continue 'terms;
                }
                for t in 0..b {
                    factor *= Rational::from_integer((e[i] - t).into());
                }
                f[i] -= b;
            }
            out.terms.insert(f, factor);
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * rational::pow(x, k.into()))
            })
            .sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
                if vars.is_empty() {
                    rational::format(c)
                } else {
                    format!("{}*{}", rational::format(c), vars.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Poly { nvars: self.nvars, terms }
    }
}

/// Exponent vectors of total degree exactly `degree` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, acc: &mut Monomial, out: &mut Vec<Monomial>) {
        if i + 1 == acc.len() {
            acc[i] = left;
            out.push(acc.clone());
            return;
        }
        for e in (0..=left).rev() {
            acc[i] = e;
            go(i + 1, left - e, acc, out);
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(0, degree, &mut vec![0; nvars], &mut out);
    out
}

pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}
