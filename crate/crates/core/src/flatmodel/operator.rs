//! Scalar differential operators `Σ_β C_β ∂^β` with polynomial coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::field::PolyVectorField;
use super::poly::{monomials_up_to, Monomial, Poly};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    nvars: usize,
    coeffs: BTreeMap<Monomial, Poly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * Rational::new((n - i).into(), (i + 1).into()))
}

impl DiffOperator {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, coeffs: BTreeMap::new() }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::multiplication(&Poly::one(nvars))
    }

    pub fn multiplication(f: &Poly) -> Self {
        let mut op = Self::zero(f.nvars());
        op.add_term(vec![0; f.nvars()], f, &Rational::one());
        op
    }

    /// Weighted first-order operator `X^i ∂_i + w div(X)`, the Lie derivative
    /// on densities of weight `w`.
    pub fn first_order(x: &PolyVectorField, w: &Rational) -> Self {
        let m = x.dim();
        let mut op = Self::zero(m);
        for (i, xi) in x.components().iter().enumerate() {
            let mut beta = vec![0; m];
            beta[i] = 1;
            op.add_term(beta, xi, &Rational::one());
        }
        op.add_term(vec![0; m], &x.divergence(), w);
        op
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, Poly> {
        &self.coeffs
    }

    pub fn coeff(&self, beta: &[u32]) -> Poly {
        self.coeffs.get(beta).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest `|β|` with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.keys().map(|b| b.iter().sum()).max()
    }

    /// `self += s · C ∂^β`
    pub fn add_term(&mut self, beta: Monomial, c: &Poly, s: &Rational) {
        if c.is_zero() || s.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(beta.clone()).or_insert_with(|| Poly::zero(self.nvars));
        slot.add_scaled(c, s);
        if slot.is_zero() {
            self.coeffs.remove(&beta);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Rational) {
        for (beta, c) in &other.coeffs {
            self.add_term(beta.clone(), c, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(self, s);
        out
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (beta, c) in &self.coeffs {
            out = &out + &(c * &f.deriv_multi(beta));
        }
        out
    }

    /// `self ∘ other`, expanded with the Leibniz rule.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (alpha, a) in &self.coeffs {
            let splits = monomials_up_to(self.nvars, alpha.iter().sum())
                .into_iter()
                .filter(|g| g.iter().zip(alpha).all(|(gi, ai)| gi <= ai));
            for gamma in splits {
                let weight = gamma.iter().zip(alpha).fold(Rational::one(), |acc, (&g, &a)| acc * binomial(a, g));
                for (beta, b) in &other.coeffs {
                    let db = b.deriv_multi(&gamma);
                    if db.is_zero() {
                        continue;
                    }
                    let total: Monomial = alpha.iter().zip(&gamma).zip(beta).map(|((a, g), b)| a - g + b).collect();
                    out.add_term(total, &(a * &db), &weight);
                }
            }
        }
        out
    }

    /// Coefficients evaluated at a point, as a constant-coefficient operator.
    pub fn at_point(&self, point: &[Rational]) -> BTreeMap<Monomial, Rational> {
        self.coeffs
            .iter()
            .map(|(b, c)| (b.clone(), c.eval(point)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Principal part: the terms of top order.
    pub fn principal(&self) -> Self {
        let Some(k) = self.order() else { return self.clone() };
        Self {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().filter(|(b, _)| b.iter().sum::<u32>() == k).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_op(m: usize, order: u32, rng: &mut ChaCha8Rng) -> DiffOperator {
        let mut op = DiffOperator::zero(m);
        for beta in monomials_up_to(m, order) {
            op.add_term(beta, &Poly::random(m, 2, rng), &int(1));
        }
        op
    }

    #[test]
    fn composition_matches_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 1..=3 {
            let a = random_op(m, 2, &mut rng);
            let b = random_op(m, 2, &mut rng);
            let ab = a.compose(&b);
            for _ in 0..3 {
                let f = Poly::random(m, 5, &mut rng);
                assert_eq!(ab.apply(&f), a.apply(&b.apply(&f)));
            }
        }
    }

    #[test]
    fn first_order_on_densities() {
        let x = PolyVectorField::euler(2);
        let op = DiffOperator::first_order(&x, &int(3));
        // x·∂ + 6 on the constant 1
        assert_eq!(op.apply(&Poly::one(2)), Poly::constant(2, int(6)));
        assert_eq!(op.order(), Some(1));
    }

    #[test]
    fn orders_and_identity() {
        assert_eq!(DiffOperator::zero(2).order(), None);
        let id = DiffOperator::identity(2);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_op(2, 3, &mut rng);
        assert_eq!(id.compose(&a), a);
        assert_eq!(a.compose(&id), a);
        assert_eq!(a.principal().order(), Some(3));
        assert!(a.sub(&a).is_zero());
    }
}
