//! Sections of weighted tensor bundles over `ℝ^m` with polynomial coefficients.
//!
//! A label `(D, n, δ)` with `D` a single row `(k)` or a single column `(1^p)`
//! is realized as contravariant symmetric `k`-tensors (resp. `p`-vectors)
//! tensored with densities of weight `δ − n`. The Lie derivative is the
//! geometric one,
//!
//! `L_X s = X·s − ρ(DX) s + (δ − n) div(X) s`,
//!
//! where `ρ` is the derived tensor action. Symmetric tensors are stored as
//! polynomials in auxiliary fiber variables `ξ`, so `ρ(E_ij)` is `ξ_i ∂/∂ξ_j`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use super::field::PolyVectorField;
use super::poly::{monomials_of_degree, Poly};
use crate::diagrams::IrrepLabel;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Fiber index: an exponent vector in `ξ` for symmetric tensors, a strictly
/// increasing index list for multivectors.
pub type FiberIndex = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fiber {
    Sym(u32),
    Alt(u32),
}

impl Fiber {
    pub fn for_label(label: &IrrepLabel) -> Result<Fiber> {
        let rows = label.diagram().rows();
        match rows {
            [] => Ok(Fiber::Sym(0)),
            [k] => Ok(Fiber::Sym(*k)),
            _ if rows.iter().all(|&r| r == 1) => Ok(Fiber::Alt(rows.len() as u32)),
            _ => Err(Error::UnsupportedFiber(label.diagram().to_string())),
        }
    }

    pub fn basis(&self, m: usize) -> Vec<FiberIndex> {
        match *self {
            Fiber::Sym(k) => monomials_of_degree(m, k),
            Fiber::Alt(p) => {
                use itertools::Itertools;
                (0..m as u32).combinations(p as usize).collect()
            }
        }
    }

    /// Derived action of the matrix unit `E_ij` on a basis element.
    pub fn act(&self, i: usize, j: usize, idx: &FiberIndex) -> Vec<(FiberIndex, Rational)> {
        match self {
            Fiber::Sym(_) => {
                if idx[j] == 0 {
                    return Vec::new();
                }
                let mut out = idx.clone();
                out[j] -= 1;
                out[i] += 1;
                vec![(out, Rational::from_integer(idx[j].into()))]
            }
            Fiber::Alt(_) => {
                let (i, j) = (i as u32, j as u32);
                let Some(pos) = idx.iter().position(|&v| v == j) else {
                    return Vec::new();
                };
                if i == j {
                    return vec![(idx.clone(), Rational::one())];
                }
                if idx.contains(&i) {
                    return Vec::new();
                }
                let mut out = idx.clone();
                out[pos] = i;
                // sign of the sort that restores increasing order
                let mut sign = 1i64;
                let mut p = pos;
                while p > 0 && out[p - 1] > out[p] {
                    out.swap(p - 1, p);
                    sign = -sign;
                    p -= 1;
                }
                while p + 1 < out.len() && out[p] > out[p + 1] {
                    out.swap(p, p + 1);
                    sign = -sign;
                    p += 1;
                }
                vec![(out, rational::int(sign))]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSection {
    label: IrrepLabel,
    fiber: Fiber,
    components: BTreeMap<FiberIndex, Poly>,
}

impl WeightedSection {
    pub fn zero(label: &IrrepLabel) -> Result<Self> {
        Ok(Self { fiber: Fiber::for_label(label)?, label: label.clone(), components: BTreeMap::new() })
    }

    /// Section with every fiber component a random polynomial of degree at most `max_degree`.
    pub fn random(label: &IrrepLabel, max_degree: u32, rng: &mut impl Rng) -> Result<Self> {
        let mut s = Self::zero(label)?;
        let m = label.rank();
        for idx in s.fiber.basis(m) {
            s.set(idx, Poly::random(m, max_degree, rng));
        }
        Ok(s)
    }

    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn fiber(&self) -> Fiber {
        self.fiber
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    /// Weight of the density factor, `δ − n`.
    pub fn density_weight(&self) -> Rational {
        self.label.weight() - rational::int(self.label.twist())
    }

    pub fn components(&self) -> &BTreeMap<FiberIndex, Poly> {
        &self.components
    }

    pub fn component(&self, idx: &[u32]) -> Poly {
        self.components.get(idx).cloned().unwrap_or_else(|| Poly::zero(self.rank()))
    }

    pub fn set(&mut self, idx: FiberIndex, p: Poly) {
        if p.is_zero() {
            self.components.remove(&idx);
        } else {
            self.components.insert(idx, p);
        }
    }

    pub fn add_to(&mut self, idx: FiberIndex, p: &Poly, s: &Rational) {
        let m = self.rank();
        let slot = self.components.entry(idx.clone()).or_insert_with(|| Poly::zero(m));
        slot.add_scaled(p, s);
        if slot.is_zero() {
            self.components.remove(&idx);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Highest coefficient degree.
    pub fn degree(&self) -> Option<u32> {
        self.components.values().filter_map(Poly::degree).max()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = self.with_components(BTreeMap::new());
        for (idx, p) in &self.components {
            out.set(idx.clone(), p.scale(s));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, p) in &other.components {
            out.add_to(idx.clone(), p, &Rational::one());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    fn with_components(&self, components: BTreeMap<FiberIndex, Poly>) -> Self {
        Self { label: self.label.clone(), fiber: self.fiber, components }
    }

    /// Same coefficients, relabelled with another weight.
    pub fn with_weight(&self, weight: Rational) -> Self {
        Self { label: self.label.with_weight(weight), ..self.clone() }
    }

    /// The scalar `c` with `self = c · other`, if one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        let (idx, p) = other.components.iter().next().unwrap();
        let (mono, c) = p.terms().next().unwrap();
        let ratio = self.component(idx).coeff(mono) / c;
        (self.sub(&other.scale(&ratio)).is_zero()).then_some(ratio)
    }

    pub fn lie_derivative(&self, x: &PolyVectorField) -> Self {
        let m = self.rank();
        let mut out = self.with_components(BTreeMap::new());
        let div = x.divergence();
        let w = self.density_weight();
        let jac: Vec<Vec<Poly>> = (0..m).map(|i| (0..m).map(|j| x.jacobian(i, j)).collect()).collect();
        for (idx, p) in &self.components {
            out.add_to(idx.clone(), &x.apply(p), &Rational::one());
            if !w.is_zero() && !div.is_zero() {
                out.add_to(idx.clone(), &(&div * p), &w);
            }
            for (i, row) in jac.iter().enumerate() {
                for (j, dji) in row.iter().enumerate() {
                    if dji.is_zero() {
                        continue;
                    }
                    for (target, c) in self.fiber.act(i, j, idx) {
                        out.add_to(target, &(dji * p), &-c);
                    }
                }
            }
        }
        out
    }

    /// `(Div P)^{i2…ik} = Σ_j ∂_j P^{j i2…ik}`; in fiber variables this is
    /// `(1/k) Σ_j ∂²P/∂x_j∂ξ_j`.
    pub fn divergence(&self) -> Result<Self> {
        let Fiber::Sym(k) = self.fiber else {
            return Err(Error::UnsupportedFiber(self.label.diagram().to_string()));
        };
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let label = IrrepLabel::new(
            crate::diagrams::YoungDiagram::row(k - 1),
            self.rank(),
            self.label.twist(),
            self.label.weight().clone(),
        )?;
        let mut out = Self::zero(&label)?;
        let inv_k = Rational::new(1.into(), k.into());
        for (idx, p) in &self.components {
            for j in 0..self.rank() {
                if idx[j] == 0 {
                    continue;
                }
                let mut lower = idx.clone();
                lower[j] -= 1;
                let scale = Rational::from_integer(idx[j].into()) * &inv_k;
                out.add_to(lower, &p.deriv(j), &scale);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::YoungDiagram;
    use crate::rational::{frac, int};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sym(k: u32, m: usize, delta: Rational) -> IrrepLabel {
        IrrepLabel::new(YoungDiagram::row(k), m, 0, delta).unwrap()
    }

    #[test]
    fn fibers() {
        let l = IrrepLabel::new(YoungDiagram::column(2), 3, 0, int(0)).unwrap();
        assert_eq!(Fiber::for_label(&l).unwrap(), Fiber::Alt(2));
        assert_eq!(Fiber::Alt(2).basis(3).len(), 3);
        assert_eq!(Fiber::Sym(2).basis(3).len(), 6);
        let hook = IrrepLabel::new(YoungDiagram::new(vec![2, 1]).unwrap(), 3, 0, int(0)).unwrap();
        assert!(Fiber::for_label(&hook).is_err());
        // E_20 e_0∧e_1 = e_2∧e_1 = −e_1∧e_2
        assert_eq!(Fiber::Alt(2).act(2, 0, &vec![0, 1]), vec![(vec![1, 2], int(-1))]);
        assert!(Fiber::Alt(2).act(1, 0, &vec![0, 1]).is_empty());
    }

    #[test]
    fn translation_kills_constants() {
        let mut s = WeightedSection::zero(&sym(2, 2, frac(1, 3))).unwrap();
        s.set(vec![1, 1], Poly::constant(2, int(5)));
        assert!(s.lie_derivative(&PolyVectorField::coordinate(2, 0)).is_zero());
    }

    #[test]
    fn euler_field_scales_densities() {
        for m in 2..=4 {
            let delta = frac(2, 7);
            let mut s = WeightedSection::zero(&sym(0, m, delta.clone())).unwrap();
            s.set(vec![0; m], Poly::constant(m, int(3)));
            let out = s.lie_derivative(&PolyVectorField::euler(m));
            assert_eq!(out, s.scale(&(delta * int(m as i64))));
        }
    }

    #[test]
    fn lie_derivative_of_vector_field_is_bracket() {
        let m = 2;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = PolyVectorField::new(vec![Poly::random(m, 2, &mut rng), Poly::random(m, 2, &mut rng)]);
        let y = PolyVectorField::new(vec![Poly::random(m, 2, &mut rng), Poly::random(m, 2, &mut rng)]);
        let mut s = WeightedSection::zero(&sym(1, m, int(0))).unwrap();
        s.set(vec![1, 0], y.components()[0].clone());
        s.set(vec![0, 1], y.components()[1].clone());
        let l = s.lie_derivative(&x);
        let b = x.bracket(&y);
        assert_eq!(l.component(&[1, 0]), b.components()[0]);
        assert_eq!(l.component(&[0, 1]), b.components()[1]);
    }

    #[test]
    fn lie_derivative_respects_brackets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = 2;
        let labels = [
            sym(0, m, frac(1, 2)),
            sym(1, m, frac(-2, 3)),
            sym(2, m, int(1)),
            IrrepLabel::new(YoungDiagram::column(2), 3, 1, frac(1, 4)).unwrap(),
        ];
        for label in labels {
            let m = label.rank();
            for _ in 0..5 {
                let x = PolyVectorField::new((0..m).map(|_| Poly::random(m, 2, &mut rng)).collect());
                let y = PolyVectorField::new((0..m).map(|_| Poly::random(m, 2, &mut rng)).collect());
                let s = WeightedSection::random(&label, 2, &mut rng).unwrap();
                let lhs = s.lie_derivative(&y).lie_derivative(&x).sub(&s.lie_derivative(&x).lie_derivative(&y));
                assert_eq!(lhs, s.lie_derivative(&x.bracket(&y)));
            }
        }
    }

    #[test]
    fn divergence_examples() {
        // P = x1 ∂1⊙∂1 on ℝ²: Div P = ∂1
        let mut p = WeightedSection::zero(&sym(2, 2, int(0))).unwrap();
        p.set(vec![2, 0], Poly::var(2, 0));
        let d = p.divergence().unwrap();
        assert_eq!(d.component(&[1, 0]), Poly::one(2));
        assert_eq!(d.components().len(), 1);

        let mut c = WeightedSection::zero(&sym(2, 2, int(0))).unwrap();
        c.set(vec![1, 1], Poly::constant(2, int(4)));
        assert!(c.divergence().unwrap().is_zero());

        let s0 = WeightedSection::zero(&sym(0, 2, int(0))).unwrap();
        assert_eq!(s0.divergence(), Err(Error::ZeroDegree));
    }

    /// Tensor form: `(Div P)^i = Σ_j ∂_j P^{ji}` with `P^{ij}` the symmetric
    /// components (off-diagonal fiber coefficients split in half).
    #[test]
    fn divergence_matches_tensor_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = 3;
        let p = WeightedSection::random(&sym(2, m, int(0)), 3, &mut rng).unwrap();
        let tensor = |i: usize, j: usize| {
            let mut e = vec![0u32; m];
            e[i] += 1;
            e[j] += 1;
            let c = p.component(&e);
            if i == j { c } else { c.scale(&frac(1, 2)) }
        };
        let d = p.divergence().unwrap();
        for i in 0..m {
            let expected = (0..m).fold(Poly::zero(m), |acc, j| &acc + &tensor(j, i).deriv(j));
            let mut e = vec![0u32; m];
            e[i] = 1;
            assert_eq!(d.component(&e), expected);
        }
    }

    #[test]
    fn double_divergence_on_cubics() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = WeightedSection::random(&sym(3, 2, int(0)), 4, &mut rng).unwrap();
        let dd = p.divergence().unwrap().divergence().unwrap();
        // Σ_{j,l} ∂_j ∂_l P^{j l i}, symmetric in (j, l): compare with the
        // formula using the fiber-variable form directly.
        let mut direct = WeightedSection::zero(&sym(1, 2, int(0))).unwrap();
        for (idx, poly) in p.components() {
            for j in 0..2 {
                for l in 0..2 {
                    let mut lower = idx.clone();
                    if lower[j] == 0 {
                        continue;
                    }
                    let a = lower[j];
                    lower[j] -= 1;
                    if lower[l] == 0 {
                        continue;
                    }
                    let b = lower[l];
                    lower[l] -= 1;
                    let coef = Rational::from_integer((a * b).into()) * frac(1, 6);
                    direct.add_to(lower, &poly.deriv(j).deriv(l), &coef);
                }
            }
        }
        assert_eq!(dd, direct);
    }

    #[test]
    fn ratio() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let s = WeightedSection::random(&sym(1, 2, int(0)), 2, &mut rng).unwrap();
        assert_eq!(s.scale(&frac(-3, 5)).ratio_to(&s), Some(frac(-3, 5)));
        let t = WeightedSection::random(&sym(1, 2, int(0)), 2, &mut rng).unwrap();
        assert_eq!(t.ratio_to(&s), None);
    }
}
