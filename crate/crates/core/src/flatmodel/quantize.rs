//! Projectively equivariant quantization of density-valued symbols on `ℝ^m`.
//!
//! A symbol `P` is a symmetric contravariant `k`-tensor of weight `δ = μ − λ`.
//! The ansatz is `Q(P) = Σ_l c_l ⟨Div^l P, ∂^{k−l}⟩` with `c_0 = 1`, acting
//! from `λ`-densities to `μ`-densities. Constant coefficients make `Q`
//! translation- and `gl(m)`-equivariant for every choice of `c`, so only the
//! quadratic generators impose conditions. These are linear in `c` and affine
//! in `δ` (for fixed `λ`), giving a polynomial system over `ℚ[δ]` whose
//! determinantal divisor locates the resonant weights.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::Rng;

use super::field::{grade_of, proj_embedding, standard_basis, Grade, PolyVectorField};
use super::operator::DiffOperator;
use super::poly::{monomials_of_degree, monomials_up_to, Poly};
use super::section::{Fiber, WeightedSection};
use crate::diagrams::{IrrepLabel, YoungDiagram};
use crate::error::{Error, Result};
use crate::linalg::{echelon_over_poly, solve, Matrix, RatFunc, SolveOutcome, UniPoly};
use crate::linalg::PolyEchelon;
use crate::rational::{self, Rational};

/// Ansatz coefficients `c_0 = 1, c_1, …, c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantCoefficients {
    c: Vec<Rational>,
}

impl QuantCoefficients {
    pub fn new(c: Vec<Rational>) -> Self {
        assert!(c.first().is_some_and(One::is_one), "leading coefficient must be 1");
        Self { c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn order(&self) -> u32 {
        self.c.len() as u32 - 1
    }
}

/// Label of weight-`δ` symbols of degree `k` on `ℝ^m`.
pub fn symbol_label(m: usize, k: u32, delta: Rational) -> Result<IrrepLabel> {
    IrrepLabel::new(YoungDiagram::row(k), m, 0, delta)
}

fn check_symbol(p: &WeightedSection) -> Result<u32> {
    match p.fiber() {
        Fiber::Sym(k) if p.label().twist() == 0 => Ok(k),
        _ => Err(Error::SectionMismatch(format!("expected a symmetric-tensor symbol, got {}", p.label()))),
    }
}

/// `⟨Div^l P, ∂^{k−l}⟩`
pub fn ansatz_term(p: &WeightedSection, l: u32) -> Result<DiffOperator> {
    let k = check_symbol(p)?;
    assert!(l <= k);
    let mut d = p.clone();
    for _ in 0..l {
        d = d.divergence()?;
    }
    let mut op = DiffOperator::zero(p.rank());
    for (idx, coeff) in d.components() {
        op.add_term(idx.clone(), coeff, &Rational::one());
    }
    Ok(op)
}

pub fn quantization_operator(p: &WeightedSection, c: &QuantCoefficients) -> Result<DiffOperator> {
    let k = check_symbol(p)?;
    if c.order() != k {
        return Err(Error::SectionMismatch(format!("symbol degree {k} but {} coefficients", c.c.len())));
    }
    let mut op = DiffOperator::zero(p.rank());
    for (l, cl) in c.c.iter().enumerate() {
        if !cl.is_zero() {
            op.add_scaled(&ansatz_term(p, l as u32)?, cl);
        }
    }
    Ok(op)
}

/// `L^μ_X ∘ D − D ∘ L^λ_X` for `D` mapping `λ`-densities to `μ`-densities.
pub fn operator_lie_derivative(x: &PolyVectorField, d: &DiffOperator, lambda: &Rational, mu: &Rational) -> DiffOperator {
    DiffOperator::first_order(x, mu).compose(d).sub(&d.compose(&DiffOperator::first_order(x, lambda)))
}

/// Equivariance defect `L_X(Q(P)) − Q(L_X P)`.
pub fn equivariance_defect(
    x: &PolyVectorField,
    p: &WeightedSection,
    c: &QuantCoefficients,
    lambda: &Rational,
) -> Result<DiffOperator> {
    let mu = lambda + p.label().weight();
    let q = quantization_operator(p, c)?;
    Ok(operator_lie_derivative(x, &q, lambda, &mu).sub(&quantization_operator(&p.lie_derivative(x), c)?))
}

/// Operator coefficients evaluated at the origin, keyed by derivative multi-index.
type ValuesAtOrigin = BTreeMap<Vec<u32>, Rational>;

/// Linear conditions on `(c_0, …, c_k)`, each of the form
/// `Σ_l (a_l + δ b_l) c_l = 0`, kept as a basis of their span over `ℚ`.
#[derive(Clone, Debug)]
pub struct EquivarianceSystem {
    k: u32,
    /// Reduced rows `[a_0 … a_k | b_0 … b_k]`.
    rows: Vec<Vec<Rational>>,
}

/// Incremental row-echelon basis of a subspace of `ℚ^n`.
#[derive(Default)]
struct RowSpace {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    fn insert(&mut self, mut v: Vec<Rational>) {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &f * b;
                }
            }
        }
        let Some(pivot) = v.iter().position(|a| !a.is_zero()) else { return };
        let inv = v[pivot].recip();
        for a in v.iter_mut() {
            *a *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for (a, b) in row.iter_mut().zip(&v) {
                    *a -= &f * b;
                }
            }
        }
        self.rows.push((pivot, v));
    }
}

impl EquivarianceSystem {
    /// Conditions from one quadratic generator, probed by monomial symbols of
    /// coefficient degree at most `k + 1` with the defect evaluated at the
    /// origin. Translation covariance of the defect and `gl(m)`-equivariance
    /// of the ansatz make these probes exhaustive.
    pub fn build(m: usize, k: u32, lambda: &Rational) -> Result<Self> {
        let label = symbol_label(m, k, Rational::zero())?;
        let mut h = Matrix::zeros(m + 1, m + 1);
        h[(m, 0)] = Rational::one();
        let x = proj_embedding(&h)?;
        let div = x.divergence();
        let origin = vec![Rational::zero(); m];
        let first = DiffOperator::first_order(&x, lambda);
        let mut space = RowSpace::default();
        let xis = monomials_of_degree(m, k);
        let xs = monomials_up_to(m, k + 1);
        for xi in &xis {
            for xm in &xs {
                let mut p = WeightedSection::zero(&label)?;
                p.set(xi.clone(), Poly::monomial(m, xm.clone(), Rational::one()));
                let lp = p.lie_derivative(&x);
                let mut dp = WeightedSection::zero(&label)?;
                dp.set(xi.clone(), &div * &p.component(xi));
                let mut parts: Vec<(ValuesAtOrigin, ValuesAtOrigin)> = Vec::new();
                for l in 0..=k {
                    let q = ansatz_term(&p, l)?;
                    let a = first.compose(&q).sub(&q.compose(&first)).sub(&ansatz_term(&lp, l)?);
                    let b = DiffOperator::multiplication(&div).compose(&q).sub(&ansatz_term(&dp, l)?);
                    parts.push((a.at_point(&origin), b.at_point(&origin)));
                }
                let betas: BTreeSet<&Vec<u32>> =
                    parts.iter().flat_map(|(a, b)| a.keys().chain(b.keys())).collect();
                for beta in betas {
                    let zero = Rational::zero();
                    let row: Vec<Rational> = parts
                        .iter()
                        .map(|(a, _)| a.get(beta).unwrap_or(&zero).clone())
                        .chain(parts.iter().map(|(_, b)| b.get(beta).unwrap_or(&zero).clone()))
                        .collect();
                    space.insert(row);
                }
            }
        }
        Ok(Self { k, rows: space.rows.into_iter().map(|(_, r)| r).collect() })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn entry(&self, row: &[Rational], l: usize, delta: &Rational) -> Rational {
        &row[l] + delta * &row[l + self.k as usize + 1]
    }

    /// Solves for `c_1 … c_k` at a given weight.
    pub fn solve_at(&self, delta: &Rational) -> SolveOutcome {
        let k = self.k as usize;
        if k == 0 {
            return SolveOutcome::Unique(Vec::new());
        }
        let a = Matrix::from_fn(self.rows.len(), k, |i, j| self.entry(&self.rows[i], j + 1, delta));
        let b: Vec<Rational> = self.rows.iter().map(|r| -self.entry(r, 0, delta)).collect();
        solve(&a, &b)
    }

    /// Unimodular echelon form of the system over `ℚ[δ]`.
    pub fn echelon(&self) -> Result<PolyEchelon> {
        let k = self.k as usize;
        let poly = |row: &[Rational], l: usize| UniPoly::linear(row[l].clone(), row[l + k + 1].clone());
        let rows = self
            .rows
            .iter()
            .map(|r| (1..=k).map(|l| poly(r, l)).chain(std::iter::once(-&poly(r, 0))).collect())
            .collect();
        echelon_over_poly(rows, k).ok_or(Error::Inconsistent)
    }
}

/// The coefficients `c_l(δ)` as rational functions, together with the
/// determinantal divisor of the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicQuantization {
    pub coefficients: Vec<RatFunc>,
    pub determinant: UniPoly,
}

impl SymbolicQuantization {
    /// Rational weights at which the system degenerates.
    pub fn singular_weights(&self) -> BTreeSet<Rational> {
        self.determinant
            .rational_roots()
            .map(|(roots, _)| roots.into_iter().map(|(r, _)| r).collect())
            .unwrap_or_default()
    }

    /// Rational zeros of the coefficient denominators.
    pub fn denominator_roots(&self) -> BTreeSet<Rational> {
        self.coefficients
            .iter()
            .filter_map(|c| c.denominator().rational_roots())
            .flat_map(|(roots, _)| roots.into_iter().map(|(r, _)| r))
            .collect()
    }
}

impl EquivarianceSystem {
    /// Solution over `ℚ(δ)`; fails when the system is generically inconsistent.
    pub fn symbolic(&self) -> Result<SymbolicQuantization> {
        if self.k == 0 {
            return Ok(SymbolicQuantization { coefficients: Vec::new(), determinant: UniPoly::constant(Rational::one()) });
        }
        let ech = self.echelon()?;
        if ech.residual_rhs.iter().any(|r| !r.is_zero()) {
            return Err(Error::Inconsistent);
        }
        Ok(SymbolicQuantization { coefficients: ech.back_substitute(), determinant: ech.determinant().monic() })
    }
}

pub fn symbolic_quantization(m: usize, k: u32, lambda: &Rational) -> Result<SymbolicQuantization> {
    EquivarianceSystem::build(m, k, lambda)?.symbolic()
}

/// Primitive integer linear factor `q·δ − p` vanishing at `δ = p/q`.
fn vanishing_factor(delta: &Rational) -> String {
    UniPoly::linear(-Rational::from_integer(delta.numer().clone()), Rational::from_integer(delta.denom().clone()))
        .display_in("delta")
}

pub fn quantization_coefficients(m: usize, k: u32, lambda: &Rational, mu: &Rational) -> Result<QuantCoefficients> {
    let delta = mu - lambda;
    let system = EquivarianceSystem::build(m, k, lambda)?;
    match system.solve_at(&delta) {
        SolveOutcome::Unique(c) => Ok(QuantCoefficients::new(std::iter::once(Rational::one()).chain(c).collect())),
        _ => Err(Error::ResonantWeight { denominator: vanishing_factor(&delta), delta }),
    }
}

/// Builds `Q(P)` for a symbol of degree `k` and weight `μ − λ`.
pub fn quantize_densities(
    m: usize,
    k: u32,
    lambda: &Rational,
    mu: &Rational,
    p: &WeightedSection,
) -> Result<(DiffOperator, QuantCoefficients)> {
    let delta = mu - lambda;
    if p.rank() != m {
        return Err(Error::RankMismatch(p.rank(), m));
    }
    if check_symbol(p)? != k || p.label().weight() != &delta {
        return Err(Error::SectionMismatch(format!("symbol must have degree {k} and weight {}", rational::format(&delta))));
    }
    let c = quantization_coefficients(m, k, lambda, mu)?;
    Ok((quantization_operator(p, &c)?, c))
}

/// Outcome of the equivariance check for one grade of `sl(m+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeResidual {
    pub grade: Grade,
    pub checks: usize,
    pub nonzero: usize,
}

impl GradeResidual {
    pub fn vanishes(&self) -> bool {
        self.nonzero == 0
    }
}

/// Applies `L_X(Q(P)) − Q(L_X P)` to every sample function for every basis
/// generator `X`, counting nonzero results per grade.
pub fn verify_equivariance(
    c: &QuantCoefficients,
    lambda: &Rational,
    symbols: &[WeightedSection],
    functions: &[Poly],
) -> Result<Vec<GradeResidual>> {
    let Some(m) = symbols.first().map(WeightedSection::rank) else { return Ok(Vec::new()) };
    let mut report: BTreeMap<Grade, GradeResidual> = BTreeMap::new();
    for h in standard_basis(m + 1) {
        let grade = grade_of(&h).expect("standard basis elements are homogeneous");
        let x = proj_embedding(&h)?;
        let entry = report.entry(grade).or_insert(GradeResidual { grade, checks: 0, nonzero: 0 });
        for p in symbols {
            let defect = equivariance_defect(&x, p, c, lambda)?;
            for f in functions {
                entry.checks += 1;
                if !defect.apply(f).is_zero() {
                    entry.nonzero += 1;
                }
            }
        }
    }
    Ok(report.into_values().collect())
}

/// Random symbols of degree `k` and weight `δ`, plus random test functions.
pub fn random_samples(
    m: usize,
    k: u32,
    delta: &Rational,
    count: usize,
    max_degree: u32,
    rng: &mut impl Rng,
) -> Result<(Vec<WeightedSection>, Vec<Poly>)> {
    let label = symbol_label(m, k, delta.clone())?;
    let symbols = (0..count).map(|_| WeightedSection::random(&label, max_degree, rng)).collect::<Result<_>>()?;
    let functions = (0..count).map(|_| Poly::random(m, max_degree + k, rng)).collect();
    Ok((symbols, functions))
}
