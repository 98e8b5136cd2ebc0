//! Polynomial vector fields and the projective embedding of `sl(m+1)`.
//!
//! A traceless matrix `h = (A u; α a)` (with `a = −tr A`) acts on `ℝ^m` through
//! `x ↦ [x : 1]`; its infinitesimal generator is
//! `X_h = u + A x − a x − (α·x) x`, which spans constant (`g₋₁`), linear (`g₀`)
//! and quadratic (`g₁`) fields. The map is an anti-homomorphism:
//! `[X_{h1}, X_{h2}] = −X_{[h1, h2]}`.

use num_traits::Zero;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// Sign `s` in `[embed(h1), embed(h2)] = s · embed([h1, h2])`.
pub const BRACKET_SIGN: i64 = -1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Poly>) -> Self {
        let m = components.len();
        assert!(components.iter().all(|c| c.nvars() == m));
        Self { components }
    }

    pub fn zero(m: usize) -> Self {
        Self::new(vec![Poly::zero(m); m])
    }

    /// `∂_i`
    pub fn coordinate(m: usize, i: usize) -> Self {
        let mut f = Self::zero(m);
        f.components[i] = Poly::one(m);
        f
    }

    /// Euler field `x^i ∂_i`.
    pub fn euler(m: usize) -> Self {
        Self::new((0..m).map(|i| Poly::var(m, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(Poly::degree).max()
    }

    /// `X · f = X^i ∂_i f`
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (i, xi) in self.components.iter().enumerate() {
            if !xi.is_zero() {
                out = &out + &(xi * &f.deriv(i));
            }
        }
        out
    }

    /// Entry `∂_j X^i` of the Jacobian.
    pub fn jacobian(&self, i: usize, j: usize) -> Poly {
        self.components[i].deriv(j)
    }

    pub fn divergence(&self) -> Poly {
        let m = self.dim();
        (0..m).fold(Poly::zero(m), |acc, i| &acc + &self.jacobian(i, i))
    }

    /// `[X, Y]^i = X·Y^i − Y·X^i`
    pub fn bracket(&self, other: &Self) -> Self {
        Self::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(xi, yi)| &self.apply(yi) - &other.apply(xi))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.components.iter().map(|c| c.scale(s)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect())
    }
}

/// Grading of `sl(m+1) = g₋₁ ⊕ g₀ ⊕ g₁` by the degree of the embedded field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    Translation,
    Linear,
    Quadratic,
}

impl Grade {
    pub fn name(self) -> &'static str {
        match self {
            Grade::Translation => "g-1",
            Grade::Linear => "g0",
            Grade::Quadratic => "g1",
        }
    }
}

/// Fundamental vector field of a traceless `(m+1) × (m+1)` matrix.
pub fn proj_embedding(h: &Matrix) -> Result<PolyVectorField> {
    if !h.is_square() || h.rows() < 3 {
        return Err(Error::RankTooSmall { rank: h.rows().saturating_sub(1), min: 2 });
    }
    if !h.trace().is_zero() {
        return Err(Error::NonzeroTrace);
    }
    let m = h.rows() - 1;
    let a = &h[(m, m)];
    let alpha_x = (0..m).fold(Poly::zero(m), |acc, j| {
        let mut t = acc;
        t.add_scaled(&Poly::var(m, j), &h[(m, j)]);
        t
    });
    let comps = (0..m)
        .map(|i| {
            let mut c = Poly::constant(m, h[(i, m)].clone());
            for j in 0..m {
                c.add_scaled(&Poly::var(m, j), &h[(i, j)]);
            }
            c.add_scaled(&Poly::var(m, i), &-a.clone());
            &c - &(&alpha_x * &Poly::var(m, i))
        })
        .collect();
    Ok(PolyVectorField::new(comps))
}

/// Basis of `sl(n)`: off-diagonal units, then `E_ii − E_{i+1,i+1}`.
pub fn standard_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Matrix::unit(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        out.push(&Matrix::unit(n, i, i) - &Matrix::unit(n, i + 1, i + 1));
    }
    out
}

/// Grade of a homogeneous element of the standard basis (or `None` when mixed).
pub fn grade_of(h: &Matrix) -> Option<Grade> {
    let m = h.rows() - 1;
    let upper = (0..m).any(|i| !h[(i, m)].is_zero());
    let lower = (0..m).any(|j| !h[(m, j)].is_zero());
    let block = (0..m).any(|i| (0..m).any(|j| !h[(i, j)].is_zero())) || !h[(m, m)].is_zero();
    match (upper, block, lower) {
        (true, false, false) => Some(Grade::Translation),
        (false, _, false) => Some(Grade::Linear),
        (false, false, true) => Some(Grade::Quadratic),
        _ => None,
    }
}

/// Killing form of `sl(m+1)`: `2(m+1) tr(XY)`.
pub fn killing(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.rows() as i64;
    rational::int(2 * n) * (a * b).trace()
}

/// Pairs `(u_i, u_i⁺)` with `κ(u_i, u_j⁺) = δ_ij`, starting from `basis`.
pub fn killing_dual_of(basis: &[Matrix]) -> Vec<(Matrix, Matrix)> {
    let p = basis.len();
    let gram = Matrix::from_fn(p, p, |a, b| killing(&basis[a], &basis[b]));
    let inv = gram.inverse().expect("Killing form is nondegenerate on a basis");
    let n = basis[0].rows();
    (0..p)
        .map(|b| {
            let dual = (0..p).fold(Matrix::zeros(n, n), |acc, a| &acc + &basis[a].scale(&inv[(a, b)]));
            (basis[b].clone(), dual)
        })
        .collect()
}

/// Killing-dual pairs on the standard basis of `sl(m+1)`.
pub fn killing_dual_basis(m: usize) -> Vec<(Matrix, Matrix)> {
    killing_dual_of(&standard_basis(m + 1))
}
