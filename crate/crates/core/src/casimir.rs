//! Casimir eigenvalues of `sl(m+1)` acting on sections of bundles built from
//! `GL(m)` irreducibles, and the resonant weights at which a component of the
//! tilde representation shares the eigenvalue of its root component.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::branching::{self, BranchLabel};
use crate::diagrams::IrrepLabel;
use crate::error::Result;
use crate::rational::{self, frac, Rational};
use crate::tensor;

/// `c0 + c1 δ + c2 δ²`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvaluePoly {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

impl EigenvaluePoly {
    pub fn eval(&self, delta: &Rational) -> Rational {
        &self.c0 + &self.c1 * delta + &self.c2 * delta * delta
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { c0: &self.c0 - &other.c0, c1: &self.c1 - &other.c1, c2: &self.c2 - &other.c2 }
    }
}

impl fmt::Display for EigenvaluePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({})·δ + ({})·δ²",
            rational::format(&self.c0),
            rational::format(&self.c1),
            rational::format(&self.c2)
        )
    }
}

/// Casimir eigenvalue as a polynomial in the weight:
///
/// `α = (m(n−δ)+d)(m(n+1−δ)+d)/2m + 1/(2m(m+1)) Σ_{i,j} (d_i d_j + 2 d_i (m−j))(m δ_ij − 1)`
///
/// with `d` the canonical rows padded to `m`.
pub fn eigenvalue(label: &IrrepLabel) -> EigenvaluePoly {
    eigenvalue_of_rows(&label.padded_rows(), label.rank(), label.twist())
}

/// Formula evaluated on raw (not necessarily canonical) rows.
fn eigenvalue_of_rows(rows: &[u32], m: usize, n: i64) -> EigenvaluePoly {
    let mi = m as i64;
    let d: Vec<i64> = rows.iter().map(|&x| i64::from(x)).collect();
    let size: i64 = d.iter().sum();
    let a = mi * n + size;
    let mut sum = 0i64;
    for (i, di) in d.iter().enumerate() {
        for (j, dj) in d.iter().enumerate() {
            let kron = if i == j { mi - 1 } else { -1 };
            sum += (di * dj + 2 * di * (mi - 1 - j as i64)) * kron;
        }
    }
    EigenvaluePoly {
        c0: frac(a * (a + mi), 2 * mi) + frac(sum, 2 * mi * (mi + 1)),
        c1: frac(-(2 * a + mi), 2),
        c2: frac(mi, 2),
    }
}

/// Eigenvalue at the label's own weight.
pub fn alpha(label: &IrrepLabel) -> Rational {
    eigenvalue(label).eval(label.weight())
}

/// The labels `Q \ {0}` of the non-root components of `tilde(label)`.
pub fn nonzero_labels(label: &IrrepLabel) -> Vec<BranchLabel> {
    branching::branch_labels(&label.tilde())
        .expect("tilde has rank at least 3")
        .into_iter()
        .filter(|q| !q.is_zero())
        .collect()
}

/// Closed form: for each `q ≠ 0`,
/// `(|q|(2(m+1)(n+1) + 2d − |q|) + Σ_i 2d_i q_i − q_i² − 2i q_i) / (2|q|(m+1))`.
pub fn resonances_closed_form(label: &IrrepLabel) -> BTreeSet<Rational> {
    let m = label.rank() as i64;
    let n = label.twist();
    let d = label.padded_rows();
    let size = i64::from(label.diagram().size());
    nonzero_labels(label)
        .iter()
        .map(|q| {
            let norm = i64::from(q.norm());
            let tail: i64 = (0..label.rank())
                .map(|i| {
                    let (di, qi) = (i64::from(d[i]), i64::from(q.at(i)));
                    2 * di * qi - qi * qi - 2 * (i as i64 + 1) * qi
                })
                .sum();
            frac(norm * (2 * (m + 1) * (n + 1) + 2 * size - norm) + tail, 2 * norm * (m + 1))
        })
        .collect()
}

/// Roots of `α_q(δ) − α_0(δ)` over the components of `tilde(label)`, each
/// component carrying the free weight `δ`.
pub fn resonances_from_eigenvalues(label: &IrrepLabel) -> BTreeSet<Rational> {
    let parent = label.tilde();
    let root = eigenvalue(&branching::component(&parent, &BranchLabel::zero()).unwrap());
    nonzero_labels(label)
        .iter()
        .map(|q| {
            let diff = eigenvalue(&branching::component(&parent, q).unwrap()).sub(&root);
            assert!(diff.c2.is_zero(), "quadratic terms must cancel");
            assert!(!diff.c1.is_zero(), "difference must have nonzero slope");
            -diff.c0 / diff.c1
        })
        .collect()
}

/// Resonant weights of an irreducible, the label's weight slot being the unknown.
pub fn resonances(label: &IrrepLabel) -> BTreeSet<Rational> {
    let closed = resonances_closed_form(label);
    debug_assert_eq!(closed, resonances_from_eigenvalues(label));
    closed
}

/// Resonances relative to a base weight `ε`: `δ` is resonant when the
/// components of `tilde` at weight `δ + ε` collide.
pub fn resonances_with_base(label: &IrrepLabel, epsilon: &Rational) -> BTreeSet<Rational> {
    resonances(label).into_iter().map(|r| r - epsilon).collect()
}

pub fn is_resonant(label: &IrrepLabel, delta: &Rational) -> bool {
    resonances(label).contains(delta)
}

/// A direct sum is resonant when one of its summands is.
pub fn is_resonant_sum<'a>(labels: impl IntoIterator<Item = &'a IrrepLabel>, delta: &Rational) -> bool {
    labels.into_iter().any(|l| is_resonant(l, delta))
}

/// Union over `k = 0..=kmax` of the resonances of every component of `V1* ⊗ V2 ⊗ S^k ℝ^m`.
pub fn resonances_for_symbols(v1: &IrrepLabel, v2: &IrrepLabel, kmax: u32) -> Result<BTreeSet<Rational>> {
    let mut out = BTreeSet::new();
    for k in 0..=kmax {
        for (label, _) in tensor::symbol_rep(v1, v2, k)?.terms() {
            out.extend(resonances(label));
        }
    }
    Ok(out)
}

/// `{(m + 2k − q)/(m + 1) : q = 1..k}`, the resonances of `(k)` with `n = 0`.
pub fn symmetric_power_resonances(m: usize, k: u32) -> BTreeSet<Rational> {
    let m = m as i64;
    (1..=i64::from(k)).map(|q| frac(m + 2 * i64::from(k) - q, m + 1)).collect()
}
