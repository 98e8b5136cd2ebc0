//! The Casimir operator of `sl(m+1)` acting on flat-model sections.

use crate::linalg::Matrix;

use super::field::{killing_dual_basis, killing_dual_of, proj_embedding, PolyVectorField};
use super::section::WeightedSection;

/// Embedded Killing-dual pairs, ready to act on sections.
#[derive(Clone, Debug)]
pub struct CasimirOperator {
    pairs: Vec<(PolyVectorField, PolyVectorField)>,
}

impl CasimirOperator {
    pub fn new(m: usize) -> Self {
        Self::from_pairs(&killing_dual_basis(m))
    }

    /// Dual pairs computed from an arbitrary basis of `sl(m+1)`.
    pub fn from_basis(basis: &[Matrix]) -> Self {
        Self::from_pairs(&killing_dual_of(basis))
    }

    fn from_pairs(pairs: &[(Matrix, Matrix)]) -> Self {
        let embed = |h: &Matrix| proj_embedding(h).expect("basis elements are traceless");
        Self { pairs: pairs.iter().map(|(u, v)| (embed(u), embed(v))).collect() }
    }

    /// `Σ_i L_{u_i} L_{u_i⁺} s`
    pub fn apply(&self, s: &WeightedSection) -> WeightedSection {
        self.pairs
            .iter()
            .fold(s.scale(&crate::rational::int(0)), |acc, (u, v)| acc.add(&s.lie_derivative(v).lie_derivative(u)))
    }
}

pub fn classical_casimir(s: &WeightedSection) -> WeightedSection {
    CasimirOperator::new(s.rank()).apply(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::alpha;
    use crate::diagrams::{IrrepLabel, YoungDiagram};
    use crate::flatmodel::field::standard_basis;
    use crate::flatmodel::poly::Poly;
    use crate::rational::{frac, int, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn label(d: YoungDiagram, m: usize, n: i64, delta: Rational) -> IrrepLabel {
        IrrepLabel::new(d, m, n, delta).unwrap()
    }

    #[test]
    fn trivial_constant_is_killed() {
        let l = label(YoungDiagram::empty(), 2, 0, int(0));
        let mut s = WeightedSection::zero(&l).unwrap();
        s.set(vec![0, 0], Poly::constant(2, int(1)));
        assert!(classical_casimir(&s).is_zero());
    }

    #[test]
    fn vector_fields_on_the_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let l = label(YoungDiagram::row(1), 2, 0, int(0));
        assert_eq!(alpha(&l), int(1));
        for _ in 0..3 {
            let s = WeightedSection::random(&l, 3, &mut rng).unwrap();
            assert_eq!(classical_casimir(&s).ratio_to(&s), Some(int(1)));
        }
    }

    #[test]
    fn symmetric_squares_in_three_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let l = label(YoungDiagram::row(2), 3, 0, frac(1, 2));
        let s = WeightedSection::random(&l, 2, &mut rng).unwrap();
        assert_eq!(classical_casimir(&s).ratio_to(&s), Some(alpha(&l)));
    }

    #[test]
    fn bivectors_in_three_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let l = label(YoungDiagram::column(2), 3, 1, frac(-1, 3));
        let s = WeightedSection::random(&l, 2, &mut rng).unwrap();
        assert_eq!(classical_casimir(&s).ratio_to(&s), Some(alpha(&l)));
    }

    #[test]
    fn independent_of_basis() {
        let m = 2;
        let std = standard_basis(m + 1);
        // recombine: u_0 + u_1, u_1 − 2u_2, … plus a permutation
        let mut other: Vec<Matrix> = (0..std.len())
            .map(|i| {
                let j = (i + 1) % std.len();
                &std[i] + &std[j].scale(&frac(-2, 3))
            })
            .collect();
        other.reverse();
        let a = CasimirOperator::new(m);
        let b = CasimirOperator::from_basis(&other);
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let l = label(YoungDiagram::row(2), m, 0, frac(2, 5));
        let s = WeightedSection::random(&l, 2, &mut rng).unwrap();
        assert_eq!(a.apply(&s), b.apply(&s));
    }
}
