//! Coefficient structure of the eigenvector lift: components of `tilde(V)`
//! are reached from the root one box at a time, each step scaled by
//! `−2/(α_0(δ) − α_q(δ))`.

use num_traits::Zero;

use crate::branching::{self, BranchLabel};
use crate::casimir::eigenvalue;
use crate::diagrams::IrrepLabel;
use crate::error::{Error, Result};
use crate::linalg::UniPoly;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftNode {
    pub q: BranchLabel,
    pub component: IrrepLabel,
    /// `None` for the root.
    pub coefficient: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftPlan {
    pub nodes: Vec<LiftNode>,
    /// Index pairs `(from, to)` with `to` one box further from the root.
    pub edges: Vec<(usize, usize)>,
}

impl LiftPlan {
    pub fn root(&self) -> &LiftNode {
        &self.nodes[0]
    }
}

pub fn lift_plan(label: &IrrepLabel, delta: &Rational) -> Result<LiftPlan> {
    let parent = label.tilde();
    let mut labels = branching::branch_labels(&parent)?;
    labels.sort_by_key(|q| (q.norm(), q.clone()));
    let root_poly = eigenvalue(&branching::component(&parent, &BranchLabel::zero())?);
    let root_value = root_poly.eval(delta);
    let mut nodes = Vec::with_capacity(labels.len());
    for q in &labels {
        let component = branching::component(&parent, q)?.with_weight(delta.clone());
        let coefficient = if q.is_zero() {
            None
        } else {
            let poly = eigenvalue(&component);
            let gap = &root_value - poly.eval(delta);
            if gap.is_zero() {
                let diff = root_poly.sub(&poly);
                let factor = UniPoly::new(vec![diff.c0, diff.c1, diff.c2]);
                return Err(Error::ResonantWeight { delta: delta.clone(), denominator: factor.display_in("delta") });
            }
            Some(int(-2) / gap)
        };
        nodes.push(LiftNode { q: q.clone(), component, coefficient });
    }
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            if a.precedes(b) {
                edges.push((i, j));
            }
        }
    }
    Ok(LiftPlan { nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::{resonances, symmetric_power_resonances};
    use crate::diagrams::YoungDiagram;
    use crate::rational::frac;

    fn row(k: u32, m: usize) -> IrrepLabel {
        IrrepLabel::new(YoungDiagram::row(k), m, 0, Rational::zero()).unwrap()
    }

    #[test]
    fn trivial_label_is_a_single_node() {
        let plan = lift_plan(&row(0, 3), &frac(1, 2)).unwrap();
        assert_eq!(plan.nodes.len(), 1);
        assert!(plan.edges.is_empty());
        assert!(plan.root().coefficient.is_none());
    }

    #[test]
    fn single_row_gives_a_chain() {
        let k = 3;
        let delta = frac(1, 7);
        let plan = lift_plan(&row(k, 2), &delta).unwrap();
        assert_eq!(plan.nodes.len(), k as usize + 1);
        assert_eq!(plan.edges, vec![(0, 1), (1, 2), (2, 3)]);
        let alpha0 = eigenvalue(&plan.nodes[0].component).eval(&delta);
        for node in &plan.nodes[1..] {
            let aq = eigenvalue(&node.component).eval(&delta);
            assert_eq!(node.coefficient, Some(int(-2) / (&alpha0 - aq)));
        }
    }

    #[test]
    fn fails_exactly_at_resonances() {
        for m in 2..=4 {
            for k in 1..=3 {
                for r in symmetric_power_resonances(m, k) {
                    assert!(matches!(lift_plan(&row(k, m), &r), Err(Error::ResonantWeight { .. })));
                }
                assert!(lift_plan(&row(k, m), &frac(-1, 5)).is_ok());
            }
        }
        let hook = IrrepLabel::new(YoungDiagram::new(vec![2, 1]).unwrap(), 3, 0, Rational::zero()).unwrap();
        for r in resonances(&hook) {
            assert!(lift_plan(&hook, &r).is_err());
        }
    }

    #[test]
    fn edges_follow_single_box_steps() {
        let hook = IrrepLabel::new(YoungDiagram::new(vec![2, 1]).unwrap(), 3, 0, Rational::zero()).unwrap();
        let plan = lift_plan(&hook, &frac(1, 11)).unwrap();
        for &(a, b) in &plan.edges {
            assert_eq!(plan.nodes[a].q.norm() + 1, plan.nodes[b].q.norm());
        }
        // every non-root node is reachable
        for (j, node) in plan.nodes.iter().enumerate().skip(1) {
            assert!(plan.edges.iter().any(|&(_, b)| b == j), "{}", node.q);
        }
    }
}
