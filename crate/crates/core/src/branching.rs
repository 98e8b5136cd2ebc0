//! Restriction of `GL(m+1)` irreducibles to `GL(m)`.
//!
//! Components are labelled by the number of boxes `q_i` removed from each row
//! of the parent diagram; the admissible labels are exactly those for which
//! the remaining rows interlace the parent rows, and each occurs once.

use std::fmt;

use itertools::Itertools;

use crate::diagrams::{canonicalize, IrrepLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchLabel {
    removals: Vec<u32>,
}

impl BranchLabel {
    pub fn new(removals: impl Into<Vec<u32>>) -> Self {
        let mut removals = removals.into();
        while removals.last() == Some(&0) {
            removals.pop();
        }
        Self { removals }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn removals(&self) -> &[u32] {
        &self.removals
    }

    /// Removed boxes at 0-based row `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.removals.get(i).copied().unwrap_or(0)
    }

    /// `|q|`
    pub fn norm(&self) -> u32 {
        self.removals.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.removals.is_empty()
    }

    pub fn padded(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.at(i)).collect()
    }

    /// True when `other` is obtained from `self` by removing one more box.
    pub fn precedes(&self, other: &BranchLabel) -> bool {
        let len = self.removals.len().max(other.removals.len());
        let diff: Vec<i64> = (0..len).map(|i| i64::from(other.at(i)) - i64::from(self.at(i))).collect();
        diff.iter().all(|&d| d == 0 || d == 1) && diff.iter().sum::<i64>() == 1
    }
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.removals.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&self.removals.iter().join(","))
    }
}

/// Rank of the subgroup, checked against the parent.
fn sub_rank(parent: &IrrepLabel) -> Result<usize> {
    if parent.rank() < 3 {
        return Err(Error::RankTooSmall { rank: parent.rank(), min: 3 });
    }
    Ok(parent.rank() - 1)
}

/// Upper bounds `d_i − d_{i+1}` for `i = 1..m`, with the parent padded to `m + 1` rows.
fn bounds(parent: &IrrepLabel, m: usize) -> Vec<u32> {
    let d = parent.diagram().padded(m + 1);
    (0..m).map(|i| d[i] - d[i + 1]).collect()
}

/// Labels of the `GL(m)` components of a `GL(m+1)` irreducible, in
/// lexicographic order.
pub fn branch_labels(parent: &IrrepLabel) -> Result<Vec<BranchLabel>> {
    let m = sub_rank(parent)?;
    Ok(bounds(parent, m)
        .into_iter()
        .map(|b| 0..=b)
        .multi_cartesian_product()
        .map(BranchLabel::new)
        .collect())
}

/// The `GL(m)` component labelled by `q`: rows `d_i − q_i`, same twist and weight.
pub fn component(parent: &IrrepLabel, q: &BranchLabel) -> Result<IrrepLabel> {
    let m = sub_rank(parent)?;
    let bounds = bounds(parent, m);
    if q.removals().len() > m || q.removals().iter().zip(&bounds).any(|(qi, b)| qi > b) {
        return Err(Error::InvalidBranchLabel { q: q.removals().to_vec(), diagram: parent.diagram().to_string() });
    }
    let d = parent.diagram().padded(m);
    let rows: Vec<u32> = (0..m).map(|i| d[i] - q.at(i)).collect();
    canonicalize(&rows, m, parent.twist(), parent.weight().clone())
}

/// All `(q, component)` pairs of the restriction.
pub fn components(parent: &IrrepLabel) -> Result<Vec<(BranchLabel, IrrepLabel)>> {
    branch_labels(parent)?
        .into_iter()
        .map(|q| component(parent, &q).map(|c| (q, c)))
        .collect()
}

/// The component of `tilde(label)` isomorphic to `label` (no box removed).
pub fn v0_embedding(label: &IrrepLabel) -> BranchLabel {
    let q = BranchLabel::zero();
    let c = component(&label.tilde(), &q).expect("zero label is always admissible");
    assert_eq!(c.diagram(), label.diagram());
    q
}

/// The component of `ete(label)` with the most boxes removed; it recovers `label`.
pub fn max_removal_embedding(label: &IrrepLabel) -> BranchLabel {
    let parent = label.ete();
    let labels = branch_labels(&parent).expect("ete parent has rank at least 3");
    let top = labels.iter().map(BranchLabel::norm).max().unwrap_or(0);
    let mut maximal = labels.into_iter().filter(|q| q.norm() == top);
    let q = maximal.next().expect("non-empty branching");
    assert!(maximal.next().is_none(), "maximal removal is not unique");
    let c = component(&parent, &q).unwrap();
    assert_eq!(c.diagram(), label.diagram());
    q
}
