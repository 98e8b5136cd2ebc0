//! Tensor-product decompositions: Pieri's rule for `⊗ S^k ℝ^m`, the full
//! Littlewood–Richardson rule, and the symbol spaces `V1* ⊗ V2 ⊗ S^k ℝ^m`.
//!
//! Diagrams deeper than the rank are dropped before canonicalization
//! (their Schur functions vanish in `m` variables).

use std::collections::BTreeMap;

use crate::diagrams::{canonicalize, IrrepLabel, YoungDiagram};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Multiset of irreducible labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: Vec<(IrrepLabel, u64)>,
}

impl Decomposition {
    fn from_map(map: BTreeMap<IrrepLabel, u64>) -> Self {
        Self { terms: map.into_iter().filter(|(_, mult)| *mult > 0).collect() }
    }

    /// Terms sorted by label, multiplicities positive.
    pub fn terms(&self) -> &[(IrrepLabel, u64)] {
        &self.terms
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        self.terms.iter().find(|(l, _)| l == label).map_or(0, |(_, m)| *m)
    }

    pub fn total_dimension(&self) -> u64 {
        self.terms.iter().map(|(l, mult)| mult * l.dimension()).sum()
    }

    /// `Σ mult · χ(term)` at `point`.
    pub fn character(&self, point: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::default();
        for (l, mult) in &self.terms {
            acc += l.character(point)? * Rational::from_integer((*mult).into());
        }
        Ok(acc)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `label ⊗ S^k ℝ^m`: add a horizontal strip of `k` boxes.
pub fn pieri(label: &IrrepLabel, k: u32) -> Decomposition {
    let m = label.rank();
    let lam = label.diagram().padded(m);
    let mut out = BTreeMap::new();
    let mut rows = vec![0u32; m];
    strips(&lam, 0, k, &mut rows, &mut |rows| {
        let l = canonicalize(rows, m, label.twist(), label.weight().clone()).expect("strip keeps rows ordered");
        *out.entry(l).or_insert(0) += 1;
    });
    Decomposition::from_map(out)
}

/// Enumerates `ν ⊇ λ` with `ν/λ` a horizontal strip of `left` boxes (rows `i..`).
fn strips(lam: &[u32], i: usize, left: u32, rows: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if i == lam.len() {
        if left == 0 {
            emit(rows);
        }
        return;
    }
    let cap = if i == 0 { left } else { (lam[i - 1] - lam[i]).min(left) };
    for add in 0..=cap {
        rows[i] = lam[i] + add;
        strips(lam, i + 1, left - add, rows, emit);
    }
}

/// `a ⊗ b` by counting Littlewood–Richardson tableaux; twists and weights add.
pub fn littlewood_richardson(a: &IrrepLabel, b: &IrrepLabel) -> Result<Decomposition> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let m = a.rank();
    let twist = a.twist() + b.twist();
    let weight = a.weight() + b.weight();
    let mut out = BTreeMap::new();
    for (nu, mult) in lr_expand(a.diagram(), b.diagram(), m) {
        let l = canonicalize(nu.rows(), m, twist, weight.clone())?;
        *out.entry(l).or_insert(0) += mult;
    }
    Ok(Decomposition::from_map(out))
}

/// All `ν` of depth at most `max_depth` with `c^ν_{λμ} > 0`, with coefficients.
pub fn lr_expand(lam: &YoungDiagram, mu: &YoungDiagram, max_depth: usize) -> Vec<(YoungDiagram, u64)> {
    let size = lam.size() + mu.size();
    let depth = max_depth.min(lam.depth() + mu.depth());
    let mut out = Vec::new();
    for nu in shapes_containing(lam, mu, size, depth) {
        let c = lr_coefficient(lam, mu, &nu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    out
}

/// Diagrams of the given size and depth bound containing both `lam` and `mu`,
/// with first row at most `λ1 + μ1`.
fn shapes_containing(lam: &YoungDiagram, mu: &YoungDiagram, size: u32, depth: usize) -> Vec<YoungDiagram> {
    fn go(
        i: usize,
        rest: u32,
        cap: u32,
        depth: usize,
        lam: &YoungDiagram,
        mu: &YoungDiagram,
        acc: &mut Vec<u32>,
        out: &mut Vec<YoungDiagram>,
    ) {
        let floor = lam.part(i).max(mu.part(i));
        if rest == 0 {
            if floor == 0 {
                out.push(YoungDiagram::new(acc.clone()).unwrap());
            }
            return;
        }
        if i == depth {
            return;
        }
        for r in floor.max(1)..=cap.min(rest) {
            acc.push(r);
            go(i + 1, rest - r, r, depth, lam, mu, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, lam.first_row() + mu.first_row(), depth, lam, mu, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard fillings of `ν/λ` with content `μ` whose reverse
/// row reading word is a lattice word.
pub fn lr_coefficient(lam: &YoungDiagram, mu: &YoungDiagram, nu: &YoungDiagram) -> u64 {
    if !nu.contains(lam) || nu.size() != lam.size() + mu.size() {
        return 0;
    }
    // cells in reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, u32)> = (0..nu.depth())
        .flat_map(|r| (lam.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let content = mu.padded(mu.depth());
    let mut filling: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut counts = vec![0u32; content.len()];
    fill(0, &cells, lam, &content, &mut counts, &mut filling)
}

fn fill(
    idx: usize,
    cells: &[(usize, u32)],
    lam: &YoungDiagram,
    content: &[u32],
    counts: &mut Vec<u32>,
    filling: &mut BTreeMap<(usize, u32), usize>,
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (r, c) = cells[idx];
    let right = filling.get(&(r, c + 1)).copied();
    let above = if r > 0 && c >= lam.part(r - 1) { filling.get(&(r - 1, c)).copied() } else { None };
    let mut total = 0;
    for v in 0..content.len() {
        if counts[v] == content[v] {
            continue;
        }
        if right.is_some_and(|x| v > x) || above.is_some_and(|x| v <= x) {
            continue;
        }
        if v > 0 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        filling.insert((r, c), v);
        total += fill(idx + 1, cells, lam, content, counts, filling);
        filling.remove(&(r, c));
        counts[v] -= 1;
    }
    total
}

/// `V1* ⊗ V2 ⊗ S^k ℝ^m`; every term carries weight `δ(V2) − δ(V1)`.
pub fn symbol_rep(v1: &IrrepLabel, v2: &IrrepLabel, k: u32) -> Result<Decomposition> {
    let base = littlewood_richardson(&v1.dual(), v2)?;
    let mut out = BTreeMap::new();
    for (label, mult) in base.terms() {
        for (term, inner) in pieri(label, k).terms() {
            *out.entry(term.clone()).or_insert(0) += mult * inner;
        }
    }
    let expected = v2.weight() - v1.weight();
    let dec = Decomposition::from_map(out);
    assert!(dec.terms().iter().all(|(l, _)| l.weight() == &expected));
    Ok(dec)
}
