//! Young diagrams and the `(D, n, δ)` labels of irreducible `GL(m)` representations.
//!
//! A label is kept in canonical form: the diagram has depth at most `m − 1`,
//! full columns of height `m` being absorbed into the determinant twist `n`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// Non-increasing row lengths with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: impl Into<Vec<u32>>) -> Result<Self> {
        let mut rows = rows.into();
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonMonotone(rows));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Single row of `k` boxes.
    pub fn row(k: u32) -> Self {
        Self::new(vec![k]).unwrap()
    }

    /// Single column of `p` boxes.
    pub fn column(p: usize) -> Self {
        Self::new(vec![1; p]).unwrap()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row length at 0-based index `i`, zero past the depth.
    pub fn part(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> u32 {
        self.part(0)
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.part(i)).collect()
    }

    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.depth() <= self.depth() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// Diagram with a copy of the first row added on top.
    pub fn with_first_row_doubled(&self) -> Self {
        let mut rows = Vec::with_capacity(self.depth() + 1);
        rows.push(self.first_row());
        rows.extend_from_slice(&self.rows);
        Self::new(rows).unwrap()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("invalid diagram `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Label `(D, n, δ)` of an irreducible representation of `GL(m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    rank: usize,
    diagram: YoungDiagram,
    twist: i64,
    weight: Rational,
}

impl IrrepLabel {
    /// Canonical label from row lengths; see [`canonicalize`].
    pub fn new(diagram: YoungDiagram, rank: usize, twist: i64, weight: Rational) -> Result<Self> {
        canonicalize(diagram.rows(), rank, twist, weight)
    }

    pub fn trivial(rank: usize) -> Result<Self> {
        Self::new(YoungDiagram::empty(), rank, 0, Rational::zero())
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn with_weight(&self, weight: Rational) -> Self {
        Self { weight, ..self.clone() }
    }

    /// Diagram rows padded to the rank.
    pub fn padded_rows(&self) -> Vec<u32> {
        self.diagram.padded(self.rank)
    }

    /// The dual representation `(D*, −n − d1, −δ)`, where `D*` is the
    /// complement of `D` in an `m × d1` rectangle, read upside down.
    pub fn dual(&self) -> Self {
        let d = self.padded_rows();
        let d1 = self.diagram.first_row();
        let rows: Vec<u32> = (0..self.rank).map(|i| d1 - d[self.rank - 1 - i]).collect();
        canonicalize(&rows, self.rank, -self.twist - i64::from(d1), -self.weight.clone())
            .expect("complement of a diagram is a diagram")
    }

    /// `GL(m+1)` representation with the same diagram and twist and weight zero.
    pub fn tilde(&self) -> Self {
        Self { rank: self.rank + 1, weight: Rational::zero(), ..self.clone() }
    }

    /// Dual of the tilde of the dual: adds a copy of the first row on top.
    pub fn ete(&self) -> Self {
        let out = self.dual().tilde().dual();
        let expected = canonicalize(
            self.diagram.with_first_row_doubled().rows(),
            self.rank + 1,
            out.twist,
            Rational::zero(),
        )
        .expect("ete diagram has depth at most m");
        assert_eq!(out, expected, "ete construction disagrees with first-row doubling");
        out
    }

    /// Weyl dimension formula.
    pub fn dimension(&self) -> u64 {
        dimension(&self.diagram, self.rank)
    }

    /// Character on the diagonal torus: `(x1 ⋯ xm)^n · s_D(x)`.
    /// The `|det|^δ` factor is not part of the polynomial character.
    pub fn character(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, point.len()));
        }
        let det: Rational = point.iter().product();
        Ok(rational::pow(&det, self.twist) * schur_eval(&self.diagram, point)?)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D={}; m={}; n={}; delta={}",
            self.diagram,
            self.rank,
            self.twist,
            rational::format(&self.weight)
        )
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    /// Parses `D=3,2,2; m=4; n=0; delta=1/2`. `n` and `delta` default to zero.
    fn from_str(s: &str) -> Result<Self> {
        let mut diagram = None;
        let mut rank = None;
        let mut twist = 0i64;
        let mut weight = Rational::zero();
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{field}`")))?;
            let value = value.trim();
            match key.trim() {
                "D" => diagram = Some(value.parse::<YoungDiagram>()?),
                "m" => {
                    rank = Some(value.parse::<usize>().map_err(|_| Error::Parse(format!("invalid rank `{value}`")))?)
                }
                "n" => twist = value.parse().map_err(|_| Error::Parse(format!("invalid twist `{value}`")))?,
                "delta" => weight = rational::parse(value)?,
                other => return Err(Error::Parse(format!("unknown label field `{other}`"))),
            }
        }
        let diagram = diagram.ok_or_else(|| Error::Parse("label is missing D=".into()))?;
        let rank = rank.ok_or_else(|| Error::Parse("label is missing m=".into()))?;
        IrrepLabel::new(diagram, rank, twist, weight)
    }
}

/// Normal form of `(rows, n, δ)` over `GL(rank)`: a full-depth diagram with
/// shortest row `r` loses `r` columns and the twist gains `r`.
pub fn canonicalize(rows: &[u32], rank: usize, twist: i64, weight: Rational) -> Result<IrrepLabel> {
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    let diagram = YoungDiagram::new(rows.to_vec())?;
    if diagram.depth() > rank {
        return Err(Error::DepthExceedsRank { depth: diagram.depth(), rank });
    }
    if diagram.depth() < rank {
        return Ok(IrrepLabel { rank, diagram, twist, weight });
    }
    let r = diagram.part(rank - 1);
    let stripped: Vec<u32> = diagram.rows().iter().map(|d| d - r).collect();
    Ok(IrrepLabel {
        rank,
        diagram: YoungDiagram::new(stripped)?,
        twist: twist + i64::from(r),
        weight,
    })
}

/// `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)` with `λ` padded to `rank`.
pub fn dimension(diagram: &YoungDiagram, rank: usize) -> u64 {
    if diagram.depth() > rank {
        return 0;
    }
    let lam = diagram.padded(rank);
    let mut acc = Rational::one();
    for i in 0..rank {
        for j in i + 1..rank {
            let num = i64::from(lam[i]) - i64::from(lam[j]) + (j - i) as i64;
            acc *= rational::frac(num, (j - i) as i64);
        }
    }
    rational::to_i64(&acc).and_then(|d| u64::try_from(d).ok()).expect("dimension is a positive integer")
}

/// Schur polynomial `s_D` at `point`, via the ratio of alternants
/// `det(x_j^{λ_i + m − i}) / det(x_j^{m − i})`. Diagrams deeper than the
/// number of variables evaluate to zero.
pub fn schur_eval(diagram: &YoungDiagram, point: &[Rational]) -> Result<Rational> {
    let m = point.len();
    for i in 0..m {
        if point[i + 1..].contains(&point[i]) {
            return Err(Error::RepeatedPoint);
        }
    }
    if diagram.depth() > m {
        return Ok(Rational::zero());
    }
    let lam = diagram.padded(m);
    let num = Matrix::from_fn(m, m, |i, j| rational::pow(&point[j], i64::from(lam[i]) + (m - 1 - i) as i64));
    let mut vandermonde = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            vandermonde *= &point[i] - &point[j];
        }
    }
    Ok(num.det() / vandermonde)
}

/// All diagrams of size `size` with depth at most `max_depth`, in
/// lexicographically decreasing order of rows.
pub fn partitions(size: u32, max_depth: usize) -> Vec<YoungDiagram> {
    fn go(rest: u32, cap: u32, depth_left: usize, acc: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram::new(acc.clone()).unwrap());
            return;
        }
        if depth_left == 0 {
            return;
        }
        for r in (1..=cap.min(rest)).rev() {
            acc.push(r);
            go(rest - r, r, depth_left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_depth, &mut Vec::new(), &mut out);
    out
}
