//! Standard skew tableaux stored as partition chains, and increasing
//! tableaux stored as row fillings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{added_box, Partition, Rectangle, SkewShape};

/// A standard filling of `outer / inner`, stored as the chain of shapes
/// `inner = λ₀ ⊂ λ₁ ⊂ ⋯ ⊂ λₙ = outer`; entry `k` sits in the box `λₖ / λₖ₋₁`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ChainRepr", into = "ChainRepr")]
pub struct StandardSkewTableau {
    chain: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    chain: Vec<Partition>,
}

impl TryFrom<ChainRepr> for StandardSkewTableau {
    type Error = Error;

    fn try_from(r: ChainRepr) -> Result<Self> {
        StandardSkewTableau::new(r.chain)
    }
}

impl From<StandardSkewTableau> for ChainRepr {
    fn from(t: StandardSkewTableau) -> Self {
        ChainRepr { chain: t.chain }
    }
}

impl StandardSkewTableau {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::Parse(
                "a tableau chain needs at least one shape".into(),
            ));
        }
        for w in chain.windows(2) {
            if added_box(&w[0], &w[1]).is_none() {
                return Err(Error::NotOneBoxStep {
                    from: w[0].clone(),
                    to: w[1].clone(),
                });
            }
        }
        Ok(StandardSkewTableau { chain })
    }

    pub(crate) fn from_chain_unchecked(chain: Vec<Partition>) -> Self {
        debug_assert!(!chain.is_empty());
        debug_assert!(chain.windows(2).all(|w| added_box(&w[0], &w[1]).is_some()));
        StandardSkewTableau { chain }
    }

    /// The tableau with no boxes on the skew shape `shape / shape`.
    pub fn empty(shape: Partition) -> Self {
        StandardSkewTableau { chain: vec![shape] }
    }

    /// Builds a tableau from its rows; `rows[r]` lists the entries of row `r`
    /// to the right of `inner`.
    pub fn from_rows(inner: Partition, rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut pos = vec![None; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n || pos[v].is_some() {
                    return Err(Error::Parse(format!(
                        "entries must be 1..={n} without repeats"
                    )));
                }
                pos[v] = Some((r, inner.part(r) + j));
            }
        }
        let mut chain = vec![inner];
        for &(r, c) in pos.iter().skip(1).flatten() {
            let last = chain.last().unwrap();
            if last.part(r) != c || (r > 0 && last.part(r - 1) <= c) {
                return Err(Error::Parse(format!(
                    "rows {rows:?} do not form a standard filling"
                )));
            }
            chain.push(last.with_box(r));
        }
        Ok(StandardSkewTableau { chain })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn into_chain(self) -> Vec<Partition> {
        self.chain
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.inner().clone(), self.outer().clone()).unwrap()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_straight(&self) -> bool {
        self.inner().is_empty()
    }

    /// Box holding entry `k` (1-based).
    pub fn box_of(&self, k: usize) -> (usize, usize) {
        added_box(&self.chain[k - 1], &self.chain[k]).unwrap()
    }

    /// Entries right of the inner shape, row by row.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let inner = self.inner();
        let outer = self.outer();
        let mut rows: Vec<Vec<usize>> = (0..outer.len())
            .map(|r| vec![0; outer.part(r) - inner.part(r)])
            .collect();
        for k in 1..=self.size() {
            let (r, c) = self.box_of(k);
            rows[r][c - inner.part(r)] = k;
        }
        rows
    }

    /// The sub-tableau of entries `a+1..=b`, renumbered from 1.
    pub fn segment(&self, a: usize, b: usize) -> StandardSkewTableau {
        StandardSkewTableau {
            chain: self.chain[a..=b].to_vec(),
        }
    }

    /// Appends `other`, whose inner shape must be this tableau's outer shape.
    pub fn concat(&self, other: &StandardSkewTableau) -> Result<StandardSkewTableau> {
        if other.inner() != self.outer() {
            return Err(Error::ShapeMismatch {
                expected: self.outer().clone(),
                found: other.inner().clone(),
            });
        }
        let mut chain = self.chain.clone();
        chain.extend_from_slice(&other.chain[1..]);
        Ok(StandardSkewTableau { chain })
    }
}

impl fmt::Display for StandardSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.inner();
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for _ in 0..inner.part(r) {
                write!(f, ". ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT[{self}]")
    }
}

/// All standard tableaux of `shape`, in lexicographic order of their chains.
pub fn enumerate_standard(shape: &SkewShape) -> Vec<StandardSkewTableau> {
    let mut out = Vec::new();
    let mut chain = vec![shape.inner().clone()];
    standard_rec(shape.outer(), &mut chain, shape.size(), &mut out);
    out
}

fn standard_rec(
    outer: &Partition,
    chain: &mut Vec<Partition>,
    remaining: usize,
    out: &mut Vec<StandardSkewTableau>,
) {
    if remaining == 0 {
        out.push(StandardSkewTableau {
            chain: chain.clone(),
        });
        return;
    }
    let last = chain.last().unwrap().clone();
    // Adding to a lower row yields a lexicographically smaller partition.
    let rows: Vec<usize> = last
        .addable_rows()
        .filter(|&r| last.part(r) < outer.part(r))
        .collect();
    for &r in rows.iter().rev() {
        chain.push(last.with_box(r));
        standard_rec(outer, chain, remaining - 1, out);
        chain.pop();
    }
}

/// Number of standard tableaux of straight shape `lambda` by the hook-length
/// formula.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let factorial: u128 = (1..=n).product();
    let hooks: u128 = lambda
        .boxes()
        .map(|(r, c)| (lambda.part(r) - c + conj.part(c) - r - 1) as u128)
        .product();
    factorial / hooks
}

/// Rotates `t` by 180° inside `rect` and reverses the numbering; the result
/// has shape `inner^c / outer^c`.
pub fn rotate180(t: &StandardSkewTableau, rect: Rectangle) -> Result<StandardSkewTableau> {
    rect.check_fits(t.outer())?;
    let chain = t
        .chain
        .iter()
        .rev()
        .map(|p| p.complement(rect))
        .collect::<Result<Vec<_>>>()?;
    Ok(StandardSkewTableau { chain })
}

/// The row-consecutive (highest-weight) tableau of straight shape `lambda`.
pub fn superstandard(lambda: &Partition) -> StandardSkewTableau {
    superstandard_skew(&Partition::empty(), lambda)
}

/// The row-consecutive filling of `outer / inner`: row 1 first, left to right.
pub fn superstandard_skew(inner: &Partition, outer: &Partition) -> StandardSkewTableau {
    let mut chain = vec![inner.clone()];
    for r in 0..outer.len() {
        for _ in inner.part(r)..outer.part(r) {
            let next = chain.last().unwrap().with_box(r);
            chain.push(next);
        }
    }
    StandardSkewTableau { chain }
}

/// A filling of a skew shape with rows and columns strictly increasing;
/// values may repeat.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IncreasingRepr", into = "IncreasingRepr")]
pub struct IncreasingTableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct IncreasingRepr {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<IncreasingRepr> for IncreasingTableau {
    type Error = Error;

    fn try_from(r: IncreasingRepr) -> Result<Self> {
        IncreasingTableau::new(r.inner, r.rows)
    }
}

impl From<IncreasingTableau> for IncreasingRepr {
    fn from(t: IncreasingTableau) -> Self {
        IncreasingRepr {
            inner: t.inner,
            rows: t.rows,
        }
    }
}

impl IncreasingTableau {
    /// `rows[r]` lists the entries of row `r` to the right of `inner`.
    pub fn new(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let t = IncreasingTableau { inner, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidIncreasing(msg));
        // Rows covered entirely by the inner shape may be omitted.
        let outer_parts: Vec<usize> = (0..self.rows.len().max(self.inner.len()))
            .map(|r| self.inner.part(r) + self.rows.get(r).map_or(0, Vec::len))
            .collect();
        if outer_parts.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("rows {:?} do not form a skew shape", self.rows));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return bad("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not strictly increasing", r + 1));
            }
            for (j, &v) in row.iter().enumerate() {
                let c = self.inner.part(r) + j;
                if r > 0 {
                    if let Some(above) = self.get(r - 1, c) {
                        if above >= v {
                            return bad(format!("column {} is not strictly increasing", c + 1));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_standard(t: &StandardSkewTableau) -> Self {
        IncreasingTableau {
            inner: t.inner().clone(),
            rows: t.rows(),
        }
    }

    /// Builds a tableau from a grid over `outer` in which `None` marks the
    /// boxes of the inner shape.
    pub(crate) fn from_grid(inner: Partition, grid: Vec<Vec<Option<usize>>>) -> Self {
        let rows = grid
            .into_iter()
            .map(|row| row.into_iter().flatten().collect())
            .collect();
        let mut t = IncreasingTableau { inner, rows };
        while t.rows.last().is_some_and(Vec::is_empty) {
            t.rows.pop();
        }
        debug_assert!(t.validate().is_ok());
        t
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn outer(&self) -> Partition {
        let parts = (0..self.rows.len().max(self.inner.len()))
            .map(|r| self.inner.part(r) + self.rows.get(r).map_or(0, Vec::len))
            .collect();
        Partition::new(parts).unwrap()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.inner.clone(), self.outer()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Entry at `(row, col)`, or `None` outside the skew shape.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.inner.part(row);
        if col < start {
            return None;
        }
        self.rows.get(row)?.get(col - start).copied()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Grid over the outer shape; `None` marks inner boxes.
    pub(crate) fn grid(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.outer();
        (0..outer.len())
            .map(|r| (0..outer.part(r)).map(|c| self.get(r, c)).collect())
            .collect()
    }

    /// True iff this is the straight row-consecutive filling of `lambda`.
    pub fn is_superstandard(&self, lambda: &Partition) -> bool {
        self.is_straight()
            && self.outer() == *lambda
            && self.rows.iter().flatten().copied().eq(1..=lambda.size())
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.grid().iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|v| v.map_or(".".to_string(), |v| v.to_string()))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Inc[{self}]")
    }
}
