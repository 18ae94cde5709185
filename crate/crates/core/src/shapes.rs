//! Partitions, bounding rectangles and skew shapes.
//!
//! Boxes are addressed by zero-based `(row, col)` pairs in English notation:
//! row 0 is the top row and column 0 the leftmost column.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition with trailing zeros stripped, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// A single row of length `n`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (zero-based), or 0 past the last nonzero part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// True iff `other` fits inside `self` part by part.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    /// Rows where a box can be added while staying a partition.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&r| r == 0 || self.part(r - 1) > self.part(r))
    }

    /// Rows whose last box can be removed while staying a partition.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&r| self.part(r) > self.part(r + 1))
    }

    /// Adds a box at the end of `row`; the caller guarantees the row is
    /// addable.
    pub fn with_box(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        debug_assert!(row == 0 || parts[row - 1] >= parts[row]);
        Partition(parts)
    }

    /// Removes the last box of `row`; the caller guarantees it is removable.
    pub fn without_box(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        debug_assert!(row + 1 >= parts.len() || parts[row] >= parts[row + 1]);
        if parts[row] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// The complement `λ^c` inside `rect`: `λ^c_i = cols − λ_{rows+1−i}`.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        if !rect.fits(self) {
            return Err(Error::DoesNotFit {
                partition: self.clone(),
                rect,
            });
        }
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.part(rect.rows - 1 - i))
            .collect();
        Partition::new(parts)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    /// True when all nonzero parts are equal.
    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma-separated parts; the empty string (or `∅`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Parses a semicolon-separated list of partitions, e.g. `"2;2,1;3,1"`.
pub fn parse_partition_list(s: &str) -> Result<Vec<Partition>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

/// The `rows × cols` rectangle bounding every shape of a Grassmannian
/// `G(rows, rows + cols)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RectangleRepr", into = "RectangleRepr")]
pub struct Rectangle {
    rows: usize,
    cols: usize,
}

#[derive(Serialize, Deserialize)]
struct RectangleRepr {
    rows: usize,
    cols: usize,
}

impl TryFrom<RectangleRepr> for Rectangle {
    type Error = Error;

    fn try_from(r: RectangleRepr) -> Result<Self> {
        Rectangle::new(r.rows, r.cols)
    }
}

impl From<Rectangle> for RectangleRepr {
    fn from(r: Rectangle) -> Self {
        RectangleRepr {
            rows: r.rows,
            cols: r.cols,
        }
    }
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyRectangle { rows, cols });
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// The rectangle itself as a partition.
    pub fn full(&self) -> Partition {
        Partition(vec![self.cols; self.rows])
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.part(0) <= self.cols
    }

    pub fn check_fits(&self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                partition: p.clone(),
                rect: *self,
            })
        }
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `"KxM"`: `K` rows and `M` columns.
impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("rectangle must look like 3x5, got {s:?}"));
        let (k, m) = s.trim().split_once(['x', 'X']).ok_or_else(bad)?;
        let k = k.trim().parse().map_err(|_| bad())?;
        let m = m.trim().parse().map_err(|_| bad())?;
        Rectangle::new(k, m)
    }
}

/// The skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr", into = "SkewRepr")]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    inner: Partition,
    outer: Partition,
}

impl TryFrom<SkewRepr> for SkewShape {
    type Error = Error;

    fn try_from(r: SkewRepr) -> Result<Self> {
        SkewShape::new(r.inner, r.outer)
    }
}

impl From<SkewShape> for SkewRepr {
    fn from(s: SkewShape) -> Self {
        SkewRepr {
            inner: s.inner,
            outer: s.outer,
        }
    }
}

impl SkewShape {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { inner, outer })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            inner: Partition::empty(),
            outer,
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
    }

    /// Number of rows containing at least one box.
    pub fn nonempty_rows(&self) -> usize {
        (0..self.outer.len())
            .filter(|&r| self.outer.part(r) > self.inner.part(r))
            .count()
    }

    /// No two boxes in the same column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|r| self.outer.part(r) <= self.inner.part(r - 1))
    }

    /// Number of vertically adjacent box pairs.
    pub fn vertical_dominoes(&self) -> usize {
        (1..self.outer.len())
            .map(|r| {
                let lo = self.inner.part(r - 1).max(self.inner.part(r));
                self.outer.part(r).saturating_sub(lo)
            })
            .sum()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// True iff `lambda` fits inside `mu`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.contains(lambda)
}

/// Complement of `lambda` inside `rect`.
pub fn complement(lambda: &Partition, rect: Rectangle) -> Result<Partition> {
    lambda.complement(rect)
}

/// All one-box extensions of `lambda` inside `bound`, ordered by the row of
/// the added box.
pub fn one_box_extensions(lambda: &Partition, bound: &Partition) -> Vec<Partition> {
    lambda
        .addable_rows()
        .filter(|&r| lambda.part(r) < bound.part(r))
        .map(|r| lambda.with_box(r))
        .collect()
}

/// All partitions inside `rect`, ordered by size and then lexicographically.
pub fn enumerate_partitions(rect: Rectangle) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rect.rows);
    fill_parts(rect.rows, rect.cols, &mut parts, &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

fn fill_parts(rows_left: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rows_left == 0 || max == 0 {
        out.push(Partition(parts.clone()));
        return;
    }
    // Stop here (all remaining parts zero) or place one more nonzero part.
    out.push(Partition(parts.clone()));
    for p in 1..=max {
        parts.push(p);
        fill_parts(rows_left - 1, p, parts, out);
        parts.pop();
    }
}

/// Partitions `mu` with `lower ⊆ mu ⊆ upper` and `|mu| = size`, in
/// lexicographic order.
pub fn partitions_between(lower: &Partition, upper: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if size < lower.size() || size > upper.size() || !upper.contains(lower) {
        return out;
    }
    let rows = upper.len();
    let mut parts = vec![0; rows];
    between_rec(lower, upper, 0, size, usize::MAX, &mut parts, &mut out);
    out.sort();
    out
}

fn between_rec(
    lower: &Partition,
    upper: &Partition,
    row: usize,
    remaining: usize,
    cap: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == parts.len() {
        if remaining == 0 {
            let mut p = parts.clone();
            while p.last() == Some(&0) {
                p.pop();
            }
            out.push(Partition(p));
        }
        return;
    }
    let hi = upper.part(row).min(cap).min(remaining);
    let lo = lower.part(row);
    if lo > hi {
        return;
    }
    // Remaining rows can absorb at most `hi` boxes each.
    let rest_cap: usize = (row + 1..parts.len()).map(|r| upper.part(r)).sum();
    for p in lo..=hi {
        if remaining - p > rest_cap.min(p * (parts.len() - row - 1)) {
            continue;
        }
        parts[row] = p;
        between_rec(lower, upper, row + 1, remaining - p, p, parts, out);
    }
    parts[row] = 0;
}

/// All `nu` with `mu ⊆ nu ⊆ bound`, `|nu / mu| = size` and `nu / mu` a
/// horizontal strip, in lexicographic order.
pub fn horizontal_strips(mu: &Partition, bound: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if !bound.contains(mu) {
        return out;
    }
    let rows = bound.len();
    let mut parts = vec![0; rows];
    strip_rec(mu, bound, 0, size, &mut parts, &mut out);
    out.sort();
    out
}

fn strip_rec(
    mu: &Partition,
    bound: &Partition,
    row: usize,
    remaining: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == parts.len() {
        if remaining == 0 {
            let mut p = parts.clone();
            while p.last() == Some(&0) {
                p.pop();
            }
            out.push(Partition(p));
        }
        return;
    }
    let lo = mu.part(row);
    let mut hi = bound.part(row);
    if row > 0 {
        hi = hi.min(mu.part(row - 1));
    }
    for p in lo..=hi.min(lo + remaining) {
        parts[row] = p;
        strip_rec(mu, bound, row + 1, remaining - (p - lo), parts, out);
    }
}

/// The box of `big / small` when `big` extends `small` by exactly one box.
pub fn added_box(small: &Partition, big: &Partition) -> Option<(usize, usize)> {
    if big.len() < small.len() || big.len() > small.len() + 1 {
        return None;
    }
    let mut found = None;
    for r in 0..big.len() {
        let (a, b) = (small.part(r), big.part(r));
        if a == b {
            continue;
        }
        if b != a + 1 || found.is_some() {
            return None;
        }
        found = Some((r, a));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rect(k: usize, m: usize) -> Rectangle {
        Rectangle::new(k, m).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&p(&[2, 2]), &p(&[1])));
        assert!(!contains(&p(&[2, 1]), &p(&[1, 1, 1])));
        for lam in enumerate_partitions(rect(3, 3)) {
            assert!(contains(&lam, &lam));
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement(&Partition::empty(), rect(2, 2)).unwrap(),
            p(&[2, 2])
        );
        assert_eq!(complement(&p(&[2, 1]), rect(2, 3)).unwrap(), p(&[2, 1]));
        assert_eq!(complement(&p(&[3, 1]), rect(2, 3)).unwrap(), p(&[2]));
        assert!(complement(&p(&[4]), rect(2, 3)).is_err());
        assert!(complement(&p(&[1, 1, 1]), rect(2, 3)).is_err());
    }

    #[test]
    fn complement_is_involution_and_sizes_sum_to_area() {
        for (k, m) in [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 5)] {
            let r = rect(k, m);
            for lam in enumerate_partitions(r) {
                let c = lam.complement(r).unwrap();
                assert_eq!(lam.size() + c.size(), r.area());
                assert_eq!(c.complement(r).unwrap(), lam);
            }
        }
    }

    #[test]
    fn one_box_extension_examples() {
        assert_eq!(
            one_box_extensions(&p(&[1]), &p(&[2, 2])),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert!(one_box_extensions(&p(&[2, 2]), &p(&[2, 2])).is_empty());
        assert_eq!(
            one_box_extensions(&Partition::empty(), &p(&[3, 3])),
            vec![p(&[1])]
        );
    }

    #[test]
    fn extensions_stay_in_bound() {
        let bound = p(&[4, 3, 1]);
        for lam in partitions_between(&Partition::empty(), &bound, 4) {
            for mu in one_box_extensions(&lam, &bound) {
                assert!(contains(&bound, &mu));
                assert_eq!(mu.size(), lam.size() + 1);
                assert!(added_box(&lam, &mu).is_some());
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumeration_counts_match_lattice_paths() {
        // Lattice paths from one corner of a k×m grid to the other, counted
        // by brute force over bit strings.
        for (k, m) in [(1, 3), (2, 2), (3, 4), (2, 5)] {
            let paths = (0u32..(1 << (k + m)))
                .filter(|b| b.count_ones() as usize == k)
                .count();
            assert_eq!(enumerate_partitions(rect(k, m)).len(), paths);
            assert_eq!(paths, binomial(k + m, k));
        }
        assert_eq!(enumerate_partitions(rect(2, 2)).len(), 6);
        assert_eq!(enumerate_partitions(rect(3, 4)).len(), 35);
        assert_eq!(
            enumerate_partitions(rect(1, 3)),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3])]
        );
    }

    #[test]
    fn between_matches_filtered_enumeration() {
        let r = rect(3, 4);
        let all = enumerate_partitions(r);
        let lower = p(&[2, 1]);
        let upper = p(&[4, 3, 1]);
        for size in 0..=12 {
            let expected: Vec<_> = all
                .iter()
                .filter(|mu| mu.size() == size && mu.contains(&lower) && upper.contains(mu))
                .cloned()
                .collect();
            assert_eq!(partitions_between(&lower, &upper, size), expected);
        }
    }

    #[test]
    fn horizontal_strip_enumeration() {
        let mu = p(&[2, 1]);
        let bound = p(&[4, 3, 2]);
        for size in 0..=4 {
            let expected: Vec<_> = partitions_between(&mu, &bound, mu.size() + size)
                .into_iter()
                .filter(|nu| {
                    SkewShape::new(mu.clone(), nu.clone())
                        .unwrap()
                        .is_horizontal_strip()
                })
                .collect();
            assert_eq!(horizontal_strips(&mu, &bound, size), expected);
        }
        assert_eq!(
            horizontal_strips(&p(&[1]), &p(&[2, 2]), 2),
            vec![p(&[2, 1])]
        );
    }

    #[test]
    fn parsing() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(
            parse_partition_list("2;2,1;3,1").unwrap(),
            vec![p(&[2]), p(&[2, 1]), p(&[3, 1])]
        );
        assert_eq!("3x5".parse::<Rectangle>().unwrap(), rect(3, 5));
        assert!("3x0".parse::<Rectangle>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn json_encoding() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(
            serde_json::to_string(&rect(2, 3)).unwrap(),
            r#"{"rows":2,"cols":3}"#
        );
        let s = SkewShape::new(p(&[1]), p(&[2, 2])).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"inner":[1],"outer":[2,2]}"#
        );
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<SkewShape>(r#"{"inner":[3],"outer":[2,2]}"#).is_err());
    }

    #[test]
    fn strip_predicates() {
        let s = SkewShape::new(p(&[4, 2]), p(&[6, 4, 1])).unwrap();
        assert!(s.is_horizontal_strip());
        assert_eq!(s.nonempty_rows(), 3);
        assert_eq!(s.vertical_dominoes(), 0);
        let d = SkewShape::new(p(&[1]), p(&[2, 2])).unwrap();
        assert!(!d.is_horizontal_strip());
        assert_eq!(d.vertical_dominoes(), 1);
    }
}
