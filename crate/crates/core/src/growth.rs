//! Growth diagrams: the local square rule, shuffling, rectification,
//! Bender-Knuth moves, promotion and cylindrical growth diagrams.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{added_box, Partition, Rectangle};
use crate::tableau::{superstandard, StandardSkewTableau};

/// Completes a unit square of a growth diagram. Given `gamma ⊂ alpha ⊂ beta`
/// (one box per step) returns the other corner `delta`: `alpha` itself when
/// the two boxes of `beta / gamma` touch, otherwise the intermediate
/// partition different from `alpha`.
pub fn growth_square(gamma: &Partition, alpha: &Partition, beta: &Partition) -> Result<Partition> {
    if added_box(gamma, alpha).is_none() {
        return Err(Error::NotOneBoxStep {
            from: gamma.clone(),
            to: alpha.clone(),
        });
    }
    if added_box(alpha, beta).is_none() {
        return Err(Error::NotOneBoxStep {
            from: alpha.clone(),
            to: beta.clone(),
        });
    }
    Ok(square(gamma, alpha, beta))
}

pub(crate) fn square(gamma: &Partition, alpha: &Partition, beta: &Partition) -> Partition {
    let (r1, c1) = added_box(gamma, alpha).unwrap();
    let (r2, c2) = added_box(alpha, beta).unwrap();
    let touching = (r1 == r2 && c1 + 1 == c2) || (c1 == c2 && r1 + 1 == r2);
    if touching {
        alpha.clone()
    } else {
        gamma.with_box(r2)
    }
}

/// The rectangular growth diagram of a shuffle. `grid[x][y]` is the vertex
/// in column `x` (`0..=|t|`) and height `y` (`0..=|s|`); the left column is
/// `s` read bottom to top and the top row is `t` read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthDiagram {
    grid: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    /// Fills the diagram with `s` on the left edge and `t` on the top edge.
    pub fn from_pair(s: &StandardSkewTableau, t: &StandardSkewTableau) -> Result<Self> {
        check_adjacent(s, t)?;
        let mut grid = Vec::with_capacity(t.size() + 1);
        let mut col = s.chain().to_vec();
        let m = s.size();
        grid.push(col.clone());
        for x in 0..t.size() {
            let mut next = col.clone();
            next[m] = t.chain()[x + 1].clone();
            for y in (0..m).rev() {
                next[y] = square(&col[y], &col[y + 1], &next[y + 1]);
            }
            grid.push(next.clone());
            col = next;
        }
        Ok(GrowthDiagram { grid })
    }

    pub fn width(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn height(&self) -> usize {
        self.grid[0].len() - 1
    }

    pub fn vertex(&self, x: usize, y: usize) -> &Partition {
        &self.grid[x][y]
    }

    /// Bottom edge read left to right.
    pub fn bottom(&self) -> StandardSkewTableau {
        StandardSkewTableau::from_chain_unchecked(self.grid.iter().map(|c| c[0].clone()).collect())
    }

    /// Right edge read bottom to top.
    pub fn right(&self) -> StandardSkewTableau {
        StandardSkewTableau::from_chain_unchecked(self.grid.last().unwrap().clone())
    }

    /// Checks the growth condition on every edge and the local rule on every
    /// square.
    pub fn check(&self) -> bool {
        let (w, h) = (self.width(), self.height());
        for x in 0..=w {
            for y in 0..=h {
                let v = &self.grid[x][y];
                if x < w && added_box(v, &self.grid[x + 1][y]).is_none() {
                    return false;
                }
                if y < h && added_box(v, &self.grid[x][y + 1]).is_none() {
                    return false;
                }
                if x < w && y < h {
                    let expected = square(v, &self.grid[x][y + 1], &self.grid[x + 1][y + 1]);
                    if expected != self.grid[x + 1][y] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for GrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for y in (0..=self.height()).rev() {
            let cells: Vec<String> = self.grid.iter().map(|c| c[y].to_string()).collect();
            writeln!(f, "{}", cells.join("  "))?;
        }
        Ok(())
    }
}

fn check_adjacent(s: &StandardSkewTableau, t: &StandardSkewTableau) -> Result<()> {
    if t.inner() != s.outer() {
        return Err(Error::ShapeMismatch {
            expected: s.outer().clone(),
            found: t.inner().clone(),
        });
    }
    Ok(())
}

/// Shuffles `s` through `t` (slides `s` outward in the order given by `t`).
/// Returns `(t̃, s̃)` where `t̃` starts at `s.inner()` and `s̃` ends at
/// `t.outer()`.
pub fn shuffle_tableaux(
    s: &StandardSkewTableau,
    t: &StandardSkewTableau,
) -> Result<(StandardSkewTableau, StandardSkewTableau)> {
    check_adjacent(s, t)?;
    Ok(shuffle_unchecked(s.chain(), t.chain()))
}

pub(crate) fn shuffle_unchecked(
    s: &[Partition],
    t: &[Partition],
) -> (StandardSkewTableau, StandardSkewTableau) {
    let m = s.len() - 1;
    let mut col = s.to_vec();
    let mut bottom = Vec::with_capacity(t.len());
    bottom.push(col[0].clone());
    for x in 0..t.len() - 1 {
        let mut next = Vec::with_capacity(m + 1);
        next.resize(m + 1, Partition::empty());
        next[m] = t[x + 1].clone();
        for y in (0..m).rev() {
            next[y] = square(&col[y], &col[y + 1], &next[y + 1]);
        }
        bottom.push(next[0].clone());
        col = next;
    }
    (
        StandardSkewTableau::from_chain_unchecked(bottom),
        StandardSkewTableau::from_chain_unchecked(col),
    )
}

/// Rectifies `t` by shuffling the superstandard tableau of its inner shape
/// through it. Returns the straight-shape rectification together with the
/// recording tableau.
pub fn rectify(t: &StandardSkewTableau) -> (StandardSkewTableau, StandardSkewTableau) {
    if t.is_straight() {
        return (t.clone(), StandardSkewTableau::empty(t.outer().clone()));
    }
    shuffle_unchecked(superstandard(t.inner()).chain(), t.chain())
}

/// The Bender-Knuth move exchanging entries `i` and `i + 1` when their boxes
/// do not touch.
pub fn bender_knuth(t: &StandardSkewTableau, i: usize) -> Result<StandardSkewTableau> {
    let n = t.size();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut chain = t.chain().to_vec();
    bk_in_place(&mut chain, i);
    Ok(StandardSkewTableau::from_chain_unchecked(chain))
}

fn bk_in_place(chain: &mut [Partition], i: usize) {
    let d = square(&chain[i - 1], &chain[i], &chain[i + 1]);
    chain[i] = d;
}

/// Promotion: Bender-Knuth moves `1, 2, …, n − 1` applied in that order.
pub fn promotion(t: &StandardSkewTableau) -> StandardSkewTableau {
    let mut chain = t.chain().to_vec();
    for i in 1..t.size() {
        bk_in_place(&mut chain, i);
    }
    StandardSkewTableau::from_chain_unchecked(chain)
}

/// A cylindrical growth diagram built from a standard tableau of the full
/// rectangle.
///
/// Row `t` (vertices `(i, −t)`) runs over `t ≤ i ≤ t + r` with `λ(t, −t) = ∅`
/// and `λ(t + r, −t) = rect`. Rows `0..r` are stored; other rows are reached
/// through the period-`r` translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylindricalGrowthDiagram {
    rect: Rectangle,
    rows: Vec<Vec<Partition>>,
}

impl Serialize for CylindricalGrowthDiagram {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(serializer)
    }
}

impl CylindricalGrowthDiagram {
    /// Completes the diagram from its first row and checks both symmetries.
    pub fn new(first_row: &StandardSkewTableau, rect: Rectangle) -> Result<Self> {
        if !first_row.inner().is_empty() {
            return Err(Error::NotFromEmpty(first_row.inner().clone()));
        }
        if *first_row.outer() != rect.full() {
            return Err(Error::NotToRectangle {
                expected: rect.full(),
                found: first_row.outer().clone(),
            });
        }
        let r = first_row.size();
        let mut rows = vec![first_row.chain().to_vec()];
        for _ in 1..=r {
            let prev = rows.last().unwrap();
            let mut row = Vec::with_capacity(r + 1);
            row.push(Partition::empty());
            // Entry k of `row` is λ(t + k, −t); entry k + 1 of `prev` is the
            // vertex directly above it.
            for k in 0..r - 1 {
                let next = square(&row[k], &prev[k + 1], &prev[k + 2]);
                row.push(next);
            }
            row.push(rect.full());
            rows.push(row);
        }
        let last = rows.pop().unwrap();
        let diagram = CylindricalGrowthDiagram { rect, rows };
        diagram.verify(&last)?;
        Ok(diagram)
    }

    /// Number of rows in one period.
    pub fn period(&self) -> usize {
        self.rows.len()
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    /// `λ(i, j)` for any `(i, j)` with `0 ≤ i + j ≤ r`.
    pub fn get(&self, i: i64, j: i64) -> Option<&Partition> {
        let r = self.period() as i64;
        let offset = i + j;
        if offset < 0 || offset > r {
            return None;
        }
        let t = (-j).rem_euclid(r);
        self.rows[t as usize].get(offset as usize)
    }

    /// Rows of one period; entry `k` of row `t` is `λ(t + k, −t)`.
    pub fn rows(&self) -> &[Vec<Partition>] {
        &self.rows
    }

    pub fn vertices(&self) -> Vec<VertexRef<'_>> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(t, row)| {
                row.iter().enumerate().map(move |(k, shape)| VertexRef {
                    i: (t + k) as i64,
                    j: -(t as i64),
                    shape,
                })
            })
            .collect()
    }

    fn verify(&self, row_r: &[Partition]) -> Result<()> {
        let r = self.period() as i64;
        // Periodicity: the row computed at offset r must repeat row 0.
        if row_r != self.rows[0].as_slice() {
            return Err(Error::SymmetryViolation(
                "row r of the cylindrical growth diagram differs from row 0".into(),
            ));
        }
        for t in 0..r {
            for k in 0..=r {
                let (i, j) = (t + k, -t);
                let lam = self.get(i, j).unwrap();
                let mirrored = self.get(r - j, -i).unwrap();
                if *mirrored != lam.complement(self.rect)? {
                    return Err(Error::SymmetryViolation(format!(
                        "λ({}, {}) = {} is not the complement of λ({i}, {j}) = {lam}",
                        r - j,
                        -i,
                        mirrored
                    )));
                }
            }
        }
        Ok(())
    }

    /// Text rendering, one row per line, each shifted by its row index.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// A vertex of a cylindrical growth diagram, as exported to JSON.
#[derive(Clone, Debug, Serialize)]
pub struct VertexRef<'a> {
    pub i: i64,
    pub j: i64,
    pub shape: &'a Partition,
}

impl fmt::Display for CylindricalGrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|p| p.to_string().chars().count())
            .max()
            .unwrap_or(1);
        for (t, row) in self.rows.iter().enumerate() {
            let pad = " ".repeat(t * (width + 1));
            let cells: Vec<String> = row
                .iter()
                .map(|p| format!("{:>width$}", p.to_string()))
                .collect();
            writeln!(f, "{pad}{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewShape;
    use crate::tableau::enumerate_standard;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chain(parts: &[&[usize]]) -> StandardSkewTableau {
        StandardSkewTableau::new(parts.iter().map(|c| p(c)).collect()).unwrap()
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            growth_square(&p(&[1]), &p(&[2]), &p(&[2, 1])).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            growth_square(&p(&[1]), &p(&[2]), &p(&[3])).unwrap(),
            p(&[2])
        );
        assert_eq!(
            growth_square(&p(&[]), &p(&[1]), &p(&[1, 1])).unwrap(),
            p(&[1])
        );
        assert!(growth_square(&p(&[]), &p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn shuffle_example() {
        let s = chain(&[&[], &[1]]);
        let t = chain(&[&[1], &[2], &[2, 1]]);
        let (tt, ss) = shuffle_tableaux(&s, &t).unwrap();
        assert_eq!(tt, chain(&[&[], &[1], &[1, 1]]));
        assert_eq!(ss, chain(&[&[1, 1], &[2, 1]]));
        assert_eq!(shuffle_tableaux(&tt, &ss).unwrap(), (s, t));
    }

    #[test]
    fn empty_shuffle_is_trivial() {
        let s = StandardSkewTableau::empty(p(&[1]));
        let t = chain(&[&[1], &[2], &[2, 1]]);
        let (tt, ss) = shuffle_tableaux(&s, &t).unwrap();
        assert_eq!(tt, t);
        assert_eq!(ss, StandardSkewTableau::empty(p(&[2, 1])));
    }

    #[test]
    fn shuffle_rejects_mismatch() {
        let s = chain(&[&[], &[1]]);
        let t = chain(&[&[2], &[2, 1]]);
        assert!(shuffle_tableaux(&s, &t).is_err());
    }

    #[test]
    fn stored_diagram_agrees_with_sweep() {
        let outer = p(&[3, 2, 1]);
        for full in enumerate_standard(&SkewShape::straight(outer)) {
            let s = full.segment(0, 2);
            let t = full.segment(2, 6);
            let g = GrowthDiagram::from_pair(&s, &t).unwrap();
            assert!(g.check());
            let (tt, ss) = shuffle_tableaux(&s, &t).unwrap();
            assert_eq!(g.bottom(), tt);
            assert_eq!(g.right(), ss);
        }
    }

    #[test]
    fn rectify_examples() {
        let t = chain(&[&[1], &[1, 1], &[2, 1], &[2, 2]]);
        let (rt, rec) = rectify(&t);
        assert_eq!(rt.outer(), &p(&[2, 1]));
        assert!(rt.is_straight());
        assert_eq!(rec.outer(), &p(&[2, 2]));

        let straight = superstandard(&p(&[3, 1]));
        assert_eq!(rectify(&straight).0, straight);
    }

    #[test]
    fn anti_straight_rectifies_to_complement() {
        let rect = Rectangle::new(3, 3).unwrap();
        for lam in crate::shapes::enumerate_partitions(rect) {
            let shape = SkewShape::new(lam.complement(rect).unwrap(), rect.full()).unwrap();
            for t in enumerate_standard(&shape) {
                assert_eq!(rectify(&t).0.outer(), &lam);
            }
        }
    }

    #[test]
    fn bender_knuth_examples() {
        let t = superstandard(&p(&[2, 1]));
        let swapped = bender_knuth(&t, 2).unwrap();
        assert_eq!(swapped.rows(), vec![vec![1, 3], vec![2]]);
        assert_eq!(bender_knuth(&t, 1).unwrap(), t);
        assert_eq!(bender_knuth(&swapped, 2).unwrap(), t);
        assert!(bender_knuth(&t, 3).is_err());
        assert!(bender_knuth(&t, 0).is_err());
    }

    #[test]
    fn promotion_examples() {
        let a = StandardSkewTableau::from_rows(p(&[]), &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = StandardSkewTableau::from_rows(p(&[]), &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(promotion(&a), b);
        assert_eq!(promotion(&b), a);
        let row = superstandard(&p(&[4]));
        assert_eq!(promotion(&row), row);
    }

    #[test]
    fn cylindrical_diagram_2x2() {
        let rect = Rectangle::new(2, 2).unwrap();
        for t in enumerate_standard(&SkewShape::straight(rect.full())) {
            let d = CylindricalGrowthDiagram::new(&t, rect).unwrap();
            assert_eq!(d.period(), 4);
            for i in 0..=4 {
                assert_eq!(d.get(i, 0), d.get(i + 4, -4));
                assert_eq!(d.get(i, 0).unwrap(), &t.chain()[i as usize]);
            }
            // Row 1 is the promotion of row 0, read after removing its first box.
            assert_eq!(d.get(1, -1), Some(&Partition::empty()));
        }
    }

    #[test]
    fn cylindrical_rows_are_promotions() {
        let rect = Rectangle::new(2, 3).unwrap();
        for t in enumerate_standard(&SkewShape::straight(rect.full())) {
            let d = CylindricalGrowthDiagram::new(&t, rect).unwrap();
            let row1 = StandardSkewTableau::new(d.rows()[1].clone()).unwrap();
            assert_eq!(promotion(&t), row1);
        }
    }

    #[test]
    fn cylindrical_rejects_bad_first_row() {
        let rect = Rectangle::new(2, 2).unwrap();
        assert!(CylindricalGrowthDiagram::new(&superstandard(&p(&[2, 1])), rect).is_err());
    }
}
