//! Littlewood-Richardson numbers, first-order K-theoretic coefficients via
//! K-jeu de taquin, and the parity identities relating them to monodromy.

use rayon::prelude::*;
use serde::Serialize;

use crate::dual::{count_chains, enumerate_chains, DEChain};
use crate::error::{Error, Result};
use crate::growth::bender_knuth;
use crate::monodromy::{cycles, orbits, Generator, MonodromyWord, OrbitReport};
use crate::shapes::{added_box, enumerate_partitions, Partition, Rectangle, SkewShape};
use crate::tableau::{enumerate_standard, IncreasingTableau};

/// `c_{types}^{outer/inner}`: the number of chains of dual equivalence
/// classes from `inner` to `outer` with the given types.
pub fn lr_coeff(inner: &Partition, types: &[Partition], outer: &Partition) -> u64 {
    count_chains(inner, outer, types)
}

/// `c_{inner, lambda}^{outer}` by the classical rule: semistandard fillings
/// of `outer / inner` with content `lambda` whose reverse row reading word
/// is a lattice word.
pub fn lr_oracle(inner: &Partition, lambda: &Partition, outer: &Partition) -> u64 {
    if !outer.contains(inner) || outer.size() != inner.size() + lambda.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|r| vec![0; outer.part(r)]).collect();
    let mut counts = vec![0usize; lambda.len() + 1];
    lattice_rec(&cells, 0, inner, lambda, &mut grid, &mut counts)
}

fn lattice_rec(
    cells: &[(usize, usize)],
    k: usize,
    inner: &Partition,
    lambda: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(k) else {
        return 1;
    };
    // Weakly increasing to the right, strictly increasing downwards.
    let max = grid[r]
        .get(c + 1)
        .copied()
        .unwrap_or(usize::MAX)
        .min(lambda.len());
    let min = if r > 0 && c >= inner.part(r - 1) {
        grid[r - 1][c] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in min..=max {
        if counts[v] >= lambda.part(v - 1) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        grid[r][c] = v;
        total += lattice_rec(cells, k + 1, inner, lambda, grid, counts);
        counts[v] -= 1;
    }
    grid[r][c] = 0;
    total
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Inner,
    Hole,
    Value(usize),
}

/// One K-theoretic jeu de taquin slide into the given inner corners.
///
/// The corners become holes; then for each value `s` in increasing order,
/// simultaneously, every hole with an `s` directly right or below becomes
/// `s` and every `s` with a hole directly left or above becomes a hole.
/// Holes left over at the end are removed.
pub fn kjdt_slide(t: &IncreasingTableau, corners: &[(usize, usize)]) -> Result<IncreasingTableau> {
    let inner = t.inner();
    if corners.is_empty() {
        if t.is_straight() {
            return Ok(t.clone());
        }
        return Err(Error::InvalidCorners("no corners given".into()));
    }
    let mut grid: Vec<Vec<Cell>> = t
        .grid()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| v.map_or(Cell::Inner, Cell::Value))
                .collect()
        })
        .collect();
    for &(r, c) in corners {
        let is_corner = c + 1 == inner.part(r) && inner.part(r + 1) <= c;
        if !is_corner || grid[r][c] != Cell::Inner {
            return Err(Error::InvalidCorners(format!(
                "({}, {}) is not a corner of the inner shape {inner}",
                r + 1,
                c + 1
            )));
        }
        grid[r][c] = Cell::Hole;
    }
    let at = |g: &Vec<Vec<Cell>>, r: usize, c: usize| g.get(r).and_then(|row| row.get(c)).copied();
    for s in 1..=t.max_entry() {
        let old = grid.clone();
        for r in 0..old.len() {
            for c in 0..old[r].len() {
                match old[r][c] {
                    Cell::Hole => {
                        let right = at(&old, r, c + 1) == Some(Cell::Value(s));
                        let below = at(&old, r + 1, c) == Some(Cell::Value(s));
                        if right || below {
                            grid[r][c] = Cell::Value(s);
                        }
                    }
                    Cell::Value(v) if v == s => {
                        let left = c > 0 && old[r][c - 1] == Cell::Hole;
                        let above = r > 0 && at(&old, r - 1, c) == Some(Cell::Hole);
                        if left || above {
                            grid[r][c] = Cell::Hole;
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    let mut new_inner = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for row in &grid {
        new_inner.push(row.iter().take_while(|&&x| x == Cell::Inner).count());
        let mut vals = Vec::new();
        let mut seen_hole = false;
        for &x in row {
            match x {
                Cell::Value(v) => {
                    if seen_hole {
                        return Err(Error::InvalidIncreasing("hole left inside a row".into()));
                    }
                    vals.push(v);
                }
                Cell::Hole => seen_hole = true,
                Cell::Inner => {}
            }
        }
        rows.push(vals);
    }
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    IncreasingTableau::new(Partition::new(new_inner)?, rows)
}

/// Slides into the last inner corner (in row-major order) until the shape
/// is straight.
pub fn k_rectify(t: &IncreasingTableau) -> IncreasingTableau {
    let mut cur = t.clone();
    while !cur.is_straight() {
        let inner = cur.inner();
        let r = inner.removable_rows().last().unwrap();
        let corner = (r, inner.part(r) - 1);
        cur = kjdt_slide(&cur, &[corner])
            .expect("a removable box of the inner shape is a valid corner");
    }
    cur
}

/// Increasing tableaux of `shape` using exactly the values `1..=m`.
pub fn enumerate_increasing(shape: &SkewShape, m: usize) -> Vec<IncreasingTableau> {
    let mut out = Vec::new();
    if shape.size() < m {
        return out;
    }
    let outer = shape.outer().clone();
    let mut grid: Grid = (0..outer.len())
        .map(|r| vec![None; outer.part(r)])
        .collect();
    increasing_rec(shape.inner().clone(), &outer, 1, m, &mut grid, &mut |g| {
        out.push(IncreasingTableau::from_grid(
            shape.inner().clone(),
            g.to_vec(),
        ));
    });
    out
}

type Grid = Vec<Vec<Option<usize>>>;

fn increasing_rec(
    cur: Partition,
    outer: &Partition,
    v: usize,
    m: usize,
    grid: &mut Grid,
    emit: &mut dyn FnMut(&Grid),
) {
    let remaining = outer.size() - cur.size();
    if v > m {
        if remaining == 0 {
            emit(grid);
        }
        return;
    }
    // Each later value needs at least one box.
    if remaining < m - v + 1 {
        return;
    }
    let corners: Vec<usize> = cur
        .addable_rows()
        .filter(|&r| cur.part(r) < outer.part(r))
        .collect();
    for mask in 1u32..(1 << corners.len()) {
        let chosen: Vec<usize> = (0..corners.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| corners[b])
            .collect();
        let mut next = cur.parts().to_vec();
        for &r in &chosen {
            if r == next.len() {
                next.push(0);
            }
            grid[r][next[r]] = Some(v);
            next[r] += 1;
        }
        increasing_rec(Partition::new(next).unwrap(), outer, v + 1, m, grid, emit);
        for &r in &chosen {
            grid[r][cur.part(r)] = None;
        }
    }
}

fn check_first_order(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<()> {
    for p in [alpha, beta, gamma] {
        rect.check_fits(p)?;
    }
    let total = alpha.size() + beta.size() + gamma.size();
    if total + 1 != rect.area() {
        return Err(Error::NotFirstOrder {
            expected: rect.area() - 1,
            found: total,
        });
    }
    Ok(())
}

/// The increasing tableaux counted by `k_{αβ}^{γ^c}`: fillings of `γ^c / α`
/// by `1..=|β|` that K-rectify to the superstandard tableau of shape `β`.
pub fn k_tableaux(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<Vec<IncreasingTableau>> {
    check_first_order(alpha, beta, gamma, rect)?;
    let gc = gamma.complement(rect)?;
    if !gc.contains(alpha) {
        return Ok(Vec::new());
    }
    let shape = SkewShape::new(alpha.clone(), gc)?;
    Ok(enumerate_increasing(&shape, beta.size())
        .into_par_iter()
        .filter(|t| k_rectify(t).is_superstandard(beta))
        .collect())
}

/// `k_{αβ}^{γ^c}` for `|α| + |β| + |γ| = area − 1`.
pub fn k_coeff(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<u64> {
    Ok(k_tableaux(alpha, beta, gamma, rect)?.len() as u64)
}

/// Closed form in the Pieri case: when `γ^c / α` is a horizontal strip with
/// `strip_len + 1` boxes spread over `r` rows, `k = r − 1`.
pub fn k_coeff_pieri(
    alpha: &Partition,
    strip_len: usize,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<u64> {
    rect.check_fits(alpha)?;
    rect.check_fits(gamma)?;
    let gc = gamma.complement(rect)?;
    let shape = SkewShape::new(alpha.clone(), gc)?;
    if shape.size() != strip_len + 1 {
        return Err(Error::NotFirstOrder {
            expected: strip_len + 1,
            found: shape.size(),
        });
    }
    if !shape.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip(shape.to_string()));
    }
    Ok(shape.nonempty_rows() as u64 - 1)
}

/// Increasing fillings of the full rectangle by `1..=area − 1`.
pub fn k_promotion_count(rect: Rectangle) -> u64 {
    if rect.area() < 2 {
        return 0;
    }
    enumerate_increasing(&SkewShape::straight(rect.full()), rect.area() - 1).len() as u64
}

/// `|Y_i|` for each `i`: the number of pairs of standard tableaux of the
/// rectangle exchanged by the Bender-Knuth move `i`.
pub fn bk_swap_pairs(rect: Rectangle) -> Vec<u64> {
    let tableaux = enumerate_standard(&SkewShape::straight(rect.full()));
    (1..rect.area())
        .map(|i| {
            let moved = tableaux
                .iter()
                .filter(|t| bender_knuth(t, i).unwrap() != **t)
                .count();
            moved as u64 / 2
        })
        .collect()
}

/// Sign (0 or 1) of promotion on the standard tableaux of `rect`, from its
/// cycle decomposition.
pub fn promotion_sign(rect: Rectangle) -> u8 {
    let tableaux = enumerate_standard(&SkewShape::straight(rect.full()));
    let index: std::collections::HashMap<_, _> =
        tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let perm: Vec<usize> = tableaux
        .iter()
        .map(|t| index[&crate::growth::promotion(t)])
        .collect();
    ((perm.len() - cycles(&perm).len()) % 2) as u8
}

/// The data of the parity identities for one first-order triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    /// `c_{α□βγ}^{rect}`.
    pub c: u64,
    /// `k_{αβ}^{γ^c}`.
    pub k: u64,
    /// Number of orbits of `esh_2 ∘ sh_2`.
    pub eta: usize,
    pub sign: u8,
    /// `χ(O_S) = c − k`.
    pub chi: i64,
    pub ok: bool,
    #[serde(skip)]
    pub congruence_ok: bool,
    #[serde(skip)]
    pub inequality_ok: bool,
    #[serde(skip)]
    pub orbits: OrbitReport,
}

impl ParityReport {
    /// True when `η = c − k` holds exactly, not only mod 2.
    pub fn integer_identity(&self) -> bool {
        self.eta as i64 == self.chi
    }
}

/// The loop word `esh_2 ∘ sh_2`, in application order.
pub fn parity_word() -> MonodromyWord {
    MonodromyWord::new(vec![Generator::Sh(2), Generator::Esh(2)])
}

/// `X_∅^rect(α, □, β, γ)`.
pub fn parity_chains(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rect: Rectangle,
) -> Vec<DEChain> {
    let types = [
        alpha.clone(),
        Partition::row(1),
        beta.clone(),
        gamma.clone(),
    ];
    enumerate_chains(&Partition::empty(), &rect.full(), &types)
}

/// Computes `c`, `k` and the orbit data of `esh_2 ∘ sh_2` and checks
/// `η ≡ c − k`, `sign ≡ k (mod 2)` and `c ≤ k + η`.
pub fn parity_check(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<ParityReport> {
    check_first_order(alpha, beta, gamma, rect)?;
    let chains = parity_chains(alpha, beta, gamma, rect);
    let c = chains.len() as u64;
    let k = k_coeff(alpha, beta, gamma, rect)?;
    let orbit_report = orbits(&parity_word(), &chains)?;
    let eta = orbit_report.orbit_count();
    let sign = orbit_report.sign;
    let chi = c as i64 - k as i64;
    let congruence_ok = (eta as i64 - chi).rem_euclid(2) == 0 && u64::from(sign) == k % 2;
    let inequality_ok = c <= k + eta as u64;
    Ok(ParityReport {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        c,
        k,
        eta,
        sign,
        chi,
        ok: congruence_ok && inequality_ok,
        congruence_ok,
        inequality_ok,
        orbits: orbit_report,
    })
}

/// All first-order triples `(α, β, γ)` inside `rect`, in enumeration order.
pub fn first_order_triples(rect: Rectangle) -> Vec<(Partition, Partition, Partition)> {
    let all = enumerate_partitions(rect);
    let target = rect.area() - 1;
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.size() + b.size() > target {
                continue;
            }
            for g in all
                .iter()
                .filter(|g| g.size() == target - a.size() - b.size())
            {
                out.push((a.clone(), b.clone(), g.clone()));
            }
        }
    }
    out
}

/// Summary of a parity scan over every first-order triple in a rectangle.
#[derive(Clone, Debug, Serialize)]
pub struct ParityScan {
    pub rect: Rectangle,
    pub triples: usize,
    pub failures: Vec<ParityReport>,
    /// Triples where `η ≠ c − k` as integers (allowed; reported as data).
    pub integer_mismatches: usize,
    #[serde(skip)]
    pub reports: Vec<ParityReport>,
}

pub fn parity_scan(rect: Rectangle) -> Result<ParityScan> {
    let reports = first_order_triples(rect)
        .par_iter()
        .map(|(a, b, g)| parity_check(a, b, g, rect))
        .collect::<Result<Vec<_>>>()?;
    let failures = reports.iter().filter(|r| !r.ok).cloned().collect();
    let integer_mismatches = reports.iter().filter(|r| !r.integer_identity()).count();
    Ok(ParityScan {
        rect,
        triples: reports.len(),
        failures,
        integer_mismatches,
        reports,
    })
}

/// The chains of `X_∅^rect(α, □, β, γ)` ordered so that `D_i` has its `□`
/// in the `i`-th lowest row.
pub fn pieri_order(chains: &[DEChain]) -> Vec<DEChain> {
    let mut keyed: Vec<(usize, DEChain)> = chains
        .iter()
        .map(|c| {
            let d = c.class(2);
            let (row, _) = added_box(d.inner(), d.outer()).expect("second class is a single box");
            (row, c.clone())
        })
        .collect();
    keyed.sort_by_key(|k| std::cmp::Reverse(k.0));
    keyed.into_iter().map(|(_, c)| c).collect()
}

/// Result of checking one Pieri instance.
#[derive(Clone, Debug, Serialize)]
pub struct PieriReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub size: usize,
    pub rows: usize,
    /// `ω'(D_i) = D_{i+1 mod |X|}` in the row ordering.
    pub cyclic: bool,
    pub k: u64,
    pub k_closed_form: u64,
}

impl PieriReport {
    pub fn ok(&self) -> bool {
        self.cyclic && self.k == self.k_closed_form && self.k + 1 == self.size as u64
    }
}

pub fn pieri_check(
    alpha: &Partition,
    strip_len: usize,
    gamma: &Partition,
    rect: Rectangle,
) -> Result<PieriReport> {
    let beta = Partition::row(strip_len);
    let k_closed_form = k_coeff_pieri(alpha, strip_len, gamma, rect)?;
    let k = k_coeff(alpha, &beta, gamma, rect)?;
    let ordered = pieri_order(&parity_chains(alpha, &beta, gamma, rect));
    let word = parity_word();
    let n = ordered.len();
    let mut cyclic = true;
    for (i, chain) in ordered.iter().enumerate() {
        if word.apply(chain)? != ordered[(i + 1) % n] {
            cyclic = false;
            break;
        }
    }
    let shape = SkewShape::new(alpha.clone(), gamma.complement(rect)?)?;
    Ok(PieriReport {
        alpha: alpha.clone(),
        beta,
        gamma: gamma.clone(),
        size: n,
        rows: shape.nonempty_rows(),
        cyclic,
        k,
        k_closed_form,
    })
}

/// Every `(α, b, γ)` in `rect` with `|α| + b + |γ| = area − 1`, `b ≥ 1` and
/// `γ^c / α` a horizontal strip.
pub fn pieri_instances(rect: Rectangle) -> Vec<(Partition, usize, Partition)> {
    let all = enumerate_partitions(rect);
    let mut out = Vec::new();
    for a in &all {
        for g in &all {
            let gc = g.complement(rect).unwrap();
            if !gc.contains(a) {
                continue;
            }
            let shape = SkewShape::new(a.clone(), gc).unwrap();
            if shape.size() < 2 || !shape.is_horizontal_strip() {
                continue;
            }
            let b = shape.size() - 1;
            if b <= rect.cols() {
                out.push((a.clone(), b, g.clone()));
            }
        }
    }
    out
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
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[]), &[p(&[1]), p(&[1])], &p(&[2])), 1);
        assert_eq!(lr_oracle(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coeff(&p(&[2, 1]), &[p(&[2, 1])], &p(&[3, 2, 1])), 2);
        assert_eq!(lr_oracle(&p(&[]), &p(&[3, 1]), &p(&[3, 1])), 1);
        assert_eq!(lr_oracle(&p(&[1]), &p(&[3]), &p(&[2, 2])), 0);
    }

    #[test]
    fn kjdt_example() {
        let t = IncreasingTableau::new(p(&[1]), vec![vec![1], vec![1, 2]]).unwrap();
        let s = kjdt_slide(&t, &[(0, 0)]).unwrap();
        assert_eq!(s.inner(), &Partition::empty());
        assert_eq!(s.rows(), &[vec![1, 2], vec![2]]);
        assert!(!s.is_superstandard(&p(&[2])));
        assert_eq!(k_rectify(&t), s);
    }

    #[test]
    fn kjdt_corner_validation() {
        let t = IncreasingTableau::new(p(&[2, 1]), vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(kjdt_slide(&t, &[(0, 0)]).is_err());
        assert!(kjdt_slide(&t, &[]).is_err());
        assert!(kjdt_slide(&t, &[(0, 1), (1, 0)]).is_ok());
        let straight = IncreasingTableau::new(p(&[]), vec![vec![1, 2]]).unwrap();
        assert_eq!(kjdt_slide(&straight, &[]).unwrap(), straight);
        assert_eq!(k_rectify(&straight), straight);
    }

    #[test]
    fn standard_inputs_follow_ordinary_jdt() {
        let shape = SkewShape::new(p(&[2, 1]), p(&[3, 3, 2])).unwrap();
        for t in enumerate_standard(&shape) {
            let inc = IncreasingTableau::from_standard(&t);
            let k = k_rectify(&inc);
            let classical = crate::growth::rectify(&t).0;
            assert_eq!(k, IncreasingTableau::from_standard(&classical));
        }
    }

    #[test]
    fn increasing_enumeration() {
        let sq = SkewShape::straight(p(&[2, 2]));
        let all = enumerate_increasing(&sq, 3);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(enumerate_increasing(&sq, 4).len(), 2);
        assert_eq!(enumerate_increasing(&sq, 5).len(), 0);
    }

    #[test]
    fn promotion_counts() {
        assert_eq!(k_promotion_count(rect(2, 2)), 1);
        assert_eq!(k_promotion_count(rect(1, 4)), 0);
        let pairs: u64 = bk_swap_pairs(rect(2, 3)).iter().sum();
        assert_eq!(k_promotion_count(rect(2, 3)), pairs);
    }

    #[test]
    fn first_order_preconditions() {
        let r = rect(2, 2);
        assert!(k_coeff(&p(&[1]), &p(&[1]), &p(&[1]), r).is_ok());
        assert!(k_coeff(&p(&[1]), &p(&[1]), &p(&[2]), r).is_err());
        assert!(k_coeff_pieri(&p(&[]), 1, &p(&[1]), r).is_err());
        assert_eq!(k_coeff_pieri(&p(&[]), 1, &p(&[2]), rect(1, 4)).unwrap(), 0);
    }

    #[test]
    fn full_rectangle_target_vanishes() {
        let r = rect(2, 3);
        for a in enumerate_partitions(r) {
            for b in enumerate_partitions(r) {
                if a.size() + b.size() + 1 == r.area() {
                    assert_eq!(k_coeff(&a, &b, &Partition::empty(), r).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn parity_small() {
        let r = rect(2, 2);
        let rep = parity_check(&p(&[1]), &p(&[1]), &p(&[1]), r).unwrap();
        assert_eq!(rep.c, 2);
        assert!(rep.ok);
        let json = serde_json::to_value(&rep).unwrap();
        let keys: Vec<_> = json.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 9);
    }

    #[test]
    fn pieri_small() {
        for (a, b, g) in pieri_instances(rect(2, 3)) {
            let rep = pieri_check(&a, b, &g, rect(2, 3)).unwrap();
            assert!(rep.ok(), "{rep:?}");
        }
    }
}
