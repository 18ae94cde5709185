//! Exact checks of the osculating-flag minor identities and of the
//! single-box Schubert condition polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::shapes::{enumerate_partitions, Partition, Rectangle};

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

fn falling(j: usize, i: usize) -> Scalar {
    let v: BigInt = ((j - i + 1)..=j).map(BigInt::from).product();
    BigRational::from_integer(v)
}

/// Row `i` holds the `i`-th derivative of `(1, z, z^2, ..., z^{n-1})`.
pub fn osculating_matrix(n: usize, z: &Scalar) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        Scalar::zero()
                    } else {
                        falling(j, i) * num_traits::pow(z.clone(), j - i)
                    }
                })
                .collect()
        })
        .collect()
}

/// Bareiss elimination; the matrix must be square.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut sign = Scalar::one();
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Scalar::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `Δ_J = ∏ (j_2 − j_1)` over pairs in `J`, and `e_J = Σ j − |J|(|J|+1)/2`.
/// `J` is a set of 1-based column indices.
pub fn delta_and_e(j_set: &[usize]) -> (Scalar, usize) {
    let mut delta = BigInt::one();
    for (a, &x) in j_set.iter().enumerate() {
        for &y in &j_set[a + 1..] {
            delta *= BigInt::from(y.abs_diff(x));
        }
    }
    let k = j_set.len();
    let e = j_set.iter().sum::<usize>() - k * (k + 1) / 2;
    (BigRational::from_integer(delta), e)
}

/// `{1..n} ∖ J`.
pub fn complement_set(j_set: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|x| !j_set.contains(x)).collect()
}

/// Nonempty subsets of `{1..n}` as sorted 1-based index lists.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .collect()
        })
        .collect()
}

/// `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Top-justified minor of the osculating matrix on columns `J`.
pub fn osculating_minor(j_set: &[usize], n: usize, z: &Scalar) -> Scalar {
    let m = osculating_matrix(n, z);
    let sub: Vec<Vec<Scalar>> = (0..j_set.len())
        .map(|i| j_set.iter().map(|&j| m[i][j - 1].clone()).collect())
        .collect();
    determinant(&sub)
}

pub fn verify_minor_identity(j_set: &[usize], n: usize, z: &Scalar) -> bool {
    let (delta, e) = delta_and_e(j_set);
    osculating_minor(j_set, n, z) == delta * num_traits::pow(z.clone(), e)
}

/// Dense polynomial in `z`, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(Vec<Scalar>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Scalar {
        self.0.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest `d` with `z^d` dividing the polynomial; `None` for zero.
    pub fn z_valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        self.0
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * z + c)
    }
}

/// Plücker coordinates of a `k`-plane in `n`-space, keyed by 1-based
/// `k`-subsets. Missing keys are zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PluckerVector {
    pub coords: BTreeMap<Vec<usize>, Scalar>,
}

impl PluckerVector {
    /// All maximal minors of a `k × n` matrix.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut coords = BTreeMap::new();
        for i_set in k_subsets(n, k) {
            let minor: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|row| i_set.iter().map(|&c| row[c - 1].clone()).collect())
                .collect();
            let d = determinant(&minor);
            if !d.is_zero() {
                coords.insert(i_set, d);
            }
        }
        PluckerVector { coords }
    }

    pub fn get(&self, i_set: &[usize]) -> Scalar {
        self.coords.get(i_set).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// `f(z) = Σ_I pl_I · Δ_{I^c} · (−z)^{e_{I^c}}`.
pub fn box_condition_poly(v: &PluckerVector, n: usize, k: usize) -> Polynomial {
    let mut coeffs = vec![Scalar::zero(); k * (n - k) + 1];
    for (i_set, pl) in &v.coords {
        debug_assert_eq!(i_set.len(), k);
        let (delta, e) = delta_and_e(&complement_set(i_set, n));
        let term = pl * delta;
        if e % 2 == 0 {
            coeffs[e] += term;
        } else {
            coeffs[e] -= term;
        }
    }
    Polynomial::new(coeffs)
}

/// `I(λ)_j = n − k + j − λ_j`, for `j = 1..k`.
pub fn schubert_index(lambda: &Partition, rect: Rectangle) -> Vec<usize> {
    let (k, n) = (rect.rows(), rect.rows() + rect.cols());
    (1..=k).map(|j| n - k + j - lambda.part(j - 1)).collect()
}

fn unit_rows(i_set: &[usize], n: usize) -> Vec<Vec<Scalar>> {
    i_set
        .iter()
        .map(|&c| {
            (1..=n)
                .map(|x| {
                    if x == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The coordinate `k`-plane spanned by the basis vectors indexed by `I(λ)`.
pub fn coordinate_point(lambda: &Partition, rect: Rectangle) -> PluckerVector {
    let n = rect.rows() + rect.cols();
    PluckerVector::from_rows(&unit_rows(&schubert_index(lambda, rect), n))
}

/// A random point of the same Schubert cell: row `j` is supported on the
/// columns up to `I(λ)_j` and has a nonzero entry there.
pub fn random_cell_point(lambda: &Partition, rect: Rectangle, rng: &mut impl Rng) -> PluckerVector {
    let n = rect.rows() + rect.cols();
    let rows: Vec<Vec<Scalar>> = schubert_index(lambda, rect)
        .into_iter()
        .map(|pivot| {
            (1..=n)
                .map(|c| match c.cmp(&pivot) {
                    std::cmp::Ordering::Less => scalar(rng.gen_range(-5..=5)),
                    std::cmp::Ordering::Equal => Scalar::one(),
                    std::cmp::Ordering::Greater => Scalar::zero(),
                })
                .collect()
        })
        .collect();
    PluckerVector::from_rows(&rows)
}

pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let num = rng.gen_range(-50i64..=50);
    let den = rng.gen_range(1i64..=20);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OsculatingReport {
    pub n: usize,
    pub checked: usize,
    pub failures: usize,
}

impl OsculatingReport {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

/// Checks the minor identity for every nonempty `J ⊆ {1..n}` at `trials`
/// random rational points. Trial `t` draws from a generator seeded with
/// `seed + t`, so the result does not depend on scheduling.
pub fn minor_identity_check(n: usize, seed: u64, trials: usize) -> OsculatingReport {
    let sets = subsets(n);
    let failures: usize = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let z = random_scalar(&mut rng);
            sets.iter()
                .filter(|j| !verify_minor_identity(j, n, &z))
                .count()
        })
        .sum();
    OsculatingReport {
        n,
        checked: sets.len() * trials,
        failures,
    }
}

/// Checks `e_J + e_{J^c} = |J|(n − |J|)` for every subset of `{1..n}`.
pub fn complement_identity_check(n: usize) -> OsculatingReport {
    let mut sets = subsets(n);
    sets.push(Vec::new());
    let failures = sets
        .iter()
        .filter(|j| {
            let (_, e) = delta_and_e(j);
            let (_, ec) = delta_and_e(&complement_set(j, n));
            e + ec != j.len() * (n - j.len())
        })
        .count();
    OsculatingReport {
        n,
        checked: sets.len(),
        failures,
    }
}

/// For every `λ` in `rect`, checks that `z^{|λ|}` divides `f(z)` at the
/// coordinate point and at `samples` random points of the cell. Also checks
/// the top coefficient against `pl_{[k]} Δ_{[n]∖[k]}` and that the coordinate
/// point gives the single monomial `Δ · (−z)^{|λ|}`.
pub fn divisibility_check(rect: Rectangle, seed: u64, samples: usize) -> OsculatingReport {
    let (k, n) = (rect.rows(), rect.rows() + rect.cols());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failures = 0;
    for lambda in enumerate_partitions(rect) {
        let mut points = vec![coordinate_point(&lambda, rect)];
        points.extend((0..samples).map(|_| random_cell_point(&lambda, rect, &mut rng)));
        for (idx, v) in points.iter().enumerate() {
            let f = box_condition_poly(v, n, k);
            checked += 1;
            let divisible = f.z_valuation().is_some_and(|d| d >= lambda.size());
            let leading = f.coeff(k * (n - k));
            let expected_leading = v.get(&(1..=k).collect::<Vec<_>>())
                * delta_and_e(&((k + 1)..=n).collect::<Vec<_>>()).0;
            let sign_ok = if (k * (n - k)) % 2 == 0 {
                leading == expected_leading
            } else {
                leading == -expected_leading
            };
            let coordinate_ok = idx > 0
                || (f.z_valuation() == Some(lambda.size()) && f.degree() == Some(lambda.size()));
            if !(divisible && sign_ok && coordinate_ok) {
                failures += 1;
            }
        }
    }
    OsculatingReport {
        n,
        checked,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn matrix_examples() {
        let m = osculating_matrix(3, &scalar(1));
        let ints: Vec<Vec<Scalar>> = [[1, 1, 1], [0, 1, 2], [0, 0, 2]]
            .iter()
            .map(|r| r.iter().map(|&x| scalar(x)).collect())
            .collect();
        assert_eq!(m, ints);
        assert_eq!(
            osculating_matrix(2, &scalar(5)),
            vec![vec![scalar(1), scalar(5)], vec![scalar(0), scalar(1)]]
        );
        assert_eq!(osculating_matrix(4, &q(-3, 7))[0][0], scalar(1));
        assert_eq!(osculating_matrix(5, &scalar(0))[4][4], scalar(24));
    }

    #[test]
    fn delta_e_examples() {
        assert_eq!(delta_and_e(&[1, 2]), (scalar(1), 0));
        assert_eq!(delta_and_e(&[1, 3]), (scalar(2), 1));
        assert_eq!(delta_and_e(&[2, 3]).1, 2);
        assert_eq!(delta_and_e(&complement_set(&[2, 3], 4)).1, 2);
    }

    #[test]
    fn minor_examples() {
        let z = q(3, 2);
        assert_eq!(osculating_minor(&[1, 3], 3, &z), scalar(2) * &z);
        assert!(verify_minor_identity(&[1, 3], 3, &z));
        let full = osculating_minor(&[1, 2, 3, 4], 4, &q(-7, 3));
        assert_eq!(full, scalar(12));
        assert!(verify_minor_identity(&[1, 2, 3, 4], 4, &q(-7, 3)));
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![scalar(0), scalar(2)], vec![scalar(3), scalar(4)]];
        assert_eq!(determinant(&m), scalar(-6));
        let sing = vec![vec![scalar(1), scalar(2)], vec![scalar(2), scalar(4)]];
        assert_eq!(determinant(&sing), scalar(0));
    }

    fn leibniz(m: &[Vec<Scalar>]) -> Scalar {
        fn rec(m: &[Vec<Scalar>], row: usize, used: &mut Vec<bool>, sign: bool) -> Scalar {
            if row == m.len() {
                return if sign { scalar(-1) } else { scalar(1) };
            }
            let mut total = Scalar::zero();
            let mut flips = false;
            for c in 0..m.len() {
                if used[c] {
                    continue;
                }
                used[c] = true;
                total += &m[row][c] * rec(m, row + 1, used, sign ^ flips);
                used[c] = false;
                flips = !flips;
            }
            total
        }
        rec(m, 0, &mut vec![false; m.len()], false)
    }

    #[test]
    fn determinant_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=5 {
            for _ in 0..20 {
                let m: Vec<Vec<Scalar>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                if rng.gen_bool(0.3) {
                                    Scalar::zero()
                                } else {
                                    random_scalar(&mut rng)
                                }
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(determinant(&m), leibniz(&m));
            }
            let osc = osculating_matrix(n, &q(2, 3));
            assert_eq!(determinant(&osc), leibniz(&osc));
        }
    }

    #[test]
    fn box_poly_two_term() {
        let z0 = q(5, 3);
        let mut v = PluckerVector::default();
        v.coords.insert(vec![1], scalar(1));
        v.coords.insert(vec![2], z0.clone());
        let f = box_condition_poly(&v, 2, 1);
        assert_eq!(f.coeffs(), &[z0.clone(), scalar(-1)]);
        assert!(f.eval(&z0).is_zero());
    }

    #[test]
    fn box_poly_degree_drops() {
        let rect = Rectangle::new(2, 2).unwrap();
        let lam = Partition::new(vec![1]).unwrap();
        let f = box_condition_poly(&coordinate_point(&lam, rect), 4, 2);
        assert!(f.degree().unwrap() < 4);
        let f0 = box_condition_poly(&coordinate_point(&Partition::empty(), rect), 4, 2);
        assert_eq!(f0.degree(), Some(0));
        let top = box_condition_poly(&coordinate_point(&rect.full(), rect), 4, 2);
        assert_eq!(top.degree(), Some(4));
        assert_eq!(top.z_valuation(), Some(4));
    }

    #[test]
    fn small_checks() {
        assert!(minor_identity_check(4, 7, 5).ok());
        assert!(complement_identity_check(5).ok());
        assert!(divisibility_check(Rectangle::new(2, 2).unwrap(), 3, 2).ok());
    }
}
