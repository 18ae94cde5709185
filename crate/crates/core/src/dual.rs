//! Dual equivalence classes held by canonical representative, chains of
//! classes, the operators `sh_i`, `ev_i`, `esh_i`, and dual equivalence
//! cylindrical growth diagrams.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{rectify, shuffle_unchecked};
use crate::shapes::{horizontal_strips, partitions_between, Partition, Rectangle};
use crate::tableau::{rotate180, superstandard, StandardSkewTableau};

/// A dual equivalence class, stored as its unique member whose
/// rectification is the superstandard tableau.
#[derive(Clone)]
pub struct DualClass {
    rep: StandardSkewTableau,
    rect_shape: Partition,
}

impl PartialEq for DualClass {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Eq for DualClass {}

impl Hash for DualClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl PartialOrd for DualClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DualClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rep.cmp(&other.rep)
    }
}

impl Serialize for DualClass {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rep.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DualClass {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let t = StandardSkewTableau::deserialize(deserializer)?;
        Ok(canonical_class(&t))
    }
}

impl fmt::Debug for DualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]~{}", self.rep, self.rect_shape)
    }
}

impl DualClass {
    /// The unique class of straight shape `lambda`.
    pub fn straight(lambda: &Partition) -> Self {
        DualClass {
            rep: superstandard(lambda),
            rect_shape: lambda.clone(),
        }
    }

    /// The empty class on `shape / shape`.
    pub fn empty(shape: Partition) -> Self {
        DualClass {
            rep: StandardSkewTableau::empty(shape),
            rect_shape: Partition::empty(),
        }
    }

    pub fn representative(&self) -> &StandardSkewTableau {
        &self.rep
    }

    /// Rectification shape.
    pub fn rect_shape(&self) -> &Partition {
        &self.rect_shape
    }

    pub fn inner(&self) -> &Partition {
        self.rep.inner()
    }

    pub fn outer(&self) -> &Partition {
        self.rep.outer()
    }

    pub fn size(&self) -> usize {
        self.rep.size()
    }

    /// The class of the 180° rotation of any member, `D^R`.
    pub fn rotate(&self, rect: Rectangle) -> Result<DualClass> {
        Ok(canonical_class(&rotate180(&self.rep, rect)?))
    }
}

/// The dual equivalence class of `t`.
pub fn canonical_class(t: &StandardSkewTableau) -> DualClass {
    if t.is_straight() {
        return DualClass::straight(t.outer());
    }
    let (rt, rec) = rectify(t);
    let rect_shape = rt.outer().clone();
    let (_, canon) = shuffle_unchecked(superstandard(&rect_shape).chain(), rec.chain());
    DualClass {
        rep: canon,
        rect_shape,
    }
}

/// Shuffles two adjacent classes; returns `(D2', D1')` where `D2'` occupies
/// the inner position and rectifies to the shape of `d2`.
pub fn shuffle_classes(d1: &DualClass, d2: &DualClass) -> Result<(DualClass, DualClass)> {
    if d2.inner() != d1.outer() {
        return Err(Error::ShapeMismatch {
            expected: d1.outer().clone(),
            found: d2.inner().clone(),
        });
    }
    Ok(shuffle_pair(d1, d2))
}

fn shuffle_pair(d1: &DualClass, d2: &DualClass) -> (DualClass, DualClass) {
    let (t, s) = shuffle_unchecked(d1.rep.chain(), d2.rep.chain());
    (canonical_class(&t), canonical_class(&s))
}

/// All classes of shape `outer / inner` with rectification shape `lambda`,
/// sorted by representative.
pub fn segment_classes(inner: &Partition, outer: &Partition, lambda: &Partition) -> Vec<DualClass> {
    if !outer.contains(inner) || outer.size() != inner.size() + lambda.size() {
        return Vec::new();
    }
    if inner.is_empty() {
        return if outer == lambda {
            vec![DualClass::straight(lambda)]
        } else {
            Vec::new()
        };
    }
    // A representative has the descent set of the superstandard tableau, so
    // each block of λ_k consecutive entries fills a horizontal strip left to
    // right. Those candidates are then filtered by their rectification.
    let target = superstandard(lambda);
    let mut out = Vec::new();
    let mut chain = vec![inner.clone()];
    candidate_rec(outer, lambda.parts(), &mut chain, &mut |chain| {
        let t = StandardSkewTableau::from_chain_unchecked(chain.to_vec());
        if rectify(&t).0 == target {
            out.push(DualClass {
                rep: t,
                rect_shape: lambda.clone(),
            });
        }
    });
    out.sort();
    out
}

fn candidate_rec(
    outer: &Partition,
    blocks: &[usize],
    chain: &mut Vec<Partition>,
    emit: &mut dyn FnMut(&[Partition]),
) {
    let Some((&len, rest)) = blocks.split_first() else {
        if chain.last() == Some(outer) {
            emit(chain);
        }
        return;
    };
    let mu = chain.last().unwrap().clone();
    for nu in horizontal_strips(&mu, outer, len) {
        let start = chain.len();
        // Bottom rows of a horizontal strip lie to the left.
        for r in (0..nu.len()).rev() {
            for _ in mu.part(r)..nu.part(r) {
                let next = chain.last().unwrap().with_box(r);
                chain.push(next);
            }
        }
        candidate_rec(outer, rest, chain, emit);
        chain.truncate(start);
    }
}

/// A chain `(D_1, …, D_r)` of dual equivalence classes running from `inner`
/// to `outer`; its type is the list of rectification shapes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DEChain {
    inner: Partition,
    outer: Partition,
    classes: Vec<DualClass>,
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    inner: Partition,
    classes: Vec<DualClass>,
    outer: Partition,
    #[serde(rename = "type")]
    types: Vec<Partition>,
}

impl Serialize for DEChain {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ChainRepr {
            inner: self.inner.clone(),
            classes: self.classes.clone(),
            outer: self.outer.clone(),
            types: self.types(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DEChain {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let r = ChainRepr::deserialize(deserializer)?;
        let chain = DEChain::new(r.inner, r.outer, r.classes).map_err(serde::de::Error::custom)?;
        if chain.types() != r.types {
            return Err(serde::de::Error::custom("type does not match the classes"));
        }
        Ok(chain)
    }
}

impl fmt::Debug for DEChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ", self.inner)?;
        for c in &self.classes {
            write!(f, "{c:?} -> ")?;
        }
        write!(f, "{}", self.outer)
    }
}

impl fmt::Display for DEChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("[{}]", c.rep))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl DEChain {
    pub fn new(inner: Partition, outer: Partition, classes: Vec<DualClass>) -> Result<Self> {
        let mut cur = &inner;
        for c in &classes {
            if c.inner() != cur {
                return Err(Error::ShapeMismatch {
                    expected: cur.clone(),
                    found: c.inner().clone(),
                });
            }
            cur = c.outer();
        }
        if cur != &outer {
            return Err(Error::ShapeMismatch {
                expected: outer,
                found: cur.clone(),
            });
        }
        Ok(DEChain {
            inner,
            outer,
            classes,
        })
    }

    /// The chain of one-box classes read off a standard tableau.
    pub fn from_tableau(t: &StandardSkewTableau) -> Self {
        let classes = t
            .chain()
            .windows(2)
            .map(|w| canonical_class(&StandardSkewTableau::from_chain_unchecked(w.to_vec())))
            .collect();
        DEChain {
            inner: t.inner().clone(),
            outer: t.outer().clone(),
            classes,
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn classes(&self) -> &[DualClass] {
        &self.classes
    }

    /// Number of classes `r`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class `i`, 1-based.
    pub fn class(&self, i: usize) -> &DualClass {
        &self.classes[i - 1]
    }

    pub fn types(&self) -> Vec<Partition> {
        self.classes.iter().map(|c| c.rect_shape.clone()).collect()
    }

    /// `inner`, then the outer shape of each class.
    pub fn shapes(&self) -> Vec<Partition> {
        std::iter::once(self.inner.clone())
            .chain(self.classes.iter().map(|c| c.outer().clone()))
            .collect()
    }

    /// Concatenation of the representatives.
    pub fn tableau(&self) -> StandardSkewTableau {
        let mut chain = vec![self.inner.clone()];
        for c in &self.classes {
            chain.extend_from_slice(&c.rep.chain()[1..]);
        }
        StandardSkewTableau::from_chain_unchecked(chain)
    }

    fn check_index(&self, i: usize, max: usize) -> Result<()> {
        if i == 0 || i > max {
            Err(Error::IndexOutOfRange { index: i, max })
        } else {
            Ok(())
        }
    }

    /// The rectangle when the chain runs from `∅` to a full rectangle.
    pub fn rectangle(&self) -> Result<Rectangle> {
        if !self.inner.is_empty() {
            return Err(Error::NotFromEmpty(self.inner.clone()));
        }
        if self.outer.is_empty() || !self.outer.is_rectangular() {
            return Err(Error::NotToRectangle {
                expected: self.outer.clone(),
                found: self.outer.clone(),
            });
        }
        Rectangle::new(self.outer.len(), self.outer.part(0))
    }
}

/// All chains in `X_inner^outer(types)`, ordered by their intermediate
/// shapes and then by representatives. Empty when the sizes do not match.
pub fn enumerate_chains(inner: &Partition, outer: &Partition, types: &[Partition]) -> Vec<DEChain> {
    let mut enumerator = ChainEnumerator::new(outer, types);
    let total: usize = types.iter().map(Partition::size).sum();
    if !outer.contains(inner) || outer.size() != inner.size() + total {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut classes = Vec::with_capacity(types.len());
    enumerator.walk(inner, 0, &mut classes, &mut out);
    let mut keyed: Vec<(Vec<Partition>, DEChain)> = out
        .into_iter()
        .map(|classes| {
            let chain = DEChain {
                inner: inner.clone(),
                outer: outer.clone(),
                classes,
            };
            (chain.shapes(), chain)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, c)| c).collect()
}

/// `|X_inner^outer(types)|` without materializing the chains.
pub fn count_chains(inner: &Partition, outer: &Partition, types: &[Partition]) -> u64 {
    let total: usize = types.iter().map(Partition::size).sum();
    if !outer.contains(inner) || outer.size() != inner.size() + total {
        return 0;
    }
    ChainEnumerator::new(outer, types).count(inner, 0)
}

struct ChainEnumerator<'a> {
    outer: &'a Partition,
    types: &'a [Partition],
    segments: HashMap<(Partition, Partition, usize), Vec<DualClass>>,
    counts: HashMap<(Partition, usize), u64>,
}

impl<'a> ChainEnumerator<'a> {
    fn new(outer: &'a Partition, types: &'a [Partition]) -> Self {
        ChainEnumerator {
            outer,
            types,
            segments: HashMap::new(),
            counts: HashMap::new(),
        }
    }

    fn segment(&mut self, mu: &Partition, nu: &Partition, k: usize) -> &[DualClass] {
        self.segments
            .entry((mu.clone(), nu.clone(), k))
            .or_insert_with(|| segment_classes(mu, nu, &self.types[k]))
    }

    fn next_shapes(&self, mu: &Partition, k: usize) -> Vec<Partition> {
        if k + 1 == self.types.len() {
            vec![self.outer.clone()]
        } else {
            partitions_between(mu, self.outer, mu.size() + self.types[k].size())
        }
    }

    fn count(&mut self, mu: &Partition, k: usize) -> u64 {
        if k == self.types.len() {
            return u64::from(mu == self.outer);
        }
        if let Some(&c) = self.counts.get(&(mu.clone(), k)) {
            return c;
        }
        let mut total = 0;
        for nu in self.next_shapes(mu, k) {
            let here = self.segment(mu, &nu, k).len() as u64;
            if here > 0 {
                total += here * self.count(&nu, k + 1);
            }
        }
        self.counts.insert((mu.clone(), k), total);
        total
    }

    fn walk(
        &mut self,
        mu: &Partition,
        k: usize,
        classes: &mut Vec<DualClass>,
        out: &mut Vec<Vec<DualClass>>,
    ) {
        if k == self.types.len() {
            if mu == self.outer {
                out.push(classes.clone());
            }
            return;
        }
        for nu in self.next_shapes(mu, k) {
            if self.count(&nu, k + 1) == 0 {
                continue;
            }
            let segs = self.segment(mu, &nu, k).to_vec();
            for d in segs {
                classes.push(d);
                self.walk(&nu, k + 1, classes, out);
                classes.pop();
            }
        }
    }
}

/// `sh_i` (1-based): shuffles classes `i` and `i + 1`.
pub fn sh(chain: &DEChain, i: usize) -> Result<DEChain> {
    chain.check_index(i, chain.len().saturating_sub(1))?;
    let mut out = chain.clone();
    sh_in_place(&mut out.classes, i);
    Ok(out)
}

fn sh_in_place(classes: &mut [DualClass], i: usize) {
    let (a, b) = shuffle_pair(&classes[i - 1], &classes[i]);
    classes[i - 1] = a;
    classes[i] = b;
}

/// The generator sequence of `ev_i`, in application order.
fn ev_sequence(i: usize) -> impl Iterator<Item = usize> {
    (1..i).rev().flat_map(|m| 1..=m)
}

/// `ev_i = sh_1 (sh_2 sh_1) ⋯ (sh_{i−1} ⋯ sh_1)`.
pub fn ev(chain: &DEChain, i: usize) -> Result<DEChain> {
    chain.check_index(i, chain.len())?;
    let mut out = chain.clone();
    for j in ev_sequence(i) {
        sh_in_place(&mut out.classes, j);
    }
    Ok(out)
}

/// `ev_i^{-1}`: the generators of `ev_i` applied in reverse order.
pub fn ev_inverse(chain: &DEChain, i: usize) -> Result<DEChain> {
    chain.check_index(i, chain.len())?;
    let seq: Vec<usize> = ev_sequence(i).collect();
    let mut out = chain.clone();
    for &j in seq.iter().rev() {
        sh_in_place(&mut out.classes, j);
    }
    Ok(out)
}

/// `esh_i` by the local rule: with `τ` the inner shape of `D_i`, the
/// composite `sh_1 sh_2 sh_1 sh_2 sh_1` applied to `(D_τ, D_i, D_{i+1})`
/// yields the new classes `i` and `i + 1`.
pub fn esh(chain: &DEChain, i: usize) -> Result<DEChain> {
    chain.check_index(i, chain.len().saturating_sub(1))?;
    if !chain.inner.is_empty() {
        return Err(Error::NotFromEmpty(chain.inner.clone()));
    }
    let tau = chain.classes[i - 1].inner().clone();
    let mut local = vec![
        DualClass::straight(&tau),
        chain.classes[i - 1].clone(),
        chain.classes[i].clone(),
    ];
    for j in [1, 2, 1, 2, 1] {
        sh_in_place(&mut local, j);
    }
    debug_assert_eq!(local[0], DualClass::straight(&tau));
    let mut out = chain.clone();
    out.classes[i - 1] = local[1].clone();
    out.classes[i] = local[2].clone();
    Ok(out)
}

/// `esh_i` by its definition `ev_{i+1}^{-1} sh_1 ev_{i+1}`.
pub fn esh_by_conjugation(chain: &DEChain, i: usize) -> Result<DEChain> {
    chain.check_index(i, chain.len().saturating_sub(1))?;
    if !chain.inner.is_empty() {
        return Err(Error::NotFromEmpty(chain.inner.clone()));
    }
    let a = ev(chain, i + 1)?;
    let b = sh(&a, 1)?;
    ev_inverse(&b, i + 1)
}

/// `(D_r^R, …, D_1^R)` for a chain from `∅` to a rectangle.
pub fn reverse_rotate(chain: &DEChain) -> Result<DEChain> {
    let rect = chain.rectangle()?;
    let classes = chain
        .classes
        .iter()
        .rev()
        .map(|c| c.rotate(rect))
        .collect::<Result<Vec<_>>>()?;
    DEChain::new(chain.inner.clone(), chain.outer.clone(), classes)
}

/// A dual equivalence cylindrical growth diagram.
///
/// Row `t` holds the vertices `(i, −t)` for `t ≤ i ≤ t + r`. `H(i, j)` labels
/// the edge `(i, j) → (i + 1, j)` and `V(i, j)` labels `(i, j) → (i, j + 1)`.
/// The outermost edges, which carry the unique straight and anti-straight
/// classes, are filled in as well.
#[derive(Clone, Debug, Serialize)]
pub struct Decgd {
    rect: Rectangle,
    /// `lambda[t][k] = λ(t + k, −t)` for `t` in `0..r`.
    lambda: Vec<Vec<Partition>>,
    /// `h[t][k] = H(t + k, −t)` for `t` in `0..r`, `k` in `0..r`.
    h: Vec<Vec<DualClass>>,
    /// `v[t - 1][k] = V(t + k, −t)` for `t` in `1..=r`, `k` in `0..r`.
    v: Vec<Vec<DualClass>>,
}

impl Decgd {
    pub fn period(&self) -> usize {
        self.h.len()
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    /// `λ(i, j)` for `0 ≤ i + j ≤ r`.
    pub fn lambda(&self, i: i64, j: i64) -> Option<&Partition> {
        let r = self.period() as i64;
        let k = i + j;
        if !(0..=r).contains(&k) {
            return None;
        }
        let t = (-j).rem_euclid(r);
        self.lambda[t as usize].get(k as usize)
    }

    /// `H(i, j)` for `0 ≤ i + j < r`.
    pub fn h(&self, i: i64, j: i64) -> Option<&DualClass> {
        let r = self.period() as i64;
        let k = i + j;
        if !(0..r).contains(&k) {
            return None;
        }
        let t = (-j).rem_euclid(r);
        self.h[t as usize].get(k as usize)
    }

    /// `V(i, j)` for `0 ≤ i + j < r`.
    pub fn v(&self, i: i64, j: i64) -> Option<&DualClass> {
        let r = self.period() as i64;
        let k = i + j;
        if !(0..r).contains(&k) {
            return None;
        }
        let t = (-j - 1).rem_euclid(r);
        self.v[t as usize].get(k as usize)
    }

    /// The chain along row `−t`.
    pub fn row(&self, t: usize) -> DEChain {
        let t = t % self.period();
        DEChain {
            inner: Partition::empty(),
            outer: self.rect.full(),
            classes: self.h[t].clone(),
        }
    }

    /// The classes on the vertical path from `(i, −i)` up to `(i, 0)`.
    pub fn vertical_path(&self, i: usize) -> Vec<DualClass> {
        let i = i as i64;
        (0..i).map(|s| self.v(i, s - i).unwrap().clone()).collect()
    }

    /// Partitions on the first superdiagonal, `λ(t + 1, −t)` for `t` in `0..r`.
    pub fn superdiagonal(&self) -> Vec<Partition> {
        self.lambda.iter().map(|row| row[1].clone()).collect()
    }

    fn verify(
        &self,
        extra_lambda: &[Vec<Partition>],
        extra_h: &[Vec<DualClass>],
        extra_v: &[DualClass],
    ) -> Result<()> {
        let r = self.period() as i64;
        let fail = |what: String| Err(Error::SymmetryViolation(what));
        if extra_lambda[0] != self.lambda[0] || extra_h[0] != self.h[0] {
            return fail("row r of the decgd differs from row 0".into());
        }
        if extra_lambda[1] != self.lambda[1]
            || extra_h[1] != self.h[1]
            || extra_v != self.v[0].as_slice()
        {
            return fail("row r + 1 of the decgd differs from row 1".into());
        }
        for t in 0..r {
            for k in 0..=r {
                let (i, j) = (t + k, -t);
                let lam = self.lambda(i, j).unwrap();
                if *self.lambda(r - j, -i).unwrap() != lam.complement(self.rect)? {
                    return fail(format!(
                        "λ({}, {}) is not the complement of λ({i}, {j})",
                        r - j,
                        -i
                    ));
                }
            }
            for k in 0..r {
                let (i, j) = (t + k, -t);
                let h = self.h(i, j).unwrap();
                if *self.v(r - j, -i - 1).unwrap() != h.rotate(self.rect)? {
                    return fail(format!(
                        "V({}, {}) is not H({i}, {j}) rotated",
                        r - j,
                        -i - 1
                    ));
                }
                let (vi, vj) = (t + 1 + k, -t - 1);
                let v = self.v(vi, vj).unwrap();
                if *self.h(r - 1 - vj, -vi).unwrap() != v.rotate(self.rect)? {
                    return fail(format!(
                        "H({}, {}) is not V({vi}, {vj}) rotated",
                        r - 1 - vj,
                        -vi
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Completes the decgd whose top row is `chain` and checks its periodicity
/// and rotation symmetries.
pub fn build_decgd(chain: &DEChain) -> Result<Decgd> {
    let rect = chain.rectangle()?;
    let r = chain.len();
    if r == 0 {
        return Err(Error::NotToRectangle {
            expected: rect.full(),
            found: Partition::empty(),
        });
    }
    let mut lambda = vec![chain.shapes()];
    let mut h = vec![chain.classes.clone()];
    let mut v: Vec<Vec<DualClass>> = Vec::new();
    for _ in 1..=r + 1 {
        let prev_l = lambda.last().unwrap();
        let prev_h = h.last().unwrap();
        let mut row_l = Vec::with_capacity(r + 1);
        let mut row_h = Vec::with_capacity(r);
        let mut row_v = Vec::with_capacity(r);
        row_l.push(Partition::empty());
        row_v.push(DualClass::straight(&prev_l[1]));
        for k in 0..r - 1 {
            let (bottom, right) = shuffle_pair(&row_v[k], &prev_h[k + 1]);
            row_l.push(bottom.outer().clone());
            row_h.push(bottom);
            row_v.push(right);
        }
        row_l.push(rect.full());
        let last_inner = row_l[r - 1].clone();
        let anti = anti_straight(&last_inner, rect)?;
        row_h.push(anti);
        lambda.push(row_l);
        h.push(row_h);
        v.push(row_v);
    }
    let extra_v = v.pop().unwrap();
    let extra_lambda: Vec<Vec<Partition>> = lambda.drain(r..).collect();
    let extra_h: Vec<Vec<DualClass>> = h.drain(r..).collect();
    let diagram = Decgd { rect, lambda, h, v };
    diagram.verify(&extra_lambda, &extra_h, &extra_v)?;
    Ok(diagram)
}

/// The unique class of shape `rect / inner`.
fn anti_straight(inner: &Partition, rect: Rectangle) -> Result<DualClass> {
    let lam = inner.complement(rect)?;
    DualClass::straight(&lam).rotate(rect)
}
