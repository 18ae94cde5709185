//! Monodromy words in `sh_i` / `esh_i`, their orbits on chain sets, and the
//! covering model over a caterpillar curve.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dual::{enumerate_chains, esh, sh, DEChain, DualClass};
use crate::error::{Error, Result};
use crate::shapes::{Partition, Rectangle};

/// One generator of a monodromy word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Sh(usize),
    Esh(usize),
}

impl Generator {
    pub fn index(&self) -> usize {
        match *self {
            Generator::Sh(i) | Generator::Esh(i) => i,
        }
    }

    pub fn apply(&self, chain: &DEChain) -> Result<DEChain> {
        match *self {
            Generator::Sh(i) => sh(chain, i),
            Generator::Esh(i) => esh(chain, i),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sh(i) => write!(f, "sh_{i}"),
            Generator::Esh(i) => write!(f, "esh_{i}"),
        }
    }
}

/// Accepts `sh_2`, `sh2`, `Sh2`, `esh_3`, `Esh3`.
impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (ctor, rest): (fn(usize) -> Generator, &str) =
            if let Some(rest) = lower.strip_prefix("esh") {
                (Generator::Esh, rest)
            } else if let Some(rest) = lower.strip_prefix("sh") {
                (Generator::Sh, rest)
            } else {
                return Err(Error::Parse(format!("unknown generator {s:?}")));
            };
        let i: usize = rest
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
        if i == 0 {
            return Err(Error::Parse(format!("generator indices start at 1: {s:?}")));
        }
        Ok(ctor(i))
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A sequence of generators, stored in application order (the first entry
/// acts first).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonodromyWord {
    generators: Vec<Generator>,
}

impl MonodromyWord {
    pub fn new(generators: Vec<Generator>) -> Self {
        MonodromyWord { generators }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn apply(&self, chain: &DEChain) -> Result<DEChain> {
        let mut cur = chain.clone();
        for g in &self.generators {
            cur = g.apply(&cur)?;
        }
        Ok(cur)
    }

    /// The inverse word (all generators are involutions).
    pub fn inverse(&self) -> MonodromyWord {
        MonodromyWord::new(self.generators.iter().rev().copied().collect())
    }
}

impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Whitespace- or comma-separated generators in application order.
impl FromStr for MonodromyWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let generators = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromyWord::new(generators))
    }
}

/// Loop words for the standard circular ordering `1 2 ⋯ r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderingPreset {
    /// `sh_1, …, sh_{r−1}, esh_{r−1}, …, esh_1` on `X_∅^rect(□, λ_1, …, λ_r)`.
    BoxFirst,
    /// `sh_2, …, sh_{r−1}, esh_{r−1}, …, esh_2` on `X_∅^rect(λ_1, □, λ_2, …, λ_r)`.
    BoxSecond,
    /// The loop after exchanging the first two marked points:
    /// `esh_2, sh_3, …, sh_{r−1}, esh_{r−1}, …, esh_3, sh_2` on the same set
    /// as [`OrderingPreset::BoxSecond`].
    SwapFirstTwo,
    /// A user-supplied word acting on the [`OrderingPreset::BoxSecond`] set.
    User(MonodromyWord),
}

impl OrderingPreset {
    /// Position (1-based) of the `□` class in the chains the word acts on.
    pub fn box_position(&self) -> usize {
        match self {
            OrderingPreset::BoxFirst => 1,
            _ => 2,
        }
    }
}

impl FromStr for OrderingPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "box-first" => Ok(OrderingPreset::BoxFirst),
            "box-second" => Ok(OrderingPreset::BoxSecond),
            "swap-first-two" => Ok(OrderingPreset::SwapFirstTwo),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

/// The loop word for `preset` with `r` marked points.
pub fn omega_word(preset: &OrderingPreset, r: usize) -> MonodromyWord {
    use Generator::{Esh, Sh};
    let gens = match preset {
        OrderingPreset::BoxFirst => (1..r).map(Sh).chain((1..r).rev().map(Esh)).collect(),
        OrderingPreset::BoxSecond => (2..r).map(Sh).chain((2..r).rev().map(Esh)).collect(),
        OrderingPreset::SwapFirstTwo => {
            if r < 3 {
                Vec::new()
            } else {
                std::iter::once(Esh(2))
                    .chain((3..r).map(Sh))
                    .chain((3..r).rev().map(Esh))
                    .chain(std::iter::once(Sh(2)))
                    .collect()
            }
        }
        OrderingPreset::User(w) => w.generators.clone(),
    };
    MonodromyWord::new(gens)
}

/// A circular ordering of the marked points, e.g. `1324`: the points carry
/// `λ_1, λ_3, λ_2, λ_4` in circular order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircularOrdering(Vec<usize>);

impl CircularOrdering {
    pub fn identity(r: usize) -> Self {
        CircularOrdering((1..=r).collect())
    }

    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (1..=perm.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidOrdering(format!("{perm:?}")));
        }
        Ok(CircularOrdering(perm))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The types in the order the points meet them.
    pub fn arrange(&self, types: &[Partition]) -> Result<Vec<Partition>> {
        if types.len() != self.0.len() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} points but there are {} types",
                self.0.len(),
                types.len()
            )));
        }
        Ok(self.0.iter().map(|&k| types[k - 1].clone()).collect())
    }
}

/// Digits (`1324`) or comma-separated indices (`1,3,2,4`).
impl FromStr for CircularOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let perm = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidOrdering(s.into()))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidOrdering(s.into()))
                })
                .collect::<Result<Vec<_>>>()?
        };
        CircularOrdering::new(perm)
    }
}

impl fmt::Display for CircularOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&k| k < 10) {
            for k in &self.0 {
                write!(f, "{k}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Cycle decomposition of a monodromy word acting on an indexed chain set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitReport {
    #[serde(skip)]
    pub word: MonodromyWord,
    pub set_size: usize,
    /// Cycles, each starting at its smallest index, ordered by that index.
    pub orbits: Vec<Vec<usize>>,
    pub sign: u8,
    #[serde(skip)]
    pub permutation: Vec<usize>,
}

impl OrbitReport {
    pub fn from_permutation(word: MonodromyWord, permutation: Vec<usize>) -> Self {
        let orbits = cycles(&permutation);
        let sign = ((permutation.len() - orbits.len()) % 2) as u8;
        OrbitReport {
            word,
            set_size: permutation.len(),
            orbits,
            sign,
            permutation,
        }
    }

    /// Number of orbits, which is `η` for a loop word.
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Orbit sizes in ascending order.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Cycles of a permutation given as an image vector.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push(k);
            k = perm[k];
        }
        out.push(cycle);
    }
    out
}

/// Applies `word` to every chain and records the resulting permutation of
/// indices.
pub fn orbits(word: &MonodromyWord, chains: &[DEChain]) -> Result<OrbitReport> {
    let index: HashMap<&DEChain, usize> = chains.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let images = chains
        .par_iter()
        .map(|c| word.apply(c))
        .collect::<Result<Vec<_>>>()?;
    let mut perm = Vec::with_capacity(chains.len());
    let mut hit = vec![false; chains.len()];
    for (k, img) in images.iter().enumerate() {
        let Some(&j) = index.get(img) else {
            return Err(Error::NotAPermutation(format!(
                "chain {k} is sent outside the set"
            )));
        };
        if hit[j] {
            return Err(Error::NotAPermutation(format!("chain {j} is hit twice")));
        }
        hit[j] = true;
        perm.push(j);
    }
    Ok(OrbitReport::from_permutation(word.clone(), perm))
}

/// `types` with the one-box type inserted at 1-based `position`.
pub fn with_box(types: &[Partition], position: usize) -> Vec<Partition> {
    let mut out = types.to_vec();
    out.insert(position - 1, Partition::row(1));
    out
}

fn check_first_order(types: &[Partition], rect: Rectangle) -> Result<()> {
    for t in types {
        rect.check_fits(t)?;
    }
    let total: usize = types.iter().map(Partition::size).sum();
    if total + 1 != rect.area() {
        return Err(Error::SizeMismatch {
            shape: rect.area() - 1,
            types: total,
        });
    }
    Ok(())
}

/// The chain set a preset acts on.
pub fn preset_chains(
    types: &[Partition],
    rect: Rectangle,
    preset: &OrderingPreset,
) -> Result<Vec<DEChain>> {
    check_first_order(types, rect)?;
    let full = with_box(types, preset.box_position().min(types.len() + 1));
    Ok(enumerate_chains(&Partition::empty(), &rect.full(), &full))
}

/// Orbit data of the loop for `preset` on the standard circular ordering.
pub fn preset_orbits(
    types: &[Partition],
    rect: Rectangle,
    preset: &OrderingPreset,
) -> Result<OrbitReport> {
    let chains = preset_chains(types, rect, preset)?;
    let word = omega_word(preset, types.len());
    orbits(&word, &chains)
}

/// Orbit data for the circular ordering `ordering`, realized by arranging the
/// types along the ordering and using the standard loop.
pub fn ordering_orbits(
    types: &[Partition],
    rect: Rectangle,
    ordering: &CircularOrdering,
    preset: &OrderingPreset,
) -> Result<OrbitReport> {
    let arranged = ordering.arrange(types)?;
    preset_orbits(&arranged, rect, preset)
}

/// `η`: the number of orbits of the loop word.
pub fn component_count(
    types: &[Partition],
    rect: Rectangle,
    preset: &OrderingPreset,
) -> Result<usize> {
    Ok(preset_orbits(types, rect, preset)?.orbit_count())
}

/// Fibers and arc bijections of the covering of a caterpillar curve with
/// marked points `p_1, …, p_r`.
///
/// Fiber `k` (for `k` in `0..=r`) is `X_∅^rect(λ_1, …, λ_k, □, λ_{k+1}, …, λ_r)`.
/// The arc through `p_i` acts by `esh_i` and the opposite arc by `sh_i`;
/// both send fiber `i − 1` to fiber `i`.
#[derive(Clone, Debug)]
pub struct CoveringModel {
    types: Vec<Partition>,
    rect: Rectangle,
    fibers: Vec<Vec<DEChain>>,
    sh_maps: Vec<Vec<usize>>,
    esh_maps: Vec<Vec<usize>>,
}

impl CoveringModel {
    pub fn types(&self) -> &[Partition] {
        &self.types
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn fibers(&self) -> &[Vec<DEChain>] {
        &self.fibers
    }

    pub fn fiber_size(&self) -> usize {
        self.fibers.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.fiber_size() == 0
    }

    /// Index map of `sh_i` from fiber `i − 1` to fiber `i`.
    pub fn sh_map(&self, i: usize) -> &[usize] {
        &self.sh_maps[i - 1]
    }

    /// Index map of `esh_i` from fiber `i − 1` to fiber `i`.
    pub fn esh_map(&self, i: usize) -> &[usize] {
        &self.esh_maps[i - 1]
    }

    /// Composes the arc maps along `word`, starting in the fiber where the
    /// `□` sits at position `box_position`. Every generator must move the `□`.
    pub fn word_permutation(
        &self,
        word: &MonodromyWord,
        box_position: usize,
    ) -> Result<Vec<usize>> {
        let n = self.fiber_size();
        let mut fiber = box_position - 1;
        let mut perm: Vec<usize> = (0..n).collect();
        for g in word.generators() {
            let i = g.index();
            if i == 0 || i > self.types.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: self.types.len(),
                });
            }
            let map = match g {
                Generator::Sh(_) => &self.sh_maps[i - 1],
                Generator::Esh(_) => &self.esh_maps[i - 1],
            };
            if fiber + 1 == i {
                perm = perm.iter().map(|&k| map[k]).collect();
                fiber = i;
            } else if fiber == i {
                let inv = invert(map);
                perm = perm.iter().map(|&k| inv[k]).collect();
                fiber = i - 1;
            } else {
                return Err(Error::NotAPermutation(format!("{g} does not move the box")));
            }
        }
        if fiber != box_position - 1 {
            return Err(Error::NotAPermutation(
                "word does not return the box to its starting fiber".into(),
            ));
        }
        Ok(perm)
    }

    /// `ι`: prepends the one-box class to a chain of `X_□^rect(λ_•)`.
    pub fn iota(chain: &DEChain) -> Result<DEChain> {
        if chain.inner() != &Partition::row(1) {
            return Err(Error::ShapeMismatch {
                expected: Partition::row(1),
                found: chain.inner().clone(),
            });
        }
        let mut classes = vec![DualClass::straight(&Partition::row(1))];
        classes.extend_from_slice(chain.classes());
        DEChain::new(Partition::empty(), chain.outer().clone(), classes)
    }

    /// `ι^{-1}`: drops the leading one-box class.
    pub fn iota_inverse(chain: &DEChain) -> Result<DEChain> {
        if chain.is_empty()
            || chain.class(1).outer() != &Partition::row(1)
            || !chain.inner().is_empty()
        {
            return Err(Error::ShapeMismatch {
                expected: Partition::row(1),
                found: chain
                    .classes()
                    .first()
                    .map_or(Partition::empty(), |c| c.outer().clone()),
            });
        }
        DEChain::new(
            Partition::row(1),
            chain.outer().clone(),
            chain.classes()[1..].to_vec(),
        )
    }

    /// Graphviz rendering: one node per (fiber, chain), one edge per arc.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph covering {\n  rankdir=LR;\n");
        for (f, fiber) in self.fibers.iter().enumerate() {
            s.push_str(&format!(
                "  subgraph cluster_{f} {{\n    label=\"box at {}\";\n",
                f + 1
            ));
            for (k, chain) in fiber.iter().enumerate() {
                s.push_str(&format!(
                    "    f{f}_{k} [label=\"{k}: {}\"];\n",
                    escape(&chain.to_string())
                ));
            }
            s.push_str("  }\n");
        }
        for i in 1..=self.types.len() {
            for (k, &j) in self.sh_maps[i - 1].iter().enumerate() {
                s.push_str(&format!(
                    "  f{}_{k} -> f{}_{j} [label=\"sh_{i}\"];\n",
                    i - 1,
                    i
                ));
            }
            for (k, &j) in self.esh_maps[i - 1].iter().enumerate() {
                s.push_str(&format!(
                    "  f{}_{k} -> f{}_{j} [label=\"esh_{i}\", style=dashed];\n",
                    i - 1,
                    i
                ));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fibers: Vec<_> = self
            .fibers
            .iter()
            .enumerate()
            .map(|(f, chains)| serde_json::json!({"box_position": f + 1, "chains": chains}))
            .collect();
        let mut arcs = Vec::new();
        for i in 1..=self.types.len() {
            for (label, map) in [("sh", &self.sh_maps[i - 1]), ("esh", &self.esh_maps[i - 1])] {
                arcs.push(serde_json::json!({
                    "label": format!("{label}_{i}"),
                    "from_fiber": i - 1,
                    "to_fiber": i,
                    "map": map,
                }));
            }
        }
        serde_json::json!({
            "rect": self.rect,
            "types": self.types,
            "fibers": fibers,
            "arcs": arcs,
        })
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (k, &j) in map.iter().enumerate() {
        inv[j] = k;
    }
    inv
}

/// Builds every fiber and arc map and checks that each arc map is a
/// bijection.
pub fn build_covering(types: &[Partition], rect: Rectangle) -> Result<CoveringModel> {
    check_first_order(types, rect)?;
    let r = types.len();
    let fibers: Vec<Vec<DEChain>> = (0..=r)
        .into_par_iter()
        .map(|k| enumerate_chains(&Partition::empty(), &rect.full(), &with_box(types, k + 1)))
        .collect();
    let mut sh_maps = Vec::with_capacity(r);
    let mut esh_maps = Vec::with_capacity(r);
    for i in 1..=r {
        let source = &fibers[i - 1];
        let target: HashMap<&DEChain, usize> =
            fibers[i].iter().enumerate().map(|(k, c)| (c, k)).collect();
        for (gen, out) in [
            (Generator::Sh(i), &mut sh_maps),
            (Generator::Esh(i), &mut esh_maps),
        ] {
            let images = source
                .par_iter()
                .map(|c| gen.apply(c))
                .collect::<Result<Vec<_>>>()?;
            let mut map = Vec::with_capacity(images.len());
            let mut hit = vec![false; fibers[i].len()];
            for img in &images {
                let Some(&j) = target.get(img) else {
                    return Err(Error::NotAPermutation(format!("{gen} leaves fiber {i}")));
                };
                if hit[j] {
                    return Err(Error::NotAPermutation(format!("{gen} is not injective")));
                }
                hit[j] = true;
                map.push(j);
            }
            if map.len() != fibers[i].len() {
                return Err(Error::NotAPermutation(format!(
                    "{gen} is not onto fiber {i}"
                )));
            }
            out.push(map);
        }
    }
    Ok(CoveringModel {
        types: types.to_vec(),
        rect,
        fibers,
        sh_maps,
        esh_maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::promotion;
    use crate::shapes::SkewShape;
    use crate::tableau::enumerate_standard;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rect(k: usize, m: usize) -> Rectangle {
        Rectangle::new(k, m).unwrap()
    }

    #[test]
    fn preset_words() {
        use Generator::{Esh, Sh};
        assert_eq!(
            omega_word(&OrderingPreset::BoxSecond, 4).generators(),
            &[Sh(2), Sh(3), Esh(3), Esh(2)]
        );
        assert_eq!(
            omega_word(&OrderingPreset::BoxFirst, 3).generators(),
            &[Sh(1), Sh(2), Esh(2), Esh(1)]
        );
        assert_eq!(
            omega_word(&OrderingPreset::SwapFirstTwo, 4).generators(),
            &[Esh(2), Sh(3), Esh(3), Sh(2)]
        );
        let user: MonodromyWord = "sh_2 esh_2".parse().unwrap();
        assert_eq!(omega_word(&OrderingPreset::User(user.clone()), 3), user);
        assert!("box-third".parse::<OrderingPreset>().is_err());
    }

    #[test]
    fn word_parsing_and_json() {
        let w: MonodromyWord = "Sh2, esh_3 ESH1".parse().unwrap();
        assert_eq!(w.to_string(), "sh_2 esh_3 esh_1");
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"["sh_2","esh_3","esh_1"]"#
        );
        assert!("sh0".parse::<Generator>().is_err());
        assert!("xx1".parse::<Generator>().is_err());
    }

    #[test]
    fn orderings() {
        let o: CircularOrdering = "1324".parse().unwrap();
        let types = [p(&[1]), p(&[2]), p(&[3]), p(&[4])];
        assert_eq!(
            o.arrange(&types).unwrap(),
            vec![p(&[1]), p(&[3]), p(&[2]), p(&[4])]
        );
        assert!("1224".parse::<CircularOrdering>().is_err());
        assert!(o.arrange(&types[..3]).is_err());
        assert_eq!(o.to_string(), "1324");
    }

    #[test]
    fn cycle_decomposition() {
        let r = OrbitReport::from_permutation(MonodromyWord::default(), vec![2, 0, 1, 3]);
        assert_eq!(r.orbits, vec![vec![0, 2, 1], vec![3]]);
        assert_eq!(r.sign, 0);
        assert_eq!(r.orbit_sizes(), vec![1, 3]);
        let t = OrbitReport::from_permutation(MonodromyWord::default(), vec![1, 0]);
        assert_eq!(t.sign, 1);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"set_size":2,"orbits":[[0,1]],"sign":1}"#
        );
    }

    #[test]
    fn identity_word_gives_singletons() {
        let chains = preset_chains(
            &[p(&[1]), p(&[2, 1]), p(&[1])],
            rect(2, 3),
            &OrderingPreset::BoxSecond,
        )
        .unwrap();
        let rep = orbits(&MonodromyWord::default(), &chains).unwrap();
        assert_eq!(rep.orbit_count(), chains.len());
        assert!(rep.is_identity());
    }

    #[test]
    fn all_boxes_is_promotion() {
        let r2 = rect(2, 3);
        let types = vec![p(&[1]); 5];
        let model = build_covering(&types, r2).unwrap();
        assert_eq!(model.fiber_size(), 5);
        let tableaux = enumerate_standard(&SkewShape::straight(r2.full()));
        let index: HashMap<_, _> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let perm: Vec<usize> = tableaux.iter().map(|t| index[&promotion(t)]).collect();
        let promo_cycles = cycles(&perm).len();
        let eta = component_count(&types, r2, &OrderingPreset::BoxFirst).unwrap();
        assert_eq!(eta, promo_cycles);
        assert_eq!(
            component_count(&vec![p(&[1]); 3], rect(2, 2), &OrderingPreset::BoxFirst).unwrap(),
            1
        );
    }

    #[test]
    fn covering_rejects_wrong_size() {
        assert!(build_covering(&[p(&[1]), p(&[1])], rect(2, 2)).is_err());
        let model = build_covering(&vec![p(&[1]); 3], rect(2, 2)).unwrap();
        assert_eq!(model.fiber_size(), 2);
        assert_eq!(model.fibers().len(), 4);
    }

    #[test]
    fn arc_maps_agree_with_direct_application() {
        let types = [p(&[1]), p(&[1]), p(&[1, 1]), p(&[1])];
        let r = rect(2, 3);
        let model = build_covering(&types, r).unwrap();
        for preset in [
            OrderingPreset::BoxFirst,
            OrderingPreset::BoxSecond,
            OrderingPreset::SwapFirstTwo,
        ] {
            let word = omega_word(&preset, types.len());
            let direct = preset_orbits(&types, r, &preset).unwrap();
            let composed = model
                .word_permutation(&word, preset.box_position())
                .unwrap();
            assert_eq!(direct.permutation, composed);
        }
    }

    #[test]
    fn iota_round_trip() {
        let types = [p(&[2]), p(&[2, 1]), p(&[1])];
        let r = rect(2, 4);
        let boxed = enumerate_chains(&p(&[1]), &r.full(), &types);
        let fiber = enumerate_chains(&Partition::empty(), &r.full(), &with_box(&types, 1));
        assert_eq!(boxed.len(), fiber.len());
        for c in &boxed {
            let lifted = CoveringModel::iota(c).unwrap();
            assert!(fiber.contains(&lifted));
            assert_eq!(&CoveringModel::iota_inverse(&lifted).unwrap(), c);
        }
    }

    #[test]
    fn export_formats() {
        let model = build_covering(&vec![p(&[1]); 3], rect(2, 2)).unwrap();
        let dot = model.to_dot();
        assert!(dot.starts_with("digraph covering"));
        assert!(dot.contains("label=\"esh_2\""));
        let json = model.to_json();
        assert_eq!(json["fibers"].as_array().unwrap().len(), 4);
        assert_eq!(json["arcs"].as_array().unwrap().len(), 6);
    }
}
