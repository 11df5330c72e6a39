//! Problem instances, level vectors and explicit graph construction.
//!
//! Vertices are arranged in `n` levels of `ell` vertices each. Level 1 is the
//! outermost ring (the original cycle or complete graph) and level `n` the
//! innermost one. Vertex `i` of level `k + 1` splits the edge between vertices
//! `i` and `i + 1` of level `k`, so it is adjacent to both of them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Iterated line graphs of the cycle `C_ell`.
    G,
    /// `G` completed to a 4-regular graph.
    R,
    /// Iterated construction over the complete graph `K_ell`.
    K,
    /// `K` completed to an `(ell + 1)`-regular graph.
    P,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::G, Family::R, Family::K, Family::P];

    /// Largest supported cycle size for this family's level-vector collection.
    pub fn max_ell(self) -> usize {
        match self {
            Family::G | Family::K => 16,
            Family::R => 20,
            Family::P => 24,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::G => "g",
            Family::R => "r",
            Family::K => "k",
            Family::P => "p",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g" => Ok(Family::G),
            "r" => Ok(Family::R),
            "k" => Ok(Family::K),
            "p" => Ok(Family::P),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

/// A problem instance: family, cycle size and number of levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub ell: usize,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, ell: usize, n: usize) -> Result<Self> {
        check_ell(family, ell)?;
        Ok(FamilySpec { family, ell, n })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(ell={}, n={})", self.family, self.ell, self.n)
    }
}

pub(crate) fn check_ell(family: Family, ell: usize) -> Result<()> {
    if ell < 3 {
        return Err(Error::InvalidSpec(format!(
            "cycle size must be at least 3, got {ell}"
        )));
    }
    if ell > family.max_ell() {
        return Err(Error::ResourceLimit(format!(
            "family {family} supports ell <= {}, got {ell}",
            family.max_ell()
        )));
    }
    Ok(())
}

/// Membership of one level's `ell` vertices in an independent set.
///
/// Stored as a bit mask whose binary digits read `v_1 ... v_ell` with `v_1`
/// the most significant digit, so ascending masks give the canonical order.
/// Indices are cyclic: `v_{ell+1}` is `v_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelVector {
    mask: u32,
    len: u8,
}

impl LevelVector {
    pub fn from_mask(mask: u32, len: usize) -> Self {
        assert!((1..=31).contains(&len), "level vector length {len} out of range");
        assert!(mask >> len == 0, "mask {mask:#b} wider than {len} bits");
        LevelVector {
            mask,
            len: len as u8,
        }
    }

    pub fn zero(len: usize) -> Self {
        Self::from_mask(0, len)
    }

    /// Builds a vector from its entries `(v_1, ..., v_ell)`.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mask = bits.iter().fold(0u32, |acc, &b| {
            assert!(b <= 1, "level vector entries must be 0 or 1");
            (acc << 1) | u32::from(b)
        });
        Self::from_mask(mask, bits.len())
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        usize::from(self.len)
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry `v_i` for a 1-based cyclic index `i`.
    pub fn get(&self, i: usize) -> u8 {
        let len = self.len();
        let i = (i + len - 1) % len;
        ((self.mask >> (len - 1 - i)) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (1..=self.len()).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn count_ones(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Whether some `v_i = v_{i+1} = 1`, wrapping around.
    pub fn has_adjacent_ones(&self) -> bool {
        self.mask & self.rotated() != 0
    }

    fn full(&self) -> u32 {
        (1u32 << self.len) - 1
    }

    /// Moves `v_{i+1}` into the slot of `v_i`.
    fn rotated(&self) -> u32 {
        let len = self.len;
        ((self.mask << 1) | (self.mask >> (len - 1))) & self.full()
    }

    /// Positions of the next inner level that must be empty below `self`:
    /// `w_i` is blocked when `v_i` or `v_{i+1}` is set.
    pub(crate) fn blocked_below(&self) -> u32 {
        self.mask | self.rotated()
    }

    /// Positions of the next inner level that may be occupied below `self`.
    pub(crate) fn allowed_below(&self) -> u32 {
        !self.blocked_below() & self.full()
    }
}

impl fmt::Display for LevelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 1..=self.len() {
            if i > 1 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        f.write_str(")")
    }
}

/// The level vectors a family may place on a level, in canonical order.
pub fn level_vectors(family: Family, ell: usize) -> Result<Vec<LevelVector>> {
    check_ell(family, ell)?;
    let vectors = match family {
        Family::G | Family::K => (0..1u32 << ell)
            .map(|m| LevelVector::from_mask(m, ell))
            .collect(),
        Family::R => (0..1u32 << ell)
            .map(|m| LevelVector::from_mask(m, ell))
            .filter(|v| !v.has_adjacent_ones())
            .collect(),
        Family::P => std::iter::once(0)
            .chain((0..ell).map(|shift| 1u32 << shift))
            .map(|m| LevelVector::from_mask(m, ell))
            .collect(),
    };
    Ok(vectors)
}

/// Whether `inner` may sit directly inside `outer`.
pub fn compatible(outer: &LevelVector, inner: &LevelVector) -> Result<bool> {
    if outer.len() != inner.len() {
        return Err(Error::InvalidArgument(format!(
            "level vectors of different lengths {} and {}",
            outer.len(),
            inner.len()
        )));
    }
    Ok(inner.mask & outer.blocked_below() == 0)
}

/// Which level vectors are permitted on the innermost level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcceptanceVector {
    pub entries: Vec<bool>,
}

impl AcceptanceVector {
    pub fn as_bits(&self) -> Vec<u8> {
        self.entries.iter().map(|&e| u8::from(e)).collect()
    }
}

pub(crate) fn accepts(family: Family, v: &LevelVector) -> bool {
    match family {
        Family::G => !v.has_adjacent_ones(),
        Family::K => v.count_ones() <= 1,
        Family::R | Family::P => true,
    }
}

pub fn acceptance(family: Family, ell: usize) -> Result<AcceptanceVector> {
    let entries = level_vectors(family, ell)?
        .iter()
        .map(|v| accepts(family, v))
        .collect();
    Ok(AcceptanceVector { entries })
}

/// Which reading of the family definitions an explicit graph follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeInterpretation {
    /// The graphs exactly as the family constructions describe them.
    #[serde(rename = "literal")]
    Literal,
    /// The graphs whose independent sets the transfer matrices count.
    #[serde(rename = "algorithm")]
    AlgorithmConsistent,
}

impl fmt::Display for EdgeInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeInterpretation::Literal => "literal",
            EdgeInterpretation::AlgorithmConsistent => "algorithm",
        })
    }
}

impl FromStr for EdgeInterpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(EdgeInterpretation::Literal),
            "algorithm" | "algorithm-consistent" => Ok(EdgeInterpretation::AlgorithmConsistent),
            other => Err(Error::InvalidArgument(format!(
                "unknown interpretation `{other}`"
            ))),
        }
    }
}

/// A simple undirected graph on `ell * n` vertices.
///
/// Vertex `(k - 1) * ell + i` is position `i` (0-based) on level `k` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    ell: usize,
    levels: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl ExplicitGraph {
    pub fn new(ell: usize, levels: usize) -> Self {
        ExplicitGraph {
            ell,
            levels,
            edges: BTreeSet::new(),
        }
    }

    /// A graph with no level structure (a single level of `vertex_count`).
    pub fn with_vertices(vertex_count: usize) -> Self {
        if vertex_count == 0 {
            Self::new(1, 0)
        } else {
            Self::new(vertex_count, 1)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ell * self.levels
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn vertex(&self, level: usize, position: usize) -> usize {
        debug_assert!((1..=self.levels).contains(&level));
        (level - 1) * self.ell + position % self.ell
    }

    /// Adds an undirected edge; repeated edges collapse.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loop on vertex {a}");
        assert!(
            a < self.vertex_count() && b < self.vertex_count(),
            "edge ({a}, {b}) out of range"
        );
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// "level:position" label of a vertex.
    pub fn vertex_label(&self, v: usize) -> String {
        format!("{}:{}", v / self.ell + 1, v % self.ell)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", self.vertex_label(v)));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }

    fn add_cycle(&mut self, level: usize) {
        for i in 0..self.ell {
            self.add_edge(self.vertex(level, i), self.vertex(level, i + 1));
        }
    }

    /// Chords of `K_ell` that are not cycle edges.
    fn add_internal(&mut self, level: usize) {
        let ell = self.ell;
        for i in 0..ell {
            for j in i + 2..ell {
                if i == 0 && j == ell - 1 {
                    continue;
                }
                self.add_edge(self.vertex(level, i), self.vertex(level, j));
            }
        }
    }

    fn add_complete(&mut self, level: usize) {
        self.add_cycle(level);
        self.add_internal(level);
    }
}

/// Builds the explicit graph of a family instance.
pub fn build_graph(spec: &FamilySpec, interp: EdgeInterpretation) -> Result<ExplicitGraph> {
    check_ell(spec.family, spec.ell)?;
    let (ell, n) = (spec.ell, spec.n);
    let mut g = ExplicitGraph::new(ell, n);
    if n == 0 {
        return Ok(g);
    }

    for k in 1..n {
        for i in 0..ell {
            let inner = g.vertex(k + 1, i);
            g.add_edge(inner, g.vertex(k, i));
            g.add_edge(inner, g.vertex(k, i + 1));
        }
    }

    use EdgeInterpretation::*;
    match (spec.family, interp) {
        (Family::G, _) => g.add_cycle(n),
        (Family::R, Literal) => {
            g.add_cycle(n);
            g.add_cycle(1);
        }
        (Family::R, AlgorithmConsistent) => (1..=n).for_each(|k| g.add_cycle(k)),
        (Family::K, Literal) => {
            g.add_cycle(n);
            (1..=n).for_each(|k| g.add_internal(k));
        }
        (Family::K, AlgorithmConsistent) => g.add_complete(n),
        (Family::P, Literal) => {
            g.add_cycle(n);
            g.add_cycle(1);
            (1..=n).for_each(|k| g.add_internal(k));
        }
        (Family::P, AlgorithmConsistent) => (1..=n).for_each(|k| g.add_complete(k)),
    }
    Ok(g)
}

/// Histogram mapping each degree to the number of vertices having it.
pub fn degree_profile(g: &ExplicitGraph) -> BTreeMap<usize, usize> {
    let mut degree = vec![0usize; g.vertex_count()];
    for (a, b) in g.edges() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut profile = BTreeMap::new();
    for d in degree {
        *profile.entry(d).or_insert(0) += 1;
    }
    profile
}
