//! Brute-force independent-set counting on explicit graphs.
//!
//! Nothing here looks at levels or level vectors: the counts come straight
//! from the edge set, so they can arbitrate between the explicit graph
//! constructions and the transfer-matrix counts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{build_graph, EdgeInterpretation, ExplicitGraph, Family, FamilySpec};
use crate::json::serialize_big;
use crate::transfer::{count, BigCount};

/// Largest graph the subset enumeration handles (`2^26` subsets).
pub const ENUMERATION_LIMIT: usize = 26;
/// Largest graph the branching recursion handles.
pub const BRANCHING_LIMIT: usize = 40;

fn adjacency_masks(g: &ExplicitGraph) -> Vec<u64> {
    let mut adj = vec![0u64; g.vertex_count()];
    for (a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Counts independent sets by testing every vertex subset.
///
/// A nonempty subset is independent iff the subset without its lowest vertex
/// is independent and that vertex has no neighbor in it.
pub fn count_by_enumeration(g: &ExplicitGraph) -> Result<u64> {
    let v = g.vertex_count();
    if v > ENUMERATION_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "subset enumeration supports at most {ENUMERATION_LIMIT} vertices, got {v}"
        )));
    }
    let adj = adjacency_masks(g);
    let subsets = 1usize << v;
    let mut independent = vec![false; subsets];
    independent[0] = true;
    let mut total = 1u64;
    for m in 1..subsets {
        let low = m.trailing_zeros() as usize;
        let ok = independent[m & (m - 1)] && adj[low] & m as u64 == 0;
        independent[m] = ok;
        total += u64::from(ok);
    }
    Ok(total)
}

/// Counts independent sets with `I(G) = I(G - v) + I(G - N[v])`, branching on
/// a vertex of maximum degree.
pub fn count_by_branching(g: &ExplicitGraph) -> Result<u64> {
    let v = g.vertex_count();
    if v > BRANCHING_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "branching count supports at most {BRANCHING_LIMIT} vertices, got {v}"
        )));
    }
    let adj = adjacency_masks(g);
    let all = if v == 0 { 0 } else { u64::MAX >> (64 - v) };
    Ok(branch(&adj, all))
}

fn branch(adj: &[u64], alive: u64) -> u64 {
    let mut best = None;
    let mut best_degree = 0;
    let mut rest = alive;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[u] & alive).count_ones();
        if d > best_degree {
            best_degree = d;
            best = Some(u);
        }
    }
    match best {
        // no edges left: every subset is independent
        None => 1u64 << alive.count_ones(),
        Some(u) => {
            let without = alive & !(1 << u);
            branch(adj, without) + branch(adj, without & !adj[u])
        }
    }
}

/// Number of independent sets of `g`, the empty set included.
///
/// Graphs within [`ENUMERATION_LIMIT`] are counted both ways and the two
/// results must agree; larger graphs up to [`BRANCHING_LIMIT`] use the
/// branching recursion alone.
pub fn count_independent_sets(g: &ExplicitGraph) -> Result<BigCount> {
    let by_branching = count_by_branching(g)?;
    if g.vertex_count() <= ENUMERATION_LIMIT {
        let by_enumeration = count_by_enumeration(g)?;
        assert_eq!(
            by_enumeration, by_branching,
            "enumeration and branching disagree"
        );
    }
    Ok(BigCount::from(by_branching))
}

/// Brute-force count next to the transfer-matrix count for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub family: Family,
    pub ell: usize,
    pub n: usize,
    pub interpretation: EdgeInterpretation,
    #[serde(serialize_with = "serialize_big")]
    pub oracle_count: BigCount,
    #[serde(serialize_with = "serialize_big")]
    pub transfer_count: BigCount,
    pub agree: bool,
}

impl OracleReport {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec {
            family: self.family,
            ell: self.ell,
            n: self.n,
        }
    }
}

pub fn compare(spec: &FamilySpec, interp: EdgeInterpretation) -> Result<OracleReport> {
    let graph = build_graph(spec, interp)?;
    let oracle_count = count_independent_sets(&graph)?;
    let transfer_count = count(spec)?;
    Ok(OracleReport {
        family: spec.family,
        ell: spec.ell,
        n: spec.n,
        interpretation: interp,
        agree: oracle_count == transfer_count,
        oracle_count,
        transfer_count,
    })
}

/// Runs [`compare`] over every combination, sorted by family, `ell`, `n`.
pub fn sweep(
    families: &[Family],
    ells: &[usize],
    ns: &[usize],
    interp: EdgeInterpretation,
) -> Result<Vec<OracleReport>> {
    let mut specs = Vec::new();
    for &family in families {
        for &ell in ells {
            for &n in ns {
                specs.push(FamilySpec::new(family, ell, n)?);
            }
        }
    }
    specs.sort();
    specs.dedup();
    specs.iter().map(|s| compare(s, interp)).collect()
}
