//! The plain join and the vertex/edge F-join composites.
//!
//! Composite vertex layout: `[0, n1)` original G1 vertices, `[n1, n1 + m1)`
//! inserted vertices of F(G1), `[n1 + m1, n1 + m1 + n2)` G2 vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::c;
use crate::derived::{self, DerivedKind, ProvenancedGraph, VertexTag};
use crate::error::{Error, Result};
use crate::graph::{Duplicates, Edge, Graph};
use crate::indices::GraphInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinMode {
    /// Cross edges from every original G1 vertex to every G2 vertex.
    Vertex,
    /// Cross edges from every inserted vertex I(G1) to every G2 vertex.
    Edge,
}

impl FromStr for JoinMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<JoinMode> {
        match s.to_ascii_lowercase().as_str() {
            "vertex" => Ok(JoinMode::Vertex),
            "edge" => Ok(JoinMode::Edge),
            _ => Err(Error::Domain(format!(
                "unknown join mode {s:?} (expected vertex or edge)"
            ))),
        }
    }
}

impl fmt::Display for JoinMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JoinMode::Vertex => "vertex",
            JoinMode::Edge => "edge",
        })
    }
}

/// One of the eight F-join operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OperationSpec {
    pub kind: DerivedKind,
    pub mode: JoinMode,
}

impl OperationSpec {
    pub const fn new(kind: DerivedKind, mode: JoinMode) -> Self {
        OperationSpec { kind, mode }
    }

    /// All eight specs, ordered S, R, Q, T with vertex before edge.
    pub const ALL: [OperationSpec; 8] = [
        OperationSpec::new(DerivedKind::S, JoinMode::Vertex),
        OperationSpec::new(DerivedKind::S, JoinMode::Edge),
        OperationSpec::new(DerivedKind::R, JoinMode::Vertex),
        OperationSpec::new(DerivedKind::R, JoinMode::Edge),
        OperationSpec::new(DerivedKind::Q, JoinMode::Vertex),
        OperationSpec::new(DerivedKind::Q, JoinMode::Edge),
        OperationSpec::new(DerivedKind::T, JoinMode::Vertex),
        OperationSpec::new(DerivedKind::T, JoinMode::Edge),
    ];
}

impl fmt::Display for OperationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.kind, self.mode)
    }
}

/// G1 ∨ G2: disjoint union plus every G1–G2 pair. G2 ids are offset by n1.
pub fn join(g1: &Graph, g2: &Graph) -> ProvenancedGraph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges = Vec::with_capacity(g1.m() + g2.m() + n1 * n2);
    edges.extend_from_slice(g1.edges());
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    for u in 0..n1 {
        edges.extend((0..n2).map(|v| (u, n1 + v)));
    }
    let graph = Graph::from_normalized(n1 + n2, edges, Duplicates::Reject)
        .expect("join edges are distinct");
    let mut tags = vec![VertexTag::OriginalG1; n1];
    tags.resize(n1 + n2, VertexTag::OriginalG2);
    ProvenancedGraph::new(graph, tags, vec![None; n1 + n2])
}

/// Builds the vertex or edge F-join of `g1` and `g2`.
pub fn f_join(spec: OperationSpec, g1: &Graph, g2: &Graph) -> ProvenancedGraph {
    build_f_join(spec, g1, g2, usize::MAX).expect("composite fits in memory")
}

/// Like [`f_join`], but refuses to build a composite with more than
/// `max_edges` edges or whose edge buffer cannot be allocated.
pub fn f_join_bounded(
    spec: OperationSpec,
    g1: &Graph,
    g2: &Graph,
    max_edges: usize,
) -> Result<ProvenancedGraph> {
    build_f_join(spec, g1, g2, max_edges)
}

fn build_f_join(
    spec: OperationSpec,
    g1: &Graph,
    g2: &Graph,
    max_edges: usize,
) -> Result<ProvenancedGraph> {
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let attached = match spec.mode {
        JoinMode::Vertex => 0..n1,
        JoinMode::Edge => n1..n1 + m1,
    };
    let offset = n1 + m1;

    // Upper bound before de-duplication: Q/T adjacency is at most Σ C(d, 2).
    let degrees = g1.degrees();
    let adjacency: usize = degrees
        .iter()
        .map(|&d| (d as usize) * (d as usize).saturating_sub(1) / 2)
        .sum();
    let estimate = [3 * m1, adjacency, g2.m(), attached.len().saturating_mul(n2)]
        .iter()
        .try_fold(0usize, |acc, &x| acc.checked_add(x))
        .ok_or_else(|| Error::overflow("composite edge count"))?;
    if estimate > max_edges {
        return Err(Error::Domain(format!(
            "{spec} composite needs up to {estimate} edges, budget is {max_edges}"
        )));
    }
    let mut edges: Vec<Edge> = Vec::new();
    edges
        .try_reserve_exact(estimate)
        .map_err(|e| Error::Domain(format!("cannot allocate {estimate} edges: {e}")))?;

    derived::push_derived_edges(spec.kind, g1, &mut edges);
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
    for u in attached {
        edges.extend((0..n2).map(|v| (u, offset + v)));
    }

    let n = offset + n2;
    let graph = Graph::from_normalized(n, edges, Duplicates::Merge)?;
    let mut tags = vec![VertexTag::OriginalG1; n1];
    tags.resize(offset, VertexTag::Inserted);
    tags.resize(n, VertexTag::OriginalG2);
    let mut origin_edges = vec![None; n1];
    origin_edges.extend(g1.edges().iter().copied().map(Some));
    origin_edges.resize(n, None);
    Ok(ProvenancedGraph::new(graph, tags, origin_edges))
}

/// Edge count of the composite from the factor invariants:
/// m(F(G1)) + m2 + n1·n2 (vertex mode) or + m1·n2 (edge mode).
pub fn composite_edge_count(
    spec: OperationSpec,
    inv1: &GraphInvariants,
    inv2: &GraphInvariants,
) -> Result<u128> {
    let derived = c(derived::derived_edge_count(spec.kind, inv1)?);
    let attached = match spec.mode {
        JoinMode::Vertex => inv1.n,
        JoinMode::Edge => inv1.m,
    };
    (derived + c(inv2.m as u128) + c(attached as u128) * c(inv2.n as u128))
        .get("composite edge count")
}

/// Degree of every composite vertex predicted from its tag alone.
///
/// Vertex mode: G1 originals gain n2, G2 vertices gain n1, inserted vertices
/// keep their F(G1) degree. Edge mode: G1 originals keep their F(G1) degree,
/// G2 vertices gain m1, inserted vertices gain n2.
pub fn contract_degrees(spec: OperationSpec, g1: &Graph, g2: &Graph) -> Vec<u64> {
    let (n1, m1, n2) = (g1.n() as u64, g1.m() as u64, g2.n() as u64);
    let mut degrees = derived::contract_degrees(spec.kind, g1);
    let (original_gain, inserted_gain, g2_gain) = match spec.mode {
        JoinMode::Vertex => (n2, 0, n1),
        JoinMode::Edge => (0, n2, m1),
    };
    for (v, d) in degrees.iter_mut().enumerate() {
        *d += if v < g1.n() { original_gain } else { inserted_gain };
    }
    degrees.extend(g2.degrees().iter().map(|&d| d + g2_gain));
    degrees
}
