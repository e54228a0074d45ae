//! Subdivision-related derived graphs S(G), R(G), Q(G) and T(G).
//!
//! All four insert one new vertex `w_e` per edge `e` of the source graph.
//! Inserted vertices take ids `n..n+m` in the source's sorted edge order, so
//! the vertex layout is fixed by the edge set alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::c;
use crate::error::{Error, Result};
use crate::graph::{Duplicates, Edge, Graph};
use crate::indices::GraphInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DerivedKind {
    /// Subdivision graph: every edge replaced by a path of length two.
    S,
    /// S(G) with the original edges kept.
    R,
    /// Inserted vertices joined to their edge's endpoints and to the inserted
    /// vertices of adjacent edges; original edges dropped.
    Q,
    /// Total graph: Q(G) with the original edges kept.
    T,
}

impl DerivedKind {
    pub const ALL: [DerivedKind; 4] = [DerivedKind::S, DerivedKind::R, DerivedKind::Q, DerivedKind::T];

    pub fn keeps_original_edges(self) -> bool {
        matches!(self, DerivedKind::R | DerivedKind::T)
    }

    pub fn links_adjacent_inserted(self) -> bool {
        matches!(self, DerivedKind::Q | DerivedKind::T)
    }
}

impl FromStr for DerivedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<DerivedKind> {
        match s.to_ascii_uppercase().as_str() {
            "S" => Ok(DerivedKind::S),
            "R" => Ok(DerivedKind::R),
            "Q" => Ok(DerivedKind::Q),
            "T" => Ok(DerivedKind::T),
            _ => Err(Error::Domain(format!(
                "unknown derived graph kind {s:?} (expected S, R, Q or T)"
            ))),
        }
    }
}

impl fmt::Display for DerivedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Where a vertex of a derived or composite graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexTag {
    OriginalG1,
    OriginalG2,
    Inserted,
}

/// A graph whose vertices carry their provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenancedGraph {
    graph: Graph,
    tags: Vec<VertexTag>,
    origin_edges: Vec<Option<Edge>>,
}

impl ProvenancedGraph {
    pub(crate) fn new(graph: Graph, tags: Vec<VertexTag>, origin_edges: Vec<Option<Edge>>) -> Self {
        debug_assert_eq!(tags.len(), graph.n());
        debug_assert_eq!(origin_edges.len(), graph.n());
        ProvenancedGraph {
            graph,
            tags,
            origin_edges,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn tag(&self, v: usize) -> VertexTag {
        self.tags[v]
    }

    /// The source edge an inserted vertex subdivides.
    pub fn origin_edge(&self, v: usize) -> Option<Edge> {
        self.origin_edges[v]
    }

    pub fn count(&self, tag: VertexTag) -> usize {
        self.tags.iter().filter(|&&t| t == tag).count()
    }

    /// Provenance sidecar as pretty JSON.
    pub fn provenance_json(&self) -> String {
        #[derive(Serialize)]
        struct Record {
            id: usize,
            tag: VertexTag,
            #[serde(skip_serializing_if = "Option::is_none")]
            edge: Option<[usize; 2]>,
        }
        #[derive(Serialize)]
        struct Sidecar {
            n: usize,
            m: usize,
            vertices: Vec<Record>,
        }
        let sidecar = Sidecar {
            n: self.graph.n(),
            m: self.graph.m(),
            vertices: (0..self.graph.n())
                .map(|id| Record {
                    id,
                    tag: self.tags[id],
                    edge: self.origin_edges[id].map(|(u, v)| [u, v]),
                })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
        out.push('\n');
        out
    }
}

/// Appends the edges of `kind(source)` to `out`, with the source's vertices at
/// ids `0..n` and inserted vertex `w_i` (for the i-th sorted edge) at `n + i`.
pub(crate) fn push_derived_edges(kind: DerivedKind, source: &Graph, out: &mut Vec<Edge>) {
    let n = source.n();
    for (i, &(u, v)) in source.edges().iter().enumerate() {
        out.push((u, n + i));
        out.push((v, n + i));
    }
    if kind.keeps_original_edges() {
        out.extend_from_slice(source.edges());
    }
    if kind.links_adjacent_inserted() {
        // Two edges of a simple graph share at most one endpoint, so each
        // w_e w_f pair is produced once; duplicates are merged regardless.
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &(u, v)) in source.edges().iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        for bucket in &incident {
            for (a, &e) in bucket.iter().enumerate() {
                for &f in &bucket[a + 1..] {
                    out.push((n + e.min(f), n + e.max(f)));
                }
            }
        }
    }
}

/// Constructs `kind(graph)` with original vertices tagged `OriginalG1`.
pub fn derive(kind: DerivedKind, graph: &Graph) -> ProvenancedGraph {
    let (n, m) = (graph.n(), graph.m());
    let mut edges = Vec::new();
    push_derived_edges(kind, graph, &mut edges);
    let derived = Graph::from_normalized(n + m, edges, Duplicates::Merge)
        .expect("derived edges are in range and loop-free");

    let mut tags = vec![VertexTag::OriginalG1; n];
    tags.resize(n + m, VertexTag::Inserted);
    let mut origin_edges = vec![None; n];
    origin_edges.extend(graph.edges().iter().copied().map(Some));
    ProvenancedGraph::new(derived, tags, origin_edges)
}

/// Edge count of `kind(G)` from the invariants of `G` alone:
/// 2m, 3m, 2m + (M1 − 2m)/2 and 3m + (M1 − 2m)/2 for S, R, Q, T.
pub fn derived_edge_count(kind: DerivedKind, inv: &GraphInvariants) -> Result<u128> {
    let m = c(inv.m as u128);
    // (M1 - 2m)/2 = Σ C(d, 2), the number of adjacent edge pairs.
    let adjacent_pairs = (c(inv.m1) - c(2) * m).checked_div(2);
    let count = match kind {
        DerivedKind::S => c(2) * m,
        DerivedKind::R => c(3) * m,
        DerivedKind::Q => c(2) * m + adjacent_pairs,
        DerivedKind::T => c(3) * m + adjacent_pairs,
    };
    count.get("derived edge count")
}

/// Degree of every vertex of `kind(graph)` as predicted by the degree
/// contract, in the vertex layout used by [`derive`]:
/// originals keep `d(v)` (S, Q) or double to `2d(v)` (R, T); inserted
/// vertices have degree 2 (S, R) or `d(u) + d(v)` (Q, T).
pub fn contract_degrees(kind: DerivedKind, graph: &Graph) -> Vec<u64> {
    let degrees = graph.degrees();
    let originals = degrees.iter().map(|&d| {
        if kind.keeps_original_edges() {
            2 * d
        } else {
            d
        }
    });
    let inserted = graph.edges().iter().map(|&(u, v)| {
        if kind.links_adjacent_inserted() {
            degrees[u] + degrees[v]
        } else {
            2
        }
    });
    originals.chain(inserted).collect()
}
