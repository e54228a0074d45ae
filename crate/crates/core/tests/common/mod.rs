//! Test-only oracles built directly from the graph definitions, sharing no
//! construction code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fjoin::harness::NamedGraph;
use fjoin::{CorpusConfig, DerivedKind, Graph, JoinMode, OperationSpec};

/// Symmetric 0/1 adjacency matrix.
pub struct Matrix {
    pub n: usize,
    cells: Vec<bool>,
}

impl Matrix {
    pub fn new(n: usize) -> Self {
        Matrix { n, cells: vec![false; n * n] }
    }

    pub fn connect(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "oracle produced a loop");
        self.cells[u * self.n + v] = true;
        self.cells[v * self.n + u] = true;
    }

    pub fn degree(&self, v: usize) -> u128 {
        self.cells[v * self.n..(v + 1) * self.n].iter().filter(|&&b| b).count() as u128
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.cells[u * self.n + v] {
                    out.insert((u, v));
                }
            }
        }
        out
    }

    /// Σ deg³ by counting matrix rows.
    pub fn f_index(&self) -> u128 {
        (0..self.n).map(|v| self.degree(v).pow(3)).sum()
    }

    pub fn power_sum(&self, a: u32) -> u128 {
        (0..self.n).map(|v| self.degree(v).pow(a)).sum()
    }
}

fn shares_endpoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

/// kind(G) straight from the definitions: one new vertex per edge, joined to
/// its endpoints; R and T keep the old edges; Q and T join new vertices of
/// edges that share an endpoint (found by scanning all edge pairs).
pub fn derived_matrix(kind: DerivedKind, g: &Graph, extra: usize) -> Matrix {
    let (n, edges) = (g.n(), g.edges());
    let mut matrix = Matrix::new(n + edges.len() + extra);
    for (i, &(u, v)) in edges.iter().enumerate() {
        matrix.connect(u, n + i);
        matrix.connect(v, n + i);
        if matches!(kind, DerivedKind::R | DerivedKind::T) {
            matrix.connect(u, v);
        }
    }
    if matches!(kind, DerivedKind::Q | DerivedKind::T) {
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if shares_endpoint(edges[i], edges[j]) {
                    matrix.connect(n + i, n + j);
                }
            }
        }
    }
    matrix
}

/// The F-join in the library's vertex layout, built from the definitions.
pub fn composite_matrix(spec: OperationSpec, g1: &Graph, g2: &Graph) -> Matrix {
    let (n1, m1) = (g1.n(), g1.m());
    let offset = n1 + m1;
    let mut matrix = derived_matrix(spec.kind, g1, g2.n());
    for &(u, v) in g2.edges() {
        matrix.connect(offset + u, offset + v);
    }
    let attached = match spec.mode {
        JoinMode::Vertex => 0..n1,
        JoinMode::Edge => n1..n1 + m1,
    };
    for a in attached {
        for b in 0..g2.n() {
            matrix.connect(a, offset + b);
        }
    }
    matrix
}

pub fn graph_matrix(g: &Graph) -> Matrix {
    let mut matrix = Matrix::new(g.n());
    for &(u, v) in g.edges() {
        matrix.connect(u, v);
    }
    matrix
}

/// Σ_v deg(v)^a computed from the adjacency matrix.
pub fn brute_power_sum(g: &Graph, a: u32) -> u128 {
    graph_matrix(g).power_sum(a)
}

/// Edge-sum indices straight from matrix degrees.
pub fn brute_edge_sum(g: &Graph, term: impl Fn(u128, u128) -> u128) -> u128 {
    let m = graph_matrix(g);
    g.edges().iter().map(|&(u, v)| term(m.degree(u), m.degree(v))).sum()
}

/// Every graph of the default corpus: the families plus both sides of each
/// random trial.
pub fn corpus_graphs() -> Vec<NamedGraph> {
    let config = CorpusConfig::default();
    let mut graphs = config.family_graphs().unwrap();
    for (a, b) in config.random_pairs().unwrap() {
        graphs.push(a);
        graphs.push(b);
    }
    graphs
}

pub fn family_graphs() -> Vec<NamedGraph> {
    CorpusConfig::default().family_graphs().unwrap()
}
