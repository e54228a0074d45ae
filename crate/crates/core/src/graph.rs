//! Simple undirected graphs: representation, generators, edge-list I/O.

use std::fmt;
use std::io::Read;
use std::ops::Deref;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A simple undirected graph on the dense vertex set `0..n`.
///
/// Edges are kept sorted by `(min, max)` endpoint and are unique, so two
/// graphs with the same edge set compare equal regardless of how they were
/// built. Connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Duplicates {
    Reject,
    Merge,
}

impl Graph {
    /// Builds a graph from an arbitrary list of edges, rejecting loops,
    /// out-of-range endpoints and duplicate edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            normalized.push(normalize(n, u, v)?);
        }
        Graph::from_normalized(n, normalized, Duplicates::Reject)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    /// `edges` must already be oriented `u < v` and in range.
    pub(crate) fn from_normalized(
        n: usize,
        mut edges: Vec<Edge>,
        duplicates: Duplicates,
    ) -> Result<Graph> {
        edges.sort_unstable();
        match duplicates {
            Duplicates::Merge => edges.dedup(),
            Duplicates::Reject => {
                if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate edge {} {}",
                        w[0].0, w[0].1
                    )));
                }
            }
        }
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let graph = Graph { n, edges };
        debug_assert_eq!(
            graph.degrees().iter().sum::<u64>(),
            2 * graph.m() as u64,
            "handshake"
        );
        Ok(graph)
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted `(min, max)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> DegreeSequence {
        let mut degrees = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        DegreeSequence(degrees)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("not a permutation".into()));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        Graph::from_normalized(self.n, edges, Duplicates::Reject)
    }

    /// Renders the graph in edge-list text format.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

fn normalize(n: usize, u: usize, v: usize) -> Result<Edge> {
    if u == v {
        return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
    }
    if u >= n || v >= n {
        return Err(Error::InvalidGraph(format!(
            "edge {u} {v} has an endpoint outside 0..{n}"
        )));
    }
    Ok(if u < v { (u, v) } else { (v, u) })
}

impl fmt::Display for Graph {
    /// `n m` header followed by one `u v` line per edge, LF-terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Vertex degrees indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl Deref for DegreeSequence {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

/// Degree sequence of `graph`.
pub fn degrees(graph: &Graph) -> DegreeSequence {
    graph.degrees()
}

/// Named graph families used by the generators and the verification corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
}

impl Family {
    /// Smallest admissible vertex count.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path | Family::Complete => 1,
            Family::Cycle => 3,
            Family::Star => 2,
        }
    }

    /// Conventional short name, e.g. `P4`, `C5`, `K3`, `S6`.
    pub fn label(self, n: usize) -> String {
        let prefix = match self {
            Family::Path => "P",
            Family::Cycle => "C",
            Family::Complete => "K",
            Family::Star => "S",
        };
        format!("{prefix}{n}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            other => Err(Error::Domain(format!("unknown graph family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
        })
    }
}

/// Generates the named graph on `n` vertices.
///
/// Paths are `0-1-...-(n-1)`, cycles close the path with `(0, n-1)`, stars
/// use vertex 0 as the centre.
pub fn generate(family: Family, n: usize) -> Result<Graph> {
    if n < family.min_n() {
        return Err(Error::Domain(match family {
            Family::Cycle => format!("a cycle needs at least 3 vertices, got {n}"),
            _ => format!("{family} needs at least {} vertices, got {n}", family.min_n()),
        }));
    }
    let edges: Vec<Edge> = match family {
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect(),
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
    };
    Graph::from_normalized(n, edges, Duplicates::Reject)
}

/// Parses the edge-list text format.
///
/// The first significant line is `n m`, followed by exactly `m` lines
/// `u v`. Tokens are whitespace separated, CRLF is accepted, blank lines are
/// skipped and `#` starts a comment that runs to the end of the line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, line)| {
            let line = line.strip_suffix('\r').unwrap_or(line);
            let content = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            (i + 1, content.trim())
        })
        .filter(|(_, content)| !content.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut last_line = header_line;
    for _ in 0..m {
        let (line_no, content) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line + 1,
                format!("expected {m} edge lines, found {}", edges.len()),
            )
        })?;
        last_line = line_no;
        let (u, v) = parse_pair(line_no, content)?;
        if u == v {
            return Err(Error::parse(line_no, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex id out of range: {u} {v} with n = {n}"),
            ));
        }
        edges.push((line_no, if u < v { (u, v) } else { (v, u) }));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(
            line_no,
            format!("unexpected content after {m} edge lines"),
        ));
    }

    // Report the later of two duplicate lines.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| (edges[i].1, edges[i].0));
    if let Some(w) = order.windows(2).find(|w| edges[w[0]].1 == edges[w[1]].1) {
        let (line_no, (u, v)) = edges[w[1]];
        return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
    }

    Graph::from_normalized(
        n,
        edges.into_iter().map(|(_, e)| e).collect(),
        Duplicates::Reject,
    )
}

/// Reads an edge list from a byte stream. Input must be UTF-8.
pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut bytes = Vec::new();
    reader
        .read_to_end(&mut bytes)
        .map_err(|e| Error::parse(1, format!("read failed: {e}")))?;
    match String::from_utf8(bytes) {
        Ok(text) => parse_edge_list(&text),
        Err(e) => {
            let valid = e.utf8_error().valid_up_to();
            let line = 1 + e.as_bytes()[..valid].iter().filter(|&&b| b == b'\n').count();
            Err(Error::parse(line, "input is not valid UTF-8"))
        }
    }
}

fn parse_pair(line_no: usize, content: &str) -> Result<(usize, usize)> {
    let mut tokens = content.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let token = tokens
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("missing {what}")))?;
        token
            .parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("invalid {what} {token:?}")))
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = tokens.next() {
        return Err(Error::parse(line_no, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

/// A uniformly random simple graph with exactly `m` edges, chosen without
/// replacement among the `n(n-1)/2` vertex pairs. Pure in `(n, m, seed)`.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| Error::overflow("random_graph pair count"))?;
    if m > pairs {
        return Err(Error::Domain(format!(
            "{m} edges requested but only {pairs} vertex pairs exist on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = rand::seq::index::sample(&mut rng, pairs, m)
        .into_iter()
        .map(unrank_pair)
        .collect();
    Graph::from_normalized(n, edges, Duplicates::Reject)
}

/// Maps `k` in `0..v(v-1)/2` to the pair `(u, v)` in colex order:
/// (0,1), (0,2), (1,2), (0,3), ...
fn unrank_pair(k: usize) -> Edge {
    // v is the largest integer with v(v-1)/2 <= k.
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as usize;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}
