use std::time::Instant;

use serde::Serialize;

use crate::closed_form::theorem_value;
use crate::error::{Error, Result};
use crate::graph::{Graph, random_graph};
use crate::indices::{f_index, invariants};
use crate::join::{OperationSpec, composite_edge_count, f_join_bounded};

/// Largest composite the construction arm will build.
pub const DEFAULT_EDGE_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchParams {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
    pub seed: u64,
    pub max_edges: usize,
}

impl BenchParams {
    /// Edge counts `round(density * n(n-1)/2)` for each operand.
    pub fn from_density(n1: usize, n2: usize, density: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::Domain(format!("density must be in [0, 1], got {density}")));
        }
        let edges = |n: usize| (density * (n as f64) * (n.saturating_sub(1) as f64) / 2.0).round() as usize;
        Ok(BenchParams {
            n1,
            n2,
            m1: edges(n1),
            m2: edges(n2),
            seed,
            max_edges: DEFAULT_EDGE_BUDGET,
        })
    }
}

/// Timings of the two evaluation routes, summed over all eight operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
    pub closed_ns: u128,
    /// `None` when the construction arm was skipped.
    pub construct_ns: Option<u128>,
    pub feasible: bool,
    pub equal: Option<bool>,
    #[serde(skip)]
    pub closed_values: Vec<u128>,
    #[serde(skip)]
    pub constructed_values: Option<Vec<u128>>,
}

impl BenchRecord {
    pub const CSV_HEADER: &'static str = "n1,n2,m1,m2,closed_ns,construct_ns,feasible,equal";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n1,
            self.n2,
            self.m1,
            self.m2,
            self.closed_ns,
            self.construct_ns.map(|t| t.to_string()).unwrap_or_default(),
            self.feasible,
            self.equal.map(|e| e.to_string()).unwrap_or_default(),
        )
    }
}

pub fn bench_compare(n1: usize, n2: usize, density: f64, seed: u64) -> Result<BenchRecord> {
    bench_compare_with(BenchParams::from_density(n1, n2, density, seed)?)
}

/// Times (a) invariants + closed formula and (b) composite construction +
/// F-index for all eight operations on seeded random operands. Arm (b) is
/// skipped when any composite would exceed `max_edges`.
pub fn bench_compare_with(params: BenchParams) -> Result<BenchRecord> {
    let g1 = random_graph(params.n1, params.m1, params.seed)?;
    let g2 = random_graph(params.n2, params.m2, params.seed ^ 0x9e37_79b9_7f4a_7c15)?;

    let start = Instant::now();
    let (inv1, inv2) = (invariants(&g1)?, invariants(&g2)?);
    let closed_values = OperationSpec::ALL
        .iter()
        .map(|&spec| theorem_value(spec, &inv1, &inv2))
        .collect::<Result<Vec<_>>>()?;
    let closed_ns = start.elapsed().as_nanos();

    let mut largest = 0u128;
    for spec in OperationSpec::ALL {
        largest = largest.max(composite_edge_count(spec, &inv1, &inv2)?);
    }
    let constructed = if largest <= params.max_edges as u128 {
        construct_all(&g1, &g2, params.max_edges)
    } else {
        None
    };

    let (construct_ns, constructed_values) = match constructed {
        Some((ns, values)) => (Some(ns), Some(values)),
        None => (None, None),
    };
    Ok(BenchRecord {
        n1: params.n1,
        n2: params.n2,
        m1: g1.m(),
        m2: g2.m(),
        closed_ns,
        construct_ns,
        feasible: constructed_values.is_some(),
        equal: constructed_values.as_ref().map(|v| *v == closed_values),
        closed_values,
        constructed_values,
    })
}

/// `None` if any composite cannot be built within the budget.
fn construct_all(g1: &Graph, g2: &Graph, max_edges: usize) -> Option<(u128, Vec<u128>)> {
    let start = Instant::now();
    let mut values = Vec::with_capacity(OperationSpec::ALL.len());
    for spec in OperationSpec::ALL {
        let composite = f_join_bounded(spec, g1, g2, max_edges).ok()?;
        values.push(f_index(composite.graph()).ok()?);
    }
    Some((start.elapsed().as_nanos(), values))
}
