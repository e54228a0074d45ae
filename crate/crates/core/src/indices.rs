//! Degree-based topological indices.
//!
//! Every index is an exact `u128`. Indices that have both a vertex-sum and an
//! edge-sum form (M1, F, and the general first Zagreb index) expose both; the
//! plain functions return the vertex sum and, in debug builds, assert that the
//! edge sum agrees.

use serde::{Deserialize, Serialize};

use crate::arith::{Checked, c};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest exponent accepted by [`general_first_zagreb`].
pub const MAX_EXPONENT: u32 = 8;

fn deg(d: u64) -> Checked<u128> {
    Checked::from_int(d)
}

fn edge_degrees(graph: &Graph) -> impl Iterator<Item = (u64, u64)> + '_ {
    let degrees = graph.degrees();
    graph
        .edges()
        .iter()
        .map(move |&(u, v)| (degrees[u], degrees[v]))
}

fn check_exponent(a: u32) -> Result<()> {
    if a == 0 || a > MAX_EXPONENT {
        return Err(Error::Domain(format!(
            "general Zagreb exponent must be in 1..={MAX_EXPONENT}, got {a}"
        )));
    }
    Ok(())
}

/// Σ_v deg(v)^a.
pub fn general_first_zagreb(graph: &Graph, a: u32) -> Result<u128> {
    check_exponent(a)?;
    let value = general_first_zagreb_vertex_sum(graph, a)?;
    debug_assert_eq!(Ok(value), general_first_zagreb_edge_sum(graph, a));
    Ok(value)
}

pub fn general_first_zagreb_vertex_sum(graph: &Graph, a: u32) -> Result<u128> {
    check_exponent(a)?;
    graph
        .degrees()
        .iter()
        .map(|&d| deg(d).pow(a))
        .sum::<Checked<u128>>()
        .get("general first Zagreb index")
}

/// Σ_{uv ∈ E} (deg(u)^(a-1) + deg(v)^(a-1)), equal to the vertex sum for every
/// graph because each vertex appears once per incident edge.
pub fn general_first_zagreb_edge_sum(graph: &Graph, a: u32) -> Result<u128> {
    check_exponent(a)?;
    edge_degrees(graph)
        .map(|(du, dv)| deg(du).pow(a - 1) + deg(dv).pow(a - 1))
        .sum::<Checked<u128>>()
        .get("general first Zagreb index (edge sum)")
}

/// First Zagreb index M1 = Σ_v deg(v)².
pub fn first_zagreb(graph: &Graph) -> Result<u128> {
    general_first_zagreb(graph, 2)
}

/// Second Zagreb index M2 = Σ_{uv ∈ E} deg(u)·deg(v).
pub fn second_zagreb(graph: &Graph) -> Result<u128> {
    edge_degrees(graph)
        .map(|(du, dv)| deg(du) * deg(dv))
        .sum::<Checked<u128>>()
        .get("second Zagreb index")
}

/// Forgotten index F = Σ_v deg(v)³.
pub fn f_index(graph: &Graph) -> Result<u128> {
    general_first_zagreb(graph, 3)
}

/// Hyper Zagreb index HM = Σ_{uv ∈ E} (deg(u) + deg(v))².
pub fn hyper_zagreb(graph: &Graph) -> Result<u128> {
    edge_degrees(graph)
        .map(|(du, dv)| (deg(du) + deg(dv)).pow(2))
        .sum::<Checked<u128>>()
        .get("hyper Zagreb index")
}

/// Redefined Zagreb index ReZM = Σ_{uv ∈ E} deg(u)·deg(v)·(deg(u) + deg(v)).
pub fn rezm(graph: &Graph) -> Result<u128> {
    edge_degrees(graph)
        .map(|(du, dv)| deg(du) * deg(dv) * (deg(du) + deg(dv)))
        .sum::<Checked<u128>>()
        .get("redefined Zagreb index")
}

/// Everything the closed F-index formulas read from an operand graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub n: u64,
    pub m: u64,
    #[serde(rename = "M1")]
    pub m1: u128,
    #[serde(rename = "M2")]
    pub m2: u128,
    #[serde(rename = "F")]
    pub f: u128,
    #[serde(rename = "HM")]
    pub hm: u128,
    #[serde(rename = "ReZM")]
    pub rezm: u128,
    #[serde(rename = "M4")]
    pub m4: u128,
}

impl GraphInvariants {
    /// Single-line JSON with keys in the order n, m, M1, M2, F, HM, ReZM, M4.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("invariants serialize")
    }
}

/// Computes all invariants with one pass over the degrees and one over the edges.
pub fn invariants(graph: &Graph) -> Result<GraphInvariants> {
    let degrees = graph.degrees();

    let (mut m1, mut f, mut m4) = (c(0), c(0), c(0));
    for &d in degrees.iter() {
        let d2 = deg(d) * deg(d);
        m1 = m1 + d2;
        f = f + d2 * deg(d);
        m4 = m4 + d2 * d2;
    }

    let (mut m2, mut hm, mut re) = (c(0), c(0), c(0));
    for &(u, v) in graph.edges() {
        let (du, dv) = (deg(degrees[u]), deg(degrees[v]));
        let product = du * dv;
        let sum = du + dv;
        m2 = m2 + product;
        hm = hm + sum * sum;
        re = re + product * sum;
    }

    let inv = GraphInvariants {
        n: graph.n() as u64,
        m: graph.m() as u64,
        m1: m1.get("first Zagreb index")?,
        m2: m2.get("second Zagreb index")?,
        f: f.get("F-index")?,
        hm: hm.get("hyper Zagreb index")?,
        rezm: re.get("redefined Zagreb index")?,
        m4: m4.get("M4 index")?,
    };
    debug_assert_eq!(Ok(inv.m1), general_first_zagreb_edge_sum(graph, 2));
    debug_assert_eq!(Ok(inv.f), general_first_zagreb_edge_sum(graph, 3));
    debug_assert_eq!(Ok(inv.m4), general_first_zagreb_edge_sum(graph, 4));
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, generate};

    fn g(family: Family, n: usize) -> Graph {
        generate(family, n).unwrap()
    }

    #[test]
    fn first_zagreb_examples() {
        assert_eq!(first_zagreb(&g(Family::Path, 3)).unwrap(), 6);
        assert_eq!(first_zagreb(&g(Family::Cycle, 3)).unwrap(), 12);
        assert_eq!(first_zagreb(&g(Family::Path, 1)).unwrap(), 0);
    }

    #[test]
    fn second_zagreb_examples() {
        assert_eq!(second_zagreb(&g(Family::Path, 4)).unwrap(), 8);
        assert_eq!(second_zagreb(&g(Family::Cycle, 3)).unwrap(), 12);
        assert_eq!(second_zagreb(&g(Family::Path, 1)).unwrap(), 0);
    }

    #[test]
    fn f_index_examples() {
        assert_eq!(f_index(&g(Family::Path, 4)).unwrap(), 18);
        assert_eq!(f_index(&g(Family::Cycle, 3)).unwrap(), 24);
        assert_eq!(f_index(&g(Family::Path, 1)).unwrap(), 0);
        for n in 2..20 {
            assert_eq!(f_index(&g(Family::Path, n)).unwrap(), 8 * n as u128 - 14);
        }
        for n in 3..20 {
            assert_eq!(f_index(&g(Family::Cycle, n)).unwrap(), 8 * n as u128);
        }
    }

    #[test]
    fn hyper_zagreb_examples() {
        assert_eq!(hyper_zagreb(&g(Family::Path, 3)).unwrap(), 18);
        assert_eq!(hyper_zagreb(&g(Family::Cycle, 3)).unwrap(), 48);
        assert_eq!(hyper_zagreb(&g(Family::Path, 1)).unwrap(), 0);
    }

    #[test]
    fn rezm_examples() {
        assert_eq!(rezm(&g(Family::Path, 3)).unwrap(), 12);
        assert_eq!(rezm(&g(Family::Cycle, 3)).unwrap(), 48);
        assert_eq!(rezm(&g(Family::Star, 4)).unwrap(), 36);
    }

    #[test]
    fn general_first_zagreb_examples() {
        assert_eq!(general_first_zagreb(&g(Family::Path, 3), 4).unwrap(), 18);
        assert_eq!(general_first_zagreb(&g(Family::Cycle, 3), 4).unwrap(), 48);
        assert_eq!(general_first_zagreb(&g(Family::Star, 5), 1).unwrap(), 8);
    }

    #[test]
    fn exponent_bounds() {
        let p = g(Family::Path, 3);
        assert!(matches!(general_first_zagreb(&p, 0), Err(Error::Domain(_))));
        assert!(matches!(general_first_zagreb(&p, 9), Err(Error::Domain(_))));
        assert!(general_first_zagreb(&p, 8).is_ok());
    }

    #[test]
    fn invariants_examples() {
        let p3 = invariants(&g(Family::Path, 3)).unwrap();
        assert_eq!(
            p3,
            GraphInvariants { n: 3, m: 2, m1: 6, m2: 4, f: 10, hm: 18, rezm: 12, m4: 18 }
        );
        let p4 = invariants(&g(Family::Path, 4)).unwrap();
        assert_eq!(
            p4,
            GraphInvariants { n: 4, m: 3, m1: 10, m2: 8, f: 18, hm: 34, rezm: 28, m4: 34 }
        );
        let k1 = invariants(&g(Family::Path, 1)).unwrap();
        assert_eq!(
            k1,
            GraphInvariants { n: 1, m: 0, m1: 0, m2: 0, f: 0, hm: 0, rezm: 0, m4: 0 }
        );
    }

    #[test]
    fn json_field_names_and_order() {
        let p3 = invariants(&g(Family::Path, 3)).unwrap();
        assert_eq!(
            p3.to_json(),
            r#"{"n":3,"m":2,"M1":6,"M2":4,"F":10,"HM":18,"ReZM":12,"M4":18}"#
        );
        let back: GraphInvariants = serde_json::from_str(&p3.to_json()).unwrap();
        assert_eq!(back, p3);
    }

    #[test]
    fn invariants_match_individual_indices() {
        for family in [Family::Path, Family::Cycle, Family::Complete, Family::Star] {
            for n in family.min_n()..9 {
                let graph = g(family, n);
                let inv = invariants(&graph).unwrap();
                assert_eq!(inv.m1, first_zagreb(&graph).unwrap());
                assert_eq!(inv.m2, second_zagreb(&graph).unwrap());
                assert_eq!(inv.f, f_index(&graph).unwrap());
                assert_eq!(inv.hm, hyper_zagreb(&graph).unwrap());
                assert_eq!(inv.rezm, rezm(&graph).unwrap());
                assert_eq!(inv.m4, general_first_zagreb(&graph, 4).unwrap());
            }
        }
    }
}
