//! Forgotten-index (F-index) computations for F-join graph composites.
//!
//! The crate builds the subdivision-related derived graphs S(G), R(G), Q(G)
//! and T(G), the vertex and edge F-joins of two graphs, and the degree-based
//! indices (M1, M2, F, HM, ReZM, M4) of any simple graph. For each of the
//! eight composites it also evaluates a closed formula for the F-index from
//! the factors' indices alone, and the [`harness`] checks those formulas
//! against the F-index of the explicitly built composite.
//!
//! ```
//! use fjoin::{Family, OperationSpec, DerivedKind, JoinMode};
//! use fjoin::{generate, invariants, f_join, f_index, theorem_value};
//!
//! let p3 = generate(Family::Path, 3).unwrap();
//! let p4 = generate(Family::Path, 4).unwrap();
//! let spec = OperationSpec::new(DerivedKind::S, JoinMode::Vertex);
//!
//! let built = f_index(f_join(spec, &p3, &p4).graph()).unwrap();
//! let closed = theorem_value(spec, &invariants(&p3).unwrap(), &invariants(&p4).unwrap()).unwrap();
//! assert_eq!((built, closed), (860, 860));
//! ```

pub mod arith;
pub mod cli;
pub mod closed_form;
pub mod derived;
pub mod error;
pub mod graph;
pub mod harness;
pub mod indices;
pub mod join;

pub use closed_form::{TheoremId, audit_examples, family_value, theorem_value};
pub use derived::{DerivedKind, ProvenancedGraph, VertexTag, derive};
pub use error::{Error, Result};
pub use graph::{
    DegreeSequence, Edge, Family, Graph, degrees, generate, parse_edge_list, random_graph,
    read_edge_list,
};
pub use harness::{CorpusConfig, VerificationReport, bench_compare, verify_corpus, verify_pair};
pub use indices::{
    GraphInvariants, f_index, first_zagreb, general_first_zagreb, hyper_zagreb, invariants, rezm,
    second_zagreb,
};
pub use join::{JoinMode, OperationSpec, f_join, join};
