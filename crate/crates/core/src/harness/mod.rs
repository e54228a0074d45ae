//! Verification of the closed formulas against brute-force construction,
//! and the closed-form versus construction benchmark.

mod bench;
mod corpus;
mod verify;

pub use bench::{BenchParams, BenchRecord, DEFAULT_EDGE_BUDGET, bench_compare, bench_compare_with};
pub use corpus::{CorpusConfig, NamedGraph};
pub use verify::{Record, Summary, VerificationReport, verify_corpus, verify_named_pair, verify_pair};
