use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::CorpusConfig;
use crate::closed_form::theorem_value;
use crate::derived::DerivedKind;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{f_index, invariants};
use crate::join::{JoinMode, OperationSpec, f_join};

/// One (pair, operation) comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub g1: String,
    pub g2: String,
    pub kind: DerivedKind,
    pub mode: JoinMode,
    pub closed_form: u128,
    pub oracle: u128,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub mismatches: usize,
}

/// Records in canonical order: by pair, then S, R, Q, T with vertex before edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    fn from_records(records: Vec<Record>) -> Self {
        let summary = Summary {
            total: records.len(),
            mismatches: records.iter().filter(|r| !r.matches).count(),
        };
        VerificationReport { records, summary }
    }

    pub fn is_clean(&self) -> bool {
        self.summary.mismatches == 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.matches)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

fn with_spec(spec: OperationSpec, err: Error) -> Error {
    match err {
        Error::Overflow { op } if !op.contains(&spec.to_string()) => Error::Overflow {
            op: format!("{op} ({spec})"),
        },
        other => other,
    }
}

/// Compares the closed formula with the F-index of the built composite for
/// all eight operations on one ordered pair.
pub fn verify_named_pair(name1: &str, g1: &Graph, name2: &str, g2: &Graph) -> Result<Vec<Record>> {
    let (inv1, inv2) = (invariants(g1)?, invariants(g2)?);
    OperationSpec::ALL
        .iter()
        .map(|&spec| {
            let closed_form = theorem_value(spec, &inv1, &inv2).map_err(|e| with_spec(spec, e))?;
            let oracle = f_index(f_join(spec, g1, g2).graph()).map_err(|e| with_spec(spec, e))?;
            Ok(Record {
                g1: name1.to_string(),
                g2: name2.to_string(),
                kind: spec.kind,
                mode: spec.mode,
                closed_form,
                oracle,
                matches: closed_form == oracle,
            })
        })
        .collect()
}

pub fn verify_pair(g1: &Graph, g2: &Graph) -> Result<VerificationReport> {
    Ok(VerificationReport::from_records(verify_named_pair("G1", g1, "G2", g2)?))
}

/// Runs every corpus pair. Pairs are processed in parallel; the report is
/// assembled in corpus order, so it depends only on the config.
pub fn verify_corpus(config: &CorpusConfig) -> Result<VerificationReport> {
    let pairs = config.pairs()?;
    let per_pair = pairs
        .par_iter()
        .map(|(a, b)| verify_named_pair(&a.name, &a.graph, &b.name, &b.graph))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::from_records(per_pair.into_iter().flatten().collect()))
}
