//! Run the formula check over a small corpus and summarise the report.
//! Pass a seed as the first argument to vary the random graphs.

use fjoin::{CorpusConfig, verify_corpus};

fn main() -> fjoin::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let config = CorpusConfig {
        random_trials: 20,
        seed,
        ..CorpusConfig::default()
    };
    let report = verify_corpus(&config)?;
    println!("seed {seed}: {} checks, {} mismatches", report.summary.total, report.summary.mismatches);
    for record in report.records.iter().rev().take(4) {
        println!("  {} x {} {}-{:?}: {}", record.g1, record.g2, record.kind, record.mode, record.oracle);
    }
    Ok(())
}
