//! Evaluate the printed path/cycle polynomials against the general formulas
//! and list the cases that disagree.

use fjoin::audit_examples;
use fjoin::closed_form::{AuditGrid, Verdict};

fn main() -> fjoin::Result<()> {
    let report = audit_examples(&AuditGrid::up_to(8))?;
    for case in &report.cases {
        let verdict = match case.verdict {
            Verdict::Verified => "verified".to_string(),
            Verdict::Untested => "untested".to_string(),
            Verdict::Mismatch => {
                let first = &case.mismatches[0];
                format!(
                    "{}/{} points differ, e.g. (n={}, m={}) printed {} vs {}",
                    case.mismatches.len(),
                    case.points_checked,
                    first.n,
                    first.m,
                    first.family_value,
                    first.oracle_value
                )
            }
        };
        println!("{:<7}{:<10}{verdict}", case.id.to_string(), format!("{}-{:?}", case.kind, case.mode));
    }
    Ok(())
}
