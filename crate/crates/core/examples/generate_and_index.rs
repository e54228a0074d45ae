//! Generate each graph family and print its degree-based indices.

use fjoin::{Family, generate, invariants};

fn main() -> fjoin::Result<()> {
    println!("{:<4}{:>4}{:>4}{:>6}{:>6}{:>6}{:>7}{:>7}{:>7}", "G", "n", "m", "M1", "M2", "F", "HM", "ReZM", "M4");
    for family in [Family::Path, Family::Cycle, Family::Complete, Family::Star] {
        let n = family.min_n().max(5);
        let inv = invariants(&generate(family, n)?)?;
        println!(
            "{:<4}{:>4}{:>4}{:>6}{:>6}{:>6}{:>7}{:>7}{:>7}",
            family.label(n), inv.n, inv.m, inv.m1, inv.m2, inv.f, inv.hm, inv.rezm, inv.m4
        );
    }
    Ok(())
}
