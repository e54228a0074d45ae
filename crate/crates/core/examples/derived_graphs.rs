//! Build S, R, Q and T of a star and show the provenance of each vertex.

use fjoin::derived::derived_edge_count;
use fjoin::{DerivedKind, Family, derive, f_index, generate, invariants};

fn main() -> fjoin::Result<()> {
    let star = generate(Family::Star, 4)?;
    let inv = invariants(&star)?;
    for kind in DerivedKind::ALL {
        let d = derive(kind, &star);
        println!(
            "{kind}(S4): n={} m={} (predicted {}) F={} degrees={:?}",
            d.graph().n(),
            d.graph().m(),
            derived_edge_count(kind, &inv)?,
            f_index(d.graph())?,
            &*d.graph().degrees()
        );
    }
    println!("\nprovenance of T(S4):\n{}", derive(DerivedKind::T, &star).provenance_json());
    Ok(())
}
