//! Closed-form F-index from factor invariants against the built composite,
//! for a pair of seeded random graphs.

use fjoin::{OperationSpec, f_index, f_join, invariants, random_graph, theorem_value};

fn main() -> fjoin::Result<()> {
    let g1 = random_graph(9, 14, 11)?;
    let g2 = random_graph(7, 10, 12)?;
    let (inv1, inv2) = (invariants(&g1)?, invariants(&g2)?);
    println!("G1: {}\nG2: {}\n", inv1.to_json(), inv2.to_json());
    for spec in OperationSpec::ALL {
        let closed = theorem_value(spec, &inv1, &inv2)?;
        let built = f_index(f_join(spec, &g1, &g2).graph())?;
        let mark = if closed == built { "ok" } else { "MISMATCH" };
        println!("{:<9} closed {closed:>8}  built {built:>8}  {mark}", spec.to_string());
    }
    Ok(())
}
