//! The eight F-join composites of P3 and P4, with sizes and F-indices.

use fjoin::{Family, OperationSpec, f_index, f_join, generate};

fn main() -> fjoin::Result<()> {
    let p3 = generate(Family::Path, 3)?;
    let p4 = generate(Family::Path, 4)?;
    for spec in OperationSpec::ALL {
        let composite = f_join(spec, &p3, &p4);
        let g = composite.graph();
        println!("{:<9} n={} m={:>2} F={}", spec.to_string(), g.n(), g.m(), f_index(g)?);
    }
    let s_vertex = f_join(OperationSpec::ALL[0], &p3, &p4);
    print!("\nS-vertex join as an edge list:\n{}", s_vertex.graph().to_edge_list());
    Ok(())
}
