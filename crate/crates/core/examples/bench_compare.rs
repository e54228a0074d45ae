//! Time closed-form evaluation against construction. Arguments: n1 n2 density.

use fjoin::bench_compare;
use fjoin::harness::BenchRecord;

fn main() -> fjoin::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n1, n2, density) = match args[..] {
        [a, b, d] => (a as usize, b as usize, d),
        _ => (300, 300, 0.02),
    };
    let record = bench_compare(n1, n2, density, 1)?;
    println!("{}\n{}", BenchRecord::CSV_HEADER, record.csv_row());
    if !record.feasible {
        println!("construction skipped: composite exceeds the edge budget");
    }
    Ok(())
}
