// Every proved bound and open conjecture for one graph, with slacks.

use laplacian_excess::excess::{evaluate_bounds, FamilySelection};
use laplacian_excess::graph::turan;
use laplacian_excess::ReportOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let options = ReportOptions {
        families: FamilySelection::Both,
        ..ReportOptions::default()
    };
    let g = turan(6, 3)?;
    for k in 1..=g.n() {
        let report = evaluate_bounds(&g, k, &options)?;
        println!("k = {k}: eps_k = {:.4}", report.eps_k);
        for (kind, rec) in report.records() {
            println!("  {kind:?} {:<32} lhs {:>9.4}  bound {:>9.4}  slack {:>9.4}", rec.name, rec.lhs, rec.bound_value, rec.slack);
        }
    }
    let k3 = evaluate_bounds(&turan(3, 3)?, 2, &options)?;
    println!("{}", serde_json::to_string_pretty(k3.record("brouwer").expect("present"))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
