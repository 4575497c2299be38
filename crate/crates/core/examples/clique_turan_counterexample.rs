// The path on four vertices is triangle-free, yet eps_2 = 1 + sqrt(2)
// exceeds ex(3; K_3) = 2, so the clique-Turan record reports a violation.

use laplacian_excess::excess::{eps_k, GraphContext};
use laplacian_excess::graph::{path, turan_number};
use laplacian_excess::ReportOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p4 = path(4)?;
    let eps = eps_k(&p4, 2)?;
    let ex = turan_number(3, 2)?;
    println!("eps_2(P_4) = {eps:.6}, ex(3; K_3) = {ex}");

    let report = GraphContext::new(&p4, &ReportOptions::default())?.report(2)?;
    let rec = report.record("clique_turan_r2").expect("P_4 is triangle-free");
    println!("{}: slack {:.6}, satisfied {}", rec.name, rec.slack, rec.satisfied);
    assert!(!rec.satisfied);
    assert!(report.record("brouwer").is_some_and(|r| r.satisfied));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
