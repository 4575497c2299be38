// Exhaustive search over all labeled graphs on up to five vertices,
// printing the worst slack of every record and where it occurs.

use laplacian_excess::harness::{run_search, SearchConfig, Span};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = SearchConfig {
        n: Span::new(1, 5),
        ..SearchConfig::default()
    };
    let summary = run_search(&config, |_| Ok(()))?;
    println!(
        "{} graphs, {} evaluations, {} theorem violations",
        summary.graphs_processed, summary.evaluations, summary.theorem_violations
    );
    for b in &summary.bounds {
        println!(
            "{:<30} worst {:>10.6} at {:<6} k = {:<2} tight {:>5} violations {}",
            b.name,
            b.worst_slack.unwrap_or(f64::NAN),
            b.worst_graph.as_deref().unwrap_or("-"),
            b.worst_k.unwrap_or(0),
            b.tight,
            b.violations
        );
    }
    assert_eq!(summary.theorem_violations, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
