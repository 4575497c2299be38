// Reading graph6 lines (as produced by external enumerators), writing
// them back, and reporting the Brouwer slack of each graph.

use laplacian_excess::excess::GraphContext;
use laplacian_excess::graph::{encode_graph6, parse_graph6_lines};
use laplacian_excess::ReportOptions;

const INPUT: &str = ">>graph6<<Dhc\nD~{\nDQo\nEhEG\n";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let options = ReportOptions::default();
    for g in parse_graph6_lines(INPUT)? {
        let ctx = GraphContext::new(&g, &options)?;
        let worst = (1..=g.n())
            .map(|k| Ok(ctx.report(k)?.record("brouwer").map_or(f64::INFINITY, |r| r.slack)))
            .collect::<laplacian_excess::Result<Vec<f64>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        println!("{:<6} n = {} m = {:>2}  min brouwer slack {worst:.4}", encode_graph6(&g), g.n(), g.edge_count());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
