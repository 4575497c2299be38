// Perfect and near-perfect matchings: both the M_k-excess and the token
// excess equal 2k - t, independent of added isolated vertices.

use laplacian_excess::excess::{eps_token_k, teps_k};
use laplacian_excess::graph::matching_graph;
use laplacian_excess::Caps;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    for t in 1..=4 {
        for isolated in 0..=2 {
            let g = matching_graph(t, isolated);
            for k in 1..=t {
                let (a, b) = (teps_k(&g, k, &caps)?, eps_token_k(&g, k, &caps)?);
                let expected = 2.0 * k as f64 - t as f64;
                assert!((a - expected).abs() < 1e-8 && (b - expected).abs() < 1e-8);
            }
        }
        println!("t = {t}: teps_k = epsT_k = 2k - {t} for k = 1..{t}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
