// Splitting the edge set of a graph never increases the total excess, and
// a vertex cover splits it into stars whose excesses are bounded.

use laplacian_excess::excess::{teps_k, verify_subadditivity};
use laplacian_excess::graph::{minimum_vertex_cover, star_cover_decomposition, erdos_renyi};
use laplacian_excess::Caps;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    let g = erdos_renyi(7, 0.5, 42)?;
    let cover = minimum_vertex_cover(&g)?;
    let stars = star_cover_decomposition(&g, &cover)?;
    println!("{} edges, cover {cover:?}, star sizes {:?}", g.edge_count(), stars.iter().map(|s| s.edge_count()).collect::<Vec<_>>());
    for k in 1..=g.n() {
        let whole = teps_k(&g, k, &caps)?;
        let parts = stars.iter().map(|s| teps_k(s, k, &caps)).sum::<laplacian_excess::Result<f64>>()?;
        assert!(verify_subadditivity(&g, k as u64, k, &caps)?);
        println!("k = {k}: teps(G) = {whole:8.4} <= sum over stars {parts:8.4}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
