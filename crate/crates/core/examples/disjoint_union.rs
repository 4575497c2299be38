// Excesses of a disjoint union are the best split of k between the parts.

use laplacian_excess::excess::{teps_k, verify_disjoint_union_formula};
use laplacian_excess::graph::{cycle, disjoint_union, star};
use laplacian_excess::Caps;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    let (g1, g2) = (star(4)?, cycle(5)?);
    let g = disjoint_union(&g1, &g2);
    for k in 1..=g.n() {
        let whole = teps_k(&g, k, &caps)?;
        let split = (k.saturating_sub(g2.n())..=k.min(g1.n()))
            .map(|j| Ok(part(&g1, j, &caps)? + part(&g2, k - j, &caps)?))
            .collect::<laplacian_excess::Result<Vec<f64>>>()?
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(verify_disjoint_union_formula(&g1, &g2, k, &caps)?);
        println!("k = {k}: teps = {whole:.6}, best split = {split:.6}");
    }
    Ok(())
}

fn part(g: &laplacian_excess::Graph, j: usize, caps: &Caps) -> laplacian_excess::Result<f64> {
    if j == 0 {
        Ok(-(g.edge_count() as f64))
    } else {
        teps_k(g, j, caps)
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
