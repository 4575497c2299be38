// Token graphs: vertices are k-subsets, adjacent when their symmetric
// difference is an edge. Stars have token-Laplacian radius exactly n.

use laplacian_excess::graph::{path, star};
use laplacian_excess::token::{token_graph, token_laplacian};
use laplacian_excess::Caps;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    let f2 = token_graph(&path(3)?, 2, &caps)?;
    print!("F_2(P_3):\n{}", f2.graph.to_edge_list());

    for n in 2..=8 {
        let radii: Vec<String> = (1..=n / 2)
            .map(|k| {
                let l = token_laplacian(&star(n)?, k, &caps)?;
                Ok(format!("{:.6}", l.eigenvalues()?.largest().unwrap_or(0.0)))
            })
            .collect::<laplacian_excess::Result<_>>()?;
        println!("star({n}): lambda_1(L(F_k)) for k = 1..{} -> {}", n / 2, radii.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
