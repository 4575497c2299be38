// The spectrum of the k-th additive compound of a symmetric matrix is the
// multiset of sums of k distinct eigenvalues of the matrix.

use laplacian_excess::compound::additive_compound;
use laplacian_excess::SymMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = SymMatrix::from_rows(&[
        vec![2.0, -1.0, 0.5, 0.0],
        vec![-1.0, 3.0, 0.0, 1.0],
        vec![0.5, 0.0, 1.0, -2.0],
        vec![0.0, 1.0, -2.0, 0.5],
    ])?;
    let base = m.eigenvalues()?;
    println!("eigenvalues: {:?}", base.values());
    for k in 1..=m.dim() {
        let compound = additive_compound(&m, k)?;
        let spectrum = compound.matrix.eigenvalues()?;
        let top = base.top_k_sum(k)?;
        let largest = spectrum.largest().unwrap_or(0.0);
        println!("k = {k}: dim {:>2}, largest {largest:.6}, top-{k} sum {top:.6}", compound.dim());
        assert!((largest - top).abs() < 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
