// M_k-excess of stars against the closed form, including the extremal
// value sqrt(k) at n = k + 1.

use laplacian_excess::excess::{teps_k, teps_star_closed_form};
use laplacian_excess::graph::star;
use laplacian_excess::Caps;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = Caps::default();
    for n in 2..=8 {
        let s = star(n)?;
        let row: Vec<String> = (1..=n)
            .map(|k| {
                let direct = teps_k(&s, k, &caps)?;
                let closed = teps_star_closed_form(n, k)?;
                assert!((direct - closed).abs() < 1e-8);
                Ok(format!("{direct:7.4}"))
            })
            .collect::<laplacian_excess::Result<_>>()?;
        println!("star({n}): {}", row.join(" "));
    }
    for k in 1..=8 {
        let v = teps_k(&star(k + 1)?, k, &caps)?;
        println!("teps_{k}(star({})) = {v:.6}, sqrt(k) = {:.6}", k + 1, (k as f64).sqrt());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
