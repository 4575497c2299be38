//! Excess quantities over `|E|`:
//!
//! * `eps_k(G)  = lambda_1 + .. + lambda_k of L(G) - |E|`
//! * `teps_k(G) = lambda_1(M_k(G)) - |E|`, with `teps_0(G) = -|E|`
//! * `epsT_k(G) = lambda_1(L(F_k(G))) - |E|`
//!
//! Each has a signless variant with `Q` in place of `L`.

mod checks;
mod report;

pub use checks::{verify_disjoint_union_formula, verify_subadditivity};
pub use report::{
    bound_catalog, evaluate_bounds, BoundKind, BoundRecord, ExcessReport, FamilySelection, GraphContext,
    ReportOptions, SignlessExcess, Skipped,
};

pub use crate::linalg::Family;

use crate::compound::m_k_family;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::top_k_sum;
use crate::token::token_matrix;
use crate::Caps;

pub fn eps_k(g: &Graph, k: usize) -> Result<f64> {
    eps_k_family(g, k, Family::Laplacian)
}

pub fn eps_k_family(g: &Graph, k: usize, family: Family) -> Result<f64> {
    Ok(top_k_sum(&family.matrix(g), k)? - g.edge_count() as f64)
}

pub fn teps_k(g: &Graph, k: usize, caps: &Caps) -> Result<f64> {
    teps_k_family(g, k, Family::Laplacian, caps)
}

pub fn teps_k_family(g: &Graph, k: usize, family: Family, caps: &Caps) -> Result<f64> {
    if k > g.n() {
        return Err(Error::KOutOfRange { k, min: 0, max: g.n() });
    }
    let edges = g.edge_count() as f64;
    if k == 0 {
        return Ok(-edges);
    }
    Ok(largest(&m_k_family(g, k, family, caps)?.matrix)? - edges)
}

pub fn eps_token_k(g: &Graph, k: usize, caps: &Caps) -> Result<f64> {
    eps_token_k_family(g, k, Family::Laplacian, caps)
}

pub fn eps_token_k_family(g: &Graph, k: usize, family: Family, caps: &Caps) -> Result<f64> {
    Ok(largest(&token_matrix(g, k, family, caps)?)? - g.edge_count() as f64)
}

fn largest(m: &crate::linalg::SymMatrix) -> Result<f64> {
    Ok(m.eigenvalues()?.largest().unwrap_or(0.0))
}

/// `teps_k` of the star on `n` vertices from the eigenvalues of the
/// `2 x 2` quotient matrix `[[n-k, 1-n], [-1, 1]]`.
pub fn teps_star_closed_form(n: usize, k: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("star needs n >= 2, got {n}")));
    }
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    if k == n {
        return Ok(0.0);
    }
    let a = (n - k + 1) as f64;
    let lambda_plus = (a + (a * a + 4.0 * (k - 1) as f64).sqrt()) / 2.0;
    Ok(lambda_plus + (k - 1) as f64 - (n - 1) as f64)
}
