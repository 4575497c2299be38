//! Structural identities of `teps_k` and `epsT_k`: the vertex-disjoint union
//! formula and subadditivity over edge-disjoint unions.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use super::{eps_token_k, teps_k};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::Caps;

const IDENTITY_TOL: f64 = 1e-7;

/// Checks, for both `teps` and `epsT`, that the value on `g1 + g2` (vertex
/// disjoint) equals `max { f_i(g1) + f_j(g2) : i + j = k }`.
pub fn verify_disjoint_union_formula(g1: &Graph, g2: &Graph, k: usize, caps: &Caps) -> Result<bool> {
    let union = graph::disjoint_union(g1, g2);
    if k > union.n() {
        return Err(Error::KOutOfRange { k, min: 0, max: union.n() });
    }
    type Excess = fn(&Graph, usize, &Caps) -> Result<f64>;
    for f in [teps_k as Excess, eps_token_k as Excess] {
        let whole = f(&union, k, caps)?;
        let mut best = f64::NEG_INFINITY;
        for i in k.saturating_sub(g2.n())..=k.min(g1.n()) {
            best = best.max(f(g1, i, caps)? + f(g2, k - i, caps)?);
        }
        if (whole - best).abs() > IDENTITY_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits the edges of `g` at random (seeded) into two spanning subgraphs and
/// checks `f(g) <= f(g1) + f(g2)` for `f = teps_k` and `f = epsT_k`. Also
/// splits `g` into stars along a minimum vertex cover and checks
/// `f(g) <= sum f(star)`, with `teps_k(star) <= sqrt(k)` and
/// `epsT_k(star) <= 1` for every part.
pub fn verify_subadditivity(g: &Graph, split_seed: u64, k: usize, caps: &Caps) -> Result<bool> {
    if k < 1 || k > g.n() {
        return Err(Error::KOutOfRange { k, min: 1, max: g.n() });
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(split_seed);
    let (e1, e2): (Vec<_>, Vec<_>) = g
        .edges()
        .iter()
        .partition(|_| graph::unit_f64(rng.next_u64()) < 0.5);
    let g1 = g.spanning_subgraph(e1)?;
    let g2 = g.spanning_subgraph(e2)?;
    let cover = graph::minimum_vertex_cover(g)?;
    let stars = graph::star_cover_decomposition(g, &cover)?;

    type Excess = fn(&Graph, usize, &Caps) -> Result<f64>;
    let sqrt_k = (k as f64).sqrt();
    for (f, star_cap) in [(teps_k as Excess, sqrt_k), (eps_token_k as Excess, 1.0)] {
        let whole = f(g, k, caps)?;
        if whole > f(&g1, k, caps)? + f(&g2, k, caps)? + IDENTITY_TOL {
            return Ok(false);
        }
        let mut star_total = 0.0;
        for s in &stars {
            let v = f(s, k, caps)?;
            if v > star_cap + IDENTITY_TOL {
                return Ok(false);
            }
            star_total += v;
        }
        if whole > star_total + IDENTITY_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}
