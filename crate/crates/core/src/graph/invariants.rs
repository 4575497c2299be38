//! Exact combinatorial invariants by exhaustive or branch-and-bound search.
//! The bitmask searches require `n <= 64`.

use super::Graph;
use crate::error::{Error, Result};

/// Matching number `nu(G)`.
pub fn matching_number(g: &Graph) -> Result<usize> {
    let adj = g.adjacency_masks()?;
    let alive = full_mask(g.n());
    let mut best = 0;
    extend_matching(&adj, alive, 0, &mut best);
    Ok(best)
}

fn extend_matching(adj: &[u64], alive: u64, current: usize, best: &mut usize) {
    if current + (alive.count_ones() as usize) / 2 <= *best {
        return;
    }
    // Drop vertices with no remaining neighbours; they cannot be matched.
    let mut alive = alive;
    while alive != 0 {
        let v = alive.trailing_zeros() as usize;
        if adj[v] & alive != 0 {
            break;
        }
        alive &= !(1 << v);
    }
    if alive == 0 {
        *best = (*best).max(current);
        return;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        extend_matching(adj, rest & !(1 << u), current + 1, best);
    }
    extend_matching(adj, rest, current, best);
}

/// A minimum vertex cover, sorted.
pub fn minimum_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.adjacency_masks()?;
    let mut best = full_mask(g.n());
    search_cover(&adj, full_mask(g.n()), 0, &mut best);
    Ok(mask_to_vec(best))
}

/// Covering number `tau(G)`.
pub fn covering_number(g: &Graph) -> Result<usize> {
    minimum_vertex_cover(g).map(|c| c.len())
}

fn search_cover(adj: &[u64], alive: u64, chosen: u64, best: &mut u64) {
    if chosen.count_ones() >= best.count_ones() {
        return;
    }
    let mut pivot = None;
    let mut max_deg = 0;
    let mut edges_twice = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & alive).count_ones();
        edges_twice += d;
        if d > max_deg {
            max_deg = d;
            pivot = Some(v);
        }
    }
    let Some(v) = pivot else {
        *best = chosen;
        return;
    };
    // Each further cover vertex covers at most `max_deg` remaining edges.
    let lower = (edges_twice / 2).div_ceil(max_deg);
    if chosen.count_ones() + lower >= best.count_ones() {
        return;
    }
    let nbrs = adj[v] & alive;
    search_cover(adj, alive & !(1 << v), chosen | 1 << v, best);
    search_cover(adj, alive & !(1 << v) & !nbrs, chosen | nbrs, best);
}

/// `max |E_G(U)|` over all `k`-subsets `U`. Fails when `C(n, k)` exceeds `cap`.
pub fn max_induced_edges(g: &Graph, k: usize, cap: u64) -> Result<usize> {
    let n = g.n();
    if k > n {
        return Err(Error::KOutOfRange { k, min: 0, max: n });
    }
    crate::check_cap(n, k, cap)?;
    if k == 0 {
        return Ok(0);
    }
    let adj = g.adjacency_masks()?;
    let mut best = 0;
    for mask in crate::compound::KSubsetMasks::new(n, k) {
        let mut twice = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & mask).count_ones() as usize;
        }
        best = best.max(twice / 2);
        if best == k * (k - 1) / 2 {
            break;
        }
    }
    Ok(best)
}

/// True iff `g` has no clique on `clique_order` vertices.
pub fn is_clique_free(g: &Graph, clique_order: usize) -> Result<bool> {
    if clique_order < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique order must be >= 2, got {clique_order}"
        )));
    }
    let adj = g.adjacency_masks()?;
    Ok(!has_clique(&adj, full_mask(g.n()), clique_order))
}

fn has_clique(adj: &[u64], candidates: u64, needed: usize) -> bool {
    if needed == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < needed {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Only extend with later vertices so each clique is tried once.
        if has_clique(adj, adj[v] & rest, needed - 1) {
            return true;
        }
    }
    false
}

/// Splits `g` into edge-disjoint stars along an ordered vertex cover: part `i`
/// holds the edges containing `cover[i]` and no earlier cover vertex.
pub fn star_cover_decomposition(g: &Graph, cover: &[usize]) -> Result<Vec<Graph>> {
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in cover.iter().enumerate().rev() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        position[v] = i;
    }
    let mut parts = vec![Vec::new(); cover.len()];
    for &(u, v) in g.edges() {
        let first = position[u].min(position[v]);
        if first == usize::MAX {
            return Err(Error::NotACover(u, v));
        }
        parts[first].push((u, v));
    }
    Ok(parts
        .into_iter()
        .map(|edges| Graph::from_sorted(g.n(), edges))
        .collect())
}

/// Sum of the `k` largest entries of the conjugate degree sequence
/// `d'_i = |{v : deg(v) >= i}|`.
pub fn conjugate_degree_sum(g: &Graph, k: usize) -> Result<usize> {
    check_k(g, k)?;
    let degrees = g.degrees();
    Ok((1..=k)
        .map(|i| degrees.iter().filter(|&&d| d >= i).count())
        .sum())
}

/// Sum of the `k` largest degrees.
pub fn top_degree_sum(g: &Graph, k: usize) -> Result<usize> {
    check_k(g, k)?;
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees[..k].iter().sum())
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 1 || k > g.n() {
        return Err(Error::KOutOfRange { k, min: 1, max: g.n() });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
