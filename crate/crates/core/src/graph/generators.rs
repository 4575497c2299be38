use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use super::Graph;
use crate::error::{Error, Result};

pub fn empty(n: usize) -> Graph {
    Graph::from_sorted(n, Vec::new())
}

/// Star on `n >= 2` vertices centred at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("star needs n >= 2, got {n}")));
    }
    Ok(Graph::from_sorted(n, (1..n).map(|i| (0, i)).collect()))
}

/// `t` disjoint edges `(2i, 2i+1)` followed by `isolated` isolated vertices.
pub fn matching_graph(t: usize, isolated: usize) -> Graph {
    Graph::from_sorted(2 * t + isolated, (0..t).map(|i| (2 * i, 2 * i + 1)).collect())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    turan(n, n)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Ok(Graph::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// Complete `r`-partite graph on `n` vertices with part sizes `ceil(n/r)` and
/// `floor(n/r)`. Parts are contiguous blocks, larger parts first.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if n < 1 || r < 1 || r > n {
        return Err(Error::InvalidParameter(format!(
            "Turán graph needs 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let (base, extra) = (n / r, n % r);
    let mut part = Vec::with_capacity(n);
    for p in 0..r {
        let size = base + usize::from(p < extra);
        part.extend(std::iter::repeat(p).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges))
}

/// `ex(n; K_{r+1})`, the edge count of the Turán graph `T(n, min(r, n))`.
pub fn turan_number(n: usize, r: usize) -> Result<usize> {
    if r < 1 {
        return Err(Error::InvalidParameter("clique order r must be >= 1".into()));
    }
    if n == 0 {
        return Ok(0);
    }
    Ok(turan(n, r.min(n))?.edge_count())
}

/// `G(n, p)` sample.
///
/// The generator is xoshiro256** seeded through SplitMix64 with `seed`. Pairs
/// are visited in lexicographic order; each draws one `u64` `x` and is kept iff
/// `(x >> 11) * 2^-53 < p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(rng.next_u64()) < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges))
}

pub(crate) fn unit_f64(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.n();
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_sorted(g1.n() + g2.n(), edges)
}
