//! Labeled simple graphs on the vertex set `0..n`.

mod format;
mod generators;
mod invariants;

pub use format::{decode_graph6, encode_graph6, parse_edge_list, parse_graph6_lines};
pub use generators::{
    complete, cycle, disjoint_union, empty, erdos_renyi, matching_graph, path, star, turan,
    turan_number,
};
pub(crate) use generators::unit_f64;
pub use invariants::{
    conjugate_degree_sum, covering_number, is_clique_free, matching_number, max_induced_edges,
    minimum_vertex_cover, star_cover_decomposition, top_degree_sum,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, strictly increasing in
/// lexicographic order. Neighbour lists are derived at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Each pair is normalised to
    /// `u < v`; loops, duplicates and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, normalized))
    }

    /// `edges` must already satisfy the type invariants.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
        }
    }

    /// The graph on `n` vertices whose edges are the pairs selected by `mask`,
    /// where bit `i` refers to the `i`-th pair in lexicographic order
    /// `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bit < 64 && mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Dense boolean adjacency, row-major `n * n`.
    pub fn adjacency(&self) -> Vec<bool> {
        let mut adj = vec![false; self.n * self.n];
        for &(u, v) in &self.edges {
            adj[u * self.n + v] = true;
            adj[v * self.n + u] = true;
        }
        adj
    }

    /// Neighbourhoods as bitmasks; only available for `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooManyVertices(self.n));
        }
        Ok(self
            .neighbors
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect())
    }

    /// Spanning subgraph keeping only the given edges (which must belong to `self`).
    pub fn spanning_subgraph(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let sub = Graph::new(self.n, edges)?;
        if let Some(&(u, v)) = sub.edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) is not an edge of the parent graph"
            )));
        }
        Ok(sub)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter("relabelling is not a permutation".into()));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// A 2-colouring found by breadth-first search, or `None` for graphs with
    /// an odd cycle. Every component's first vertex goes to the left side.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.neighbors[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (left, right) = (0..self.n).partition(|&v| color[v] == Some(false));
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge-list text (see [`parse_edge_list`]).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Two sides of a proper 2-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    /// Checks that the sides partition `0..g.n()` and no edge is monochromatic.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        let labelled = self
            .left
            .iter()
            .map(|&v| (v, false))
            .chain(self.right.iter().map(|&v| (v, true)));
        for (v, s) in labelled {
            if v >= g.n() || side[v].is_some() {
                return false;
            }
            side[v] = Some(s);
        }
        side.iter().all(Option::is_some) && g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }
}
