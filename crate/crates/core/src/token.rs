//! Token graphs `F_k(G)`: vertices are the `k`-subsets of `V(G)`, two subsets
//! adjacent when their symmetric difference is an edge of `G`.

use crate::compound::{mask_elements, SubsetIndexer};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{Family, SymMatrix};
use crate::Caps;

/// `F_k(G)` with its vertex indexing: token-graph vertex `r` is the subset
/// `indexer.unrank(r)`.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    pub k: usize,
    pub graph: Graph,
    pub indexer: SubsetIndexer,
}

/// Visits every unordered pair `row < col` of `k`-subsets whose symmetric
/// difference is an edge of `g`.
fn for_each_token_edge(
    indexer: &SubsetIndexer,
    adj: &[u64],
    mut f: impl FnMut(usize, usize),
) {
    for (row, &sigma) in indexer.masks().iter().enumerate() {
        for i in mask_elements(sigma) {
            for j in mask_elements(adj[i] & !sigma) {
                let col = indexer.rank_mask(sigma & !(1 << i) | 1 << j);
                if row < col {
                    f(row, col);
                }
            }
        }
    }
}

fn setup(g: &Graph, k: usize, caps: &Caps) -> Result<(SubsetIndexer, Vec<u64>)> {
    if k > g.n() {
        return Err(Error::KOutOfRange { k, min: 0, max: g.n() });
    }
    caps.check_matrix(g.n(), k)?;
    Ok((SubsetIndexer::new(g.n(), k, caps.matrix_dim)?, g.adjacency_masks()?))
}

pub fn token_graph(g: &Graph, k: usize, caps: &Caps) -> Result<TokenGraph> {
    let (indexer, adj) = setup(g, k, caps)?;
    let mut edges = Vec::new();
    for_each_token_edge(&indexer, &adj, |r, c| edges.push((r, c)));
    edges.sort_unstable();
    Ok(TokenGraph {
        k,
        graph: Graph::from_sorted(indexer.len(), edges),
        indexer,
    })
}

/// `L(F_k(G))` straight from the subset description: diagonal
/// `|{e : |e & sigma| = 1}|`, `-1` where `sigma (+) tau` is an edge.
pub fn token_laplacian(g: &Graph, k: usize, caps: &Caps) -> Result<SymMatrix> {
    token_matrix(g, k, Family::Laplacian, caps)
}

/// `Q(F_k(G))`, as [`token_laplacian`] with `+1` off the diagonal.
pub fn token_signless_laplacian(g: &Graph, k: usize, caps: &Caps) -> Result<SymMatrix> {
    token_matrix(g, k, Family::Signless, caps)
}

pub fn token_matrix(g: &Graph, k: usize, family: Family, caps: &Caps) -> Result<SymMatrix> {
    let (indexer, adj) = setup(g, k, caps)?;
    let mut m = SymMatrix::zeros(indexer.len());
    for (r, &sigma) in indexer.masks().iter().enumerate() {
        let boundary = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (sigma >> u ^ sigma >> v) & 1 == 1)
            .count();
        m.set(r, r, boundary as f64);
    }
    let entry = family.edge_entry();
    for_each_token_edge(&indexer, &adj, |r, c| m.set(r, c, entry));
    Ok(m)
}
