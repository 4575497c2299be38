//! Partial sums of Laplacian eigenvalues, additive compound matrices and
//! token graphs, with exhaustive bound checking over small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple graphs, edge-list and graph6 I/O, generators and exact
//!   combinatorial invariants (matching number, covering number, densest
//!   `k`-subsets, clique detection).
//! * [`linalg`]: dense symmetric matrices, Laplacians and a symmetric
//!   eigensolver.
//! * [`compound`]: `k`-subset indexing, additive compounds and the perturbed
//!   compound `M_k(G) = L(G)^[k] - D_k(G)`.
//! * [`token`]: token graphs `F_k(G)` and their Laplacians.
//! * [`excess`]: the excesses `eps_k`, `teps_k`, `epsT_k` and the bound report.
//! * [`harness`]: graph streams, exhaustive/sampled searches, matrix dumps.

pub mod compound;
pub mod error;
pub mod excess;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod selftest;
pub mod token;

pub use compound::{CompoundMatrix, SubsetIndexer};
pub use error::{Error, Result};
pub use excess::{BoundRecord, ExcessReport, Family, ReportOptions};
pub use graph::{Bipartition, Graph};
pub use linalg::{Spectrum, SymMatrix};
pub use token::TokenGraph;

/// Limits on combinatorial enumeration.
///
/// `subsets` bounds plain subset scans (densest `k`-subset search);
/// `matrix_dim` bounds the dimension `C(n, k)` of every dense compound or
/// token matrix, which is materialised and fully diagonalised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    pub subsets: u64,
    pub matrix_dim: u64,
}

impl Caps {
    pub const DEFAULT_SUBSETS: u64 = 2_000_000;
    pub const DEFAULT_MATRIX_DIM: u64 = 3_000;

    pub fn check_subsets(&self, n: usize, k: usize) -> Result<u64> {
        check_cap(n, k, self.subsets)
    }

    pub fn check_matrix(&self, n: usize, k: usize) -> Result<usize> {
        check_cap(n, k, self.matrix_dim).map(|c| c as usize)
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subsets: Self::DEFAULT_SUBSETS,
            matrix_dim: Self::DEFAULT_MATRIX_DIM,
        }
    }
}

fn check_cap(n: usize, k: usize, cap: u64) -> Result<u64> {
    let count = compound::binomial_u128(n, k);
    if count > cap as u128 {
        return Err(Error::CapExceeded { n, k, count, cap });
    }
    Ok(count as u64)
}
