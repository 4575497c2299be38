//! Dense symmetric matrices, graph Laplacians and symmetric eigenvalues.

mod eigen;

use std::fmt::Write as _;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix stored row-major. Every mutation writes both
/// `(i, j)` and `(j, i)`, so symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * m.dim + i] = v;
        }
        m
    }

    /// Builds a matrix from `f(i, j)` evaluated on the upper triangle `i <= j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rows must form a square, exactly symmetric array.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::InvalidParameter(format!(
                "row {i} has {} entries, expected {dim}",
                rows[i].len()
            )));
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix {
            dim,
            data: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
        self.data[j * self.dim + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }

    /// Absolute eigenvalue accuracy promised by [`eigenvalues_sym`]:
    /// `1e-9 * max(1, max|entry| * dim)`.
    pub fn eigen_atol(&self) -> f64 {
        1e-9 * (self.max_abs() * self.dim as f64).max(1.0)
    }

    /// `P^T M P` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim, "permutation length");
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[perm[i] * self.dim + perm[j]] = self.get(i, j);
            }
        }
        out
    }

    pub fn scaled(&self, factor: f64) -> Self {
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn eigenvalues(&self) -> Result<Spectrum> {
        eigenvalues_sym(self)
    }

    /// Plain-text dump: the dimension on the first line, then one line of
    /// space-separated entries per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|&x| format_entry(x)).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

fn format_entry(x: f64) -> String {
    // Normalises -0 to 0.
    format!("{}", x + 0.0)
}

impl Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix sum");
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &SymMatrix {
    type Output = SymMatrix;

    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix difference");
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Eigenvalues sorted non-increasing, repeated according to multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `lambda_1`; `None` for a 0-dimensional matrix.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Sum of the `k` largest eigenvalues, `1 <= k <= len`.
    pub fn top_k_sum(&self, k: usize) -> Result<f64> {
        if k < 1 || k > self.values.len() {
            return Err(Error::KOutOfRange {
                k,
                min: 1,
                max: self.values.len(),
            });
        }
        Ok(self.values[..k].iter().sum())
    }

    /// Largest elementwise deviation from another spectrum of the same length.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()))
        })
    }
}

/// Which graph matrix a construction is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `L(G) = D - A`.
    Laplacian,
    /// `Q(G) = D + A`.
    Signless,
}

impl Family {
    /// Off-diagonal entry of the graph matrix on an edge.
    pub fn edge_entry(self) -> f64 {
        match self {
            Family::Laplacian => -1.0,
            Family::Signless => 1.0,
        }
    }

    pub fn matrix(self, g: &Graph) -> SymMatrix {
        graph_matrix(g, self.edge_entry())
    }
}

/// `L(G)`: degrees on the diagonal, `-1` on edges.
pub fn laplacian(g: &Graph) -> SymMatrix {
    graph_matrix(g, -1.0)
}

/// `Q(G)`: degrees on the diagonal, `+1` on edges.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    graph_matrix(g, 1.0)
}

fn graph_matrix(g: &Graph, off_diagonal: f64) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, off_diagonal);
    }
    m
}

pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Spectrum> {
    eigen::symmetric_eigenvalues(m.data.clone(), m.dim).map(Spectrum::from_unsorted)
}

/// Sum of the `k` largest eigenvalues of `m`.
pub fn top_k_sum(m: &SymMatrix, k: usize) -> Result<f64> {
    if k < 1 || k > m.dim() {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: m.dim(),
        });
    }
    eigenvalues_sym(m)?.top_k_sum(k)
}

/// `A (+) B = A (x) I_m + I_n (x) B`, indexed so that row `(i, p)` is
/// `i * dim(B) + p`.
pub fn kronecker_sum(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
    let (n, m) = (a.dim(), b.dim());
    let mut out = SymMatrix::zeros(n * m);
    for i in 0..n {
        for j in i..n {
            let aij = a.get(i, j);
            if aij != 0.0 {
                for p in 0..m {
                    out.set(i * m + p, j * m + p, aij);
                }
            }
        }
        for p in 0..m {
            for q in p..m {
                let r = i * m + p;
                let c = i * m + q;
                out.set(r, c, out.get(r, c) + b.get(p, q));
            }
        }
    }
    out
}
