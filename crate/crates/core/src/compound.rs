//! `k`-subset indexing, additive compound matrices and the perturbed
//! compound `M_k(G) = L(G)^[k] - D_k(G)`.
//!
//! Subsets of `{0, .., n-1}` are stored as `u64` bitmasks, so `n <= 64`.
//! Rows and columns of every compound matrix are indexed by `k`-subsets in
//! lexicographic order of their sorted element tuples.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{kronecker_sum, Family, SymMatrix};
use crate::Caps;

/// `C(n, k)`, saturating at `u128::MAX` (never reached for `n <= 128`).
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> u64 {
    binomial_u128(n, k).try_into().unwrap_or(u64::MAX)
}

/// All `k`-subsets of `{0, .., n-1}` as bitmasks in increasing numeric
/// (colexicographic) order, via Gosper's hack.
pub struct KSubsetMasks {
    next: Option<u128>,
    limit: u128,
}

impl KSubsetMasks {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 64, "bitmask subsets need n <= 64");
        let next = (k <= n).then(|| (1u128 << k) - 1);
        KSubsetMasks {
            next,
            limit: 1u128 << n,
        }
    }
}

impl Iterator for KSubsetMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ)
        };
        Some(cur as u64)
    }
}

/// Bijection between ranks `0..C(n, k)` and `k`-subsets of `{0, .., n-1}`,
/// lexicographic on sorted tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIndexer {
    n: usize,
    k: usize,
    subsets: Vec<u64>,
    // binom[a][b] = C(a, b) for a <= n, b <= k.
    binom: Vec<Vec<usize>>,
}

impl SubsetIndexer {
    /// Fails for `n > 64`, `k > n`, or when `C(n, k)` exceeds `cap`.
    pub fn new(n: usize, k: usize, cap: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        if k > n {
            return Err(Error::KOutOfRange { k, min: 0, max: n });
        }
        crate::check_cap(n, k, cap)?;
        let binom = (0..=n)
            .map(|a| (0..=k).map(|b| binomial(a, b) as usize).collect())
            .collect();

        let mut subsets = Vec::with_capacity(binomial(n, k) as usize);
        let mut elems: Vec<usize> = (0..k).collect();
        loop {
            subsets.push(elems.iter().fold(0u64, |m, &e| m | 1 << e));
            // Advance to the lexicographic successor.
            let Some(pos) = (0..k).rev().find(|&i| elems[i] < n - k + i) else {
                break;
            };
            elems[pos] += 1;
            for i in pos + 1..k {
                elems[i] = elems[i - 1] + 1;
            }
        }
        Ok(SubsetIndexer {
            n,
            k,
            subsets,
            binom,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Subsets as bitmasks, in rank order.
    pub fn masks(&self) -> &[u64] {
        &self.subsets
    }

    pub fn unrank_mask(&self, rank: usize) -> u64 {
        self.subsets[rank]
    }

    pub fn unrank(&self, rank: usize) -> Vec<usize> {
        mask_elements(self.subsets[rank]).collect()
    }

    /// Rank of a `k`-subset given as a bitmask. The mask must have exactly
    /// `k` bits, all below `n`.
    pub fn rank_mask(&self, mask: u64) -> usize {
        debug_assert_eq!(mask.count_ones() as usize, self.k);
        let mut rank = 0;
        let mut next = 0;
        for (pos, c) in mask_elements(mask).enumerate() {
            let rest = self.k - 1 - pos;
            for x in next..c {
                rank += self.binom[self.n - 1 - x][rest];
            }
            next = c + 1;
        }
        rank
    }

    /// Rank of a subset given as a list of distinct elements in any order.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        Ok(self.rank_mask(self.to_mask(subset)?))
    }

    fn to_mask(&self, subset: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &v in subset {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::InvalidParameter(format!("element {v} repeated")));
            }
            mask |= 1 << v;
        }
        if subset.len() != self.k {
            return Err(Error::InvalidParameter(format!(
                "expected a {}-subset, got {} elements",
                self.k,
                subset.len()
            )));
        }
        Ok(mask)
    }
}

pub(crate) fn mask_elements(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// `sign(sigma, tau) = (-1)^c` where `c` counts common elements strictly
/// between the two elements `i < j` of the symmetric difference.
pub fn sign_pair(sigma: &[usize], tau: &[usize]) -> Result<i8> {
    let to_mask = |s: &[usize]| -> Result<u64> {
        s.iter().try_fold(0u64, |m, &v| {
            if v >= 64 {
                Err(Error::TooManyVertices(v + 1))
            } else if m >> v & 1 == 1 {
                Err(Error::InvalidParameter(format!("element {v} repeated")))
            } else {
                Ok(m | 1 << v)
            }
        })
    };
    let (a, b) = (to_mask(sigma)?, to_mask(tau)?);
    if a.count_ones() != b.count_ones() || (a ^ b).count_ones() != 2 {
        return Err(Error::NotAdjacentSubsets);
    }
    Ok(if sign_masks(a, b) > 0.0 { 1 } else { -1 })
}

/// Sign for two masks of equal size whose symmetric difference has two bits.
#[inline]
pub(crate) fn sign_masks(a: u64, b: u64) -> f64 {
    let diff = a ^ b;
    let i = diff.trailing_zeros();
    let j = 63 - diff.leading_zeros();
    // Bits strictly between i and j.
    let between = if j > i + 1 {
        ((1u64 << j) - 1) & !((1u64 << (i + 1)) - 1)
    } else {
        0
    };
    if (a & b & between).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// A matrix indexed by the `k`-subsets of a base set of size `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundMatrix {
    pub matrix: SymMatrix,
    pub indexer: SubsetIndexer,
}

impl CompoundMatrix {
    pub fn base_dim(&self) -> usize {
        self.indexer.n()
    }

    pub fn order(&self) -> usize {
        self.indexer.k()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Entry at two subsets given as element lists.
    pub fn entry(&self, sigma: &[usize], tau: &[usize]) -> Result<f64> {
        Ok(self
            .matrix
            .get(self.indexer.rank(sigma)?, self.indexer.rank(tau)?))
    }
}

/// Calls `f(row, col, i, j)` for every pair of subsets `sigma = row`,
/// `tau = col` with `row < col`, `sigma \ tau = {i}`, `tau \ sigma = {j}`.
fn for_each_neighbor_pair(
    indexer: &SubsetIndexer,
    mut f: impl FnMut(usize, usize, usize, usize, u64, u64),
) {
    let full = if indexer.n() == 64 {
        u64::MAX
    } else {
        (1u64 << indexer.n()) - 1
    };
    for (row, &sigma) in indexer.masks().iter().enumerate() {
        for i in mask_elements(sigma) {
            for j in mask_elements(full & !sigma) {
                let tau = sigma & !(1 << i) | 1 << j;
                let col = indexer.rank_mask(tau);
                if row < col {
                    f(row, col, i, j, sigma, tau);
                }
            }
        }
    }
}

/// The `k`-th additive compound `m^[k]`, `1 <= k <= dim(m)`.
pub fn additive_compound(m: &SymMatrix, k: usize) -> Result<CompoundMatrix> {
    let n = m.dim();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    let indexer = SubsetIndexer::new(n, k, u64::MAX)?;
    let mut matrix = SymMatrix::zeros(indexer.len());
    for (r, &sigma) in indexer.masks().iter().enumerate() {
        matrix.set(r, r, mask_elements(sigma).map(|i| m.get(i, i)).sum());
    }
    for_each_neighbor_pair(&indexer, |row, col, i, j, sigma, tau| {
        let value = m.get(i, j);
        if value != 0.0 {
            matrix.set(row, col, sign_masks(sigma, tau) * value);
        }
    });
    Ok(CompoundMatrix { matrix, indexer })
}

/// `D_k(G)`: diagonal, entry `|E_G(sigma)|` (edges inside `sigma`).
pub fn diag_perturbation(g: &Graph, k: usize) -> Result<CompoundMatrix> {
    if k < 1 || k > g.n() {
        return Err(Error::KOutOfRange { k, min: 1, max: g.n() });
    }
    let indexer = SubsetIndexer::new(g.n(), k, u64::MAX)?;
    let adj = g.adjacency_masks()?;
    let diag: Vec<f64> = indexer
        .masks()
        .iter()
        .map(|&s| induced_edges(&adj, s) as f64)
        .collect();
    Ok(CompoundMatrix {
        matrix: SymMatrix::diagonal(&diag),
        indexer,
    })
}

fn induced_edges(adj: &[u64], sigma: u64) -> u32 {
    mask_elements(sigma)
        .map(|v| (adj[v] & sigma).count_ones())
        .sum::<u32>()
        / 2
}

/// `M_k(G)` built entrywise: diagonal `|{e : e meets sigma}|`, and
/// `-sign(sigma, tau)` wherever `sigma (+) tau` is an edge.
///
/// `k = 0` gives the `1 x 1` zero matrix.
pub fn m_k_direct(g: &Graph, k: usize, caps: &Caps) -> Result<CompoundMatrix> {
    m_k_family(g, k, Family::Laplacian, caps)
}

/// `M_k` for either graph matrix: `X(G)^[k] - D_k(G)` with `X = L` or `Q`.
/// The signless variant has `+sign(sigma, tau)` off the diagonal.
pub fn m_k_family(g: &Graph, k: usize, family: Family, caps: &Caps) -> Result<CompoundMatrix> {
    if k > g.n() {
        return Err(Error::KOutOfRange { k, min: 0, max: g.n() });
    }
    caps.check_matrix(g.n(), k)?;
    let indexer = SubsetIndexer::new(g.n(), k, caps.matrix_dim)?;
    let adj = g.adjacency_masks()?;
    let mut matrix = SymMatrix::zeros(indexer.len());
    let edge_entry = -family.edge_entry();
    for (row, &sigma) in indexer.masks().iter().enumerate() {
        let touched = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (sigma >> u | sigma >> v) & 1 == 1)
            .count();
        matrix.set(row, row, touched as f64);
        for i in mask_elements(sigma) {
            for j in mask_elements(adj[i] & !sigma) {
                let tau = sigma & !(1 << i) | 1 << j;
                let col = indexer.rank_mask(tau);
                if row < col {
                    matrix.set(row, col, -edge_entry * sign_masks(sigma, tau));
                }
            }
        }
    }
    Ok(CompoundMatrix { matrix, indexer })
}

/// Blocks `M_i(G1) (+) M_j(G2)` for every split `i + j = k` with
/// `0 <= i <= n1`, `0 <= j <= n2`. Together they are the diagonal blocks of
/// `M_k` of the disjoint union, up to a reordering of subsets.
pub fn m_k_block_union(
    g1: &Graph,
    g2: &Graph,
    k: usize,
    caps: &Caps,
) -> Result<Vec<(usize, usize, SymMatrix)>> {
    m_k_block_union_family(g1, g2, k, Family::Laplacian, caps)
}

pub fn m_k_block_union_family(
    g1: &Graph,
    g2: &Graph,
    k: usize,
    family: Family,
    caps: &Caps,
) -> Result<Vec<(usize, usize, SymMatrix)>> {
    let (n1, n2) = (g1.n(), g2.n());
    if k > n1 + n2 {
        return Err(Error::KOutOfRange { k, min: 0, max: n1 + n2 });
    }
    (k.saturating_sub(n2)..=k.min(n1))
        .map(|i| {
            let j = k - i;
            let a = m_k_family(g1, i, family, caps)?;
            let b = m_k_family(g2, j, family, caps)?;
            Ok((i, j, kronecker_sum(&a.matrix, &b.matrix)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, complete, empty, star};
    use crate::linalg::{eigenvalues_sym, laplacian, Spectrum};
    use proptest::prelude::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial_u128(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial_u128(200, 100), u128::MAX);
    }

    #[test]
    fn gosper_enumerates_all_subsets() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let masks: Vec<u64> = KSubsetMasks::new(n, k).collect();
                assert_eq!(masks.len() as u64, binomial(n, k), "n={n} k={k}");
                assert!(masks.windows(2).all(|w| w[0] < w[1]));
                assert!(masks.iter().all(|m| m.count_ones() as usize == k && *m >> n == 0));
            }
        }
        assert_eq!(KSubsetMasks::new(64, 64).collect::<Vec<_>>(), vec![u64::MAX]);
    }

    #[test]
    fn indexer_is_lexicographic() {
        let idx = SubsetIndexer::new(4, 2, u64::MAX).unwrap();
        let all: Vec<Vec<usize>> = (0..idx.len()).map(|r| idx.unrank(r)).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(idx.rank(&[3, 1]).unwrap(), 4);
        assert!(idx.rank(&[1]).is_err());
        assert!(idx.rank(&[1, 1]).is_err());
        assert!(idx.rank(&[1, 4]).is_err());

        let zero = SubsetIndexer::new(3, 0, u64::MAX).unwrap();
        assert_eq!(zero.masks(), &[0]);
        assert!(matches!(
            SubsetIndexer::new(20, 10, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_pair(&[0, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(sign_pair(&[0, 2], &[2, 3]).unwrap(), -1);
        assert_eq!(sign_pair(&[0, 2, 4], &[0, 1, 4]).unwrap(), 1);
        assert_eq!(sign_pair(&[1, 2, 3, 5], &[0, 1, 2, 3]).unwrap(), -1);
        assert!(matches!(sign_pair(&[0, 1], &[2, 3]), Err(Error::NotAdjacentSubsets)));
        assert!(sign_pair(&[0, 1], &[0, 1]).is_err());
        assert!(sign_pair(&[0, 1], &[0]).is_err());
    }

    #[test]
    fn compound_extremes() {
        let m = SymMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, -4.0, 0.5],
            vec![3.0, 0.5, 6.0],
        ])
        .unwrap();
        assert_eq!(additive_compound(&m, 1).unwrap().matrix, m);
        let top = additive_compound(&m, 3).unwrap();
        assert_eq!(top.matrix, SymMatrix::from_rows(&[vec![m.trace()]]).unwrap());
        assert!(additive_compound(&m, 0).is_err());
        assert!(additive_compound(&m, 4).is_err());

        // Hand-computed entry: sigma = {0,1}, tau = {1,2}: i = 0, j = 2, the
        // common element 1 lies between them, so the entry is -m[0][2].
        let c2 = additive_compound(&m, 2).unwrap();
        assert_eq!(c2.entry(&[0, 1], &[1, 2]).unwrap(), -3.0);
        assert_eq!(c2.entry(&[0, 1], &[0, 2]).unwrap(), 0.5);
        assert_eq!(c2.entry(&[0, 2], &[0, 2]).unwrap(), 7.0);
    }

    #[test]
    fn diag_perturbation_examples() {
        let g = graph::cycle(5).unwrap();
        assert_eq!(diag_perturbation(&g, 1).unwrap().matrix, SymMatrix::zeros(5));
        let k4 = complete(4).unwrap();
        assert_eq!(diag_perturbation(&k4, 2).unwrap().matrix, SymMatrix::identity(6));
        let d = diag_perturbation(&star(4).unwrap(), 3).unwrap();
        assert_eq!(d.entry(&[0, 1, 2], &[0, 1, 2]).unwrap(), 2.0);
        assert_eq!(d.entry(&[1, 2, 3], &[1, 2, 3]).unwrap(), 0.0);
        assert!(diag_perturbation(&k4, 0).is_err());
    }

    #[test]
    fn m_k_examples() {
        assert_eq!(
            m_k_direct(&empty(5), 2, &caps()).unwrap().matrix,
            SymMatrix::zeros(10)
        );
        let k2 = complete(2).unwrap();
        assert_eq!(m_k_direct(&k2, 1, &caps()).unwrap().matrix, laplacian(&k2));
        assert_eq!(m_k_direct(&k2, 0, &caps()).unwrap().matrix, SymMatrix::zeros(1));
        assert!(m_k_direct(&k2, 3, &caps()).is_err());
        let tight = Caps { subsets: 10, matrix_dim: 5 };
        assert!(matches!(
            m_k_direct(&complete(5).unwrap(), 2, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn block_union_edge_cases() {
        let g = graph::path(3).unwrap();
        let blocks = m_k_block_union(&g, &empty(2), 0, &caps()).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].2, SymMatrix::zeros(1));
        let blocks = m_k_block_union(&g, &empty(2), 4, &caps()).unwrap();
        assert_eq!(blocks.iter().map(|b| (b.0, b.1)).collect::<Vec<_>>(), vec![(2, 2), (3, 1)]);
        assert!(m_k_block_union(&g, &empty(2), 6, &caps()).is_err());
    }

    fn random_sym(dim: usize, seed: u64) -> SymMatrix {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_xoshiro::Xoshiro256StarStar::seed_from_u64(seed);
        SymMatrix::from_fn(dim, |_, _| graph::unit_f64(rng.next_u64()) * 10.0 - 5.0)
    }

    /// All sums of `k` distinct entries, by recursion over inclusion.
    pub(crate) fn k_sums(values: &[f64], k: usize) -> Vec<f64> {
        fn go(v: &[f64], k: usize, acc: f64, out: &mut Vec<f64>) {
            if k == 0 {
                out.push(acc);
            } else if v.len() >= k {
                go(&v[1..], k - 1, acc + v[0], out);
                go(&v[1..], k, acc, out);
            }
        }
        let mut out = Vec::new();
        go(values, k, 0.0, &mut out);
        out
    }

    proptest! {
        #[test]
        fn rank_unrank_round_trip(n in 0usize..=12, k in 0usize..=12) {
            prop_assume!(k <= n);
            let idx = SubsetIndexer::new(n, k, u64::MAX).unwrap();
            prop_assert_eq!(idx.len() as u64, binomial(n, k));
            for r in 0..idx.len() {
                prop_assert_eq!(idx.rank(&idx.unrank(r)).unwrap(), r);
            }
            for w in idx.masks().windows(2) {
                let (a, b): (Vec<usize>, Vec<usize>) =
                    (mask_elements(w[0]).collect(), mask_elements(w[1]).collect());
                prop_assert!(a < b);
            }
        }

        #[test]
        fn compound_is_additive(dim in 1usize..=8, seed in any::<u64>(), k in 1usize..=8) {
            prop_assume!(k <= dim);
            // Integer entries keep every sum exact in floating point.
            let round = |m: SymMatrix| SymMatrix::from_fn(m.dim(), |i, j| m.get(i, j).round());
            let a = round(random_sym(dim, seed));
            let b = round(random_sym(dim, seed.wrapping_add(1)));
            let lhs = additive_compound(&(&a + &b), k).unwrap().matrix;
            let rhs = &additive_compound(&a, k).unwrap().matrix
                + &additive_compound(&b, k).unwrap().matrix;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn compound_spectrum_is_k_sums(dim in 1usize..=7, seed in any::<u64>(), k in 1usize..=7) {
            prop_assume!(k <= dim);
            let m = random_sym(dim, seed);
            let base = eigenvalues_sym(&m).unwrap();
            let expected = Spectrum::from_unsorted(k_sums(base.values(), k));
            let got = eigenvalues_sym(&additive_compound(&m, k).unwrap().matrix).unwrap();
            prop_assert!(got.max_deviation(&expected).unwrap() < 1e-7);
        }

        #[test]
        fn m_k_direct_is_compound_minus_diagonal(n in 1usize..=7, mask in any::<u64>(), k in 1usize..=7) {
            prop_assume!(k <= n);
            let g = graph::Graph::from_pair_mask(n, mask);
            for family in [Family::Laplacian, Family::Signless] {
                let direct = m_k_family(&g, k, family, &caps()).unwrap().matrix;
                let via = &additive_compound(&family.matrix(&g), k).unwrap().matrix
                    - &diag_perturbation(&g, k).unwrap().matrix;
                prop_assert_eq!(&direct, &via);
                for r in 0..direct.dim() {
                    for c in 0..direct.dim() {
                        if r != c {
                            prop_assert!([-1.0, 0.0, 1.0].contains(&direct.get(r, c)));
                        }
                    }
                }
            }
        }

        #[test]
        fn m_k_is_additive_over_edge_splits(n in 2usize..=7, mask in any::<u64>(), split in any::<u64>(), k in 1usize..=7) {
            prop_assume!(k <= n);
            let g = graph::Graph::from_pair_mask(n, mask);
            let (e1, e2): (Vec<_>, Vec<_>) = g.edges().iter().enumerate()
                .partition(|(i, _)| split >> (i % 64) & 1 == 1);
            let g1 = g.spanning_subgraph(e1.into_iter().map(|(_, &e)| e)).unwrap();
            let g2 = g.spanning_subgraph(e2.into_iter().map(|(_, &e)| e)).unwrap();
            let whole = m_k_direct(&g, k, &caps()).unwrap().matrix;
            let parts = &m_k_direct(&g1, k, &caps()).unwrap().matrix
                + &m_k_direct(&g2, k, &caps()).unwrap().matrix;
            prop_assert_eq!(whole, parts);
        }
    }
}
