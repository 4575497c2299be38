//! Eigenvalues of a dense real symmetric matrix: Householder reduction to
//! tridiagonal form, then the implicit QL algorithm with Wilkinson-type
//! shifts. Eigenvectors are never accumulated.

use crate::error::{Error, Result};

/// QL sweeps allowed per eigenvalue before giving up.
const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;


/// Returns the eigenvalues of the `n x n` row-major symmetric matrix `a`,
/// unsorted. Only the upper triangle of `a` is read.
pub(super) fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut d, mut e) = tridiagonalize(&mut a, n);
    tridiagonal_ql(&mut d, &mut e)?;
    Ok(d)
}

/// Reflectors per panel in the blocked reduction.
const PANEL: usize = 32;

/// Blocked Householder reduction of the upper triangle (row `j` right of the
/// diagonal plays the role of column `j` below it, so every access is a
/// contiguous row). Within a panel the trailing matrix is left stale and
/// corrected on the fly; it is updated once per panel with a rank-`2 PANEL`
/// product. Returns the diagonal `d` and the off-diagonal `e`, with `e[i]`
/// coupling rows `i - 1` and `i` and `e[0] = 0`.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut vs: Vec<Vec<f64>> = Vec::with_capacity(PANEL);
    let mut ws: Vec<Vec<f64>> = Vec::with_capacity(PANEL);
    let mut p0 = 0;
    while p0 + 1 < n {
        let p1 = (p0 + PANEL).min(n - 1);
        vs.clear();
        ws.clear();
        for j in p0..p1 {
            let row = &mut a[j * n + j..(j + 1) * n];
            for (v, w) in vs.iter().zip(&ws) {
                let (vj, wj) = (v[j], w[j]);
                for ((x, vc), wc) in row.iter_mut().zip(&v[j..]).zip(&w[j..]) {
                    *x -= vj * wc + wj * vc;
                }
            }
            d[j] = row[0];

            let x = &mut row[1..];
            let alpha = x[0];
            let tail_norm = x[1..].iter().map(|t| t * t).sum::<f64>().sqrt();
            let mut v = vec![0.0; n];
            v[j + 1] = 1.0;
            if tail_norm == 0.0 {
                // Already reduced; the identity reflector leaves A alone.
                e[j + 1] = alpha;
                vs.push(v);
                ws.push(vec![0.0; n]);
                continue;
            }
            let beta = -alpha.hypot(tail_norm).copysign(alpha);
            let tau = (beta - alpha) / beta;
            let inv = 1.0 / (alpha - beta);
            for (vi, xi) in v[j + 2..].iter_mut().zip(&x[1..]) {
                *vi = xi * inv;
            }
            e[j + 1] = beta;

            // w = tau (A v - V (W^T v) - W (V^T v)), A being the stale
            // trailing block rows j+1.. of the upper triangle.
            let mut w = vec![0.0; n];
            for r in j + 1..n {
                let vr = v[r];
                let row = &a[r * n + r..(r + 1) * n];
                let mut acc = row[0] * vr;
                for ((x, vc), wc) in row[1..].iter().zip(&v[r + 1..]).zip(&mut w[r + 1..]) {
                    acc += x * vc;
                    *wc += x * vr;
                }
                w[r] += acc;
            }
            for (pv, pw) in vs.iter().zip(&ws) {
                let wt_v: f64 = pw[j + 1..].iter().zip(&v[j + 1..]).map(|(a, b)| a * b).sum();
                let vt_v: f64 = pv[j + 1..].iter().zip(&v[j + 1..]).map(|(a, b)| a * b).sum();
                for ((wi, pvi), pwi) in w[j + 1..].iter_mut().zip(&pv[j + 1..]).zip(&pw[j + 1..]) {
                    *wi -= pvi * wt_v + pwi * vt_v;
                }
            }
            let wv: f64 = w[j + 1..].iter().zip(&v[j + 1..]).map(|(a, b)| a * b).sum();
            let shift = -0.5 * tau * tau * wv;
            for (wi, vi) in w[j + 1..].iter_mut().zip(&v[j + 1..]) {
                *wi = tau * *wi + shift * vi;
            }
            vs.push(v);
            ws.push(w);
        }
        for r in p1..n {
            let row = &mut a[r * n + r..(r + 1) * n];
            for (v, w) in vs.iter().zip(&ws) {
                let (vr, wr) = (v[r], w[r]);
                for ((x, vc), wc) in row.iter_mut().zip(&v[r..]).zip(&w[r..]) {
                    *x -= vr * wc + wr * vc;
                }
            }
        }
        p0 = p1;
    }
    d[n - 1] = a[n * n - 1];
    e[0] = 0.0;
    (d, e)
}

fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence(sweeps));
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
