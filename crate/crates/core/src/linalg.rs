//! Exact rational linear algebra on small dense matrices.
//!
//! Matrices are row-major `Vec<Vec<Rational>>`; vectors are columns.

use num_traits::{One, Zero};

use crate::laurent::Rational;

pub type Mat = Vec<Vec<Rational>>;
pub type Vector = Vec<Rational>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate().take(inner) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[Rational]) -> Vector {
    a.iter()
        .map(|row| row.iter().zip(v).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn is_zero_mat(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}` where `m` has `cols` columns.
pub fn nullspace(m: &Mat, cols: usize) -> Vec<Vector> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Columns of `m` as vectors.
pub fn columns(m: &Mat, cols: usize) -> Vec<Vector> {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// A basis of the span of `vs` (vectors of length `dim`).
pub fn span_basis(vs: &[Vector], dim: usize) -> Vec<Vector> {
    if vs.is_empty() {
        return vec![];
    }
    let mut m: Mat = vs.to_vec();
    let k = rref(&mut m).len();
    m.truncate(k);
    debug_assert!(m.iter().all(|r| r.len() == dim));
    m
}

pub fn span_dim(vs: &[Vector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(&vs.to_vec())
}

/// Extend a basis of `sub` by vectors of `sup` to a basis of `sup`; returns
/// only the added vectors (a complement of `sub` inside `sup`).
pub fn complement(sub: &[Vector], sup: &[Vector]) -> Vec<Vector> {
    let mut acc: Vec<Vector> = sub.to_vec();
    let mut r = span_dim(&acc);
    let mut out = Vec::new();
    for v in sup {
        acc.push(v.clone());
        let r2 = span_dim(&acc);
        if r2 > r {
            out.push(v.clone());
            r = r2;
        } else {
            acc.pop();
        }
    }
    out
}
