//! Dense exact linear algebra over an abstract field: reduced row echelon
//! form, kernels, inverses, and linear solving. Matrices are `Vec` of rows.

use crate::field::Field;

pub type Vector<F> = Vec<<F as Field>::Elem>;
pub type Matrix<F> = Vec<Vec<<F as Field>::Elem>>;

pub fn zero_vector<F: Field>(f: &F, n: usize) -> Vector<F> {
    vec![f.zero(); n]
}

pub fn unit_vector<F: Field>(f: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(f, n);
    v[i] = f.one();
    v
}

pub fn is_zero_vector<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|a| f.is_zero(a))
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vector<F> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// a += c * b
pub fn vec_add_scaled<F: Field>(f: &F, a: &mut [F::Elem], c: &F::Elem, b: &[F::Elem]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = f.add(x, &f.mul(c, y));
    }
}

pub fn identity_matrix<F: Field>(f: &F, n: usize) -> Matrix<F> {
    (0..n).map(|i| unit_vector(f, n, i)).collect()
}

/// Row vector times matrix: (v M) where M has `v.len()` rows.
pub fn vec_mat_mul<F: Field>(f: &F, v: &[F::Elem], m: &[Vec<F::Elem>]) -> Vector<F> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut out = zero_vector(f, ncols);
    for (c, row) in v.iter().zip(m) {
        if !f.is_zero(c) {
            vec_add_scaled(f, &mut out, c, row);
        }
    }
    out
}

/// Matrix times column vector.
pub fn mat_vec_mul<F: Field>(f: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vector<F> {
    m.iter()
        .map(|row| {
            let mut acc = f.zero();
            for (a, b) in row.iter().zip(v) {
                acc = f.add(&acc, &f.mul(a, b));
            }
            acc
        })
        .collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Matrix<F> {
    a.iter().map(|row| vec_mat_mul(f, row, b)).collect()
}

/// In-place reduction to reduced row echelon form. Zero rows are removed.
/// Returns the pivot column of each remaining row, strictly increasing.
pub fn rref<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(src) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, src);
        let inv = f.inv(&rows[rank][col]).expect("pivot entry is nonzero");
        for a in rows[rank].iter_mut() {
            *a = f.mul(&inv, a);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !f.is_zero(&row[col]) {
                let c = f.neg(&row[col]);
                vec_add_scaled(f, row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Canonical (RREF) basis of the right kernel {x : M x = 0} of an
/// `m.len() x ncols` matrix.
pub fn nullspace<F: Field>(f: &F, m: &[Vec<F::Elem>], ncols: usize) -> Matrix<F> {
    let mut rows = m.to_vec();
    let pivots = rref(f, &mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = zero_vector(f, ncols);
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&rows[r][free]);
        }
        basis.push(v);
    }
    let _ = rref(f, &mut basis);
    basis
}

/// Inverse of a square matrix, or `None` if singular.
pub fn mat_inverse<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Option<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector(f, n, i));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// One solution x of x A = b (row-vector convention), or `None`.
pub fn solve_left<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vector<F>> {
    // Transpose to the column convention: A^T x^T = b^T.
    let nrows = a.len();
    let ncols = a.first().map_or(b.len(), |r| r.len());
    let mut aug: Matrix<F> = (0..ncols)
        .map(|c| {
            let mut row: Vector<F> = a.iter().map(|r| r[c].clone()).collect();
            row.push(b[c].clone());
            row
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last().is_some_and(|&c| c == nrows) {
        return None;
    }
    let mut x = zero_vector(f, nrows);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][nrows].clone();
    }
    Some(x)
}
