//! Brute-force oracles for cross-checking invariant computations on small
//! algebras over prime fields. Everything here is deliberately naive: plain
//! modular arithmetic, exhaustive row-echelon enumeration, and direct
//! bilinear expansion against the structure-constant table. Intended for
//! dimensions up to about 5 where full enumeration is instant.

use liealg_core::{Field, LieAlgebra, PrimeField};

/// All row-reduced echelon matrices with k rows and n columns over F_p,
/// i.e. every k-dimensional subspace of F_p^n exactly once.
pub fn all_subspaces(p: u64, n: usize, k: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for pivots in column_choices(n, k) {
        // Free cells: to the right of a row's pivot, outside pivot columns.
        let mut free = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            for col in (c + 1)..n {
                if !pivots.contains(&col) {
                    free.push((r, col));
                }
            }
        }
        let mut counter = vec![0u64; free.len()];
        loop {
            let mut m = vec![vec![0u64; n]; k];
            for (r, &c) in pivots.iter().enumerate() {
                m[r][c] = 1;
            }
            for (slot, &(r, c)) in free.iter().enumerate() {
                m[r][c] = counter[slot];
            }
            out.push(m);
            if !increment(&mut counter, p) {
                break;
            }
        }
    }
    out
}

/// All strictly increasing k-element subsets of 0..n, lexicographically.
fn column_choices(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        out.push(choice.clone());
        // Advance the rightmost column that can still move right.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] < n - (k - i) {
                choice[i] += 1;
                for j in (i + 1)..k {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Base-p odometer; returns false once every digit has wrapped to zero.
fn increment(counter: &mut [u64], p: u64) -> bool {
    for digit in counter.iter_mut().rev() {
        *digit += 1;
        if *digit < p {
            return true;
        }
        *digit = 0;
    }
    false
}

/// [x, y] by direct bilinear expansion over the table.
pub fn bracket_vectors(l: &LieAlgebra<PrimeField>, x: &[u64], y: &[u64]) -> Vec<u64> {
    let n = l.dim();
    let p = l.field().characteristic();
    let mut out = vec![0u64; n];
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            if y[j] == 0 || i == j {
                continue;
            }
            let coeff = (x[i] * y[j]) % p;
            let (a, b, sign_flip) = if i < j { (i, j, false) } else { (j, i, true) };
            for (t, c) in l.bracket_basis(a, b).iter().enumerate() {
                let term = (coeff * c) % p;
                out[t] = if sign_flip {
                    (out[t] + p - term) % p
                } else {
                    (out[t] + term) % p
                };
            }
        }
    }
    out
}

/// Reduce v against echelon rows; zero remainder means membership.
fn reduce_against(p: u64, rows: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    for row in rows {
        let pivot = row.iter().position(|&c| c != 0).expect("nonzero row");
        let c = v[pivot];
        if c != 0 {
            for (slot, r) in v.iter_mut().zip(row) {
                *slot = (*slot + (p - c % p) * r) % p;
            }
        }
    }
    v
}

fn spans_abelian(l: &LieAlgebra<PrimeField>, rows: &[Vec<u64>]) -> bool {
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if bracket_vectors(l, &rows[i], &rows[j]).iter().any(|&c| c != 0) {
                return false;
            }
        }
    }
    true
}

fn spans_ideal(l: &LieAlgebra<PrimeField>, rows: &[Vec<u64>]) -> bool {
    let n = l.dim();
    let p = l.field().characteristic();
    for i in 0..n {
        let mut e = vec![0u64; n];
        e[i] = 1;
        for row in rows {
            let v = bracket_vectors(l, &e, row);
            if reduce_against(p, rows, &v).iter().any(|&c| c != 0) {
                return false;
            }
        }
    }
    true
}

fn flatten_cmp(a: &[Vec<u64>], b: &[Vec<u64>]) -> std::cmp::Ordering {
    a.iter().flatten().cmp(b.iter().flatten())
}

/// Dimension of a maximal abelian subalgebra plus the lexicographically
/// least echelon witness at that dimension.
pub fn naive_alpha_witness(l: &LieAlgebra<PrimeField>) -> (usize, Vec<Vec<u64>>) {
    search(l, false)
}

/// Dimension of a maximal abelian ideal plus the lexicographically least
/// echelon witness at that dimension.
pub fn naive_beta_witness(l: &LieAlgebra<PrimeField>) -> (usize, Vec<Vec<u64>>) {
    search(l, true)
}

pub fn naive_alpha(l: &LieAlgebra<PrimeField>) -> usize {
    naive_alpha_witness(l).0
}

pub fn naive_beta(l: &LieAlgebra<PrimeField>) -> usize {
    naive_beta_witness(l).0
}

fn search(l: &LieAlgebra<PrimeField>, need_ideal: bool) -> (usize, Vec<Vec<u64>>) {
    let n = l.dim();
    let p = l.field().characteristic();
    assert!(p > 0, "oracle only handles prime fields");
    for k in (1..=n).rev() {
        let mut best: Option<Vec<Vec<u64>>> = None;
        for m in all_subspaces(p, n, k) {
            if !spans_abelian(l, &m) {
                continue;
            }
            if need_ideal && !spans_ideal(l, &m) {
                continue;
            }
            best = match best {
                None => Some(m),
                Some(b) => {
                    if flatten_cmp(&m, &b) == std::cmp::Ordering::Less {
                        Some(m)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        if let Some(w) = best {
            return (k, w);
        }
    }
    (0, Vec::new())
}
