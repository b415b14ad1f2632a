//! Small predicates and enumeration helpers shared by the searches.

use liealg_core::linalg::{self, Vector};
use liealg_core::{CoreError, Field, LieAlgebra, Subspace};

use crate::{InvariantsError, Result};

/// The characteristic of a finite base field, or the standard refusal for
/// exact searches over the rationals.
pub fn finite_characteristic<F: Field>(f: &F) -> Result<u64> {
    let p = f.characteristic();
    if p == 0 {
        return Err(InvariantsError::Core(CoreError::Unsupported(
            "exact invariants over the rationals are unsupported; use bounds".into(),
        )));
    }
    Ok(p)
}

/// All basis rows of s bracket to zero pairwise.
pub fn is_abelian_subspace<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> bool {
    let f = l.field();
    let rows = s.rows();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let w = l.bracket(&rows[i], &rows[j]).expect("ambient dims match");
            if !linalg::is_zero_vector(f, &w) {
                return false;
            }
        }
    }
    true
}

/// All pairwise brackets of basis rows land back inside s.
pub fn is_subalgebra_subspace<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> bool {
    let f = l.field();
    let rows = s.rows();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let w = l.bracket(&rows[i], &rows[j]).expect("ambient dims match");
            if !s.contains_vector(f, &w) {
                return false;
            }
        }
    }
    true
}

/// One representative vector per one-dimensional subspace of `space`,
/// normalized so the first nonzero coefficient over the row basis is 1.
/// Finite fields only.
pub fn line_representatives<F: Field>(f: &F, space: &Subspace<F>) -> Vec<Vector<F>> {
    let elements = f.elements().expect("finite field");
    let rows = space.rows();
    let m = rows.len();
    let mut out = Vec::new();
    // Leading coefficient 1 at slot t, free elements after it.
    for t in 0..m {
        let free = m - t - 1;
        let mut digits = vec![0usize; free];
        loop {
            let mut v = rows[t].clone();
            for (slot, &d) in digits.iter().enumerate() {
                let c = &elements[d];
                if !f.is_zero(c) {
                    linalg::vec_add_scaled(f, &mut v, c, &rows[t + 1 + slot]);
                }
            }
            out.push(v);
            if !advance(&mut digits, elements.len()) {
                break;
            }
        }
    }
    out
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Flattened canonical rows, usable as a memoization key.
pub fn subspace_key<F: Field>(s: &Subspace<F>) -> Vec<F::Elem> {
    s.rows().iter().flatten().cloned().collect()
}
