//! Greedy lower bound for alpha, valid over any field.

use liealg_core::linalg::{self, Vector};
use liealg_core::structure::{center, centralizer};
use liealg_core::{Field, LieAlgebra, Subspace};

/// A maximal-by-inclusion abelian subalgebra grown outward from the
/// center. Maximality is certified by the stopping rule: the subalgebra
/// equals its own centralizer, so no vector commutes with all of it from
/// outside. Its dimension is therefore a sound lower bound for alpha.
///
/// Extension candidates are tried in a fixed order: basis vectors, then
/// pairwise sums of basis vectors, then rows of the centralizer itself,
/// which guarantees a centralizing vector is always found when one exists.
pub fn greedy_abelian_witness<F: Field>(l: &LieAlgebra<F>) -> Subspace<F> {
    let f = l.field();
    let n = l.dim();
    let mut a = center(l);
    loop {
        let c = centralizer(l, &a);
        if c.dim() == a.dim() {
            return a;
        }
        let mut adjoined = false;
        for v in simple_candidates(f, n) {
            if c.contains_vector(f, &v) && !a.contains_vector(f, &v) {
                a = a.extended(f, &v);
                adjoined = true;
                break;
            }
        }
        if !adjoined {
            for row in c.rows() {
                if !a.contains_vector(f, row) {
                    a = a.extended(f, row);
                    adjoined = true;
                    break;
                }
            }
        }
        debug_assert!(adjoined, "centralizer strictly larger but no new row");
    }
}

fn simple_candidates<F: Field>(f: &F, n: usize) -> Vec<Vector<F>> {
    let mut out: Vec<Vector<F>> = (0..n).map(|i| linalg::unit_vector(f, n, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = linalg::unit_vector(f, n, i);
            v[j] = f.one();
            out.push(v);
        }
    }
    out
}
