//! Search for subalgebra complements to an ideal.

use liealg_core::enumerate::pivot_patterns;
use liealg_core::linalg::{self, Vector};
use liealg_core::structure::centralizer;
use liealg_core::{Field, LieAlgebra, Subspace};

use crate::util::is_subalgebra_subspace;

/// A subalgebra B with B + I = L and B ∩ I = 0, when the search finds
/// one. Candidates are the coordinate complements (spans of unit vectors
/// on each column subset of the right size, in lexicographic order) and
/// then the centralizer of the ideal reduced modulo the ideal. Finding
/// none does not prove no complement exists.
pub fn find_complement<F: Field>(l: &LieAlgebra<F>, ideal: &Subspace<F>) -> Option<Subspace<F>> {
    let f = l.field();
    let n = l.dim();
    let m = ideal.dim();
    if m == n {
        return Some(Subspace::zero(n));
    }
    let want = n - m;
    for cols in pivot_patterns(n, want) {
        let rows: Vec<Vector<F>> = cols
            .iter()
            .map(|&c| linalg::unit_vector(f, n, c))
            .collect();
        let b = Subspace::from_vectors(f, n, &rows);
        if is_complement(l, ideal, &b) {
            return Some(b);
        }
    }
    // The centralizer of the ideal, reduced modulo the ideal, often
    // supplies a complement when no coordinate subspace works.
    let c = centralizer(l, ideal);
    let reduced: Vec<Vector<F>> = c
        .rows()
        .iter()
        .map(|r| ideal.reduce(f, r))
        .filter(|v| !linalg::is_zero_vector(f, v))
        .collect();
    let b = Subspace::from_vectors(f, n, &reduced);
    if b.dim() == want && is_complement(l, ideal, &b) {
        return Some(b);
    }
    None
}

fn is_complement<F: Field>(l: &LieAlgebra<F>, ideal: &Subspace<F>, b: &Subspace<F>) -> bool {
    let f = l.field();
    b.dim() + ideal.dim() == l.dim()
        && b.intersect(f, ideal).is_zero()
        && is_subalgebra_subspace(l, b)
}
