//! One-dimensional ideals and full flags of ideals. A flag of ideals with
//! one-dimensional steps is exactly what makes an algebra supersolvable,
//! and the greedy construction below is complete: whenever some full flag
//! exists, every greedy choice extends to one.

use crate::algebra::LieAlgebra;
use crate::eigen::eigenvalue_candidates;
use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix, Vector};
use crate::structure::{quotient, QuotientMap};
use crate::subspace::Subspace;

/// A vector spanning a one-dimensional ideal of L, canonical and
/// deterministic, or `None` when no such ideal exists.
pub fn one_dim_ideal<F: Field>(l: &LieAlgebra<F>) -> Result<Option<Vector<F>>> {
    one_dim_ideal_in(l, &l.full_space())
}

/// Like `one_dim_ideal` but the spanning vector must lie in `within`.
/// The ideal condition is with respect to all of L.
pub fn one_dim_ideal_in<F: Field>(
    l: &LieAlgebra<F>,
    within: &Subspace<F>,
) -> Result<Option<Vector<F>>> {
    let ads: Vec<Matrix<F>> = (0..l.dim()).map(|i| l.ad_basis_matrix(i)).collect();
    descend(l, within, &ads, 0)
}

/// Shrink `w` to simultaneous eigenvectors of ad(e_0), ..., ad(e_{i-1})
/// one generator at a time, branching over the eigenvalue at each level.
/// Branches are explored in ascending eigenvalue order, so the first
/// surviving vector is deterministic.
fn descend<F: Field>(
    l: &LieAlgebra<F>,
    w: &Subspace<F>,
    ads: &[Matrix<F>],
    i: usize,
) -> Result<Option<Vector<F>>> {
    if w.dim() == 0 {
        return Ok(None);
    }
    if i == ads.len() {
        return Ok(Some(w.rows()[0].clone()));
    }
    let f = l.field();
    let n = l.dim();
    let ad = &ads[i];
    for lambda in eigenvalue_candidates(f, ad)? {
        // w' = {v in w : ad(e_i) v = lambda v}
        let mut constraints = w.membership_constraints(f);
        for (r, row) in ad.iter().enumerate() {
            let mut shifted = row.clone();
            shifted[r] = f.sub(&shifted[r], &lambda);
            constraints.push(shifted);
        }
        let eigen = Subspace::from_vectors(f, n, &linalg::nullspace(f, &constraints, n));
        if eigen.dim() == 0 {
            continue;
        }
        if let Some(hit) = descend(l, &eigen, ads, i + 1)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// A complete chain of ideals of L, one per dimension from 0 to dim L.
#[derive(Debug, Clone)]
pub struct Flag<F: Field> {
    pub members: Vec<Subspace<F>>,
}

impl<F: Field> Flag<F> {
    pub fn top_dim(&self) -> usize {
        self.members.len() - 1
    }

    /// An ambient basis b_1, ..., b_n with span(b_1..b_t) = members[t]:
    /// each step contributes the new canonical basis row.
    pub fn adapted_basis(&self, f: &F) -> Vec<Vector<F>> {
        let mut basis: Vec<Vector<F>> = Vec::with_capacity(self.top_dim());
        for step in self.members.windows(2) {
            let prev = &step[0];
            let next = &step[1];
            let fresh = next
                .rows()
                .iter()
                .find(|v| !prev.contains_vector(f, v))
                .expect("each flag step grows by one dimension");
            basis.push(fresh.clone());
        }
        basis
    }
}

/// Build a full flag of ideals greedily through iterated quotients.
/// Returns `None` exactly when no full flag exists. Errors only when the
/// rational eigenvalue search gives up (`FactorCap`).
pub fn supersolvable_flag<F: Field>(l: &LieAlgebra<F>) -> Result<Option<Flag<F>>> {
    flag_via(l, None)
}

/// A full flag of ideals passing through the ideal `a`, when one exists.
pub fn flag_through<F: Field>(l: &LieAlgebra<F>, a: &Subspace<F>) -> Result<Option<Flag<F>>> {
    if !l.is_ideal(a) {
        return Err(CoreError::NotAnIdeal);
    }
    flag_via(l, Some(a))
}

fn flag_via<F: Field>(l: &LieAlgebra<F>, via: Option<&Subspace<F>>) -> Result<Option<Flag<F>>> {
    let f = l.field();
    let n = l.dim();
    let mut members = vec![Subspace::zero(n)];
    while members.last().expect("nonempty").dim() < n {
        let current = members.last().expect("nonempty");
        let q: QuotientMap<F> = quotient(l, current).expect("flag members are ideals");
        let target = match via {
            // While below `a`, the next step must stay inside it.
            Some(a) if !current.contains(f, a) => q.project_subspace(a),
            _ => q.algebra.full_space(),
        };
        let Some(image_vec) = one_dim_ideal_in(&q.algebra, &target)? else {
            return Ok(None);
        };
        let lifted = q.lift(&image_vec);
        members.push(current.extended(f, &lifted));
    }
    Ok(Some(Flag { members }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::structure::series;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn heisenberg3<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let mut l = LieAlgebra::new(f, 3, "h3");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l
    }

    fn sl2<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        l
    }

    /// [e1,e2] = e3, [e1,e3] = -e2: over Q the only eigenvalues of ad e1
    /// on span(e2,e3) are complex, so no one-dimensional ideal exists.
    fn rotation_extension<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let neg_one = f.from_int(-1);
        let mut l = LieAlgebra::new(f, 3, "rot");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(1, neg_one)]).unwrap();
        l
    }

    #[test]
    fn one_dim_ideal_of_heisenberg_is_center() {
        let f = fp(5);
        let l = heisenberg3(f);
        let v = one_dim_ideal(&l).unwrap().unwrap();
        assert_eq!(v, vec![0, 0, 1]);
    }

    #[test]
    fn simple_algebra_has_no_one_dim_ideal() {
        assert!(one_dim_ideal(&sl2(fp(5))).unwrap().is_none());
        assert!(one_dim_ideal(&sl2(Rationals)).unwrap().is_none());
    }

    #[test]
    fn restricted_search_respects_the_window() {
        let f = fp(5);
        let l = heisenberg3(f);
        let window = Subspace::from_vectors(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(one_dim_ideal_in(&l, &window).unwrap().is_none());
        let window = Subspace::from_vectors(&f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let v = one_dim_ideal_in(&l, &window).unwrap().unwrap();
        assert_eq!(v, vec![0, 0, 1]);
    }

    #[test]
    fn flag_members_are_ideals_of_increasing_dimension() {
        let f = fp(7);
        let l = heisenberg3(f).direct_sum(&heisenberg3(f), "h3+h3");
        let flag = supersolvable_flag(&l).unwrap().unwrap();
        assert_eq!(flag.members.len(), 7);
        for (t, m) in flag.members.iter().enumerate() {
            assert_eq!(m.dim(), t);
            assert!(l.is_ideal(m));
        }
        let basis = flag.adapted_basis(&f);
        assert_eq!(basis.len(), 6);
    }

    #[test]
    fn rotation_extension_is_supersolvable_only_with_enough_roots() {
        // x^2 + 1 has no roots over Q or F_7, but -1 = 4 over F_5.
        assert!(supersolvable_flag(&rotation_extension(Rationals))
            .unwrap()
            .is_none());
        assert!(supersolvable_flag(&rotation_extension(fp(7)))
            .unwrap()
            .is_none());
        assert!(supersolvable_flag(&rotation_extension(fp(5)))
            .unwrap()
            .is_some());
        let rep = series(&rotation_extension(Rationals));
        assert!(rep.solvable && !rep.nilpotent);
        assert_eq!(rep.supersolvable, Some(false));
    }

    #[test]
    fn flag_through_a_given_ideal() {
        let f = fp(5);
        let l = heisenberg3(f).direct_sum(&heisenberg3(f), "h3+h3");
        // span(e6) is an ideal; the flag must pass through it at step 1.
        let a = Subspace::from_vectors(&f, 6, &[vec![0, 0, 0, 0, 0, 1]]);
        let flag = flag_through(&l, &a).unwrap().unwrap();
        assert_eq!(flag.members[1], a);
        let not_ideal = Subspace::from_vectors(&f, 6, &[vec![1, 0, 0, 0, 0, 0]]);
        assert!(matches!(
            flag_through(&l, &not_ideal),
            Err(CoreError::NotAnIdeal)
        ));
    }
}
