//! Minimal ideals and the abelian socle (the sum of the abelian minimal
//! ideals).

use std::ops::ControlFlow;

use crate::algebra::LieAlgebra;
use crate::enumerate::{scan_dimension, Budget};
use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::structure::{center, lower_central_series};
use crate::subspace::Subspace;

/// All minimal nonzero ideals, by ascending exhaustive scan over a finite
/// field. An ideal is minimal exactly when it contains no smaller found
/// one, since every nonzero ideal contains a minimal ideal. A further
/// minimal ideal of dimension k either lies inside the sum of those
/// already found or meets it trivially, so the scan stops once k rules
/// out both.
pub fn minimal_ideals<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<Vec<Subspace<F>>> {
    if l.field().elements().is_none() {
        return Err(CoreError::Unsupported(
            "minimal ideal enumeration needs a finite field".into(),
        ));
    }
    let f = l.field();
    let n = l.dim();
    let mut found: Vec<Subspace<F>> = Vec::new();
    let mut socle = Subspace::zero(n);
    for k in 1..=n {
        if !found.is_empty() && k > socle.dim() && k + socle.dim() > n {
            break;
        }
        let mut hits: Vec<Subspace<F>> = Vec::new();
        let _ = scan_dimension(
            f,
            n,
            k,
            budget,
            |_| true,
            |rows| {
                let s = Subspace::from_vectors(f, n, rows);
                if l.is_ideal(&s) && !found.iter().any(|m| s.contains(f, m)) {
                    hits.push(s);
                }
                Ok(ControlFlow::Continue(()))
            },
        )?;
        for h in &hits {
            socle = socle.sum(f, h);
        }
        found.extend(hits);
    }
    Ok(found)
}

/// Sum of the abelian minimal ideals. For nilpotent algebras every
/// minimal ideal is a central line and their sum is the center, which
/// works over any field.
pub fn abelian_socle<F: Field>(l: &LieAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    let nilpotent = lower_central_series(l)
        .last()
        .expect("nonempty")
        .is_zero();
    if nilpotent {
        return Ok(center(l));
    }
    let f = l.field();
    let mut sum = Subspace::zero(l.dim());
    for m in minimal_ideals(l, budget)? {
        if l.is_abelian_subspace(&m) {
            sum = sum.sum(f, &m);
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_BUDGET;
    use crate::field::{PrimeField, Rationals};

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn heisenberg_minimal_ideal_is_the_center() {
        let f = fp(3);
        let one = f.one();
        let mut l = LieAlgebra::new(f, 3, "h3");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        let mins = minimal_ideals(&l, &budget()).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].dim(), 1);
        assert_eq!(mins[0], center(&l));
    }

    /// In the abelian algebra every line is a minimal ideal.
    #[test]
    fn abelian_algebra_minimal_ideals_are_lines() {
        let l = LieAlgebra::new(fp(3), 2, "a2");
        let mins = minimal_ideals(&l, &budget()).unwrap();
        assert_eq!(mins.len(), 4);
        assert!(mins.iter().all(|m| m.dim() == 1));
        let socle = abelian_socle(&l, &budget()).unwrap();
        assert_eq!(socle.dim(), 2);
    }

    /// The rotation extension over F_7, where the 2x2 block has no
    /// eigenvalues, has span(e2, e3) as a minimal ideal of dimension 2.
    #[test]
    fn irreducible_action_gives_two_dimensional_minimal_ideal() {
        let f = fp(7);
        let one = f.one();
        let neg_one = f.from_int(-1);
        let mut l = LieAlgebra::new(f, 3, "rot7");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(1, neg_one)]).unwrap();
        let mins = minimal_ideals(&l, &budget()).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].dim(), 2);
        let socle = abelian_socle(&l, &budget()).unwrap();
        assert_eq!(socle, mins[0]);
    }

    /// sl2 over F_5 is simple: the only minimal ideal is the whole
    /// algebra and the abelian socle is zero.
    #[test]
    fn simple_algebra_socle_is_zero() {
        let f = fp(5);
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        let mins = minimal_ideals(&l, &budget()).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].dim(), 3);
        assert!(abelian_socle(&l, &budget()).unwrap().is_zero());
    }

    #[test]
    fn nilpotent_socle_shortcut_works_over_the_rationals() {
        let f = Rationals;
        let one = f.one();
        let mut l = LieAlgebra::new(f, 4, "h3-plus-line");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        let socle = abelian_socle(&l, &budget()).unwrap();
        assert_eq!(socle.dim(), 2);
    }

    #[test]
    fn minimal_ideals_need_a_finite_field() {
        let f = Rationals;
        let one = f.one();
        let mut l = LieAlgebra::new(f, 2, "affine");
        l.set_bracket(0, 1, &[(1, one)]).unwrap();
        assert!(matches!(
            minimal_ideals(&l, &budget()),
            Err(CoreError::Unsupported(_))
        ));
    }
}
