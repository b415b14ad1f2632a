//! Frattini subalgebra (intersection of the maximal subalgebras) and the
//! Frattini ideal (its largest ideal).

use std::ops::ControlFlow;

use serde::Serialize;

use crate::algebra::LieAlgebra;
use crate::enumerate::{scan_dimension, Budget};
use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::structure::{core_of, series};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrattiniRoute {
    /// A zero-dimensional algebra has no maximal subalgebras; the empty
    /// intersection is the algebra itself.
    ZeroDimension,
    /// Supersolvable algebras over a finite field: every maximal
    /// subalgebra has codimension one, so intersecting the hyperplane
    /// subalgebras suffices.
    Hyperplanes,
    /// General finite-field route: enumerate all maximal subalgebras.
    MaximalScan,
    /// Nilpotent algebras: the maximal subalgebras are exactly the
    /// hyperplanes containing the derived subalgebra, whose intersection
    /// is the derived subalgebra (any field).
    NilpotentDerived,
}

impl std::fmt::Display for FrattiniRoute {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            FrattiniRoute::ZeroDimension => "zero-dimension",
            FrattiniRoute::Hyperplanes => "hyperplanes",
            FrattiniRoute::MaximalScan => "maximal-scan",
            FrattiniRoute::NilpotentDerived => "nilpotent-derived",
        };
        write!(out, "{text}")
    }
}

/// All maximal proper subalgebras, by descending exhaustive scan over a
/// finite field: a subalgebra is kept when no larger kept one contains it.
pub fn maximal_subalgebras<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<Vec<Subspace<F>>> {
    if l.field().elements().is_none() {
        return Err(CoreError::Unsupported(
            "maximal subalgebra enumeration needs a finite field".into(),
        ));
    }
    let f = l.field();
    let n = l.dim();
    let mut found: Vec<Subspace<F>> = Vec::new();
    for k in (0..n).rev() {
        let mut hits: Vec<Subspace<F>> = Vec::new();
        let _ = scan_dimension(
            f,
            n,
            k,
            budget,
            |_| true,
            |rows| {
                let s = Subspace::from_vectors(f, n, rows);
                if l.is_subalgebra(&s) && !found.iter().any(|m| m.contains(f, &s)) {
                    hits.push(s);
                }
                Ok(ControlFlow::Continue(()))
            },
        )?;
        found.extend(hits);
    }
    Ok(found)
}

pub fn frattini_subalgebra<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<(Subspace<F>, FrattiniRoute)> {
    let f = l.field();
    let n = l.dim();
    if n == 0 {
        return Ok((Subspace::zero(0), FrattiniRoute::ZeroDimension));
    }
    let report = series(l);
    if report.nilpotent {
        return Ok((l.derived_subalgebra(), FrattiniRoute::NilpotentDerived));
    }
    if f.elements().is_some() {
        if report.supersolvable == Some(true) {
            let mut meet = l.full_space();
            let _ = scan_dimension(
                f,
                n,
                n - 1,
                budget,
                |_| true,
                |rows| {
                    let s = Subspace::from_vectors(f, n, rows);
                    if l.is_subalgebra(&s) {
                        meet = meet.intersect(f, &s);
                    }
                    Ok(ControlFlow::Continue(()))
                },
            )?;
            return Ok((meet, FrattiniRoute::Hyperplanes));
        }
        let mut meet = l.full_space();
        for m in maximal_subalgebras(l, budget)? {
            meet = meet.intersect(f, &m);
        }
        return Ok((meet, FrattiniRoute::MaximalScan));
    }
    Err(CoreError::Unsupported(
        "Frattini subalgebra over the rationals needs a nilpotent algebra".into(),
    ))
}

/// The largest ideal contained in the Frattini subalgebra.
pub fn frattini_ideal<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<(Subspace<F>, FrattiniRoute)> {
    let (phi, route) = frattini_subalgebra(l, budget)?;
    Ok((core_of(l, &phi), route))
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

    fn heisenberg3<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let mut l = LieAlgebra::new(f, 3, "h3");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l
    }

    #[test]
    fn abelian_frattini_is_zero() {
        let l = LieAlgebra::new(fp(5), 2, "a2");
        let (phi, route) = frattini_subalgebra(&l, &budget()).unwrap();
        assert_eq!(route, FrattiniRoute::NilpotentDerived);
        assert!(phi.is_zero());
    }

    #[test]
    fn heisenberg_frattini_is_center_everywhere() {
        let (phi_q, route_q) = frattini_subalgebra(&heisenberg3(Rationals), &budget()).unwrap();
        assert_eq!(route_q, FrattiniRoute::NilpotentDerived);
        assert_eq!(phi_q.dim(), 1);
        let (phi_p, route_p) = frattini_subalgebra(&heisenberg3(fp(3)), &budget()).unwrap();
        assert_eq!(route_p, FrattiniRoute::NilpotentDerived);
        assert_eq!(phi_p.dim(), 1);
    }

    /// [e1,e2] = e2 over F_5: maximal subalgebras are span(e2) together
    /// with the five lines spanned by e1 + c e2, so the intersection is
    /// zero. The hyperplane route applies since the algebra is
    /// supersolvable, and the full scan must agree.
    #[test]
    fn affine_frattini_routes_agree() {
        let f = fp(5);
        let one = f.one();
        let mut l = LieAlgebra::new(f.clone(), 2, "affine");
        l.set_bracket(0, 1, &[(1, one)]).unwrap();
        let (phi, route) = frattini_subalgebra(&l, &budget()).unwrap();
        assert_eq!(route, FrattiniRoute::Hyperplanes);
        assert!(phi.is_zero());
        let maxes = maximal_subalgebras(&l, &budget()).unwrap();
        assert_eq!(maxes.len(), 6);
        assert!(maxes.iter().all(|m| m.dim() == 1));
        let mut meet = l.full_space();
        for m in &maxes {
            meet = meet.intersect(&f, m);
        }
        assert_eq!(meet, phi);
    }

    /// sl2 over F_5 is not supersolvable, forcing the maximal-scan route.
    /// Simplicity makes the Frattini subalgebra zero.
    #[test]
    fn sl2_maximal_scan() {
        let f = fp(5);
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        let (phi, route) = frattini_subalgebra(&l, &budget()).unwrap();
        assert_eq!(route, FrattiniRoute::MaximalScan);
        assert!(phi.is_zero());
        let (ideal, _) = frattini_ideal(&l, &budget()).unwrap();
        assert!(ideal.is_zero());
    }

    #[test]
    fn non_nilpotent_rational_algebra_is_unsupported() {
        let f = Rationals;
        let one = f.one();
        let mut l = LieAlgebra::new(f, 2, "affine");
        l.set_bracket(0, 1, &[(1, one)]).unwrap();
        let err = frattini_subalgebra(&l, &budget()).unwrap_err();
        assert!(matches!(err, CoreError::Unsupported(_)));
    }

    #[test]
    fn zero_dimension_route() {
        let l = LieAlgebra::new(Rationals, 0, "zero");
        let (phi, route) = frattini_subalgebra(&l, &budget()).unwrap();
        assert_eq!(route, FrattiniRoute::ZeroDimension);
        assert!(phi.is_zero());
    }

    /// The Frattini ideal can be smaller than the Frattini subalgebra:
    /// in sl2 over F_7 with a redundant generator layout this reduces to
    /// checking core extraction on a non-ideal subalgebra.
    #[test]
    fn frattini_ideal_is_core() {
        let f = fp(3);
        let one = f.one();
        // [e1,e2] = e2 extended by a central e3: Frattini subalgebra of
        // the product contains the center factor behaviour.
        let mut l = LieAlgebra::new(f, 3, "affine-plus-line");
        l.set_bracket(0, 1, &[(1, one)]).unwrap();
        let (phi, _) = frattini_subalgebra(&l, &budget()).unwrap();
        let (ideal, _) = frattini_ideal(&l, &budget()).unwrap();
        assert!(phi.contains(l.field(), &ideal));
    }
}
