//! The nilradical: the largest nilpotent ideal. Several routes compute it
//! exactly; which one applies depends on the field and on how much
//! structure the algebra has, and the chosen route is reported alongside
//! the answer.

use serde::Serialize;

use crate::algebra::LieAlgebra;
use crate::enumerate::{scan_dimension, Budget};
use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::ideals::{supersolvable_flag, Flag};
use crate::linalg::{self, Matrix};
use crate::structure::{lower_central_series, series, subalgebra_algebra, SeriesReport};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NilradicalRoute {
    /// The algebra is nilpotent and equals its own nilradical.
    Nilpotent,
    /// Kernel of the diagonal weights read off a full flag of ideals.
    FlagWeights,
    /// Trace-form radical of the associative envelope of the adjoint
    /// representation (solvable, characteristic zero).
    TraceForm,
    /// Descending exhaustive scan for the largest nilpotent ideal
    /// (finite fields).
    Enumeration,
}

impl std::fmt::Display for NilradicalRoute {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            NilradicalRoute::Nilpotent => "nilpotent",
            NilradicalRoute::FlagWeights => "flag-weights",
            NilradicalRoute::TraceForm => "trace-form",
            NilradicalRoute::Enumeration => "enumeration",
        };
        write!(out, "{text}")
    }
}

pub fn nilradical<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<(Subspace<F>, NilradicalRoute)> {
    let report = series(l);
    nilradical_with_series(l, &report, budget)
}

/// As `nilradical`, reusing an already computed series report.
pub fn nilradical_with_series<F: Field>(
    l: &LieAlgebra<F>,
    report: &SeriesReport<F>,
    budget: &Budget,
) -> Result<(Subspace<F>, NilradicalRoute)> {
    if report.nilpotent {
        return Ok((l.full_space(), NilradicalRoute::Nilpotent));
    }
    // A full flag of ideals triangularizes every adjoint map at once; the
    // nilradical is then cut out by the diagonal weight functionals.
    match supersolvable_flag(l) {
        Ok(Some(flag)) => {
            return Ok((flag_weight_kernel(l, &flag), NilradicalRoute::FlagWeights))
        }
        Ok(None) | Err(CoreError::FactorCap) => {}
        Err(e) => return Err(e),
    }
    if l.field().characteristic() == 0 && report.solvable {
        return Ok((trace_form_nilradical(l), NilradicalRoute::TraceForm));
    }
    if l.field().elements().is_some() {
        return Ok((
            largest_nilpotent_ideal(l, budget)?,
            NilradicalRoute::Enumeration,
        ));
    }
    Err(CoreError::Unsupported(
        "nilradical over the rationals needs a solvable algebra".into(),
    ))
}

/// In a basis adapted to a full flag of ideals every ad x is triangular,
/// and x lies in the nilradical exactly when all its diagonal entries
/// vanish: a triangular matrix is nilpotent iff its diagonal is zero, the
/// cut-out set is an ideal containing the derived subalgebra, its
/// elements are ad-nilpotent (so it is a nilpotent ideal), and any
/// nilpotent ideal is ad-nilpotent hence diagonal-free.
fn flag_weight_kernel<F: Field>(l: &LieAlgebra<F>, flag: &Flag<F>) -> Subspace<F> {
    let f = l.field();
    let n = l.dim();
    let basis = flag.adapted_basis(f);
    let inverse = linalg::mat_inverse(f, &basis).expect("a flag basis is invertible");
    let mut weight_rows: Matrix<F> = Vec::with_capacity(n);
    for t in 0..n {
        let mut row = linalg::zero_vector(f, n);
        for (j, slot) in row.iter_mut().enumerate() {
            let e_j = linalg::unit_vector(f, n, j);
            let w = l.bracket(&e_j, &basis[t]).expect("basis vectors match dim");
            let coords = linalg::vec_mat_mul(f, &w, &inverse);
            *slot = coords[t].clone();
        }
        weight_rows.push(row);
    }
    let kernel = linalg::nullspace(f, &weight_rows, n);
    Subspace::from_vectors(f, n, &kernel)
}

/// For solvable algebras in characteristic zero, x lies in the nilradical
/// exactly when ad x lies in the radical of the associative envelope of
/// ad L, and that radical is the trace-form radical of the envelope.
fn trace_form_nilradical<F: Field>(l: &LieAlgebra<F>) -> Subspace<F> {
    let f = l.field();
    let n = l.dim();
    let generators: Vec<Matrix<F>> = (0..n).map(|j| l.ad_basis_matrix(j)).collect();
    // Span-closure of the generators under right multiplication: every
    // word in the generators is a shorter word times a generator.
    let mut span = Subspace::zero(n * n);
    let mut envelope: Vec<Matrix<F>> = Vec::new();
    let mut frontier: Vec<Matrix<F>> = generators.clone();
    while let Some(m) = frontier.pop() {
        let flat: Vec<F::Elem> = m.iter().flatten().cloned().collect();
        if span.contains_vector(f, &flat) {
            continue;
        }
        span = span.extended(f, &flat);
        for g in &generators {
            frontier.push(linalg::mat_mul(f, &m, g));
        }
        envelope.push(m);
    }
    let mut rows: Matrix<F> = Vec::with_capacity(envelope.len());
    for w in &envelope {
        let mut row = linalg::zero_vector(f, n);
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = trace(f, &linalg::mat_mul(f, &generators[j], w));
        }
        rows.push(row);
    }
    let kernel = linalg::nullspace(f, &rows, n);
    Subspace::from_vectors(f, n, &kernel)
}

fn trace<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let mut t = f.zero();
    for (i, row) in m.iter().enumerate() {
        t = f.add(&t, &row[i]);
    }
    t
}

/// Descending scan over all subspaces: the first nilpotent ideal found at
/// the highest dimension is the nilradical, because the nilradical
/// contains every nilpotent ideal.
fn largest_nilpotent_ideal<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
) -> Result<Subspace<F>> {
    let f = l.field();
    let n = l.dim();
    for k in (0..=n).rev() {
        let mut hit: Option<Subspace<F>> = None;
        let _ = scan_dimension(
            f,
            n,
            k,
            budget,
            |_| true,
            |rows| {
                let s = Subspace::from_vectors(f, n, rows);
                if l.is_ideal(&s) && is_nilpotent_subalgebra(l, &s)? {
                    hit = Some(s);
                    return Ok(std::ops::ControlFlow::Break(()));
                }
                Ok(std::ops::ControlFlow::Continue(()))
            },
        )?;
        if let Some(s) = hit {
            return Ok(s);
        }
    }
    unreachable!("the zero subspace is a nilpotent ideal")
}

fn is_nilpotent_subalgebra<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> Result<bool> {
    let view = subalgebra_algebra(l, s)?;
    let chain = lower_central_series(&view.algebra);
    Ok(chain.last().expect("nonempty").is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_BUDGET;
    use crate::field::{PrimeField, Rationals};
    use crate::structure::center;

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// [e1,e2] = e2: the nilradical is span(e2).
    fn affine<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let mut l = LieAlgebra::new(f, 2, "affine");
        l.set_bracket(0, 1, &[(1, one)]).unwrap();
        l
    }

    #[test]
    fn nilpotent_algebra_is_its_own_nilradical() {
        let f = Rationals;
        let one = f.one();
        let mut l = LieAlgebra::new(f, 3, "h3");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        let (n, route) = nilradical(&l, &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::Nilpotent);
        assert_eq!(n.dim(), 3);
    }

    #[test]
    fn affine_algebra_flag_route() {
        let (n, route) = nilradical(&affine(Rationals), &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::FlagWeights);
        assert_eq!(n.dim(), 1);
        assert!(n.contains_vector(&Rationals, &[Rationals.zero(), Rationals.one()]));
    }

    /// [e1,e2] = e3, [e1,e3] = -e2 over the rationals has no flag, but it
    /// is solvable, so the trace-form route applies: the nilradical is
    /// span(e2, e3).
    #[test]
    fn rotation_extension_trace_form_route() {
        let f = Rationals;
        let one = f.one();
        let neg_one = f.from_int(-1);
        let mut l = LieAlgebra::new(f, 3, "rot");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(1, neg_one)]).unwrap();
        let (n, route) = nilradical(&l, &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::TraceForm);
        assert_eq!(n.dim(), 2);
        assert!(!n.contains_vector(&Rationals, &linalg::unit_vector(&Rationals, 3, 0)));
    }

    /// ad e1 has weights 1, 1 and a 2x2 rotation block, so tr(ad e1 ad e1)
    /// = 1 + 1 - 2 = 0: e1 is in the radical of the plain trace form on L
    /// even though it is not in the nilradical. The envelope construction
    /// must still exclude it.
    #[test]
    fn envelope_beats_naive_trace_form() {
        let f = Rationals;
        let one = f.one();
        let neg_one = f.from_int(-1);
        let mut l = LieAlgebra::new(f, 5, "mixed-weights");
        l.set_bracket(0, 1, &[(1, one.clone())]).unwrap();
        l.set_bracket(0, 2, &[(2, one.clone())]).unwrap();
        l.set_bracket(0, 3, &[(4, one)]).unwrap();
        l.set_bracket(0, 4, &[(3, neg_one)]).unwrap();
        // sanity: e1 is trace-orthogonal to everything under the plain form
        let ad1 = l.ad_basis_matrix(0);
        let self_pair = trace(&Rationals, &linalg::mat_mul(&Rationals, &ad1, &ad1));
        assert!(Rationals.is_zero(&self_pair));
        let (n, route) = nilradical(&l, &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::TraceForm);
        assert_eq!(n.dim(), 4);
        assert!(!n.contains_vector(&Rationals, &linalg::unit_vector(&Rationals, 5, 0)));
    }

    /// Over F_5 the rotation extension is supersolvable (2 squares to -1),
    /// so the flag route fires and must agree with the enumeration.
    #[test]
    fn flag_and_enumeration_agree_over_f5() {
        let f = fp(5);
        let one = f.one();
        let neg_one = f.from_int(-1);
        let mut l = LieAlgebra::new(f.clone(), 3, "rot5");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(1, neg_one)]).unwrap();
        let (n, route) = nilradical(&l, &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::FlagWeights);
        let by_scan = largest_nilpotent_ideal(&l, &budget()).unwrap();
        assert_eq!(n, by_scan);
        assert_eq!(n.dim(), 2);
    }

    /// sl2 over F_7 is not solvable and has no flag; only the descending
    /// enumeration applies, and the nilradical is zero.
    #[test]
    fn simple_algebra_enumeration_route() {
        let f = fp(7);
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        let (n, route) = nilradical(&l, &budget()).unwrap();
        assert_eq!(route, NilradicalRoute::Enumeration);
        assert!(n.is_zero());
    }

    #[test]
    fn sl2_over_rationals_is_unsupported() {
        let f = Rationals;
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        let err = nilradical(&l, &budget()).unwrap_err();
        assert!(matches!(err, CoreError::Unsupported(_)));
    }

    /// The nilradical of a nilpotent-by-abelian example contains the
    /// center and the derived subalgebra.
    #[test]
    fn nilradical_contains_derived_and_center() {
        let l = affine(fp(7));
        let (n, _) = nilradical(&l, &budget()).unwrap();
        let f = l.field();
        assert!(n.contains(f, &l.derived_subalgebra()));
        assert!(n.contains(f, &center(&l)));
    }
}
