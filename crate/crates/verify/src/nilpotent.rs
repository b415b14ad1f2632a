//! Checkers for the nilpotent-boundary property T4.1 and the
//! characteristic-two reference algebra E4.1.

use std::cmp::Ordering;

use liealg_core::linalg::{unit_vector, vec_add_scaled, Vector};
use liealg_core::structure::centralizer;
use liealg_core::{Field, Subspace};
use liealg_invariants::util::is_abelian_subspace;

use crate::context::Ctx;
use crate::{fail, inapplicable, pass, Check};

/// T4.1. For a nilpotent algebra in characteristic other than two with
/// alpha(L) = n - 3, also beta(L) = n - 3.
pub(crate) fn nilpotent_codim_three_agreement<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    let n = l.dim();
    if l.field().characteristic() == 2 {
        return inapplicable("excluded in characteristic two");
    }
    if !ctx.series().nilpotent {
        return inapplicable("needs a nilpotent algebra");
    }
    if !ctx.finite() {
        return inapplicable("needs exact invariants, unavailable over the rationals");
    }
    let (Some(alpha), Some(beta)) = (ctx.alpha(), ctx.beta()) else {
        return inapplicable("exact invariants unavailable within the budget");
    };
    if n < 3 || alpha.value != n - 3 {
        return inapplicable(format!(
            "alpha = {}, the statement needs alpha = n - 3 = {}",
            alpha.value,
            n.saturating_sub(3)
        ));
    }
    let ok = beta.value == n - 3;
    let details = vec![format!(
        "alpha = {}, beta = {}, target n - 3 = {}",
        alpha.value,
        beta.value,
        n - 3
    )];
    if ok {
        pass(details)
    } else {
        fail(details)
    }
}

/// E4.1. The nine-dimensional characteristic-two catalog entry
/// `example-4.1` must have alpha = 6, with every maximal abelian
/// subalgebra of the form span(v, e5, ..., e9) for a nonzero v in the
/// (e3, e4)-plane, and beta = 5 with span(e2, e6, e7, e8, e9) the unique
/// maximal abelian ideal. It shows the characteristic-two exclusion in
/// T4.1 is necessary: alpha = n - 3 but beta = n - 4.
pub(crate) fn char_two_reference_algebra<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    let f = l.field();
    let n = l.dim();
    if l.name() != "example-4.1" {
        return inapplicable("targets the example-4.1 catalog entry");
    }
    if f.characteristic() != 2 || n != 9 {
        return inapplicable("example-4.1 must be nine-dimensional in characteristic two");
    }
    let (Some(alpha), Some(beta)) = (ctx.alpha(), ctx.beta()) else {
        return inapplicable("exact invariants unavailable within the budget");
    };
    let mut details = Vec::new();

    details.push(format!("alpha = {}", alpha.value));
    if alpha.value != 6 {
        details.push("alpha must equal 6".into());
        return fail(details);
    }
    let tail = unit_span(f, n, &[4, 5, 6, 7, 8]);
    let plane_and_tail = unit_span(f, n, &[2, 3, 4, 5, 6, 7, 8]);
    let w = &alpha.witness;
    if !(w.dim() == 6 && w.contains(f, &tail) && plane_and_tail.contains(f, w)) {
        details.push(
            "the alpha witness is not of the form span(v, e5..e9) with v in the (e3, e4)-plane"
                .into(),
        );
        return fail(details);
    }
    details.push("the alpha witness is span(v, e5..e9) with v in the (e3, e4)-plane".into());

    // Every line in the (e3, e4)-plane must give a maximal abelian
    // subalgebra, i.e. one that is abelian and self-centralizing.
    let elements = f.elements().expect("characteristic two field is finite here");
    let mut family: Vec<Vector<F>> = Vec::new();
    for lam in &elements {
        let mut v = unit_vector(f, n, 2);
        vec_add_scaled(f, &mut v, lam, &unit_vector(f, n, 3));
        family.push(v);
    }
    family.push(unit_vector(f, n, 3));
    for v in &family {
        let mut gens: Vec<Vector<F>> = tail.rows().to_vec();
        gens.push(v.clone());
        let m = Subspace::from_vectors(f, n, &gens);
        let good = m.dim() == 6
            && is_abelian_subspace(l, &m)
            && centralizer(l, &m).cmp_canonical(&m) == Ordering::Equal;
        if !good {
            details.push(
                "a member of the claimed family fails to be a maximal abelian subalgebra".into(),
            );
            return fail(details);
        }
    }
    details.push(format!(
        "all {} lines of the (e3, e4)-plane give maximal abelian subalgebras",
        family.len()
    ));

    details.push(format!("beta = {}", beta.value));
    if beta.value != 5 {
        details.push("beta must equal 5".into());
        return fail(details);
    }
    let ideal = unit_span(f, n, &[1, 5, 6, 7, 8]);
    if beta.witness.cmp_canonical(&ideal) != Ordering::Equal || !l.is_ideal(&ideal) {
        details.push("the beta witness must be the abelian ideal span(e2, e6, e7, e8, e9)".into());
        return fail(details);
    }
    details.push("the beta witness is the abelian ideal span(e2, e6, e7, e8, e9)".into());
    pass(details)
}

fn unit_span<F: Field>(f: &F, n: usize, idx: &[usize]) -> Subspace<F> {
    let units: Vec<Vector<F>> = idx.iter().map(|&i| unit_vector(f, n, i)).collect();
    Subspace::from_vectors(f, n, &units)
}
