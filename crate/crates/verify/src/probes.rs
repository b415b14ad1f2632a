//! Open-question probes OQ1, OQ2i and OQ2ii. These record evidence rather
//! than verdicts: a probe-fail is a counterexample candidate for an open
//! question, not a defect in the toolkit.

use std::ops::ControlFlow;

use liealg_core::enumerate::scan_dimension;
use liealg_core::error::Result;
use liealg_core::linalg::{zero_vector, Vector};
use liealg_core::structure::{center, subalgebra_algebra};
use liealg_core::{format_combination, Budget, Field, LieAlgebra, Subspace};

use crate::context::Ctx;
use crate::{inapplicable, Check, Status};

/// OQ1. Does the nilpotent statement T4.1 extend to supersolvable
/// algebras? Probed on certified supersolvable algebras away from
/// characteristic two with alpha(L) = n - 3: reports probe-pass when
/// beta(L) = n - 3 and probe-fail otherwise.
pub(crate) fn supersolvable_codim_three_probe<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    let n = l.dim();
    if l.field().characteristic() == 2 {
        return inapplicable("characteristic two stays excluded, as in the nilpotent statement");
    }
    if ctx.series().supersolvable != Some(true) {
        return inapplicable("needs a certified supersolvable algebra");
    }
    if !ctx.finite() {
        return inapplicable("needs exact invariants, unavailable over the rationals");
    }
    let (Some(alpha), Some(beta)) = (ctx.alpha(), ctx.beta()) else {
        return inapplicable("exact invariants unavailable within the budget");
    };
    if n < 3 || alpha.value != n - 3 {
        return inapplicable(format!(
            "alpha = {}, the probe needs alpha = n - 3 = {}",
            alpha.value,
            n.saturating_sub(3)
        ));
    }
    let details = vec![format!(
        "alpha = {}, beta = {}, target n - 3 = {}",
        alpha.value,
        beta.value,
        n - 3
    )];
    if beta.value == n - 3 {
        (Status::ProbePass, details)
    } else {
        (Status::ProbeFail, details)
    }
}

enum Oq2Kind {
    CenterFloor,
    DerivedCap,
}

/// OQ2i. With k = n - alpha(L) and A a maximal-dimension abelian
/// subalgebra, does every maximal subalgebra N that contains A and is an
/// ideal of L satisfy dim Z(N) >= n - 2k + 1?
pub(crate) fn ideal_center_floor_probe<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    overalgebra_probe(ctx, Oq2Kind::CenterFloor)
}

/// OQ2ii. In the same setting, does every such N satisfy
/// dim [N,N] <= k - 1?
pub(crate) fn ideal_derived_cap_probe<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    overalgebra_probe(ctx, Oq2Kind::DerivedCap)
}

fn overalgebra_probe<F: Field>(ctx: &Ctx<'_, F>, kind: Oq2Kind) -> Check {
    let l = ctx.l;
    let f = l.field();
    let n = l.dim();
    let s = ctx.series();
    if !(s.nilpotent || s.supersolvable == Some(true)) {
        return inapplicable("needs a nilpotent or certified supersolvable algebra");
    }
    if !ctx.finite() {
        return inapplicable("needs exact alpha, unavailable over the rationals");
    }
    let Some(alpha) = ctx.alpha() else {
        return inapplicable("exact alpha unavailable within the budget");
    };
    let k = n - alpha.value;
    if k == 0 {
        return inapplicable("the algebra is abelian");
    }
    // A maximal subalgebra that is an ideal has codimension one (an ideal
    // plus a line is a subalgebra), and a codimension-one subspace is a
    // subalgebra exactly when it contains [L,L]; such a hyperplane is
    // automatically an ideal and automatically maximal. The candidates N
    // are therefore the hyperplanes containing both A and [L,L].
    let u = alpha.witness.sum(f, &l.derived_subalgebra());
    if u.dim() == n {
        return inapplicable(
            "no hyperplane contains both the alpha witness and [L,L], so no candidate N exists",
        );
    }
    let candidates = match hyperplanes_over(l, &u, &ctx.budget()) {
        Ok(c) => c,
        Err(_) => return inapplicable("the hyperplane enumeration exceeded the budget"),
    };
    let mut details = vec![format!(
        "alpha = {}, k = {k}, {} candidate ideals N",
        alpha.value,
        candidates.len()
    )];
    for h in &candidates {
        let view = match subalgebra_algebra(l, h) {
            Ok(v) => v,
            Err(_) => return inapplicable("could not restrict to a candidate N"),
        };
        let (label, value, bound, ok) = match kind {
            Oq2Kind::CenterFloor => {
                let zdim = center(&view.algebra).dim() as i64;
                let floor = n as i64 - 2 * k as i64 + 1;
                ("dim Z(N)", zdim, floor, zdim >= floor)
            }
            Oq2Kind::DerivedCap => {
                let ddim = view.algebra.derived_subalgebra().dim() as i64;
                let cap = k as i64 - 1;
                ("dim [N,N]", ddim, cap, ddim <= cap)
            }
        };
        if !ok {
            let basis: Vec<String> = h
                .rows()
                .iter()
                .map(|r| format_combination::<F>(r))
                .collect();
            details.push(format!(
                "violated by N spanned by {}: {label} = {value} against the bound {bound}",
                basis.join("; ")
            ));
            return (Status::ProbeFail, details);
        }
    }
    details.push(format!(
        "every candidate N satisfies the bound of {}",
        match kind {
            Oq2Kind::CenterFloor => format!("dim Z(N) >= {}", n as i64 - 2 * k as i64 + 1),
            Oq2Kind::DerivedCap => format!("dim [N,N] <= {}", k - 1),
        }
    ));
    (Status::ProbePass, details)
}

/// All hyperplanes of the ambient space containing `u`, enumerated as
/// codimension-one subspaces in the coordinates of a complement of `u`.
fn hyperplanes_over<F: Field>(
    l: &LieAlgebra<F>,
    u: &Subspace<F>,
    budget: &Budget,
) -> Result<Vec<Subspace<F>>> {
    let f = l.field();
    let n = l.dim();
    let free = u.non_pivots();
    let d = free.len();
    let mut out = Vec::new();
    let _ = scan_dimension(
        f,
        d,
        d - 1,
        budget,
        |_| true,
        |rows| {
            let mut gens: Vec<Vector<F>> = u.rows().to_vec();
            for r in rows {
                let mut v = zero_vector(f, n);
                for (coef, &col) in r.iter().zip(free.iter()) {
                    v[col] = coef.clone();
                }
                gens.push(v);
            }
            out.push(Subspace::from_vectors(f, n, &gens));
            Ok(ControlFlow::Continue(()))
        },
    )?;
    Ok(out)
}
