//! Checkers for the structural properties P2.1, L2.3, T2.4, L2.5, C2.7
//! and C2.8. Each receives the shared per-algebra context and returns a
//! status with human-readable evidence lines.

use std::cmp::Ordering;

use liealg_core::structure::centralizer;
use liealg_core::Field;
use liealg_invariants::util::is_abelian_subspace;
use liealg_invariants::find_complement;

use crate::context::{certified_max_abelian_ideal, Ctx};
use crate::{fail, inapplicable, pass, Check, Status};

/// P2.1. For metabelian L with k = dim [L,L], the centralizer of [L,L]
/// has codimension at most [k^2/4] + 1; when L additionally splits over
/// [L,L], beta(L) >= n - [k^2/4] - 1.
pub(crate) fn metabelian_centralizer_bound<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if !ctx.series().metabelian {
        return inapplicable("needs a metabelian algebra");
    }
    let n = l.dim();
    let derived = l.derived_subalgebra();
    let k = derived.dim();
    let cap = k * k / 4 + 1;
    let cent = centralizer(l, &derived);
    let codim = n - cent.dim();
    let mut details = vec![format!(
        "dim L/C_L([L,L]) = {codim} against the cap [k^2/4]+1 = {cap} for k = {k}"
    )];
    if codim > cap {
        details.push("the centralizer codimension exceeds the cap".into());
        return fail(details);
    }
    match find_complement(l, &derived) {
        None => {
            details.push("no complement to [L,L] found, so the split lower bound is vacuous".into());
        }
        Some(comp) => {
            let floor = n - cap;
            details.push(format!(
                "a complement of dimension {} exists, so beta >= n - [k^2/4] - 1 = {floor} must hold",
                comp.dim()
            ));
            if !ctx.finite() {
                details.push("the split floor needs exact beta, unavailable over the rationals".into());
                return (Status::Inapplicable, details);
            }
            let Some(beta) = ctx.beta() else {
                details.push("exact beta unavailable within the budget".into());
                return (Status::Inapplicable, details);
            };
            details.push(format!("beta = {}", beta.value));
            if beta.value < floor {
                details.push("beta falls below the split floor".into());
                return fail(details);
            }
        }
    }
    pass(details)
}

/// L2.3. In a solvable algebra the centralizer of the nilradical lies
/// inside the nilradical.
pub(crate) fn nilradical_centralizer_containment<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if !ctx.series().solvable {
        return inapplicable("needs a solvable algebra");
    }
    let Some(nilr) = ctx.nilradical() else {
        return inapplicable("the nilradical computation did not finish within the budget");
    };
    let cent = centralizer(l, nilr);
    let ok = nilr.contains(l.field(), &cent);
    let details = vec![format!(
        "dim N = {}, dim C_L(N) = {}, containment C_L(N) <= N {}",
        nilr.dim(),
        cent.dim(),
        if ok { "holds" } else { "fails" }
    )];
    if ok {
        pass(details)
    } else {
        fail(details)
    }
}

/// T2.4. For a completely solvable algebra whose nilradical N is abelian,
/// alpha(L) = beta(L) = dim N.
pub(crate) fn abelian_nilradical_exactness<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if !ctx.series().completely_solvable {
        return inapplicable("needs a completely solvable algebra");
    }
    let Some(nilr) = ctx.nilradical() else {
        return inapplicable("the nilradical computation did not finish within the budget");
    };
    if !is_abelian_subspace(l, nilr) {
        return inapplicable("the nilradical is not abelian");
    }
    if !ctx.finite() {
        return inapplicable(
            "needs independently computed exact invariants, unavailable over the rationals",
        );
    }
    let (Some(alpha), Some(beta)) = (ctx.alpha(), ctx.beta()) else {
        return inapplicable("exact invariants unavailable within the budget");
    };
    let dn = nilr.dim();
    let details = vec![format!(
        "alpha = {}, beta = {}, dim N = {dn}",
        alpha.value, beta.value
    )];
    if alpha.value == dn && beta.value == dn {
        pass(details)
    } else {
        fail(details)
    }
}

/// L2.5. In a supersolvable algebra a maximal abelian ideal is its own
/// centralizer.
pub(crate) fn maximal_abelian_ideal_self_centralizing<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if ctx.series().supersolvable != Some(true) {
        return inapplicable("needs a certified supersolvable algebra");
    }
    let Some((a, how)) = certified_max_abelian_ideal(ctx) else {
        return inapplicable("no certified maximal abelian ideal available");
    };
    let cent = centralizer(l, &a);
    let ok = cent.cmp_canonical(&a) == Ordering::Equal;
    let details = vec![
        format!("maximal abelian ideal of dimension {} {how}", a.dim()),
        format!(
            "dim C_L(A) = {}, equality C_L(A) = A {}",
            cent.dim(),
            if ok { "holds" } else { "fails" }
        ),
    ];
    if ok {
        pass(details)
    } else {
        fail(details)
    }
}

/// C2.7. For supersolvable L with a maximal abelian ideal of dimension k,
/// dim L <= k(k+3)/2 and the derived length is at most k + 1.
pub(crate) fn supersolvable_dimension_cap<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if ctx.series().supersolvable != Some(true) {
        return inapplicable("needs a certified supersolvable algebra");
    }
    let Some((a, how)) = certified_max_abelian_ideal(ctx) else {
        return inapplicable("no certified maximal abelian ideal available");
    };
    let k = a.dim();
    let n = l.dim();
    let dl = ctx.series().derived_length.unwrap_or(0);
    let cap = k * (k + 3) / 2;
    let ok_dim = n <= cap;
    let ok_dl = dl <= k + 1;
    let details = vec![
        format!("maximal abelian ideal of dimension {k} {how}"),
        format!(
            "dim L = {n} against the cap k(k+3)/2 = {cap}: {}",
            if ok_dim { "holds" } else { "fails" }
        ),
        format!(
            "derived length {dl} against the cap k + 1 = {}: {}",
            k + 1,
            if ok_dl { "holds" } else { "fails" }
        ),
    ];
    if ok_dim && ok_dl {
        pass(details)
    } else {
        fail(details)
    }
}

/// C2.8. For supersolvable L of dimension n over any field,
/// beta(L) >= floor((sqrt(8n+9) - 3) / 2).
pub(crate) fn supersolvable_beta_floor<F: Field>(ctx: &Ctx<'_, F>) -> Check {
    let l = ctx.l;
    if ctx.series().supersolvable != Some(true) {
        return inapplicable("needs a certified supersolvable algebra");
    }
    if !ctx.finite() {
        return inapplicable("needs exact beta, unavailable over the rationals");
    }
    let Some(beta) = ctx.beta() else {
        return inapplicable("exact beta unavailable within the budget");
    };
    let n = l.dim() as u64;
    let floor = ((8 * n + 9).isqrt() - 3) / 2;
    let details = vec![format!(
        "beta = {} against the floor ((8n+9)^(1/2) - 3)/2 = {floor}",
        beta.value
    )];
    if beta.value as u64 >= floor {
        pass(details)
    } else {
        fail(details)
    }
}
