//! Deciding whether a solvable algebra over a finite field has an abelian
//! maximal subalgebra. Used by the P3.4 checker, which compares that fact
//! against the structural conditions predicting it.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use liealg_core::enumerate::scan_dimension;
use liealg_core::error::{CoreError, Result};
use liealg_core::linalg::{mat_mul, nullspace, zero_vector, Vector};
use liealg_core::structure::SeriesReport;
use liealg_core::{Budget, Field, LieAlgebra, Subspace};
use liealg_invariants::util::{is_abelian_subspace, line_representatives, subspace_key};

pub(crate) struct MaximalAbelianAnswer {
    pub(crate) exists: bool,
    pub(crate) how: String,
}

/// Decide whether L has an abelian maximal subalgebra. Requires a
/// solvable algebra of dimension at least one over a finite field, with
/// beta(L) already certified.
///
/// The decision splits by how such a subalgebra can sit inside L.
///
/// An abelian maximal subalgebra that is an ideal has codimension one: an
/// ideal plus any line is a subalgebra, so nothing proper sits above an
/// ideal except hyperplane subspaces. Conversely an abelian ideal of
/// dimension n - 1 is a maximal subalgebra. Ideals are therefore settled
/// by beta >= n - 1 alone.
///
/// A maximal subalgebra M that is not an ideal is self-normalizing. In a
/// nilpotent algebra no proper subalgebra is self-normalizing, so the
/// ideal route is complete there. In a supersolvable algebra every
/// maximal subalgebra has codimension one and every codimension-one
/// subalgebra is maximal, so existence reduces to alpha >= n - 1.
///
/// In the remaining cases, a self-normalizing abelian M must contain an
/// element x with ad x not nilpotent: were every ad m nilpotent, the
/// commuting family {ad m : m in M} would act nilpotently on L and give a
/// nonzero fixed vector in L/M, contradicting self-normalization. Since M
/// is abelian it is killed by ad x iterated, so M sits inside the null
/// Fitting component H = ker (ad x)^n, a proper subalgebra; maximality
/// forces M = H. Sweeping x over line representatives therefore visits
/// every candidate. Each H is confirmed maximal through the Fitting
/// decomposition: any subalgebra K with H <= K <= L is ad x stable, hence
/// splits as H + (K intersect Fit1), so H is maximal exactly when no
/// proper nonzero subspace W of the one-component Fit1 = im (ad x)^n
/// makes H + W a subalgebra.
pub(crate) fn abelian_maximal_subalgebra<F: Field>(
    l: &LieAlgebra<F>,
    report: &SeriesReport<F>,
    alpha: Option<usize>,
    beta: usize,
    budget: &Budget,
) -> Result<MaximalAbelianAnswer> {
    let n = l.dim();
    if beta + 1 >= n {
        return Ok(MaximalAbelianAnswer {
            exists: true,
            how: "an abelian ideal of codimension one is a maximal subalgebra".into(),
        });
    }
    if report.nilpotent {
        return Ok(MaximalAbelianAnswer {
            exists: false,
            how: "nilpotent case: maximal subalgebras are ideals of codimension one, ruled out by beta < n - 1"
                .into(),
        });
    }
    if report.supersolvable == Some(true) {
        if let Some(a) = alpha {
            let exists = a + 1 >= n;
            let how = if exists {
                "supersolvable case: an abelian subalgebra of codimension one is maximal".into()
            } else {
                "supersolvable case: every maximal subalgebra has codimension one, ruled out by alpha < n - 1"
                    .into()
            };
            return Ok(MaximalAbelianAnswer { exists, how });
        }
    }
    let f = l.field();
    let mut seen: BTreeSet<Vec<F::Elem>> = BTreeSet::new();
    for x in line_representatives(f, &l.full_space()) {
        budget.charge(n as u64)?;
        let (h, fit1) = fitting_pair(l, &x);
        if h.dim() == n || h.dim() == 0 {
            continue;
        }
        if !is_abelian_subspace(l, &h) {
            continue;
        }
        if !seen.insert(subspace_key(&h)) {
            continue;
        }
        if fitting_maximal(l, &h, &fit1, budget)? {
            return Ok(MaximalAbelianAnswer {
                exists: true,
                how: format!(
                    "found a self-normalizing abelian maximal subalgebra of dimension {} as a null Fitting component",
                    h.dim()
                ),
            });
        }
    }
    Ok(MaximalAbelianAnswer {
        exists: false,
        how: "the codimension-one ideal route fails and the ad-operator sweep found none".into(),
    })
}

/// Null and one Fitting components of ad x: the kernel and the image of
/// (ad x)^n.
fn fitting_pair<F: Field>(
    l: &LieAlgebra<F>,
    x: &[F::Elem],
) -> (Subspace<F>, Subspace<F>) {
    let f = l.field();
    let n = l.dim();
    let m = l.ad_matrix(x);
    let mut p = m.clone();
    for _ in 1..n {
        p = mat_mul(f, &p, &m);
    }
    let h = Subspace::from_vectors(f, n, &nullspace(f, &p, n));
    let cols: Vec<Vector<F>> = (0..n)
        .map(|j| (0..n).map(|i| p[i][j].clone()).collect())
        .collect();
    let fit1 = Subspace::from_vectors(f, n, &cols);
    (h, fit1)
}

/// Whether the null component H is a maximal subalgebra, by scanning for
/// a proper nonzero W <= Fit1 with H + W a subalgebra.
fn fitting_maximal<F: Field>(
    l: &LieAlgebra<F>,
    h: &Subspace<F>,
    fit1: &Subspace<F>,
    budget: &Budget,
) -> Result<bool> {
    let f = l.field();
    let n = l.dim();
    let c = fit1.dim();
    if h.dim() + c != n {
        return Err(CoreError::Unsupported(
            "Fitting components do not decompose the space".into(),
        ));
    }
    for w_dim in 1..c {
        let mut blocked = false;
        let _ = scan_dimension(
            f,
            c,
            w_dim,
            budget,
            |_| true,
            |rows| {
                let mut gens: Vec<Vector<F>> = h.rows().to_vec();
                for r in rows {
                    let mut v = zero_vector(f, n);
                    for (coef, basis_row) in r.iter().zip(fit1.rows()) {
                        liealg_core::linalg::vec_add_scaled(f, &mut v, coef, basis_row);
                    }
                    gens.push(v);
                }
                let k = Subspace::from_vectors(f, n, &gens);
                if l.is_subalgebra(&k) {
                    blocked = true;
                    return Ok(ControlFlow::Break(()));
                }
                Ok(ControlFlow::Continue(()))
            },
        )?;
        if blocked {
            return Ok(false);
        }
    }
    Ok(true)
}
