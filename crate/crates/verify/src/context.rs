//! Per-algebra cache shared by the property checkers.

use std::sync::OnceLock;

use liealg_core::nilradical::nilradical;
use liealg_core::structure::{series, SeriesReport};
use liealg_core::{AlgebraDocument, Budget, Field, LieAlgebra, Subspace};
use liealg_invariants::util::is_abelian_subspace;
use liealg_invariants::{alpha_exact, beta_exact, InvariantCertificate, Strategy};

/// Lazily computed facts about one algebra. All checkers evaluating the
/// same algebra share one context, so the expensive pieces (series report,
/// exact invariants, nilradical) run at most once no matter how many
/// properties are requested or which worker thread gets there first.
pub(crate) struct Ctx<'a, F: Field> {
    pub(crate) l: &'a LieAlgebra<F>,
    budget_limit: u64,
    series: OnceLock<SeriesReport<F>>,
    alpha: OnceLock<Option<InvariantCertificate<F>>>,
    beta: OnceLock<Option<InvariantCertificate<F>>>,
    nilr: OnceLock<Option<Subspace<F>>>,
    doc: OnceLock<String>,
}

impl<'a, F: Field> Ctx<'a, F> {
    pub(crate) fn new(l: &'a LieAlgebra<F>, budget_limit: u64) -> Self {
        Ctx {
            l,
            budget_limit,
            series: OnceLock::new(),
            alpha: OnceLock::new(),
            beta: OnceLock::new(),
            nilr: OnceLock::new(),
            doc: OnceLock::new(),
        }
    }

    /// A fresh budget for one bounded computation. Each computation gets
    /// its own meter so results never depend on evaluation order.
    pub(crate) fn budget(&self) -> Budget {
        Budget::new(self.budget_limit)
    }

    pub(crate) fn finite(&self) -> bool {
        self.l.field().elements().is_some()
    }

    pub(crate) fn series(&self) -> &SeriesReport<F> {
        self.series.get_or_init(|| series(self.l))
    }

    /// Exact alpha certificate: `None` over an infinite field or when the
    /// search exceeded the budget.
    pub(crate) fn alpha(&self) -> Option<&InvariantCertificate<F>> {
        self.alpha
            .get_or_init(|| {
                if !self.finite() {
                    return None;
                }
                alpha_exact(self.l, Strategy::BranchBound, &self.budget()).ok()
            })
            .as_ref()
    }

    /// Exact beta certificate, with the same caveats as `alpha`.
    pub(crate) fn beta(&self) -> Option<&InvariantCertificate<F>> {
        self.beta
            .get_or_init(|| {
                if !self.finite() {
                    return None;
                }
                beta_exact(self.l, Strategy::BranchBound, &self.budget()).ok()
            })
            .as_ref()
    }

    pub(crate) fn nilradical(&self) -> Option<&Subspace<F>> {
        self.nilr
            .get_or_init(|| nilradical(self.l, &self.budget()).ok().map(|(s, _)| s))
            .as_ref()
    }

    /// Compact JSON document for reproducing a failure from the report.
    pub(crate) fn document_json(&self) -> &str {
        self.doc.get_or_init(|| {
            serde_json::to_string(&AlgebraDocument::from_algebra(self.l))
                .unwrap_or_else(|_| "{}".into())
        })
    }
}

/// A maximal abelian ideal together with a phrase describing how it was
/// certified. Over a finite field the exact beta witness serves; over the
/// rationals an abelian nilradical does, since every abelian ideal is a
/// nilpotent ideal and therefore sits inside the nilradical.
pub(crate) fn certified_max_abelian_ideal<F: Field>(
    ctx: &Ctx<'_, F>,
) -> Option<(Subspace<F>, &'static str)> {
    if ctx.finite() {
        let cert = ctx.beta()?;
        return Some((cert.witness.clone(), "from the exact beta search"));
    }
    let nilr = ctx.nilradical()?;
    if is_abelian_subspace(ctx.l, nilr) {
        return Some((nilr.clone(), "equal to the abelian nilradical"));
    }
    None
}
