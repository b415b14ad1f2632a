//! Sound bounds for the invariants over any supported field, each carrying
//! the structural fact that produced it. Exact values are reported when a
//! structure theorem pins them down without enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use liealg_core::enumerate::Budget;
use liealg_core::nilradical::nilradical_with_series;
use liealg_core::structure::{center, series};
use liealg_core::{Field, LieAlgebra};

use crate::greedy::greedy_abelian_witness;
use crate::search::{InvariantCertificate, InvariantKind, Method};
use crate::split::find_complement;
use crate::util::is_abelian_subspace;

/// Where a bound row comes from. The codes name the structural facts the
/// engine applies; `trivial` covers dimension bookkeeping and `witness`
/// covers bounds certified by an explicit subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SourceTag {
    #[serde(rename = "Prop2.1")]
    Prop2_1,
    #[serde(rename = "Thm2.4")]
    Thm2_4,
    #[serde(rename = "Cor2.7")]
    Cor2_7,
    #[serde(rename = "Cor2.8")]
    Cor2_8,
    #[serde(rename = "Cor2.9-probe")]
    Cor2_9Probe,
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "witness")]
    Witness,
}

impl fmt::Display for SourceTag {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SourceTag::Prop2_1 => "Prop2.1",
            SourceTag::Thm2_4 => "Thm2.4",
            SourceTag::Cor2_7 => "Cor2.7",
            SourceTag::Cor2_8 => "Cor2.8",
            SourceTag::Cor2_9Probe => "Cor2.9-probe",
            SourceTag::Trivial => "trivial",
            SourceTag::Witness => "witness",
        };
        write!(out, "{text}")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundRow {
    pub text: String,
    pub source: SourceTag,
}

/// Certified sandwich for both invariants. `exact` is set when a theorem
/// determined the values outright; advisory rows never tighten the
/// numeric fields.
#[derive(Debug, Clone)]
pub struct BoundsReport<F: Field> {
    pub alpha_lo: usize,
    pub alpha_hi: usize,
    pub beta_lo: usize,
    pub beta_hi: usize,
    pub rows: Vec<BoundRow>,
    pub exact: Option<(InvariantCertificate<F>, InvariantCertificate<F>)>,
}

/// Derive bounds from structure alone: greedy witnesses, the center, the
/// supersolvable floor, the metabelian split bound, and the abelian
/// nilradical theorem. Never fails; anything uncomputable is skipped.
pub fn bounds<F: Field>(l: &LieAlgebra<F>, budget: &Budget) -> BoundsReport<F> {
    let f = l.field();
    let n = l.dim();
    let report = series(l);
    let mut rows = Vec::new();

    let alpha_hi = if report.abelian {
        rows.push(BoundRow {
            text: format!("alpha <= {n}: the algebra is abelian"),
            source: SourceTag::Trivial,
        });
        n
    } else {
        rows.push(BoundRow {
            text: format!(
                "alpha <= {}: a non-abelian algebra has no abelian subalgebra of full dimension",
                n - 1
            ),
            source: SourceTag::Trivial,
        });
        n - 1
    };
    let beta_hi = alpha_hi;
    rows.push(BoundRow {
        text: format!("beta <= {beta_hi}: every abelian ideal is an abelian subalgebra"),
        source: SourceTag::Trivial,
    });

    let greedy = greedy_abelian_witness(l);
    let mut alpha_lo = greedy.dim();
    rows.push(BoundRow {
        text: format!(
            "alpha >= {}: greedy extension reached a self-centralizing abelian subalgebra",
            greedy.dim()
        ),
        source: SourceTag::Witness,
    });

    let z = center(l);
    let mut beta_lo = z.dim();
    rows.push(BoundRow {
        text: format!("beta >= {}: the center is an abelian ideal", z.dim()),
        source: SourceTag::Witness,
    });

    if report.supersolvable == Some(true) {
        let k = (((8 * n as u64 + 9).isqrt() - 3) / 2) as usize;
        if k > beta_lo {
            beta_lo = k;
        }
        rows.push(BoundRow {
            text: format!(
                "beta >= {k}: supersolvable algebras of dimension {n} carry an abelian ideal \
                 of at least this dimension"
            ),
            source: SourceTag::Cor2_8,
        });
    }

    if report.metabelian && !report.abelian {
        let derived = l.derived_subalgebra();
        let k = derived.dim();
        let cap = k * k / 4 + 1;
        match find_complement(l, &derived) {
            Some(_) => {
                let lo = n.saturating_sub(cap);
                if lo > beta_lo {
                    beta_lo = lo;
                }
                rows.push(BoundRow {
                    text: format!(
                        "beta >= n - [k^2/4] - 1 = {lo} with k = dim L' = {k}: the algebra is \
                         metabelian and splits over its derived subalgebra (complement found)"
                    ),
                    source: SourceTag::Prop2_1,
                });
            }
            None => {
                rows.push(BoundRow {
                    text: format!(
                        "metabelian with dim L' = {k}, but no complement to L' was found; \
                         the split bound does not apply"
                    ),
                    source: SourceTag::Prop2_1,
                });
            }
        }
    }

    let mut exact = None;
    if report.completely_solvable {
        if let Ok((nil, _)) = nilradical_with_series(l, &report, budget) {
            if is_abelian_subspace(l, &nil) {
                let d = nil.dim();
                rows.push(BoundRow {
                    text: format!(
                        "alpha = beta = dim N = {d}: completely solvable with abelian nilradical"
                    ),
                    source: SourceTag::Thm2_4,
                });
                let alpha_cert = InvariantCertificate {
                    which: InvariantKind::Alpha,
                    value: d,
                    witness: nil.clone(),
                    method: Method::Theorem,
                    exact: true,
                };
                let beta_cert = InvariantCertificate {
                    which: InvariantKind::Beta,
                    value: d,
                    witness: nil,
                    method: Method::Theorem,
                    exact: true,
                };
                exact = Some((alpha_cert, beta_cert));
            }
        }
    }

    if f.characteristic() == 0 && report.solvable && !report.abelian {
        let k = (((8 * n as u64 + 9).isqrt() - 3) / 2) as usize;
        rows.push(BoundRow {
            text: format!(
                "advisory: over an algebraically closed field of characteristic zero a \
                 non-abelian solvable algebra of dimension {n} satisfies {k} <= alpha <= {}; \
                 not applied over the rationals",
                n - 1
            ),
            source: SourceTag::Cor2_9Probe,
        });
    }

    if beta_lo > alpha_lo {
        alpha_lo = beta_lo;
        rows.push(BoundRow {
            text: format!("alpha >= {alpha_lo}: alpha >= beta always"),
            source: SourceTag::Trivial,
        });
    }

    if let Some((a, b)) = &exact {
        return BoundsReport {
            alpha_lo: a.value,
            alpha_hi: a.value,
            beta_lo: b.value,
            beta_hi: b.value,
            rows,
            exact,
        };
    }

    BoundsReport {
        alpha_lo,
        alpha_hi,
        beta_lo,
        beta_hi,
        rows,
        exact,
    }
}
