//! Certified exact searches for the two abelian invariants over finite
//! fields. Exhaustive scans walk reduced-echelon matrices dimension by
//! dimension; branch-and-bound grows abelian subalgebras one line at a
//! time with a centralizer-dimension prune. Both strategies return the
//! same value and the same canonically least witness.

use std::cell::RefCell;
use std::collections::HashSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use liealg_core::enumerate::{gaussian_binomial, pivot_patterns, scan_pattern, Budget};
use liealg_core::linalg::{self, Vector};
use liealg_core::nilradical::nilradical;
use liealg_core::structure::centralizer;
use liealg_core::{Field, LieAlgebra, Subspace};

use crate::util::{
    finite_characteristic, is_abelian_subspace, line_representatives, subspace_key,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive,
    BranchBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BranchBound,
    GreedyLower,
    Theorem,
}

/// A computed invariant value together with the subspace that attains it.
/// When `exact` is set the value is certified: the witness attains it and
/// the search proved nothing larger exists.
#[derive(Debug, Clone)]
pub struct InvariantCertificate<F: Field> {
    pub which: InvariantKind,
    pub value: usize,
    pub witness: Subspace<F>,
    pub method: Method,
    pub exact: bool,
}

fn method_of(strategy: Strategy) -> Method {
    match strategy {
        Strategy::Exhaustive => Method::Exhaustive,
        Strategy::BranchBound => Method::BranchBound,
    }
}

/// Largest dimension of an abelian subalgebra, over a finite field.
pub fn alpha_exact<F: Field>(
    l: &LieAlgebra<F>,
    strategy: Strategy,
    budget: &Budget,
) -> Result<InvariantCertificate<F>> {
    let f = l.field();
    let p = finite_characteristic(f)?;
    let n = l.dim();
    if n == 0 || l.derived_subalgebra().is_zero() {
        return Ok(InvariantCertificate {
            which: InvariantKind::Alpha,
            value: n,
            witness: l.full_space(),
            method: method_of(strategy),
            exact: true,
        });
    }
    // A proper subalgebra tops out at n - 1; refuse early when even the
    // first layer of the scan cannot fit in the budget.
    budget.refuse_if_over(&gaussian_binomial(p, n, n - 1))?;
    let witness = match strategy {
        Strategy::Exhaustive => alpha_exhaustive(l, budget)?,
        Strategy::BranchBound => branch_bound(l, budget, None)?,
    };
    Ok(InvariantCertificate {
        which: InvariantKind::Alpha,
        value: witness.dim(),
        witness,
        method: method_of(strategy),
        exact: true,
    })
}

/// Largest dimension of an abelian ideal, over a finite field.
pub fn beta_exact<F: Field>(
    l: &LieAlgebra<F>,
    strategy: Strategy,
    budget: &Budget,
) -> Result<InvariantCertificate<F>> {
    let f = l.field();
    let p = finite_characteristic(f)?;
    let n = l.dim();
    if n == 0 || l.derived_subalgebra().is_zero() {
        return Ok(InvariantCertificate {
            which: InvariantKind::Beta,
            value: n,
            witness: l.full_space(),
            method: method_of(strategy),
            exact: true,
        });
    }
    // Every abelian ideal is a nilpotent ideal, hence sits inside the
    // nilradical; scanning its coordinates shrinks the search space.
    let (nil, _) = nilradical(l, budget)?;
    let m = nil.dim();
    let k0 = m.min(n - 1);
    budget.refuse_if_over(&gaussian_binomial(p, m, k0))?;
    let witness = match strategy {
        Strategy::Exhaustive => beta_exhaustive(l, &nil, budget)?,
        Strategy::BranchBound => branch_bound(l, budget, Some(&nil))?,
    };
    Ok(InvariantCertificate {
        which: InvariantKind::Beta,
        value: witness.dim(),
        witness,
        method: method_of(strategy),
        exact: true,
    })
}

/// The new row must commute with every earlier row; a subspace whose basis
/// rows commute pairwise is abelian, and an abelian subspace is
/// automatically a subalgebra.
fn last_row_commutes<F: Field>(l: &LieAlgebra<F>, rows: &[Vector<F>]) -> bool {
    let f = l.field();
    let last = rows.last().expect("nonempty prefix");
    rows[..rows.len() - 1].iter().all(|r| {
        let w = l.bracket(r, last).expect("ambient dims match");
        linalg::is_zero_vector(f, &w)
    })
}

/// Top-down dimension scan: patterns run in parallel, each stops at its
/// lexicographically first abelian subspace, and the per-pattern hits
/// merge canonically in pattern order, which keeps the result identical
/// for any thread count.
fn alpha_exhaustive<F: Field>(l: &LieAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    let f = l.field();
    let n = l.dim();
    for k in (1..n).rev() {
        let patterns = pivot_patterns(n, k);
        let hits: Vec<Option<Subspace<F>>> = patterns
            .par_iter()
            .map(|pattern| -> Result<Option<Subspace<F>>> {
                let mut hit = None;
                let _ = scan_pattern(
                    f,
                    n,
                    pattern,
                    budget,
                    |rows| last_row_commutes(l, rows),
                    |rows| {
                        hit = Some(Subspace::from_vectors(f, n, rows));
                        Ok(ControlFlow::Break(()))
                    },
                )?;
                Ok(hit)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(best) = canonical_min(hits) {
            return Ok(best);
        }
    }
    // Any single nonzero vector spans an abelian subalgebra, so the scan
    // can only fall through for the zero algebra, handled by the caller.
    Ok(Subspace::zero(n))
}

/// Scan inside the nilradical's coordinates. Every pattern is scanned to
/// completion because the echelon order in nilradical coordinates does not
/// agree with the canonical order on ambient matrices.
fn beta_exhaustive<F: Field>(
    l: &LieAlgebra<F>,
    nil: &Subspace<F>,
    budget: &Budget,
) -> Result<Subspace<F>> {
    let f = l.field();
    let n = l.dim();
    let m = nil.dim();
    let k0 = m.min(n - 1);
    let lift = |coords: &Vector<F>| -> Vector<F> {
        let mut v = linalg::zero_vector(f, n);
        for (c, row) in coords.iter().zip(nil.rows()) {
            if !f.is_zero(c) {
                linalg::vec_add_scaled(f, &mut v, c, row);
            }
        }
        v
    };
    for k in (1..=k0).rev() {
        let patterns = pivot_patterns(m, k);
        let hits: Vec<Option<Subspace<F>>> = patterns
            .par_iter()
            .map(|pattern| -> Result<Option<Subspace<F>>> {
                let mut best: Option<Subspace<F>> = None;
                let lifted: RefCell<Vec<Vector<F>>> = RefCell::new(Vec::new());
                let _ = scan_pattern(
                    f,
                    m,
                    pattern,
                    budget,
                    |rows| {
                        let mut lifted = lifted.borrow_mut();
                        lifted.truncate(rows.len() - 1);
                        lifted.push(lift(rows.last().expect("nonempty prefix")));
                        let (last, earlier) = lifted.split_last().expect("just pushed");
                        earlier.iter().all(|r| {
                            let w = l.bracket(r, last).expect("ambient dims match");
                            linalg::is_zero_vector(f, &w)
                        })
                    },
                    |rows| {
                        let lifted = lifted.borrow();
                        debug_assert_eq!(lifted.len(), rows.len());
                        let s = Subspace::from_vectors(f, n, &lifted);
                        if l.is_ideal(&s) {
                            best = Some(match best.take() {
                                None => s,
                                Some(b) => min_canonical(b, s),
                            });
                        }
                        Ok(ControlFlow::Continue(()))
                    },
                )?;
                Ok(best)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(best) = canonical_min(hits) {
            return Ok(best);
        }
    }
    Ok(Subspace::zero(n))
}

fn min_canonical<F: Field>(a: Subspace<F>, b: Subspace<F>) -> Subspace<F> {
    if b.cmp_canonical(&a) == std::cmp::Ordering::Less {
        b
    } else {
        a
    }
}

fn canonical_min<F: Field>(hits: Vec<Option<Subspace<F>>>) -> Option<Subspace<F>> {
    hits.into_iter()
        .flatten()
        .reduce(|a, b| min_canonical(a, b))
}

/// Grow abelian subalgebras one line at a time from the zero subspace.
/// With `corridor` set, growth stays inside that subspace and only ideals
/// count as hits (the beta search); without it every node is a hit (the
/// alpha search). Pruning drops a branch only when the relevant
/// centralizer is strictly smaller than the best hit so far, which keeps
/// every canonical tie alive.
fn branch_bound<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
    corridor: Option<&Subspace<F>>,
) -> Result<Subspace<F>> {
    let n = l.dim();
    let mut best = Subspace::zero(n);
    let mut seen: HashSet<Vec<F::Elem>> = HashSet::new();
    let start = Subspace::zero(n);
    grow(l, budget, corridor, &start, &mut best, &mut seen)?;
    Ok(best)
}

fn grow<F: Field>(
    l: &LieAlgebra<F>,
    budget: &Budget,
    corridor: Option<&Subspace<F>>,
    node: &Subspace<F>,
    best: &mut Subspace<F>,
    seen: &mut HashSet<Vec<F::Elem>>,
) -> Result<()> {
    budget.charge(1)?;
    if !seen.insert(subspace_key(node)) {
        return Ok(());
    }
    let f = l.field();
    let is_hit = match corridor {
        None => true,
        Some(_) => node.is_zero() || l.is_ideal(node),
    };
    if is_hit {
        record(best, node.clone());
    }
    let c = centralizer(l, node);
    let reach = match corridor {
        None => c,
        Some(nil) => c.intersect(f, nil),
    };
    if reach.dim() < best.dim() {
        // Every abelian extension of this node lives inside `reach`, so
        // nothing here can beat the current best; ties survive because the
        // comparison is strict.
        return Ok(());
    }
    if corridor.is_none() && is_abelian_subspace(l, &reach) {
        // The centralizer itself is the unique largest abelian extension
        // along this branch.
        record(best, reach);
        return Ok(());
    }
    for v in line_representatives(f, &reach) {
        if node.contains_vector(f, &v) {
            continue;
        }
        let next = node.extended(f, &v);
        grow(l, budget, corridor, &next, best, seen)?;
    }
    Ok(())
}

fn record<F: Field>(best: &mut Subspace<F>, candidate: Subspace<F>) {
    if candidate.dim() > best.dim()
        || (candidate.dim() == best.dim()
            && candidate.cmp_canonical(best) == std::cmp::Ordering::Less)
    {
        *best = candidate;
    }
}
