//! Certified structure checks around maximal abelian ideals.

use std::ops::ControlFlow;

use liealg_core::enumerate::{pivot_patterns, scan_pattern, Budget};
use liealg_core::structure::{centralizer, quotient, series};
use liealg_core::{CoreError, Field, Flag, LieAlgebra, Subspace};

use crate::bounds::{BoundRow, SourceTag};
use crate::util::is_abelian_subspace;
use crate::{InvariantsError, Result};

#[derive(Debug, Clone)]
pub struct IdealCheckReport<F: Field> {
    /// The defining relation of maximal abelian ideals in supersolvable
    /// algebras: the ideal equals its own centralizer.
    pub centralizer_equals_ideal: bool,
    /// Over a finite field: whether enumeration proved no strictly larger
    /// abelian ideal contains this one. `None` over the rationals, where
    /// maximality stays caller-asserted.
    pub certified_maximal: Option<bool>,
    /// A strictly larger abelian ideal containing the given one, when the
    /// enumeration found one.
    pub larger: Option<Subspace<F>>,
    pub notes: Vec<String>,
}

/// Check a claimed maximal abelian ideal of a supersolvable algebra: the
/// centralizer relation always, plus certified maximality over finite
/// fields by enumerating quotient subspaces of the centralizer.
pub fn maximal_abelian_ideal_check<F: Field>(
    l: &LieAlgebra<F>,
    a: &Subspace<F>,
    budget: &Budget,
) -> Result<IdealCheckReport<F>> {
    let f = l.field();
    let report = series(l);
    if report.supersolvable != Some(true) {
        return Err(InvariantsError::Precondition(
            "the check applies to supersolvable algebras only".into(),
        ));
    }
    if !l.is_ideal(a) {
        return Err(InvariantsError::Core(CoreError::NotAnIdeal));
    }
    if !is_abelian_subspace(l, a) {
        return Err(InvariantsError::Precondition(
            "the given ideal is not abelian".into(),
        ));
    }

    let c = centralizer(l, a);
    let centralizer_equals_ideal = c.cmp_canonical(a) == std::cmp::Ordering::Equal;
    let mut notes = Vec::new();
    let mut larger = None;
    let certified_maximal = if f.elements().is_some() {
        // Any abelian ideal containing A centralizes A, so candidates are
        // preimages of nonzero subspaces of C_L(A)/A.
        let q = quotient(l, a)?;
        let cq = q.project_subspace(&c);
        let m = q.algebra.dim();
        'search: for k in 1..=cq.dim() {
            for pattern in pivot_patterns(m, k) {
                let mut found: Option<Subspace<F>> = None;
                let _ = scan_pattern(
                    f,
                    m,
                    &pattern,
                    budget,
                    |rows| rows.iter().all(|r| cq.contains_vector(f, r)),
                    |rows| {
                        let s = Subspace::from_vectors(f, m, rows);
                        let b = q.preimage_subspace(&s);
                        if is_abelian_subspace(l, &b) && l.is_ideal(&b) {
                            found = Some(b);
                            return Ok(ControlFlow::Break(()));
                        }
                        Ok(ControlFlow::Continue(()))
                    },
                )?;
                if let Some(b) = found {
                    notes.push(format!(
                        "a strictly larger abelian ideal of dimension {} contains the given one",
                        b.dim()
                    ));
                    larger = Some(b);
                    break 'search;
                }
            }
        }
        Some(larger.is_none())
    } else {
        notes.push("maximality is caller-asserted over the rationals".into());
        None
    };

    Ok(IdealCheckReport {
        centralizer_equals_ideal,
        certified_maximal,
        larger,
        notes,
    })
}

#[derive(Debug, Clone)]
pub struct TriangularReport<F: Field> {
    /// A full flag of ideals passing through the given ideal; its adapted
    /// basis lower-triangularizes the adjoint action.
    pub flag: Flag<F>,
    pub k: usize,
    pub dim_bound_holds: bool,
    pub derived_length_bound_holds: bool,
    pub rows: Vec<BoundRow>,
}

/// For a maximal abelian ideal A of dimension k in a supersolvable
/// algebra, exhibit a flag of ideals through A and check the structural
/// consequences: dim L <= k(k+3)/2 and derived length <= k + 1.
pub fn triangular_embedding_check<F: Field>(
    l: &LieAlgebra<F>,
    a: &Subspace<F>,
) -> Result<TriangularReport<F>> {
    let report = series(l);
    if report.supersolvable != Some(true) {
        return Err(InvariantsError::Precondition(
            "the check applies to supersolvable algebras only".into(),
        ));
    }
    if !l.is_ideal(a) {
        return Err(InvariantsError::Core(CoreError::NotAnIdeal));
    }
    if !is_abelian_subspace(l, a) {
        return Err(InvariantsError::Precondition(
            "the given ideal is not abelian".into(),
        ));
    }
    let flag = liealg_core::ideals::flag_through(l, a)?.ok_or_else(|| {
        InvariantsError::Core(CoreError::Unsupported(
            "no full flag of ideals passes through the given ideal".into(),
        ))
    })?;
    debug_assert!(flag.members.iter().all(|s| l.is_ideal(s)));

    let n = l.dim();
    let k = a.dim();
    let mut rows = Vec::new();
    let dim_cap = k * (k + 3) / 2;
    let dim_bound_holds = n <= dim_cap;
    rows.push(BoundRow {
        text: format!(
            "dim L = {n} {} k(k+3)/2 = {dim_cap} with k = dim A = {k}",
            if dim_bound_holds { "<=" } else { ">" }
        ),
        source: SourceTag::Cor2_7,
    });
    let dl = report.derived_length.unwrap_or(usize::MAX);
    let derived_length_bound_holds = dl <= k + 1;
    rows.push(BoundRow {
        text: format!(
            "derived length {dl} {} k + 1 = {}",
            if derived_length_bound_holds { "<=" } else { ">" },
            k + 1
        ),
        source: SourceTag::Cor2_7,
    });

    Ok(TriangularReport {
        flag,
        k,
        dim_bound_holds,
        derived_length_bound_holds,
        rows,
    })
}
