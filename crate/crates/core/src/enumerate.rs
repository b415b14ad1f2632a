//! Exhaustive enumeration of subspaces of F^n over a finite field, in a
//! deterministic canonical order. Every k-dimensional subspace has a unique
//! reduced echelon basis matrix, classified by its pivot-column pattern;
//! patterns are visited in lexicographic order and, within a pattern, the
//! free entries run through an odometer whose sequence coincides with
//! lexicographic order on the flattened matrices (entries 0 < 1 < ... < p-1).
//!
//! Work is metered by a shared budget: one unit per completed row
//! assignment. Callers can refuse up front via `gaussian_binomial`.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use num::BigUint;

use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::linalg::Vector;

/// Shared visit meter. Exceeding the limit aborts the enumeration with
/// `BudgetExceeded`; the error carries the limit, not the live counter, so
/// reports stay deterministic under parallel partitioning.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, amount: u64) -> Result<()> {
        let before = self.used.fetch_add(amount, Ordering::Relaxed);
        if before + amount > self.limit {
            Err(CoreError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }

    /// Refuse up front when a known candidate count already exceeds the
    /// remaining allowance.
    pub fn refuse_if_over(&self, candidates: &BigUint) -> Result<()> {
        let remaining = self.limit - self.used().min(self.limit);
        if candidates > &BigUint::from(remaining) {
            Err(CoreError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Number of k-dimensional subspaces of F_p^n.
pub fn gaussian_binomial(p: u64, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let p = BigUint::from(p);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1u32;
        den *= p.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// All strictly increasing k-tuples from 0..n, lexicographically.
pub fn pivot_patterns(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance the combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Scan every reduced-echelon matrix with the given pivot pattern.
///
/// `prefix_ok(rows)` runs after each row is filled (rows[..=r] complete);
/// returning false prunes every matrix extending that prefix. `leaf` runs
/// on complete matrices and may stop the pattern early with `Break`.
/// Row entries at free positions take each field element in ascending
/// order, rightmost position varying fastest, which makes the visit order
/// the lexicographic order of the flattened matrices.
pub fn scan_pattern<F, P, L>(
    f: &F,
    n: usize,
    pattern: &[usize],
    budget: &Budget,
    mut prefix_ok: P,
    mut leaf: L,
) -> Result<ControlFlow<()>>
where
    F: Field,
    P: FnMut(&[Vector<F>]) -> bool,
    L: FnMut(&[Vector<F>]) -> Result<ControlFlow<()>>,
{
    let elements = f
        .elements()
        .ok_or_else(|| CoreError::Unsupported("subspace enumeration needs a finite field".into()))?;
    let k = pattern.len();
    let mut rows: Vec<Vector<F>> = Vec::with_capacity(k);
    // Free columns of row r: columns after pattern[r] that are not pivots.
    let free_cols: Vec<Vec<usize>> = (0..k)
        .map(|r| {
            ((pattern[r] + 1)..n)
                .filter(|c| !pattern.contains(c))
                .collect()
        })
        .collect();
    fill_row(
        f,
        n,
        pattern,
        &free_cols,
        &elements,
        budget,
        &mut rows,
        0,
        &mut prefix_ok,
        &mut leaf,
    )
}

#[allow(clippy::too_many_arguments)]
fn fill_row<F, P, L>(
    f: &F,
    n: usize,
    pattern: &[usize],
    free_cols: &[Vec<usize>],
    elements: &[F::Elem],
    budget: &Budget,
    rows: &mut Vec<Vector<F>>,
    r: usize,
    prefix_ok: &mut P,
    leaf: &mut L,
) -> Result<ControlFlow<()>>
where
    F: Field,
    P: FnMut(&[Vector<F>]) -> bool,
    L: FnMut(&[Vector<F>]) -> Result<ControlFlow<()>>,
{
    let k = pattern.len();
    if r == k {
        return leaf(rows);
    }
    let free = &free_cols[r];
    let mut row = crate::linalg::zero_vector(f, n);
    row[pattern[r]] = f.one();
    rows.push(row);
    // odometer over the free entries, last position fastest
    let mut digits = vec![0usize; free.len()];
    'outer: loop {
        budget.charge(1)?;
        {
            let row = rows.last_mut().expect("just pushed");
            for (d, &c) in digits.iter().zip(free) {
                row[c] = elements[*d].clone();
            }
        }
        if prefix_ok(rows) {
            if let ControlFlow::Break(()) = fill_row(
                f, n, pattern, free_cols, elements, budget, rows, r + 1, prefix_ok, leaf,
            )? {
                rows.pop();
                return Ok(ControlFlow::Break(()));
            }
        }
        // increment
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                continue 'outer;
            }
            digits[pos] = 0;
        }
        break;
    }
    rows.pop();
    Ok(ControlFlow::Continue(()))
}

/// Convenience: visit every k-dimensional subspace matrix (all patterns,
/// sequentially, patterns in lexicographic order). A `Break` from the
/// leaf ends the whole scan, not just the current pattern.
pub fn scan_dimension<F, P, L>(
    f: &F,
    n: usize,
    k: usize,
    budget: &Budget,
    mut prefix_ok: P,
    mut leaf: L,
) -> Result<ControlFlow<()>>
where
    F: Field,
    P: FnMut(&[Vector<F>]) -> bool,
    L: FnMut(&[Vector<F>]) -> Result<ControlFlow<()>>,
{
    for pattern in pivot_patterns(n, k) {
        if scan_pattern(f, n, &pattern, budget, &mut prefix_ok, &mut leaf)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::subspace::Subspace;
    use std::collections::BTreeSet;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gaussian_binomial_small_values() {
        assert_eq!(gaussian_binomial(2, 3, 1), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(3, 4, 2), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(5, 4, 4), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(5, 2, 3), BigUint::from(0u32));
    }

    #[test]
    fn pattern_enumeration_is_lexicographic() {
        assert_eq!(
            pivot_patterns(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(pivot_patterns(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn scan_visits_every_subspace_exactly_once() {
        let f = fp(3);
        let n = 4;
        let k = 2;
        let budget = Budget::new(1_000_000);
        let mut seen = BTreeSet::new();
        let mut count = 0u32;
        let _ = scan_dimension(
            &f,
            n,
            k,
            &budget,
            |_| true,
            |rows| {
                count += 1;
                let s = Subspace::from_vectors(&f, n, rows);
                assert_eq!(s.dim(), k);
                // already canonical: round-tripping must not change rows
                assert_eq!(s.rows(), rows);
                assert!(seen.insert(format!("{rows:?}")));
                Ok(ControlFlow::Continue(()))
            },
        )
        .unwrap();
        assert_eq!(BigUint::from(count), gaussian_binomial(3, 4, 2));
    }

    #[test]
    fn within_pattern_order_is_matrix_lex() {
        let f = fp(3);
        let budget = Budget::new(10_000);
        let mut flat: Vec<Vec<u64>> = Vec::new();
        let _ = scan_pattern(
            &f,
            4,
            &[0, 2],
            &budget,
            |_| true,
            |rows| {
                flat.push(rows.iter().flatten().copied().collect());
                Ok(ControlFlow::Continue(()))
            },
        )
        .unwrap();
        let mut sorted = flat.clone();
        sorted.sort();
        assert_eq!(flat, sorted);
        assert_eq!(flat.len(), 27);
    }

    #[test]
    fn budget_violation_reports_limit() {
        let f = fp(3);
        let budget = Budget::new(5);
        let err = scan_dimension(&f, 4, 2, &budget, |_| true, |_| Ok(ControlFlow::Continue(())))
            .unwrap_err();
        assert_eq!(err, CoreError::BudgetExceeded { budget: 5 });
    }

    #[test]
    fn prefix_pruning_skips_extensions() {
        let f = fp(2);
        let budget = Budget::new(10_000);
        let mut leaves = 0;
        let _ = scan_dimension(
            &f,
            3,
            2,
            &budget,
            |rows| rows[0][2] == 0,
            |_| {
                leaves += 1;
                Ok(ControlFlow::Continue(()))
            },
        )
        .unwrap();
        // 7 total 2-dim subspaces of F_2^3; those whose first canonical row
        // has a nonzero last entry are pruned.
        assert!(leaves < 7);
        assert!(leaves > 0);
    }
}
