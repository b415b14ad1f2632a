//! Randomized consistency properties linking the searches, the greedy
//! witness, the bounds report, and the classification.

use liealg_catalog::{random_metabelian_split, random_nilpotent, random_supersolvable};
use liealg_core::{Budget, LieAlgebra, PrimeField, DEFAULT_BUDGET};
use liealg_invariants::util::is_abelian_subspace;
use liealg_invariants::{
    alpha_exact, beta_exact, bounds, classify_codim2, greedy_abelian_witness, BetaPrediction,
    InvariantsError, Strategy,
};
use proptest::prelude::*;

fn budget() -> Budget {
    Budget::new(DEFAULT_BUDGET)
}

fn sample(kind: usize, dim: usize, p: u64, seed: u64) -> Option<LieAlgebra<PrimeField>> {
    match kind {
        0 => random_nilpotent(dim, p, seed).ok(),
        1 => random_supersolvable(dim, p, seed).ok().map(|(l, _)| l),
        _ => random_metabelian_split(dim, dim / 2, p, seed).ok(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn alpha_dominates_beta_and_witnesses_are_valid(
        seed in 0u64..100_000,
        dim in 3usize..=5,
        p in prop::sample::select(vec![2u64, 3]),
        kind in 0usize..3,
    ) {
        let Some(l) = sample(kind, dim, p, seed) else { return Ok(()); };
        let a = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        let b = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        prop_assert!(a.value >= b.value);
        prop_assert_eq!(a.witness.dim(), a.value);
        prop_assert_eq!(b.witness.dim(), b.value);
        prop_assert!(is_abelian_subspace(&l, &a.witness));
        prop_assert!(is_abelian_subspace(&l, &b.witness));
        prop_assert!(l.is_ideal(&b.witness));
    }

    #[test]
    fn greedy_never_exceeds_alpha(
        seed in 0u64..100_000,
        dim in 3usize..=5,
        p in prop::sample::select(vec![2u64, 3]),
        kind in 0usize..3,
    ) {
        let Some(l) = sample(kind, dim, p, seed) else { return Ok(()); };
        let w = greedy_abelian_witness(&l);
        prop_assert!(is_abelian_subspace(&l, &w));
        let a = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        prop_assert!(w.dim() <= a.value);
    }

    #[test]
    fn strategies_agree_on_values_and_witnesses(
        seed in 0u64..100_000,
        dim in 3usize..=5,
        p in prop::sample::select(vec![2u64, 3]),
        kind in 0usize..3,
    ) {
        let Some(l) = sample(kind, dim, p, seed) else { return Ok(()); };
        let ae = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        let ab = alpha_exact(&l, Strategy::BranchBound, &budget()).unwrap();
        prop_assert_eq!(ae.value, ab.value);
        prop_assert_eq!(ae.witness.cmp_canonical(&ab.witness), std::cmp::Ordering::Equal);
        let be = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        let bb = beta_exact(&l, Strategy::BranchBound, &budget()).unwrap();
        prop_assert_eq!(be.value, bb.value);
        prop_assert_eq!(be.witness.cmp_canonical(&bb.witness), std::cmp::Ordering::Equal);
    }

    #[test]
    fn bounds_sandwich_the_exact_values(
        seed in 0u64..100_000,
        dim in 3usize..=5,
        p in prop::sample::select(vec![2u64, 3]),
        kind in 0usize..3,
    ) {
        let Some(l) = sample(kind, dim, p, seed) else { return Ok(()); };
        let a = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        let b = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        let report = bounds(&l, &budget());
        prop_assert!(report.alpha_lo <= a.value, "alpha_lo {} > alpha {}", report.alpha_lo, a.value);
        prop_assert!(a.value <= report.alpha_hi, "alpha {} > alpha_hi {}", a.value, report.alpha_hi);
        prop_assert!(report.beta_lo <= b.value, "beta_lo {} > beta {}", report.beta_lo, b.value);
        prop_assert!(b.value <= report.beta_hi, "beta {} > beta_hi {}", b.value, report.beta_hi);
        if let Some((ea, eb)) = &report.exact {
            prop_assert_eq!(ea.value, a.value);
            prop_assert_eq!(eb.value, b.value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn classification_prediction_matches_exact_beta(
        seed in 0u64..100_000,
        dim in 4usize..=5,
        kind in 0usize..3,
    ) {
        let Some(l) = sample(kind, dim, 3, seed) else { return Ok(()); };
        let a = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        if a.value != dim - 2 {
            return Ok(());
        }
        let b = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
        match classify_codim2(&l, &a.witness, &budget()) {
            Ok(report) => match report.beta_prediction {
                BetaPrediction::Exact(v) => prop_assert_eq!(v, b.value),
                BetaPrediction::AtMost(v) => prop_assert!(b.value <= v),
            },
            Err(InvariantsError::TheoremViolation { details }) => {
                prop_assert!(false, "no case matched for {}: {}", l.name(), details.join("; "));
            }
            Err(other) => {
                prop_assert!(false, "unexpected error for {}: {other}", l.name());
            }
        }
    }
}
