//! Exact-search behavior on the catalog algebras, cross-checked against
//! the brute-force oracle and between strategies.

use liealg_catalog::{
    abelian, example_3_1, example_3_2, example_4_1, heisenberg, random_nilpotent,
    random_supersolvable, sl2,
};
use liealg_core::enumerate::{Budget, DEFAULT_BUDGET};
use liealg_core::linalg;
use liealg_core::{LieAlgebra, PrimeField, Subspace};
use liealg_invariants::util::is_abelian_subspace;
use liealg_invariants::{alpha_exact, beta_exact, InvariantsError, Strategy};
use liealg_testkit::{naive_alpha_witness, naive_beta_witness};

fn budget() -> Budget {
    Budget::new(DEFAULT_BUDGET)
}

fn unit_span(f: &PrimeField, n: usize, indices: &[usize]) -> Subspace<PrimeField> {
    let rows: Vec<Vec<u64>> = indices
        .iter()
        .map(|&i| linalg::unit_vector(f, n, i))
        .collect();
    Subspace::from_vectors(f, n, &rows)
}

#[test]
fn abelian_algebras_have_full_invariants() {
    let f = PrimeField::new(3).unwrap();
    for n in 0..4 {
        let l = abelian(&f, n);
        for strategy in [Strategy::Exhaustive, Strategy::BranchBound] {
            let a = alpha_exact(&l, strategy, &budget()).unwrap();
            let b = beta_exact(&l, strategy, &budget()).unwrap();
            assert_eq!(a.value, n);
            assert_eq!(b.value, n);
            assert!(a.exact && b.exact);
        }
    }
}

#[test]
fn exact_search_refuses_the_rationals() {
    let l = heisenberg(&liealg_core::Rationals, 1);
    let err = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap_err();
    match err {
        InvariantsError::Core(liealg_core::CoreError::Unsupported(text)) => {
            assert!(text.contains("bounds"), "message guides to bounds: {text}");
        }
        other => panic!("expected an unsupported-field refusal, got {other:?}"),
    }
}

#[test]
fn characteristic_two_example_has_alpha_six_with_canonical_witness() {
    let f = PrimeField::new(2).unwrap();
    let l = example_4_1(&f).unwrap();
    let cert = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(cert.value, 6);
    // The canonically least maximal abelian subalgebra is
    // span(e4, e5, e6, e7, e8, e9).
    let expected = unit_span(&f, 9, &[3, 4, 5, 6, 7, 8]);
    assert_eq!(cert.witness.cmp_canonical(&expected), std::cmp::Ordering::Equal);

    let bnb = alpha_exact(&l, Strategy::BranchBound, &budget()).unwrap();
    assert_eq!(bnb.value, 6);
    assert_eq!(bnb.witness.cmp_canonical(&expected), std::cmp::Ordering::Equal);
}

#[test]
fn characteristic_two_example_has_beta_five_with_unique_witness() {
    let f = PrimeField::new(2).unwrap();
    let l = example_4_1(&f).unwrap();
    let cert = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(cert.value, 5);
    // The unique maximal abelian ideal is span(e2, e6, e7, e8, e9).
    let expected = unit_span(&f, 9, &[1, 5, 6, 7, 8]);
    assert_eq!(cert.witness.cmp_canonical(&expected), std::cmp::Ordering::Equal);
    assert!(l.is_ideal(&cert.witness));

    let bnb = beta_exact(&l, Strategy::BranchBound, &budget()).unwrap();
    assert_eq!(bnb.value, 5);
    assert_eq!(bnb.witness.cmp_canonical(&expected), std::cmp::Ordering::Equal);
}

#[test]
fn simple_algebra_has_alpha_one_beta_zero() {
    let f = PrimeField::new(5).unwrap();
    let l = sl2(&f);
    let a = alpha_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
    let b = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(a.value, 1);
    assert_eq!(b.value, 0);
    assert!(b.witness.is_zero());
}

#[test]
fn first_solvable_example_invariants_depend_on_the_prime() {
    // Over F_7 the ad action on the plane has no eigenvector (-1 is not a
    // square), so the only abelian ideals are inside the last coordinate.
    let f7 = PrimeField::new(7).unwrap();
    let l7 = example_3_1(&f7);
    assert_eq!(alpha_exact(&l7, Strategy::Exhaustive, &budget()).unwrap().value, 2);
    let b7 = beta_exact(&l7, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(b7.value, 1);
    assert_eq!(
        b7.witness.cmp_canonical(&unit_span(&f7, 4, &[3])),
        std::cmp::Ordering::Equal
    );

    // Over F_5 the element -1 = 2^2 is a square, so e2 + 2 e3 spans an
    // eigenline and beta jumps to 2.
    let f5 = PrimeField::new(5).unwrap();
    let l5 = example_3_1(&f5);
    assert_eq!(alpha_exact(&l5, Strategy::Exhaustive, &budget()).unwrap().value, 2);
    let b5 = beta_exact(&l5, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(b5.value, 2);
    assert!(l5.is_ideal(&b5.witness));
    assert!(is_abelian_subspace(&l5, &b5.witness));
}

#[test]
fn second_solvable_example_invariants_depend_on_the_prime() {
    let f7 = PrimeField::new(7).unwrap();
    let l7 = example_3_2(&f7);
    assert_eq!(alpha_exact(&l7, Strategy::Exhaustive, &budget()).unwrap().value, 2);
    assert_eq!(beta_exact(&l7, Strategy::Exhaustive, &budget()).unwrap().value, 1);

    let f5 = PrimeField::new(5).unwrap();
    let l5 = example_3_2(&f5);
    assert_eq!(alpha_exact(&l5, Strategy::Exhaustive, &budget()).unwrap().value, 2);
    assert_eq!(beta_exact(&l5, Strategy::Exhaustive, &budget()).unwrap().value, 2);
}

fn check_against_oracle(l: &LieAlgebra<PrimeField>, label: &str) {
    let (na, wa) = naive_alpha_witness(l);
    let (nb, wb) = naive_beta_witness(l);
    for strategy in [Strategy::Exhaustive, Strategy::BranchBound] {
        let a = alpha_exact(l, strategy, &budget()).unwrap();
        let b = beta_exact(l, strategy, &budget()).unwrap();
        assert_eq!(a.value, na, "{label}: alpha vs oracle ({strategy:?})");
        assert_eq!(b.value, nb, "{label}: beta vs oracle ({strategy:?})");
        assert_eq!(a.witness.rows(), &wa[..], "{label}: alpha witness ({strategy:?})");
        assert_eq!(b.witness.rows(), &wb[..], "{label}: beta witness ({strategy:?})");
    }
}

#[test]
fn searches_match_the_oracle_on_fixed_algebras() {
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    check_against_oracle(&heisenberg(&f3, 1), "heisenberg(1)/F_3");
    check_against_oracle(&heisenberg(&f2, 2), "heisenberg(2)/F_2");
    check_against_oracle(&sl2(&f3), "sl2/F_3");
    check_against_oracle(&liealg_catalog::strictly_triangular(&f3, 3), "n(3)/F_3");
    check_against_oracle(&liealg_catalog::triangular(&f2, 2), "t(2)/F_2");
}

#[test]
fn searches_match_the_oracle_on_random_algebras() {
    for seed in 0..6u64 {
        let l = random_nilpotent(4, 3, seed).unwrap();
        check_against_oracle(&l, &format!("random nilpotent seed {seed}"));
        let (l, _) = random_supersolvable(4, 3, seed).unwrap();
        check_against_oracle(&l, &format!("random supersolvable seed {seed}"));
        let l = random_nilpotent(5, 2, seed).unwrap();
        check_against_oracle(&l, &format!("random nilpotent F_2 seed {seed}"));
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let f = PrimeField::new(2).unwrap();
    let l = example_4_1(&f).unwrap();
    let tiny = Budget::new(10);
    let err = alpha_exact(&l, Strategy::Exhaustive, &tiny).unwrap_err();
    match err {
        InvariantsError::Core(liealg_core::CoreError::BudgetExceeded { budget }) => {
            assert_eq!(budget, 10);
        }
        other => panic!("expected budget exhaustion, got {other:?}"),
    }
}

#[test]
fn beta_search_stays_inside_the_nilradical() {
    // The nilradical of this solvable algebra is a proper corridor: the
    // scan in its coordinates must still find the same answer as the
    // oracle, which scans everything.
    let f = PrimeField::new(3).unwrap();
    let l = example_3_1(&f);
    let (nb, wb) = naive_beta_witness(&l);
    let b = beta_exact(&l, Strategy::Exhaustive, &budget()).unwrap();
    assert_eq!(b.value, nb);
    assert_eq!(b.witness.rows(), &wb[..]);
}
