//! Derivations: linear maps with D[x,y] = [Dx,y] + [x,Dy]. Used to build
//! split extensions; the chain-preserving variant keeps a chosen chain of
//! subspaces invariant.

use crate::algebra::LieAlgebra;
use crate::field::Field;
use crate::linalg::{self, Matrix, Vector};
use crate::subspace::Subspace;

/// Basis of the derivation algebra. Matrices follow the adjoint
/// convention: column j holds the coordinates of D e_j.
pub fn derivation_space<F: Field>(l: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    solve_derivations(l, &[])
}

/// Derivations mapping every chain member into itself.
pub fn chain_preserving_derivations<F: Field>(
    l: &LieAlgebra<F>,
    chain: &[Subspace<F>],
) -> Vec<Matrix<F>> {
    solve_derivations(l, chain)
}

/// Apply a derivation matrix to a vector.
pub fn apply<F: Field>(f: &F, d: &[Vec<F::Elem>], v: &[F::Elem]) -> Vector<F> {
    linalg::mat_vec_mul(f, d, v)
}

pub fn is_derivation<F: Field>(l: &LieAlgebra<F>, d: &[Vec<F::Elem>]) -> bool {
    let f = l.field();
    let n = l.dim();
    let column = |j: usize| -> Vector<F> { (0..n).map(|r| d[r][j].clone()).collect() };
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = linalg::mat_vec_mul(f, d, &l.bracket_basis(i, j));
            let e_i = linalg::unit_vector(f, n, i);
            let e_j = linalg::unit_vector(f, n, j);
            let rhs = linalg::vec_add(
                f,
                &l.bracket(&column(i), &e_j).expect("dims match"),
                &l.bracket(&e_i, &column(j)).expect("dims match"),
            );
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Unknowns are the n^2 entries D[r][s] flattened row-major. For each
/// basis pair i < j and each coordinate k, the Leibniz rule gives one
/// linear constraint; chain members contribute invariance constraints.
fn solve_derivations<F: Field>(l: &LieAlgebra<F>, chain: &[Subspace<F>]) -> Vec<Matrix<F>> {
    let f = l.field();
    let n = l.dim();
    let brackets: Vec<Vec<Vector<F>>> = (0..n)
        .map(|a| (0..n).map(|b| l.bracket_basis(a, b)).collect())
        .collect();
    let mut system: Matrix<F> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let mut row = linalg::zero_vector(f, n * n);
                for m in 0..n {
                    row[k * n + m] = f.add(&row[k * n + m], &brackets[i][j][m]);
                }
                for r in 0..n {
                    let a = f.sub(&row[r * n + i], &brackets[r][j][k]);
                    row[r * n + i] = a;
                    let b = f.sub(&row[r * n + j], &brackets[i][r][k]);
                    row[r * n + j] = b;
                }
                if !linalg::is_zero_vector(f, &row) {
                    system.push(row);
                }
            }
        }
    }
    for member in chain {
        let constraints = member.membership_constraints(f);
        for v in member.rows() {
            for phi in &constraints {
                let mut row = linalg::zero_vector(f, n * n);
                for k in 0..n {
                    for (s, vs) in v.iter().enumerate() {
                        row[k * n + s] = f.mul(&phi[k], vs);
                    }
                }
                if !linalg::is_zero_vector(f, &row) {
                    system.push(row);
                }
            }
        }
    }
    let kernel = linalg::nullspace(f, &system, n * n);
    kernel
        .into_iter()
        .map(|flat| (0..n).map(|r| flat[r * n..(r + 1) * n].to_vec()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn heisenberg3<F: Field>(f: F) -> LieAlgebra<F> {
        let one = f.one();
        let mut l = LieAlgebra::new(f, 3, "h3");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l
    }

    #[test]
    fn abelian_derivations_are_all_matrices() {
        let l = LieAlgebra::new(Rationals, 3, "a3");
        assert_eq!(derivation_space(&l).len(), 9);
    }

    #[test]
    fn heisenberg_derivation_algebra_has_dimension_six() {
        let l = heisenberg3(Rationals);
        let ds = derivation_space(&l);
        assert_eq!(ds.len(), 6);
        assert!(ds.iter().all(|d| is_derivation(&l, d)));
    }

    #[test]
    fn adjoint_maps_are_derivations() {
        let f = PrimeField::new(5).unwrap();
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        for i in 0..3 {
            assert!(is_derivation(&l, &l.ad_basis_matrix(i)));
        }
    }

    /// Over the rationals every derivation of sl2 is inner, so the
    /// derivation algebra is three-dimensional.
    #[test]
    fn sl2_derivations_are_inner() {
        let f = Rationals;
        let one = f.one();
        let two = f.from_int(2);
        let neg_two = f.from_int(-2);
        let mut l = LieAlgebra::new(f, 3, "sl2");
        l.set_bracket(0, 1, &[(2, one)]).unwrap();
        l.set_bracket(0, 2, &[(0, neg_two)]).unwrap();
        l.set_bracket(1, 2, &[(1, two)]).unwrap();
        assert_eq!(derivation_space(&l).len(), 3);
    }

    #[test]
    fn chain_constraints_cut_the_space_down() {
        let l = heisenberg3(Rationals);
        let f = l.field();
        let chain = vec![
            Subspace::from_vectors(f, 3, &[linalg::unit_vector(f, 3, 2)]),
            Subspace::from_vectors(
                f,
                3,
                &[linalg::unit_vector(f, 3, 1), linalg::unit_vector(f, 3, 2)],
            ),
        ];
        let ds = chain_preserving_derivations(&l, &chain);
        assert_eq!(ds.len(), 5);
        for d in &ds {
            assert!(is_derivation(&l, d));
            for member in &chain {
                for v in member.rows() {
                    assert!(member.contains_vector(f, &apply(f, d, v)));
                }
            }
        }
    }
}
