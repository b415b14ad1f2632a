//! Finite-dimensional Lie algebras presented by structure constants: for
//! basis vectors e_i, e_j with i < j the table stores [e_i, e_j] as a
//! sparse linear combination. Brackets with i > j follow by antisymmetry
//! and [e_i, e_i] = 0.

use std::collections::BTreeMap;

use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix, Vector};
use crate::subspace::{format_combination, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra<F: Field> {
    name: String,
    field: F,
    dim: usize,
    /// Keys are 0-based pairs (i, j) with i < j; values are sparse vectors
    /// sorted by index with no zero coefficients.
    table: BTreeMap<(usize, usize), Vec<(usize, F::Elem)>>,
}

impl<F: Field> LieAlgebra<F> {
    pub fn new(field: F, dim: usize, name: impl Into<String>) -> Self {
        LieAlgebra {
            name: name.into(),
            field,
            dim,
            table: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Define [e_i, e_j] for 0-based i < j. Replaces any previous value.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, F::Elem)]) -> Result<()> {
        if i >= j {
            return Err(CoreError::BadTableEntry(format!(
                "bracket indices must satisfy i < j, got ({}, {})",
                i + 1,
                j + 1
            )));
        }
        if j >= self.dim {
            return Err(CoreError::BadTableEntry(format!(
                "basis index e{} exceeds dimension {}",
                j + 1,
                self.dim
            )));
        }
        let mut sparse: Vec<(usize, F::Elem)> = Vec::new();
        for (k, c) in terms {
            if *k >= self.dim {
                return Err(CoreError::BadTableEntry(format!(
                    "product index e{} exceeds dimension {}",
                    k + 1,
                    self.dim
                )));
            }
            if sparse.iter().any(|(k2, _)| k2 == k) {
                return Err(CoreError::BadTableEntry(format!(
                    "duplicate product index e{} in [e{}, e{}]",
                    k + 1,
                    i + 1,
                    j + 1
                )));
            }
            if !self.field.is_zero(c) {
                sparse.push((*k, c.clone()));
            }
        }
        sparse.sort_by_key(|(k, _)| *k);
        if sparse.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), sparse);
        }
        Ok(())
    }

    /// Sparse form of [e_i, e_j] for i < j; empty slice when zero.
    pub fn table_entry(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        debug_assert!(i < j);
        self.table.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }

    pub fn table(&self) -> &BTreeMap<(usize, usize), Vec<(usize, F::Elem)>> {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// [e_i, e_j] as a dense vector, any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector<F> {
        let f = &self.field;
        let mut out = linalg::zero_vector(f, self.dim);
        if i == j {
            return out;
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        for (k, c) in self.table_entry(a, b) {
            out[*k] = if flip { f.neg(c) } else { c.clone() };
        }
        out
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vector<F>> {
        if x.len() != self.dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let f = &self.field;
        let mut out = linalg::zero_vector(f, self.dim);
        for ((i, j), terms) in &self.table {
            // coefficient of [e_i, e_j] in [x, y] is x_i y_j - x_j y_i
            let c = f.sub(&f.mul(&x[*i], &y[*j]), &f.mul(&x[*j], &y[*i]));
            if !f.is_zero(&c) {
                for (k, a) in terms {
                    out[*k] = f.add(&out[*k], &f.mul(&c, a));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of ad(x): columns are [x, e_j] so that ad(x) * v = [x, v].
    pub fn ad_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let n = self.dim;
        let mut m = vec![linalg::zero_vector(f, n); n];
        for j in 0..n {
            let col = self
                .bracket(x, &linalg::unit_vector(f, n, j))
                .expect("x checked against ambient dimension");
            for (r, entry) in col.into_iter().enumerate() {
                m[r][j] = entry;
            }
        }
        m
    }

    pub fn ad_basis_matrix(&self, i: usize) -> Matrix<F> {
        self.ad_matrix(&linalg::unit_vector(&self.field, self.dim, i))
    }

    /// Check the Jacobi identity over every basis triple i < j < k.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.field;
        let n = self.dim;
        let mut failures = Vec::new();
        let unit = |i| linalg::unit_vector(f, n, i);
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let t1 = self
                        .bracket(&self.bracket_basis(i, j), &unit(k))
                        .expect("basis vectors have ambient length");
                    let t2 = self
                        .bracket(&self.bracket_basis(j, k), &unit(i))
                        .expect("basis vectors have ambient length");
                    let t3 = self
                        .bracket(&self.bracket_basis(k, i), &unit(j))
                        .expect("basis vectors have ambient length");
                    let defect = linalg::vec_add(f, &linalg::vec_add(f, &t1, &t2), &t3);
                    if !linalg::is_zero_vector(f, &defect) {
                        failures.push(JacobiFailure {
                            triple: (i + 1, j + 1, k + 1),
                            defect: format_combination::<F>(&defect),
                        });
                    }
                }
            }
        }
        ValidationReport {
            jacobi_failures: failures,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().jacobi_failures.is_empty()
    }

    /// Direct sum on concatenated bases; all cross brackets vanish.
    pub fn direct_sum(&self, other: &LieAlgebra<F>, name: impl Into<String>) -> LieAlgebra<F> {
        debug_assert_eq!(self.field, other.field);
        let mut sum = LieAlgebra::new(self.field.clone(), self.dim + other.dim, name);
        for ((i, j), terms) in &self.table {
            sum.table.insert((*i, *j), terms.clone());
        }
        let off = self.dim;
        for ((i, j), terms) in &other.table {
            let shifted = terms.iter().map(|(k, c)| (k + off, c.clone())).collect();
            sum.table.insert((i + off, j + off), shifted);
        }
        sum
    }

    /// The bracket of two subspaces, span{[u, v]}.
    pub fn bracket_span(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut products = Vec::new();
        for u in a.rows() {
            for v in b.rows() {
                products.push(self.bracket(u, v).expect("subspace rows have ambient length"));
            }
        }
        Subspace::from_vectors(&self.field, self.dim, &products)
    }

    pub fn derived_subalgebra(&self) -> Subspace<F> {
        let full = Subspace::full(&self.field, self.dim);
        self.bracket_span(&full, &full)
    }

    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(&self.field, self.dim)
    }

    /// Is the span of these rows closed under the bracket?
    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        let rows = s.rows();
        for (a, u) in rows.iter().enumerate() {
            for v in &rows[a + 1..] {
                let w = self.bracket(u, v).expect("rows have ambient length");
                if !s.contains_vector(&self.field, &w) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        let f = &self.field;
        for i in 0..self.dim {
            let e = linalg::unit_vector(f, self.dim, i);
            for v in s.rows() {
                let w = self.bracket(&e, v).expect("rows have ambient length");
                if !s.contains_vector(f, &w) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian_subspace(&self, s: &Subspace<F>) -> bool {
        let rows = s.rows();
        for (a, u) in rows.iter().enumerate() {
            for v in &rows[a + 1..] {
                let w = self.bracket(u, v).expect("rows have ambient length");
                if !linalg::is_zero_vector(&self.field, &w) {
                    return false;
                }
            }
        }
        true
    }
}

/// Outcome of the basis-triple Jacobi check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub jacobi_failures: Vec<JacobiFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.jacobi_failures.is_empty()
    }
}

/// A basis triple (1-based) whose Jacobi sum is nonzero, with the sum.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: String,
}
