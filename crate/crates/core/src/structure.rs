//! Structural operations: centralizers, closures, quotients, derived and
//! lower central series, and the largest ideal inside a subspace.

use crate::algebra::LieAlgebra;
use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::ideals;
use crate::linalg::{self, Matrix, Vector};
use crate::subspace::Subspace;

/// {x in L : [x, v] = 0 for all v in s}.
pub fn centralizer<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    let f = l.field();
    let mut constraints: Matrix<F> = Vec::new();
    for v in s.rows() {
        constraints.extend(l.ad_matrix(v));
    }
    let basis = linalg::nullspace(f, &constraints, l.dim());
    Subspace::from_vectors(f, l.dim(), &basis)
}

pub fn center<F: Field>(l: &LieAlgebra<F>) -> Subspace<F> {
    centralizer(l, &l.full_space())
}

/// Smallest subalgebra containing the given vectors.
pub fn subalgebra_closure<F: Field>(l: &LieAlgebra<F>, seed: &[Vector<F>]) -> Subspace<F> {
    let f = l.field();
    let mut span = Subspace::from_vectors(f, l.dim(), seed);
    loop {
        let mut vecs: Vec<Vector<F>> = span.rows().to_vec();
        let before = span.dim();
        let rows = span.rows();
        for (a, u) in rows.iter().enumerate() {
            for v in &rows[a + 1..] {
                vecs.push(l.bracket(u, v).expect("rows have ambient length"));
            }
        }
        span = Subspace::from_vectors(f, l.dim(), &vecs);
        if span.dim() == before {
            return span;
        }
    }
}

/// Largest ideal of L contained in s: the limit of
/// I_0 = s, I_{t+1} = {x in I_t : [L, x] subset of I_t}.
pub fn core_of<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    let f = l.field();
    let n = l.dim();
    let ads: Vec<Matrix<F>> = (0..n).map(|i| l.ad_basis_matrix(i)).collect();
    let mut current = s.clone();
    loop {
        let member = current.membership_constraints(f);
        let mut constraints = member.clone();
        for ad in &ads {
            constraints.extend(linalg::mat_mul(f, &member, ad));
        }
        let next = Subspace::from_vectors(f, n, &linalg::nullspace(f, &constraints, n));
        if next.dim() == current.dim() {
            debug_assert!(l.is_ideal(&next));
            return next;
        }
        current = next;
    }
}

/// A subalgebra viewed as a Lie algebra on its canonical basis, with maps
/// between internal coordinates and ambient vectors.
#[derive(Debug, Clone)]
pub struct SubalgebraView<F: Field> {
    pub algebra: LieAlgebra<F>,
    pub space: Subspace<F>,
}

impl<F: Field> SubalgebraView<F> {
    pub fn to_ambient(&self, v: &[F::Elem]) -> Vector<F> {
        linalg::vec_mat_mul(self.algebra.field(), v, self.space.rows())
    }

    pub fn from_ambient(&self, v: &[F::Elem]) -> Option<Vector<F>> {
        self.space.coordinates(self.algebra.field(), v)
    }

    /// Pull a subspace of the ambient algebra lying inside this subalgebra
    /// back to internal coordinates.
    pub fn restrict_subspace(&self, s: &Subspace<F>) -> Option<Subspace<F>> {
        let f = self.algebra.field();
        let mut rows = Vec::with_capacity(s.dim());
        for v in s.rows() {
            rows.push(self.from_ambient(v)?);
        }
        Some(Subspace::from_vectors(f, self.space.dim(), &rows))
    }

    /// Push a subspace in internal coordinates out to the ambient algebra.
    pub fn embed_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        let f = self.algebra.field();
        let rows: Vec<Vector<F>> = s.rows().iter().map(|v| self.to_ambient(v)).collect();
        Subspace::from_vectors(f, self.space.ambient(), &rows)
    }
}

/// The bracket of L restricted to a subspace closed under it.
pub fn subalgebra_algebra<F: Field>(
    l: &LieAlgebra<F>,
    s: &Subspace<F>,
) -> Result<SubalgebraView<F>> {
    let f = l.field();
    let k = s.dim();
    let mut sub = LieAlgebra::new(f.clone(), k, format!("{}|sub", l.name()));
    let rows = s.rows();
    for a in 0..k {
        for b in (a + 1)..k {
            let w = l.bracket(&rows[a], &rows[b])?;
            let coords = s.coordinates(f, &w).ok_or(CoreError::NotASubalgebra)?;
            let terms: Vec<(usize, F::Elem)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .collect();
            sub.set_bracket(a, b, &terms)?;
        }
    }
    Ok(SubalgebraView {
        algebra: sub,
        space: s.clone(),
    })
}

/// The quotient L/I with projection and a coset-representative section.
#[derive(Debug, Clone)]
pub struct QuotientMap<F: Field> {
    pub algebra: LieAlgebra<F>,
    pub ideal: Subspace<F>,
    /// Ambient coordinates representing the quotient basis (the
    /// non-pivot columns of the ideal).
    pub section_cols: Vec<usize>,
}

impl<F: Field> QuotientMap<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vector<F> {
        let f = self.algebra.field();
        let reduced = self.ideal.reduce(f, v);
        self.section_cols.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// The canonical lift sends a quotient vector to the coset
    /// representative supported on the section columns.
    pub fn lift(&self, w: &[F::Elem]) -> Vector<F> {
        let f = self.algebra.field();
        let mut v = linalg::zero_vector(f, self.ideal.ambient());
        for (t, &c) in self.section_cols.iter().enumerate() {
            v[c] = w[t].clone();
        }
        v
    }

    pub fn project_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        let f = self.algebra.field();
        let rows: Vec<Vector<F>> = s.rows().iter().map(|v| self.project(v)).collect();
        Subspace::from_vectors(f, self.section_cols.len(), &rows)
    }

    /// Full preimage of a quotient subspace, containing the ideal.
    pub fn preimage_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        let f = self.algebra.field();
        let mut rows: Vec<Vector<F>> = s.rows().iter().map(|v| self.lift(v)).collect();
        rows.extend(self.ideal.rows().iter().cloned());
        Subspace::from_vectors(f, self.ideal.ambient(), &rows)
    }
}

pub fn quotient<F: Field>(l: &LieAlgebra<F>, ideal: &Subspace<F>) -> Result<QuotientMap<F>> {
    if !l.is_ideal(ideal) {
        return Err(CoreError::NotAnIdeal);
    }
    let f = l.field();
    let cols = ideal.non_pivots();
    let m = cols.len();
    let mut q = LieAlgebra::new(f.clone(), m, format!("{}/I", l.name()));
    let mut map = QuotientMap {
        algebra: q.clone(),
        ideal: ideal.clone(),
        section_cols: cols.clone(),
    };
    for a in 0..m {
        for b in (a + 1)..m {
            let u = linalg::unit_vector(f, l.dim(), cols[a]);
            let v = linalg::unit_vector(f, l.dim(), cols[b]);
            let w = map.project(&l.bracket(&u, &v)?);
            let terms: Vec<(usize, F::Elem)> = w
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .collect();
            q.set_bracket(a, b, &terms)?;
        }
    }
    map.algebra = q;
    Ok(map)
}

/// Derived and lower central series with the standard solvability flags.
#[derive(Debug, Clone)]
pub struct SeriesReport<F: Field> {
    /// L = D_0, D_{t+1} = [D_t, D_t], until stable.
    pub derived: Vec<Subspace<F>>,
    /// L = C_1, C_{t+1} = [L, C_t], until stable.
    pub lower_central: Vec<Subspace<F>>,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    /// L has a full flag of ideals. `None` only when the determination
    /// over the rationals hit the factoring cap.
    pub supersolvable: Option<bool>,
    /// Derived length at most two.
    pub metabelian: bool,
    /// The derived subalgebra is nilpotent.
    pub completely_solvable: bool,
    /// Steps of the derived series to reach zero; `None` if not solvable.
    pub derived_length: Option<usize>,
}

pub fn derived_series<F: Field>(l: &LieAlgebra<F>) -> Vec<Subspace<F>> {
    let mut chain = vec![l.full_space()];
    loop {
        let last = chain.last().expect("chain starts nonempty");
        let next = l.bracket_span(last, last);
        if next.dim() == last.dim() {
            return chain;
        }
        chain.push(next);
    }
}

pub fn lower_central_series<F: Field>(l: &LieAlgebra<F>) -> Vec<Subspace<F>> {
    let full = l.full_space();
    let mut chain = vec![full.clone()];
    loop {
        let last = chain.last().expect("chain starts nonempty");
        let next = l.bracket_span(&full, last);
        if next.dim() == last.dim() {
            return chain;
        }
        chain.push(next);
    }
}

pub fn series<F: Field>(l: &LieAlgebra<F>) -> SeriesReport<F> {
    let derived = derived_series(l);
    let lower_central = lower_central_series(l);
    let solvable = derived.last().expect("nonempty").is_zero() || l.dim() == 0;
    let nilpotent = lower_central.last().expect("nonempty").is_zero() || l.dim() == 0;
    let abelian = l.is_abelian();
    let derived_length = solvable.then(|| {
        derived
            .iter()
            .position(|s| s.is_zero())
            .unwrap_or(derived.len() - 1)
    });
    let metabelian = solvable && derived_length.expect("solvable") <= 2;
    let completely_solvable = if derived.len() < 2 {
        // The derived series stabilized at L itself, so L is abelian
        // (dim 0 included) exactly when it is zero.
        abelian
    } else {
        let d1 = &derived[1];
        if d1.is_zero() {
            true
        } else {
            let view = subalgebra_algebra(l, d1)
                .expect("the derived subalgebra is closed under the bracket");
            let lc = lower_central_series(&view.algebra);
            lc.last().expect("nonempty").is_zero()
        }
    };
    let supersolvable = if nilpotent {
        Some(true)
    } else if !solvable && l.field().characteristic() == 0 {
        // Over characteristic zero a supersolvable algebra is solvable.
        Some(false)
    } else {
        match ideals::supersolvable_flag(l) {
            Ok(flag) => Some(flag.is_some()),
            Err(CoreError::FactorCap) => None,
            Err(e) => unreachable!("flag search only fails on the factoring cap: {e}"),
        }
    };
    SeriesReport {
        derived,
        lower_central,
        abelian,
        nilpotent,
        solvable,
        supersolvable,
        metabelian,
        completely_solvable,
        derived_length,
    }
}
