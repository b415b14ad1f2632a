//! Seeded random constructions: nilpotent, supersolvable, and metabelian
//! split algebras over prime fields. Each generator is a pure function of
//! its parameters, so the same (type, params, seed) triple always rebuilds
//! the identical structure-constant table.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use liealg_core::derivations::chain_preserving_derivations;
use liealg_core::linalg::{self, Matrix, Vector};
use liealg_core::{AlgebraDocument, Field, Flag, LieAlgebra, PrimeField, Subspace};

use crate::entries::abelian;
use crate::CatalogError;

/// SHA-256 hex digest of the algebra's canonical JSON document. Two
/// algebras digest equal exactly when their documents coincide.
pub fn algebra_digest<F: Field>(l: &LieAlgebra<F>) -> String {
    let json = AlgebraDocument::from_algebra(l).to_json();
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    format!("{:x}", hasher.finalize())
}

fn flatten<F: Field>(m: &Matrix<F>) -> Vector<F> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

fn unflatten<F: Field>(v: &[F::Elem], size: usize) -> Matrix<F> {
    (0..size)
        .map(|r| v[r * size..(r + 1) * size].to_vec())
        .collect()
}

fn commutator<F: Field>(f: &F, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let ab = linalg::mat_mul(f, a, b);
    let ba = linalg::mat_mul(f, b, a);
    ab.iter()
        .zip(&ba)
        .map(|(x, y)| linalg::vec_sub(f, x, y))
        .collect()
}

fn add_scaled_matrix<F: Field>(f: &F, acc: &mut Matrix<F>, c: &F::Elem, m: &Matrix<F>) {
    for (acc_row, m_row) in acc.iter_mut().zip(m) {
        for (a, b) in acc_row.iter_mut().zip(m_row) {
            *a = f.add(a, &f.mul(c, b));
        }
    }
}

fn random_scalar(f: &PrimeField, rng: &mut ChaCha8Rng, p: u64) -> u64 {
    f.from_int(rng.gen_range(0..p) as i64)
}

fn random_strictly_lower(
    f: &PrimeField,
    rng: &mut ChaCha8Rng,
    size: usize,
    p: u64,
) -> Matrix<PrimeField> {
    let mut m = vec![vec![f.zero(); size]; size];
    for r in 1..size {
        for c in 0..r {
            m[r][c] = random_scalar(f, rng, p);
        }
    }
    m
}

/// Span of the given matrices inside gl(size), closed under commutator.
fn bracket_closure(
    f: &PrimeField,
    gens: &[Matrix<PrimeField>],
    size: usize,
) -> Subspace<PrimeField> {
    let ambient = size * size;
    let flats: Vec<Vector<PrimeField>> = gens.iter().map(|g| flatten::<PrimeField>(g)).collect();
    let mut span = Subspace::from_vectors(f, ambient, &flats);
    loop {
        let mats: Vec<Matrix<PrimeField>> = span
            .rows()
            .iter()
            .map(|r| unflatten::<PrimeField>(r, size))
            .collect();
        let mut grew = false;
        for i in 0..mats.len() {
            for j in (i + 1)..mats.len() {
                let flat = flatten::<PrimeField>(&commutator(f, &mats[i], &mats[j]));
                if !span.contains_vector(f, &flat) {
                    span = span.extended(f, &flat);
                    grew = true;
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Lower central chain of a commutator-closed matrix span s:
/// c_1 = s, c_{t+1} = span[s, c_t], descending to zero.
fn lower_central_chain(
    f: &PrimeField,
    s: &Subspace<PrimeField>,
    size: usize,
) -> Vec<Subspace<PrimeField>> {
    let ambient = size * size;
    let top: Vec<Matrix<PrimeField>> = s
        .rows()
        .iter()
        .map(|r| unflatten::<PrimeField>(r, size))
        .collect();
    let mut chain = vec![s.clone()];
    while !chain.last().unwrap().is_zero() {
        let mats: Vec<Matrix<PrimeField>> = chain
            .last()
            .unwrap()
            .rows()
            .iter()
            .map(|r| unflatten::<PrimeField>(r, size))
            .collect();
        let mut next = Subspace::zero(ambient);
        for a in &top {
            for b in &mats {
                let flat = flatten::<PrimeField>(&commutator(f, a, b));
                if !next.contains_vector(f, &flat) {
                    next = next.extended(f, &flat);
                }
            }
        }
        chain.push(next);
    }
    chain
}

/// Cut an n-dimensional subalgebra out of a closed span of dimension at
/// least n: pick consecutive lower central members c_t ⊇ c_{t+1} with
/// dim c_{t+1} <= n <= dim c_t and extend c_{t+1} by rows of c_t. The
/// result W satisfies [W, W] ⊆ [c_t, c_t] ⊆ c_{t+1} ⊆ W.
fn slice_subalgebra(
    f: &PrimeField,
    closed: &Subspace<PrimeField>,
    n: usize,
    size: usize,
) -> Subspace<PrimeField> {
    let chain = lower_central_chain(f, closed, size);
    let mut t = 0;
    while chain[t + 1].dim() > n {
        t += 1;
    }
    let mut w = chain[t + 1].clone();
    for row in chain[t].rows() {
        if w.dim() == n {
            break;
        }
        if !w.contains_vector(f, row) {
            w = w.extended(f, row);
        }
    }
    debug_assert_eq!(w.dim(), n);
    w
}

/// Express the commutators of a commutator-closed matrix span in its own
/// basis, yielding an abstract structure-constant table.
fn matrix_span_to_algebra(
    f: &PrimeField,
    w: &Subspace<PrimeField>,
    size: usize,
    name: String,
) -> Result<LieAlgebra<PrimeField>, CatalogError> {
    let n = w.dim();
    let mats: Vec<Matrix<PrimeField>> = w
        .rows()
        .iter()
        .map(|r| unflatten::<PrimeField>(r, size))
        .collect();
    let mut l = LieAlgebra::new(f.clone(), n, name);
    for i in 0..n {
        for j in (i + 1)..n {
            let flat = flatten::<PrimeField>(&commutator(f, &mats[i], &mats[j]));
            let coords = w.coordinates(f, &flat).ok_or_else(|| {
                CatalogError::BadParams("matrix span is not closed under commutator".into())
            })?;
            let terms: Vec<(usize, _)> = coords.into_iter().enumerate().collect();
            l.set_bracket(i, j, &terms)?;
        }
    }
    Ok(l)
}

/// Random nilpotent algebra of dimension n over F_p: sample a few strictly
/// lower triangular matrices of size n+1, close them under commutator, and
/// cut an n-dimensional subalgebra out of the closure. Resamples a bounded
/// number of times when the closure comes out too small.
pub fn random_nilpotent(
    n: usize,
    p: u64,
    seed: u64,
) -> Result<LieAlgebra<PrimeField>, CatalogError> {
    let f = PrimeField::new(p)?;
    let name = format!("random-nilpotent(n={n},p={p},seed={seed})");
    if n <= 1 {
        let mut l = abelian(&f, n);
        l.set_name(name);
        return Ok(l);
    }
    let size = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 64;
    for attempt in 0..ATTEMPTS {
        let gens = 2 + attempt / 8;
        let sample: Vec<Matrix<PrimeField>> = (0..gens)
            .map(|_| random_strictly_lower(&f, &mut rng, size, p))
            .collect();
        let closed = bracket_closure(&f, &sample, size);
        if closed.dim() < n {
            continue;
        }
        let w = slice_subalgebra(&f, &closed, n, size);
        let l = matrix_span_to_algebra(&f, &w, size, name)?;
        debug_assert!(l.is_valid());
        return Ok(l);
    }
    Err(CatalogError::BadParams(format!(
        "nilpotent generator found no closure of dimension {n} after {ATTEMPTS} attempts \
         (n={n}, p={p}, seed={seed})"
    )))
}

fn prefix_span(f: &PrimeField, ambient: usize, t: usize) -> Subspace<PrimeField> {
    let units: Vec<Vector<PrimeField>> =
        (0..t).map(|i| linalg::unit_vector(f, ambient, i)).collect();
    Subspace::from_vectors(f, ambient, &units)
}

/// Random supersolvable algebra of dimension n over F_p together with its
/// full flag of ideals. Built by iterated one-dimensional split extensions:
/// at each step sample a derivation preserving every prefix span
/// (e_1, ..., e_t) and adjoin a new generator acting by it. Every prefix
/// stays an ideal, so the standard flag witnesses supersolvability.
pub fn random_supersolvable(
    n: usize,
    p: u64,
    seed: u64,
) -> Result<(LieAlgebra<PrimeField>, Flag<PrimeField>), CatalogError> {
    let f = PrimeField::new(p)?;
    let name = format!("random-supersolvable(n={n},p={p},seed={seed})");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l = abelian(&f, n.min(1));
    for k in 1..n {
        let chain: Vec<Subspace<PrimeField>> = (1..=k).map(|t| prefix_span(&f, k, t)).collect();
        let ders = chain_preserving_derivations(&l, &chain);
        let mut d = vec![vec![f.zero(); k]; k];
        for basis in &ders {
            let c = random_scalar(&f, &mut rng, p);
            if f.is_zero(&c) {
                continue;
            }
            add_scaled_matrix(&f, &mut d, &c, basis);
        }
        let mut next = LieAlgebra::new(f.clone(), k + 1, "extension step");
        for i in 0..k {
            for j in (i + 1)..k {
                let terms: Vec<(usize, _)> =
                    l.bracket_basis(i, j).into_iter().enumerate().collect();
                next.set_bracket(i, j, &terms)?;
            }
        }
        // The new generator x = e_{k+1} acts by [x, e_t] = D e_t, so the
        // stored pair (t, k) carries the negative.
        for t in 0..k {
            let terms: Vec<(usize, _)> = (0..k).map(|r| (r, f.neg(&d[r][t]))).collect();
            next.set_bracket(t, k, &terms)?;
        }
        l = next;
    }
    l.set_name(name);
    debug_assert!(l.is_valid());
    let members: Vec<Subspace<PrimeField>> = (0..=n).map(|t| prefix_span(&f, n, t)).collect();
    Ok((l, Flag { members }))
}

/// Random metabelian algebra L = V + B of dimension n over F_p: V abelian
/// of dimension k, B abelian of dimension n-k acting on V by commuting
/// matrices, namely polynomials in a single random k by k matrix. The
/// derived algebra lands inside V, so L is metabelian.
pub fn random_metabelian_split(
    n: usize,
    k: usize,
    p: u64,
    seed: u64,
) -> Result<LieAlgebra<PrimeField>, CatalogError> {
    if k == 0 || k >= n {
        return Err(CatalogError::BadParams(format!(
            "metabelian split generator needs 0 < k < n, got n={n}, k={k}"
        )));
    }
    let f = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = vec![vec![f.zero(); k]; k];
    for row in m.iter_mut() {
        for cell in row.iter_mut() {
            *cell = random_scalar(&f, &mut rng, p);
        }
    }
    // Powers M^0 .. M^{k-1}: higher powers are linear combinations of these
    // by Cayley-Hamilton, so degree-bounded polynomials lose no actions.
    let mut powers = vec![linalg::identity_matrix(&f, k)];
    for _ in 1..k {
        let next = linalg::mat_mul(&f, powers.last().unwrap(), &m);
        powers.push(next);
    }
    let mut l = LieAlgebra::new(
        f.clone(),
        n,
        format!("random-metabelian-split(n={n},k={k},p={p},seed={seed})"),
    );
    for j in 0..(n - k) {
        let mut action = vec![vec![f.zero(); k]; k];
        for power in &powers {
            let c = random_scalar(&f, &mut rng, p);
            if f.is_zero(&c) {
                continue;
            }
            add_scaled_matrix(&f, &mut action, &c, power);
        }
        // The generator e_{k+j+1} of B acts on V by the matrix, so the
        // stored pair (i, k+j) carries the negative of column i.
        for i in 0..k {
            let terms: Vec<(usize, _)> = (0..k).map(|r| (r, f.neg(&action[r][i]))).collect();
            l.set_bracket(i, k + j, &terms)?;
        }
    }
    debug_assert!(l.is_valid());
    Ok(l)
}
