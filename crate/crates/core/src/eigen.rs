//! Exact eigenvalue candidates for ad matrices. Over a finite field every
//! scalar is a candidate; over the rationals we take the rational roots of
//! the characteristic polynomial, found by factoring integer coefficients.
//! Factoring carries a fixed effort cap, so the search either answers
//! exactly or refuses with `FactorCap`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::error::{CoreError, Result};
use crate::field::Field;
use crate::linalg::Matrix;

const TRIAL_DIVISION_CAP: u64 = 2_000_000;
const DIVISOR_CAP: usize = 100_000;

/// All field elements that can possibly be eigenvalues of `m`, in
/// ascending order. Complete: every eigenvalue in the field is listed
/// (finite fields list every scalar).
pub fn eigenvalue_candidates<F: Field>(f: &F, m: &Matrix<F>) -> Result<Vec<F::Elem>> {
    if let Some(all) = f.elements() {
        return Ok(all);
    }
    let n = m.len();
    let qm: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|a| f.to_rational(a).expect("infinite fields bridge to Q"))
                .collect()
        })
        .collect();
    let poly = char_poly(&qm, n);
    let roots = rational_roots(&poly)?;
    Ok(roots
        .into_iter()
        .map(|r| f.from_rational(&r).expect("infinite fields bridge to Q"))
        .collect())
}

/// Coefficients of det(xI - A) as [c_0, ..., c_n] with c_n = 1, by the
/// trace recurrence (valid in characteristic zero).
fn char_poly(a: &[Vec<BigRational>], n: usize) -> Vec<BigRational> {
    let zero = BigRational::zero();
    let mut coeffs = vec![zero.clone(); n + 1];
    coeffs[n] = BigRational::one();
    if n == 0 {
        return coeffs;
    }
    // m starts as the identity; after step k it holds A^{k-1} corrections.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut prev_c = BigRational::one();
    for k in 1..=n {
        if k > 1 {
            // m <- a * m + prev_c * I
            let mut next = vec![vec![zero.clone(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = zero.clone();
                    for (t, row) in m.iter().enumerate() {
                        if !a[i][t].is_zero() && !row[j].is_zero() {
                            acc += &a[i][t] * &row[j];
                        }
                    }
                    next[i][j] = acc;
                }
            }
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &prev_c;
            }
            m = next;
        }
        // c_{n-k} = -tr(a * m) / k
        let mut tr = zero.clone();
        for i in 0..n {
            for (t, row) in m.iter().enumerate() {
                if !a[i][t].is_zero() {
                    tr += &a[i][t] * &row[i];
                }
            }
        }
        let c = -tr / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        prev_c = c;
    }
    coeffs
}

/// All rational roots of a polynomial with rational coefficients,
/// ascending. Errors with `FactorCap` when the integer content is too
/// expensive to factor.
fn rational_roots(coeffs: &[BigRational]) -> Result<Vec<BigRational>> {
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    if ints.len() <= 1 {
        // Zero or constant polynomial: no finite root set worth reporting
        // (the zero polynomial cannot arise from det(xI - A)).
        return Ok(Vec::new());
    }
    let mut roots = std::collections::BTreeSet::new();
    // Divide out powers of x; 0 is a root for each stripped power.
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero poly");
    if low > 0 {
        roots.insert(BigRational::zero());
        ints.drain(..low);
    }
    if ints.len() > 1 {
        let a0 = ints.first().expect("nonempty").magnitude().clone();
        let an = ints.last().expect("nonempty").magnitude().clone();
        let nums = divisors(&BigInt::from(a0))?;
        let dens = divisors(&BigInt::from(an))?;
        for p in &nums {
            for q in &dens {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                    if eval(&ints, &cand).is_zero() {
                        roots.insert(cand);
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

fn eval(ints: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in ints.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// All positive divisors of |n| for nonzero n, via capped trial division.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m: u128 = n
        .magnitude()
        .try_into()
        .map_err(|_| CoreError::FactorCap)?;
    debug_assert!(m != 0);
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut steps = 0u64;
    let mut d: u128 = 2;
    while d <= m / d {
        steps += 1;
        if steps > TRIAL_DIVISION_CAP {
            return Err(CoreError::FactorCap);
        }
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    let mut divs: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in factors {
        let mut grown = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut power = BigInt::one();
        for _ in 0..=e {
            for d in &divs {
                grown.push(d * &power);
            }
            power *= BigInt::from(p);
        }
        if grown.len() > DIVISOR_CAP {
            return Err(CoreError::FactorCap);
        }
        divs = grown;
    }
    Ok(divs)
}
