//! Classification of solvable algebras sitting on the alpha = n - 2
//! boundary: every such algebra falls into one of three structural cases,
//! each carrying its own witnesses and a prediction for beta.

use num::rational::BigRational;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use liealg_core::enumerate::Budget;
use liealg_core::frattini::frattini_subalgebra;
use liealg_core::linalg;
use liealg_core::nilradical::nilradical_with_series;
use liealg_core::structure::{center, quotient, series, subalgebra_algebra};
use liealg_core::{Field, LieAlgebra, Subspace};

use crate::search::{alpha_exact, beta_exact, Strategy};
use crate::split::find_complement;
use crate::util::{is_abelian_subspace, line_representatives};
use crate::{InvariantsError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

#[derive(Debug, Clone)]
pub enum Witnesses<F: Field> {
    /// Case i: an abelian ideal of dimension n - 2.
    AbelianIdeal { ideal: Subspace<F> },
    /// Case ii: the derived subalgebra is a three-dimensional Heisenberg
    /// algebra, the algebra splits over it, and the second derived
    /// subalgebra equals the center.
    HeisenbergSplit {
        derived: Subspace<F>,
        center: Subspace<F>,
        complement: Subspace<F>,
    },
    /// Case iii: the nilradical N has codimension one, its derived
    /// subalgebra is one-dimensional, and Z(N) is the maximal abelian
    /// ideal, of dimension n - 3.
    NilradicalChain {
        nilradical: Subspace<F>,
        nilradical_center: Subspace<F>,
        chain: Vec<Subspace<F>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaPrediction {
    Exact(usize),
    AtMost(usize),
}

#[derive(Debug, Clone)]
pub struct TrichotomyReport<F: Field> {
    pub case: Case,
    pub witnesses: Witnesses<F>,
    pub beta_prediction: BetaPrediction,
    /// Whether alpha = n - 2 was verified by exact search (finite fields)
    /// rather than taken on trust (rationals).
    pub alpha_certified: bool,
    pub diagnostics: Vec<String>,
}

/// Classify a solvable algebra with alpha = n - 2, witnessed by the given
/// abelian subalgebra of dimension n - 2, into one of the three cases.
/// Preconditions are hard errors; exhausting all three cases on an
/// algebra meeting the preconditions is a theorem violation.
pub fn classify_codim2<F: Field>(
    l: &LieAlgebra<F>,
    a: &Subspace<F>,
    budget: &Budget,
) -> Result<TrichotomyReport<F>> {
    let f = l.field();
    let n = l.dim();
    let report = series(l);
    if !report.solvable {
        return Err(InvariantsError::Precondition(
            "the classification applies to solvable algebras only".into(),
        ));
    }
    if a.dim() + 2 != n {
        return Err(InvariantsError::Precondition(format!(
            "the witness subspace has dimension {}, expected n - 2 = {}",
            a.dim(),
            n - 2
        )));
    }
    if !is_abelian_subspace(l, a) {
        return Err(InvariantsError::Precondition(
            "the witness subspace is not abelian".into(),
        ));
    }

    let finite = f.elements().is_some();
    let mut diagnostics = Vec::new();
    let alpha_certified = if finite {
        let cert = alpha_exact(l, Strategy::BranchBound, budget)?;
        if cert.value != n - 2 {
            return Err(InvariantsError::Precondition(format!(
                "alpha = {} but the classification needs alpha = n - 2 = {}",
                cert.value,
                n - 2
            )));
        }
        diagnostics.push("alpha = n - 2 certified by exact search".into());
        true
    } else {
        diagnostics.push("alpha = n - 2 taken on trust over the rationals".into());
        false
    };

    let mut failures = Vec::new();
    let nil_res = nilradical_with_series(l, &report, budget);

    // Case i: an abelian ideal of dimension n - 2.
    let mut beta_value = None;
    if finite {
        let cert = beta_exact(l, Strategy::BranchBound, budget)?;
        beta_value = Some(cert.value);
        if cert.value == n - 2 {
            return Ok(TrichotomyReport {
                case: Case::I,
                witnesses: Witnesses::AbelianIdeal {
                    ideal: cert.witness,
                },
                beta_prediction: BetaPrediction::Exact(n - 2),
                alpha_certified,
                diagnostics,
            });
        }
        failures.push(format!(
            "case i: beta = {} by exact search, not n - 2 = {}",
            cert.value,
            n - 2
        ));
    } else {
        let mut candidates: Vec<Subspace<F>> = Vec::new();
        if l.is_ideal(a) {
            candidates.push(a.clone());
        }
        if let Ok((nil, _)) = &nil_res {
            if nil.dim() == n - 2 && is_abelian_subspace(l, nil) {
                candidates.push(nil.clone());
            }
            if let Ok(view) = subalgebra_algebra(l, nil) {
                let zn = view.embed_subspace(&center(&view.algebra));
                if zn.dim() == n - 2 && is_abelian_subspace(l, &zn) && l.is_ideal(&zn) {
                    candidates.push(zn);
                }
            }
        }
        if let Some(ideal) = candidates.into_iter().next() {
            return Ok(TrichotomyReport {
                case: Case::I,
                witnesses: Witnesses::AbelianIdeal { ideal },
                beta_prediction: BetaPrediction::Exact(n - 2),
                alpha_certified,
                diagnostics,
            });
        }
        failures.push(
            "case i: no abelian ideal of dimension n - 2 among the candidates \
             (witness subspace, nilradical, nilradical center)"
            .into(),
        );
    }

    // Case ii: L' is three-dimensional Heisenberg, L'' = Z(L) = phi(L),
    // L'/Z(L) is a chief factor, and L splits over L'.
    match case_two(l, &report, budget, finite, &mut diagnostics) {
        Ok(witnesses) => {
            return Ok(TrichotomyReport {
                case: Case::II,
                witnesses,
                beta_prediction: BetaPrediction::AtMost(n - 3),
                alpha_certified,
                diagnostics,
            });
        }
        Err(reason) => failures.push(format!("case ii: {reason}")),
    }

    // Case iii: nilradical of codimension one with one-dimensional derived
    // subalgebra and center of dimension n - 3.
    match case_three(l, &nil_res, a, beta_value) {
        Ok(witnesses) => {
            return Ok(TrichotomyReport {
                case: Case::III,
                witnesses,
                beta_prediction: BetaPrediction::Exact(n - 3),
                alpha_certified,
                diagnostics,
            });
        }
        Err(reason) => failures.push(format!("case iii: {reason}")),
    }

    Err(InvariantsError::TheoremViolation { details: failures })
}

fn stabilized<F: Field>(v: &[Subspace<F>], i: usize, n: usize) -> Subspace<F> {
    v.get(i)
        .or_else(|| v.last())
        .cloned()
        .unwrap_or_else(|| Subspace::zero(n))
}

fn case_two<F: Field>(
    l: &LieAlgebra<F>,
    report: &liealg_core::structure::SeriesReport<F>,
    budget: &Budget,
    finite: bool,
    diagnostics: &mut Vec<String>,
) -> std::result::Result<Witnesses<F>, String> {
    let f = l.field();
    let n = l.dim();
    let derived = l.derived_subalgebra();
    if derived.dim() != 3 {
        return Err(format!(
            "the derived subalgebra has dimension {}, not 3",
            derived.dim()
        ));
    }
    let view = subalgebra_algebra(l, &derived)
        .map_err(|e| format!("the derived subalgebra gave no restricted bracket: {e}"))?;
    let h = &view.algebra;
    let h_report = series(h);
    if !(h_report.nilpotent && h.derived_subalgebra().dim() == 1) {
        return Err("the derived subalgebra is not a Heisenberg algebra".into());
    }
    let z = center(l);
    let second = stabilized(&report.derived, 2, n);
    if second.cmp_canonical(&z) != std::cmp::Ordering::Equal {
        return Err("the second derived subalgebra differs from the center".into());
    }
    if finite {
        let (phi, _) = frattini_subalgebra(l, budget)
            .map_err(|e| format!("the Frattini subalgebra was not computed: {e}"))?;
        if phi.cmp_canonical(&z) != std::cmp::Ordering::Equal {
            return Err("the Frattini subalgebra differs from the center".into());
        }
    } else {
        diagnostics.push(
            "phi(L) = Z(L) implied by the theorem, not independently verified".into(),
        );
    }
    // Chief factor: the image of L' in L/Z(L) is two-dimensional with no
    // one-dimensional ideal of the quotient inside it.
    let q = quotient(l, &z).map_err(|e| format!("the center quotient failed: {e}"))?;
    let u = q.project_subspace(&derived);
    if u.dim() != 2 {
        return Err(format!(
            "the image of the derived subalgebra in L/Z(L) has dimension {}, not 2",
            u.dim()
        ));
    }
    if let Some(_line) = one_dim_subideal_in_plane(&q.algebra, &u)
        .map_err(|e| format!("the chief factor test did not finish: {e}"))?
    {
        return Err("the image of the derived subalgebra in L/Z(L) is not a chief factor".into());
    }
    let complement = find_complement(l, &derived)
        .ok_or_else(|| "no subalgebra complement to the derived subalgebra was found".to_string())?;
    debug_assert!(is_abelian_subspace(l, &complement));
    let _ = f;
    Ok(Witnesses::HeisenbergSplit {
        derived,
        center: z,
        complement,
    })
}

fn case_three<F: Field>(
    l: &LieAlgebra<F>,
    nil_res: &liealg_core::Result<(Subspace<F>, liealg_core::NilradicalRoute)>,
    a: &Subspace<F>,
    beta_value: Option<usize>,
) -> std::result::Result<Witnesses<F>, String> {
    let f = l.field();
    let n = l.dim();
    let nil = match nil_res {
        Ok((nil, _)) => nil,
        Err(e) => return Err(format!("the nilradical was not computed: {e}")),
    };
    if nil.dim() + 1 != n {
        return Err(format!(
            "the nilradical has dimension {}, not n - 1 = {}",
            nil.dim(),
            n - 1
        ));
    }
    if !nil.contains(f, a) {
        return Err("the witness subspace does not sit inside the nilradical".into());
    }
    let view = subalgebra_algebra(l, nil)
        .map_err(|e| format!("the nilradical gave no restricted bracket: {e}"))?;
    let n2 = view.embed_subspace(&view.algebra.derived_subalgebra());
    if n2.dim() != 1 {
        return Err(format!(
            "the derived subalgebra of the nilradical has dimension {}, not 1",
            n2.dim()
        ));
    }
    let zn = view.embed_subspace(&center(&view.algebra));
    if zn.dim() != n - 3 {
        return Err(format!(
            "the center of the nilradical has dimension {}, not n - 3 = {}",
            zn.dim(),
            n - 3
        ));
    }
    if !l.is_ideal(&zn) {
        return Err("the center of the nilradical is not an ideal of the whole algebra".into());
    }
    if let Some(beta) = beta_value {
        if beta != n - 3 {
            return Err(format!(
                "structural conditions hold but beta = {beta}, not n - 3 = {}",
                n - 3
            ));
        }
    }
    let chain = vec![a.clone(), nil.clone(), l.full_space()];
    Ok(Witnesses::NilradicalChain {
        nilradical: nil.clone(),
        nilradical_center: zn,
        chain,
    })
}

/// A one-dimensional ideal of `qalg` inside the two-dimensional subspace
/// `u`, if any exists. Finite fields enumerate the lines of the plane;
/// over the rationals the stabilized lines are the common projective roots
/// of the two-by-two minors of (v, [g, v]), quadratics in the line's
/// coordinates, so the candidates come from one nonzero quadratic and are
/// then verified directly.
fn one_dim_subideal_in_plane<F: Field>(
    qalg: &LieAlgebra<F>,
    u: &Subspace<F>,
) -> Result<Option<Subspace<F>>> {
    let f = qalg.field();
    let m = qalg.dim();
    if f.elements().is_some() {
        for v in line_representatives(f, u) {
            let line = Subspace::from_vectors(f, m, &[v]);
            if qalg.is_ideal(&line) {
                return Ok(Some(line));
            }
        }
        return Ok(None);
    }
    let u1 = &u.rows()[0];
    let u2 = &u.rows()[1];
    // Quadratic coefficients (A, B, C) in the line coordinates (x : y)
    // from each generator g and coordinate pair (r, s).
    let mut first_quadratic: Option<(F::Elem, F::Elem, F::Elem)> = None;
    for g in 0..m {
        let e = linalg::unit_vector(f, m, g);
        let c = qalg.bracket(&e, u1).expect("ambient dims match");
        let d = qalg.bracket(&e, u2).expect("ambient dims match");
        for r in 0..m {
            for s in (r + 1)..m {
                let qa = f.sub(&f.mul(&u1[r], &c[s]), &f.mul(&u1[s], &c[r]));
                let qb = f.sub(
                    &f.add(&f.mul(&u1[r], &d[s]), &f.mul(&u2[r], &c[s])),
                    &f.add(&f.mul(&u1[s], &d[r]), &f.mul(&u2[s], &c[r])),
                );
                let qc = f.sub(&f.mul(&u2[r], &d[s]), &f.mul(&u2[s], &d[r]));
                if !(f.is_zero(&qa) && f.is_zero(&qb) && f.is_zero(&qc)) {
                    first_quadratic = Some((qa, qb, qc));
                }
            }
            if first_quadratic.is_some() {
                break;
            }
        }
        if first_quadratic.is_some() {
            break;
        }
    }
    let candidates: Vec<(F::Elem, F::Elem)> = match &first_quadratic {
        None => {
            // Every minor vanishes identically: every line of the plane is
            // stabilized, so in particular the first row spans an ideal.
            vec![(f.one(), f.zero())]
        }
        Some((qa, qb, qc)) => projective_roots(f, qa, qb, qc)?,
    };
    for (x, y) in candidates {
        let mut v = linalg::zero_vector(f, m);
        linalg::vec_add_scaled(f, &mut v, &x, u1);
        linalg::vec_add_scaled(f, &mut v, &y, u2);
        if linalg::is_zero_vector(f, &v) {
            continue;
        }
        let line = Subspace::from_vectors(f, m, &[v]);
        if qalg.is_ideal(&line) {
            return Ok(Some(line));
        }
    }
    Ok(None)
}

/// Projective rational roots (x : y) of A x^2 + B x y + C y^2 = 0.
fn projective_roots<F: Field>(
    f: &F,
    qa: &F::Elem,
    qb: &F::Elem,
    qc: &F::Elem,
) -> Result<Vec<(F::Elem, F::Elem)>> {
    let mut out = Vec::new();
    if f.is_zero(qa) {
        // y (B x + C y) = 0.
        out.push((f.one(), f.zero()));
        if !f.is_zero(qb) {
            out.push((f.neg(qc), qb.clone()));
        }
        return Ok(out);
    }
    let to_q = |e: &F::Elem| f.to_rational(e).expect("infinite fields bridge to Q");
    let a = to_q(qa);
    let b = to_q(qb);
    let c = to_q(qc);
    let disc = &b * &b - BigRational::from_integer(4.into()) * &a * &c;
    if let Some(s) = rational_sqrt(&disc) {
        let two_a = BigRational::from_integer(2.into()) * &a;
        for root in [(-&b + &s) / &two_a, (-&b - &s) / &two_a] {
            let x = f
                .from_rational(&root)
                .expect("infinite fields bridge to Q");
            out.push((x, f.one()));
        }
        out.dedup_by(|p, q| p == q);
    }
    Ok(out)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let ns = num.sqrt();
    if &(&ns * &ns) != num {
        return None;
    }
    let ds = den.sqrt();
    if &(&ds * &ds) != den {
        return None;
    }
    Some(BigRational::new(ns, ds))
}
