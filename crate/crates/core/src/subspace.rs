//! Subspaces of F^n held in a canonical form: the unique reduced row
//! echelon basis. Two subspaces are equal exactly when their canonical
//! matrices are identical, and subspaces of one dimension are totally
//! ordered by lexicographic comparison of those matrices.

use std::cmp::Ordering;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::field::Field;
use crate::linalg::{self, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(f: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: linalg::identity_matrix(f, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(f: &F, ambient: usize, vectors: &[Vector<F>]) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let mut rows = vectors.to_vec();
        let pivots = linalg::rref(f, &mut rows);
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    /// Wrap rows already known to be in reduced row echelon form with the
    /// given pivot columns. The caller is responsible for canonicity;
    /// enumeration loops use this to skip redundant reduction.
    pub fn from_rref_unchecked(f: &F, ambient: usize, rows: Matrix<F>, pivots: Vec<usize>) -> Self {
        debug_assert!({
            let again = Subspace::from_vectors(f, ambient, &rows);
            again.rows == rows && again.pivots == pivots
        });
        let _ = f;
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates without a pivot; these index a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut it = self.pivots.iter().copied().peekable();
        for c in 0..self.ambient {
            if it.peek() == Some(&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Reduce `v` against the basis; the result is zero iff `v` lies here.
    pub fn reduce(&self, f: &F, v: &[F::Elem]) -> Vector<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&r[p]) {
                let c = f.neg(&r[p]);
                linalg::vec_add_scaled(f, &mut r, &c, row);
            }
        }
        r
    }

    pub fn contains_vector(&self, f: &F, v: &[F::Elem]) -> bool {
        linalg::is_zero_vector(f, &self.reduce(f, v))
    }

    pub fn contains(&self, f: &F, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|v| self.contains_vector(f, v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies here.
    pub fn coordinates(&self, f: &F, v: &[F::Elem]) -> Option<Vector<F>> {
        let coords: Vector<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (row, c) in self.rows.iter().zip(&coords) {
            if !f.is_zero(c) {
                let nc = f.neg(c);
                linalg::vec_add_scaled(f, &mut r, &nc, row);
            }
        }
        linalg::is_zero_vector(f, &r).then_some(coords)
    }

    pub fn sum(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        debug_assert_eq!(self.ambient, other.ambient);
        let mut vecs = self.rows.clone();
        vecs.extend(other.rows.iter().cloned());
        Subspace::from_vectors(f, self.ambient, &vecs)
    }

    /// Extend by one vector; returns the same subspace if `v` already lies here.
    pub fn extended(&self, f: &F, v: &[F::Elem]) -> Subspace<F> {
        let mut vecs = self.rows.clone();
        vecs.push(v.to_vec());
        Subspace::from_vectors(f, self.ambient, &vecs)
    }

    /// Linear conditions cutting out this subspace: v lies here iff
    /// `constraints * v = 0`. One row per non-pivot coordinate.
    pub fn membership_constraints(&self, f: &F) -> Matrix<F> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        for q in self.non_pivots() {
            let mut row = linalg::zero_vector(f, self.ambient);
            row[q] = f.one();
            for (r, &p) in self.pivots.iter().enumerate() {
                row[p] = f.neg(&self.rows[r][q]);
            }
            out.push(row);
        }
        out
    }

    pub fn intersect(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        debug_assert_eq!(self.ambient, other.ambient);
        let mut constraints = self.membership_constraints(f);
        constraints.extend(other.membership_constraints(f));
        let basis = linalg::nullspace(f, &constraints, self.ambient);
        Subspace::from_vectors(f, self.ambient, &basis)
    }

    /// Total order on same-dimension subspaces: entry-by-entry comparison
    /// of the flattened canonical matrices.
    pub fn cmp_canonical(&self, other: &Subspace<F>) -> Ordering {
        debug_assert_eq!(self.ambient, other.ambient);
        self.rows
            .len()
            .cmp(&other.rows.len())
            .then_with(|| {
                for (a, b) in self.rows.iter().flatten().zip(other.rows.iter().flatten()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

/// Serialized as dimension plus formatted basis rows, e.g. "e2+3e4".
impl<F: Field> Serialize for Subspace<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        let basis: Vec<String> = self.rows.iter().map(|r| format_combination::<F>(r)).collect();
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}

/// Parse a linear combination of basis vectors, e.g. "e1+2e3-e4" or
/// "3/2 e3" over the rationals. Inverse of [`format_combination`]. The
/// literal "0" parses as the zero vector.
pub fn parse_combination<F: Field>(
    f: &F,
    ambient: usize,
    text: &str,
) -> crate::error::Result<Vector<F>> {
    use crate::error::CoreError;

    let bad = |reason: &str| CoreError::BadScalar {
        text: text.into(),
        reason: reason.into(),
    };
    let src = text.trim();
    if src.is_empty() {
        return Err(bad("empty vector expression"));
    }
    let mut v = linalg::zero_vector(f, ambient);
    if src == "0" {
        return Ok(v);
    }
    // Split into signed terms; scalars themselves never contain '+' or '-'
    // because canonical rendering hoists the sign out of the coefficient.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut body = String::new();
    let mut negative = false;
    for (pos, ch) in src.char_indices() {
        match ch {
            '+' | '-' if pos > 0 => {
                terms.push((negative, std::mem::take(&mut body)));
                negative = ch == '-';
            }
            '-' => negative = true,
            _ => body.push(ch),
        }
    }
    terms.push((negative, body));
    for (negative, term) in terms {
        let term = term.trim();
        let marker = term.find('e').ok_or_else(|| bad("term has no basis symbol e<k>"))?;
        let index: usize = term[marker + 1..]
            .parse()
            .map_err(|_| bad("basis index is not a number"))?;
        if index == 0 || index > ambient {
            return Err(CoreError::BadTableEntry(format!(
                "basis index e{index} out of range for dimension {ambient}"
            )));
        }
        let scalar = term[..marker].trim_end_matches('*').trim();
        let mut coeff = if scalar.is_empty() {
            f.one()
        } else {
            f.parse_scalar(scalar)?
        };
        if negative {
            coeff = f.neg(&coeff);
        }
        v[index - 1] = f.add(&v[index - 1], &coeff);
    }
    Ok(v)
}

/// Parse a comma-separated list of basis combinations as the subspace they
/// span, e.g. "e1+2e4,e5".
pub fn parse_subspace<F: Field>(
    f: &F,
    ambient: usize,
    text: &str,
) -> crate::error::Result<Subspace<F>> {
    let mut vectors = Vec::new();
    for part in text.split(',') {
        vectors.push(parse_combination(f, ambient, part)?);
    }
    Ok(Subspace::from_vectors(f, ambient, &vectors))
}

/// Render a vector as a linear combination of basis vectors e1..en,
/// e.g. "e1+2e3-e4"; the zero vector renders as "0".
pub fn format_combination<F: Field>(v: &[F::Elem]) -> String {
    let mut out = String::new();
    for (i, a) in v.iter().enumerate() {
        let text = a.to_string();
        if text == "0" {
            continue;
        }
        let (sign, mag) = match text.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("+", text.as_str()),
        };
        if !(out.is_empty() && sign == "+") {
            out.push_str(sign);
        }
        if mag != "1" {
            out.push_str(mag);
            if mag.contains('/') {
                out.push(' ');
            }
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField, Rationals};

    fn fp5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn canonical_basis_is_unique() {
        let f = fp5();
        let a = Subspace::from_vectors(&f, 3, &[vec![1, 2, 0], vec![0, 0, 1]]);
        let b = Subspace::from_vectors(&f, 3, &[vec![2, 4, 3], vec![3, 1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 2]);
    }

    #[test]
    fn membership_and_coordinates() {
        let f = fp5();
        let s = Subspace::from_vectors(&f, 4, &[vec![1, 0, 2, 0], vec![0, 1, 3, 0]]);
        let v = vec![2, 1, 2, 0];
        assert!(s.contains_vector(&f, &v));
        assert_eq!(s.coordinates(&f, &v), Some(vec![2, 1]));
        assert!(!s.contains_vector(&f, &[0, 0, 0, 1]));
        assert_eq!(s.coordinates(&f, &[0, 0, 0, 1]), None);
    }

    #[test]
    fn intersection_and_sum_dimensions() {
        let f = fp5();
        let a = Subspace::from_vectors(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_vectors(&f, 3, &[vec![0, 1, 1], vec![0, 0, 1]]);
        let meet = a.intersect(&f, &b);
        let join = a.sum(&f, &b);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&f, &[0, 1, 0]));
        assert_eq!(join.dim(), 3);
    }

    #[test]
    fn membership_constraints_cut_out_subspace() {
        let f = fp5();
        let s = Subspace::from_vectors(&f, 3, &[vec![1, 4, 2]]);
        let cons = s.membership_constraints(&f);
        assert_eq!(cons.len(), 2);
        for row in &s.rows {
            let img = crate::linalg::mat_vec_mul(&f, &cons, row);
            assert!(crate::linalg::is_zero_vector(&f, &img));
        }
        let outside = vec![1, 0, 0];
        let img = crate::linalg::mat_vec_mul(&f, &cons, &outside);
        assert!(!crate::linalg::is_zero_vector(&f, &img));
    }

    #[test]
    fn combination_formatting() {
        let f = Rationals;
        let v = vec![
            f.from_int(1),
            f.from_int(0),
            f.from_int(-2),
            f.parse_scalar("1/2").unwrap(),
        ];
        assert_eq!(format_combination::<Rationals>(&v), "e1-2e3+1/2 e4");
        assert_eq!(
            format_combination::<Rationals>(&[f.from_int(0)]),
            "0"
        );
    }

    #[test]
    fn combination_parsing_round_trips() {
        let f = Rationals;
        for text in ["e1-2e3+1/2 e4", "e2", "0", "-e1+e4"] {
            let v = parse_combination(&f, 4, text).unwrap();
            assert_eq!(format_combination::<Rationals>(&v), text);
        }
        let fp = fp5();
        let v = parse_combination(&fp, 3, "2e1+e3").unwrap();
        assert_eq!(v, vec![2, 0, 1]);
        // Repeated terms accumulate, explicit '*' is tolerated.
        let v = parse_combination(&fp, 3, "e1+e1+3*e2").unwrap();
        assert_eq!(v, vec![2, 3, 0]);
    }

    #[test]
    fn combination_parsing_rejects_malformed_input() {
        let f = Rationals;
        assert!(parse_combination(&f, 3, "").is_err());
        assert!(parse_combination(&f, 3, "e0").is_err());
        assert!(parse_combination(&f, 3, "e4").is_err());
        assert!(parse_combination(&f, 3, "2x1").is_err());
        assert!(parse_combination(&f, 3, "e1+").is_err());
    }

    #[test]
    fn subspace_parsing_spans_the_listed_vectors() {
        let f = Rationals;
        let s = parse_subspace(&f, 5, "e1+2e4,e5").unwrap();
        assert_eq!(s.dim(), 2);
        let one = f.one();
        let two = f.from_int(2);
        let zero = f.zero();
        assert!(s.contains_vector(
            &f,
            &[one.clone(), zero.clone(), zero.clone(), two, zero.clone()]
        ));
        assert!(s.contains_vector(&f, &[zero.clone(), zero.clone(), zero.clone(), zero, one]));
    }
}
