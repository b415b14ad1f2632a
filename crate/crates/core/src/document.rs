//! The on-disk algebra document: a JSON object pinning the basis size,
//! the field, and the sparse bracket table with 1-based indices i < j.
//! Emission is canonical (entries sorted, scalars in canonical form), so
//! emitting a parsed canonical document reproduces it byte for byte.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::LieAlgebra;
use crate::error::{CoreError, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub field: FieldSpec,
    pub brackets: Vec<BracketEntry>,
}

/// One table entry: [e_i, e_j] = sum of coefficient * e_k terms, written
/// as pairs [k, "scalar"].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub v: Vec<(usize, String)>,
}

/// A structure-constant algebra over whichever field the document named.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Q(LieAlgebra<Rationals>),
    Fp(LieAlgebra<PrimeField>),
}

impl AnyAlgebra {
    pub fn name(&self) -> &str {
        match self {
            AnyAlgebra::Q(l) => l.name(),
            AnyAlgebra::Fp(l) => l.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Q(l) => l.dim(),
            AnyAlgebra::Fp(l) => l.dim(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Q(l) => l.field().spec(),
            AnyAlgebra::Fp(l) => l.field().spec(),
        }
    }

    pub fn document(&self) -> AlgebraDocument {
        match self {
            AnyAlgebra::Q(l) => AlgebraDocument::from_algebra(l),
            AnyAlgebra::Fp(l) => AlgebraDocument::from_algebra(l),
        }
    }
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDocument = serde_json::from_str(text)
            .map_err(|e| CoreError::BadTableEntry(format!("invalid algebra document: {e}")))?;
        doc.field.validate()?;
        Ok(doc)
    }

    /// Canonical rendering: two-space indentation, sorted entries, one
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_algebra<F: Field>(l: &LieAlgebra<F>) -> Self {
        let f = l.field();
        AlgebraDocument {
            name: l.name().to_string(),
            dim: l.dim(),
            field: f.spec(),
            brackets: l
                .table()
                .iter()
                .map(|(&(i, j), terms)| BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    v: terms
                        .iter()
                        .map(|(k, c)| (k + 1, f.format_scalar(c)))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Instantiate over the field the document names.
    pub fn build(&self) -> Result<AnyAlgebra> {
        self.field.validate()?;
        match self.field {
            FieldSpec::Rationals => Ok(AnyAlgebra::Q(self.to_algebra(Rationals)?)),
            FieldSpec::Prime { p } => Ok(AnyAlgebra::Fp(self.to_algebra(PrimeField::new(p)?)?)),
        }
    }

    /// Instantiate over a caller-supplied field, which must match the
    /// document's field descriptor.
    pub fn to_algebra<F: Field>(&self, f: F) -> Result<LieAlgebra<F>> {
        if f.spec() != self.field {
            return Err(CoreError::BadTableEntry(format!(
                "document field {} does not match requested field {}",
                self.field,
                f.spec()
            )));
        }
        let mut l = LieAlgebra::new(f.clone(), self.dim, self.name.clone());
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for entry in &self.brackets {
            if entry.i < 1 || entry.j <= entry.i || entry.j > self.dim {
                return Err(CoreError::BadTableEntry(format!(
                    "bracket indices must satisfy 1 <= i < j <= dim, got ({}, {})",
                    entry.i, entry.j
                )));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(CoreError::BadTableEntry(format!(
                    "duplicate bracket entry for ({}, {})",
                    entry.i, entry.j
                )));
            }
            let mut terms = Vec::with_capacity(entry.v.len());
            for (k, text) in &entry.v {
                if *k < 1 || *k > self.dim {
                    return Err(CoreError::BadTableEntry(format!(
                        "component index {k} out of range 1..={}",
                        self.dim
                    )));
                }
                terms.push((*k - 1, f.parse_scalar(text)?));
            }
            l.set_bracket(entry.i - 1, entry.j - 1, &terms)?;
        }
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3_doc() -> String {
        concat!(
            "{\n",
            "  \"name\": \"h3\",\n",
            "  \"dim\": 3,\n",
            "  \"field\": {\n",
            "    \"kind\": \"Q\"\n",
            "  },\n",
            "  \"brackets\": [\n",
            "    {\n",
            "      \"i\": 1,\n",
            "      \"j\": 2,\n",
            "      \"v\": [\n",
            "        [\n",
            "          3,\n",
            "          \"1\"\n",
            "        ]\n",
            "      ]\n",
            "    }\n",
            "  ]\n",
            "}\n"
        )
        .to_string()
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let text = h3_doc();
        let doc = AlgebraDocument::from_json(&text).unwrap();
        assert_eq!(doc.to_json(), text);
        // also through the algebra and back
        let algebra = doc.to_algebra(Rationals).unwrap();
        let doc2 = AlgebraDocument::from_algebra(&algebra);
        assert_eq!(doc2.to_json(), text);
    }

    #[test]
    fn prime_field_document_builds() {
        let text = r#"{
            "name": "affine",
            "dim": 2,
            "field": {"kind": "Fp", "p": 7},
            "brackets": [{"i": 1, "j": 2, "v": [[2, "3"]]}]
        }"#;
        let doc = AlgebraDocument::from_json(text).unwrap();
        match doc.build().unwrap() {
            AnyAlgebra::Fp(l) => {
                assert_eq!(l.dim(), 2);
                assert_eq!(l.field().modulus(), 7);
                assert_eq!(l.table_entry(0, 1), &[(1, 3)]);
            }
            AnyAlgebra::Q(_) => panic!("expected a prime field algebra"),
        }
    }

    #[test]
    fn duplicate_pairs_are_rejected() {
        let text = r#"{
            "name": "dup",
            "dim": 3,
            "field": {"kind": "Q"},
            "brackets": [
                {"i": 1, "j": 2, "v": [[3, "1"]]},
                {"i": 1, "j": 2, "v": [[3, "2"]]}
            ]
        }"#;
        let err = AlgebraDocument::from_json(text).unwrap().build().unwrap_err();
        assert!(matches!(err, CoreError::BadTableEntry(_)));
    }

    #[test]
    fn out_of_order_indices_are_rejected() {
        for (i, j) in [(2usize, 1usize), (0, 2), (1, 4), (2, 2)] {
            let text = format!(
                r#"{{"name": "bad", "dim": 3, "field": {{"kind": "Q"}},
                    "brackets": [{{"i": {i}, "j": {j}, "v": [[1, "1"]]}}]}}"#
            );
            let err = AlgebraDocument::from_json(&text).unwrap().build().unwrap_err();
            assert!(matches!(err, CoreError::BadTableEntry(_)), "({i},{j})");
        }
    }

    #[test]
    fn bad_component_index_is_rejected() {
        let text = r#"{
            "name": "bad", "dim": 2, "field": {"kind": "Q"},
            "brackets": [{"i": 1, "j": 2, "v": [[5, "1"]]}]
        }"#;
        let err = AlgebraDocument::from_json(text).unwrap().build().unwrap_err();
        assert!(matches!(err, CoreError::BadTableEntry(_)));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{
            "name": "x", "dim": 1, "field": {"kind": "Q"},
            "brackets": [], "extra": true
        }"#;
        assert!(AlgebraDocument::from_json(text).is_err());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let text = r#"{
            "name": "x", "dim": 1,
            "field": {"kind": "Fp", "p": 6},
            "brackets": []
        }"#;
        assert!(matches!(
            AlgebraDocument::from_json(text),
            Err(CoreError::BadScalar { .. })
        ));
    }

    #[test]
    fn bad_scalar_is_rejected_in_the_named_field() {
        let text = r#"{
            "name": "x", "dim": 2,
            "field": {"kind": "Fp", "p": 5},
            "brackets": [{"i": 1, "j": 2, "v": [[1, "1/2"]]}]
        }"#;
        let err = AlgebraDocument::from_json(text).unwrap().build().unwrap_err();
        assert!(matches!(err, CoreError::BadScalar { .. }));
    }

    #[test]
    fn rational_scalars_are_canonicalized() {
        let text = r#"{
            "name": "x", "dim": 2, "field": {"kind": "Q"},
            "brackets": [{"i": 1, "j": 2, "v": [[1, "6/4"]]}]
        }"#;
        let doc = AlgebraDocument::from_json(text).unwrap();
        let algebra = doc.to_algebra(Rationals).unwrap();
        let out = AlgebraDocument::from_algebra(&algebra);
        assert_eq!(out.brackets[0].v[0].1, "3/2");
    }

    #[test]
    fn zero_dimensional_document_round_trips() {
        let doc = AlgebraDocument {
            name: "zero".into(),
            dim: 0,
            field: FieldSpec::Rationals,
            brackets: vec![],
        };
        let text = doc.to_json();
        let back = AlgebraDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.build().unwrap().dim(), 0);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let doc = AlgebraDocument {
            name: "x".into(),
            dim: 1,
            field: FieldSpec::Prime { p: 5 },
            brackets: vec![],
        };
        assert!(doc.to_algebra(Rationals).is_err());
    }
}
