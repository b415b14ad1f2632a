//! Built-in algebras addressable by name: fixed examples and parametric
//! classical families.

use std::collections::BTreeMap;

use liealg_core::{AnyAlgebra, Field, FieldSpec, LieAlgebra, PrimeField, Rationals};

use crate::CatalogError;

/// The zero bracket on n basis vectors.
pub fn abelian<F: Field>(f: &F, n: usize) -> LieAlgebra<F> {
    LieAlgebra::new(f.clone(), n, format!("abelian({n})"))
}

/// Heisenberg algebra of dimension 2m+1: [e_{2t-1}, e_{2t}] = e_{2m+1}
/// for t = 1..m, the last vector central.
pub fn heisenberg<F: Field>(f: &F, m: usize) -> LieAlgebra<F> {
    let n = 2 * m + 1;
    let mut l = LieAlgebra::new(f.clone(), n, format!("heisenberg({m})"));
    for t in 0..m {
        l.set_bracket(2 * t, 2 * t + 1, &[(n - 1, f.one())])
            .expect("valid indices");
    }
    l
}

/// Bracket table of a commutator-closed set of matrix units.
fn matrix_cells<F: Field>(f: &F, cells: &[(usize, usize)], name: String) -> LieAlgebra<F> {
    let index: BTreeMap<(usize, usize), usize> = cells
        .iter()
        .copied()
        .enumerate()
        .map(|(t, cell)| (cell, t))
        .collect();
    let mut l = LieAlgebra::new(f.clone(), cells.len(), name);
    for (i, &(a, b)) in cells.iter().enumerate() {
        for (j, &(c, d)) in cells.iter().enumerate().skip(i + 1) {
            // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
            let mut terms: BTreeMap<usize, F::Elem> = BTreeMap::new();
            if b == c {
                let slot = index[&(a, d)];
                let cur = terms.entry(slot).or_insert_with(|| f.zero());
                *cur = f.add(cur, &f.one());
            }
            if d == a {
                let slot = index[&(c, b)];
                let cur = terms.entry(slot).or_insert_with(|| f.zero());
                *cur = f.sub(cur, &f.one());
            }
            let sparse: Vec<(usize, F::Elem)> = terms.into_iter().collect();
            l.set_bracket(i, j, &sparse).expect("closed cell set");
        }
    }
    l
}

/// Lower triangular k-by-k matrices; dimension k(k+1)/2.
pub fn triangular<F: Field>(f: &F, k: usize) -> LieAlgebra<F> {
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| (0..=r).map(move |s| (r, s)))
        .collect();
    matrix_cells(f, &cells, format!("triangular({k})"))
}

/// Strictly lower triangular k-by-k matrices; dimension k(k-1)/2.
pub fn strictly_triangular<F: Field>(f: &F, k: usize) -> LieAlgebra<F> {
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| (0..r).map(move |s| (r, s)))
        .collect();
    matrix_cells(f, &cells, format!("strictly-triangular({k})"))
}

/// sl2 on the basis (x, y, h): [x,y] = h, [h,x] = 2x, [h,y] = -2y.
pub fn sl2<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut l = LieAlgebra::new(f.clone(), 3, "sl2");
    let two = f.from_int(2);
    l.set_bracket(0, 1, &[(2, f.one())]).expect("valid");
    l.set_bracket(0, 2, &[(0, f.neg(&two))]).expect("valid");
    l.set_bracket(1, 2, &[(1, two)]).expect("valid");
    l
}

/// Four-dimensional solvable algebra with [e1,e2] = e3, [e1,e3] = -e2,
/// [e2,e3] = e4.
pub fn example_3_1<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut l = LieAlgebra::new(f.clone(), 4, "example-3.1");
    l.set_bracket(0, 1, &[(2, f.one())]).expect("valid");
    l.set_bracket(0, 2, &[(1, f.neg(&f.one()))]).expect("valid");
    l.set_bracket(1, 2, &[(3, f.one())]).expect("valid");
    l
}

/// Four-dimensional solvable algebra with [e1,e2] = e2-e3,
/// [e1,e3] = e2+e3, [e1,e4] = 2e4, [e2,e3] = e4.
pub fn example_3_2<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut l = LieAlgebra::new(f.clone(), 4, "example-3.2");
    let one = f.one();
    l.set_bracket(0, 1, &[(1, one.clone()), (2, f.neg(&one))])
        .expect("valid");
    l.set_bracket(0, 2, &[(1, one.clone()), (2, one.clone())])
        .expect("valid");
    l.set_bracket(0, 3, &[(3, f.from_int(2))]).expect("valid");
    l.set_bracket(1, 2, &[(3, one)]).expect("valid");
    l
}

/// Nine-dimensional nilpotent algebra over characteristic two whose
/// largest abelian subalgebras (dimension 6) are not ideals; its largest
/// abelian ideal has dimension 5.
pub fn example_4_1<F: Field>(f: &F) -> Result<LieAlgebra<F>, CatalogError> {
    if f.characteristic() != 2 {
        return Err(CatalogError::IncompatibleField(
            "example-4.1 needs characteristic two".into(),
        ));
    }
    let one = f.one();
    let mut l = LieAlgebra::new(f.clone(), 9, "example-4.1");
    for (i, j, k) in [
        (1, 2, 6),
        (1, 3, 2),
        (1, 4, 3),
        (1, 5, 4),
        (1, 8, 7),
        (1, 9, 8),
        (2, 3, 7),
        (2, 4, 8),
        (2, 5, 9),
        (3, 4, 9),
    ] {
        l.set_bracket(i - 1, j - 1, &[(k - 1, one.clone())])
            .expect("valid");
    }
    Ok(l)
}

/// One row of the catalog listing.
#[derive(Debug, Clone)]
pub struct EntryInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub note: &'static str,
}

pub fn catalog_list() -> Vec<EntryInfo> {
    vec![
        EntryInfo {
            name: "example-3.1",
            params: "",
            note: "dim 4 solvable; rationals by default, primes >= 5 allowed",
        },
        EntryInfo {
            name: "example-3.2",
            params: "",
            note: "dim 4 solvable; rationals by default, primes >= 5 allowed",
        },
        EntryInfo {
            name: "example-4.1",
            params: "",
            note: "dim 9 nilpotent; characteristic two only",
        },
        EntryInfo {
            name: "abelian",
            params: "n",
            note: "zero bracket on n generators",
        },
        EntryInfo {
            name: "heisenberg",
            params: "m",
            note: "dim 2m+1, one central product per generator pair",
        },
        EntryInfo {
            name: "triangular",
            params: "k",
            note: "lower triangular k-by-k matrices, dim k(k+1)/2",
        },
        EntryInfo {
            name: "strictly-triangular",
            params: "k",
            note: "strictly lower triangular k-by-k matrices, dim k(k-1)/2",
        },
        EntryInfo {
            name: "sl2",
            params: "",
            note: "three-dimensional simple algebra (x, y, h)",
        },
    ]
}

fn require(params: &BTreeMap<String, u64>, key: &str) -> Result<usize, CatalogError> {
    params
        .get(key)
        .map(|&v| v as usize)
        .ok_or_else(|| CatalogError::BadParams(format!("missing parameter {key}")))
}

fn build_named<F: Field>(
    f: &F,
    name: &str,
    params: &BTreeMap<String, u64>,
) -> Result<LieAlgebra<F>, CatalogError> {
    match name {
        "example-3.1" => Ok(example_3_1(f)),
        "example-3.2" => Ok(example_3_2(f)),
        "example-4.1" => example_4_1(f),
        "abelian" => Ok(abelian(f, require(params, "n")?)),
        "heisenberg" => Ok(heisenberg(f, require(params, "m")?)),
        "triangular" => Ok(triangular(f, require(params, "k")?)),
        "strictly-triangular" => Ok(strictly_triangular(f, require(params, "k")?)),
        "sl2" => Ok(sl2(f)),
        other => Err(CatalogError::UnknownName(other.into())),
    }
}

/// Instantiate a catalog entry by name over the requested field.
pub fn catalog_get(
    name: &str,
    field: FieldSpec,
    params: &BTreeMap<String, u64>,
) -> Result<AnyAlgebra, CatalogError> {
    let name = name.to_ascii_lowercase().replace('_', "-");
    if matches!(name.as_str(), "example-3.1" | "example-3.2") {
        if let FieldSpec::Prime { p } = field {
            if p < 5 {
                return Err(CatalogError::IncompatibleField(format!(
                    "{name} needs the rationals or a prime of at least 5, got p = {p}"
                )));
            }
        }
    }
    match field {
        FieldSpec::Rationals => Ok(AnyAlgebra::Q(build_named(&Rationals, &name, params)?)),
        FieldSpec::Prime { p } => {
            let f = PrimeField::new(p)?;
            Ok(AnyAlgebra::Fp(build_named(&f, &name, params)?))
        }
    }
}
