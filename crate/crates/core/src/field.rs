use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// An exact field of scalars. Implementations must be exact: no rounding,
/// no floating point. `Elem` carries a total order so that witnesses and
/// canonical bases can be compared deterministically.
pub trait Field: Clone + Debug + Eq + Send + Sync + 'static {
    type Elem: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_int(&self, n: i64) -> Self::Elem;

    /// 0 for characteristic zero, otherwise the prime p.
    fn characteristic(&self) -> u64;

    /// All field elements in canonical ascending order, or `None` when the
    /// field is infinite. Exhaustive subspace enumeration requires `Some`.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// Exact bridge to rational values, available only in characteristic
    /// zero; eigenvalue search uses it. `None` for finite fields.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;

    /// Inverse bridge; `None` for finite fields.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    /// Parse a scalar literal ("3", "-2", "3/4" over the rationals).
    fn parse_scalar(&self, text: &str) -> Result<Self::Elem, CoreError>;

    /// Canonical rendering; must round-trip through `parse_scalar`.
    fn format_scalar(&self, a: &Self::Elem) -> String {
        a.to_string()
    }

    fn spec(&self) -> FieldSpec;
}

/// Serializable field descriptor used in algebra documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn validate(&self) -> Result<(), CoreError> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime { p } => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(CoreError::BadScalar {
                        text: p.to_string(),
                        reason: "field modulus must be prime".into(),
                    })
                }
            }
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 11u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }

    fn parse_scalar(&self, text: &str) -> Result<BigRational, CoreError> {
        let trimmed = text.trim();
        BigRational::from_str(trimmed).map_err(|e| CoreError::BadScalar {
            text: text.to_string(),
            reason: e.to_string(),
        })
    }

    fn format_scalar(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
}

/// The prime field F_p. Elements are canonical residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, CoreError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(CoreError::BadScalar {
                text: p.to_string(),
                reason: "field modulus must be prime".into(),
            })
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        Some(((s0 % p + p) % p) as u64)
    }

    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i128;
        ((n as i128 % p + p) % p) as u64
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn to_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }

    fn from_rational(&self, _q: &BigRational) -> Option<u64> {
        None
    }

    fn parse_scalar(&self, text: &str) -> Result<u64, CoreError> {
        let trimmed = text.trim();
        let n = i128::from_str(trimmed).map_err(|e| CoreError::BadScalar {
            text: text.to_string(),
            reason: e.to_string(),
        })?;
        let p = self.p as i128;
        Ok(((n % p + p) % p) as u64)
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composite_modulus() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.mul(&4, &5), 6);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.parse_scalar("-8").unwrap(), 6);
    }

    #[test]
    fn rational_parse_and_format_round_trip() {
        let f = Rationals;
        for text in ["0", "7", "-3", "3/4", "-5/2"] {
            let v = f.parse_scalar(text).unwrap();
            assert_eq!(f.format_scalar(&v), text);
        }
        let reduced = f.parse_scalar("6/4").unwrap();
        assert_eq!(f.format_scalar(&reduced), "3/2");
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("x").is_err());
    }

    #[test]
    fn element_enumeration_matches_order() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.elements().unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(Rationals.elements(), None);
    }
}
