//! Exact structure-constant Lie algebras over the rationals and over
//! prime fields: subspace arithmetic in canonical form, classical series
//! and radicals, ideal flags, and deterministic, budgeted enumeration of
//! subspaces over finite fields.
//!
//! Everything is exact. Computations that would need numerical
//! approximation or unbounded search refuse with a typed error instead of
//! guessing.

pub mod algebra;
pub mod derivations;
pub mod document;
pub mod eigen;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod frattini;
pub mod ideals;
pub mod linalg;
pub mod nilradical;
pub mod socle;
pub mod structure;
pub mod subspace;

pub use algebra::{JacobiFailure, LieAlgebra, ValidationReport};
pub use document::{AlgebraDocument, AnyAlgebra, BracketEntry};
pub use enumerate::{Budget, DEFAULT_BUDGET};
pub use error::{CoreError, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use frattini::FrattiniRoute;
pub use ideals::Flag;
pub use nilradical::NilradicalRoute;
pub use structure::{QuotientMap, SeriesReport, SubalgebraView};
pub use subspace::{format_combination, parse_combination, parse_subspace, Subspace};
