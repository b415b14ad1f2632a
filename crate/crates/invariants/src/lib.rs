//! The two abelian invariants of a finite-dimensional Lie algebra: the
//! largest dimension of an abelian subalgebra (alpha) and of an abelian
//! ideal (beta). Exact values come from certified searches over finite
//! fields; over the rationals the crate derives sound bounds, classifies
//! the alpha = n - 2 boundary case, and certifies maximal-abelian-ideal
//! structure.

pub mod bounds;
pub mod checks;
pub mod classify;
pub mod greedy;
pub mod search;
pub mod split;
pub mod util;

use liealg_core::CoreError;
use thiserror::Error;

pub use bounds::{bounds, BoundRow, BoundsReport, SourceTag};
pub use checks::{
    maximal_abelian_ideal_check, triangular_embedding_check, IdealCheckReport, TriangularReport,
};
pub use classify::{classify_codim2, BetaPrediction, Case, TrichotomyReport, Witnesses};
pub use greedy::greedy_abelian_witness;
pub use search::{alpha_exact, beta_exact, InvariantCertificate, InvariantKind, Method, Strategy};
pub use split::find_complement;

#[derive(Debug, Error)]
pub enum InvariantsError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no classification case matched: {}", details.join("; "))]
    TheoremViolation { details: Vec<String> },
}

pub type Result<T> = std::result::Result<T, InvariantsError>;
