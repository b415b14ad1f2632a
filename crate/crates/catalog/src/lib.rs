//! Named example algebras, classical families, reference data for the
//! simple-algebra alpha table, and seeded random generators.

pub mod entries;
pub mod random;
pub mod table1;

use liealg_core::CoreError;
use thiserror::Error;

pub use entries::{
    abelian, catalog_get, catalog_list, example_3_1, example_3_2, example_4_1, heisenberg, sl2,
    strictly_triangular, triangular, EntryInfo,
};
pub use random::{
    algebra_digest, random_metabelian_split, random_nilpotent, random_supersolvable,
};
pub use table1::table1_alpha;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),

    #[error("incompatible field: {0}")]
    IncompatibleField(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}
