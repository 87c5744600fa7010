//! Exact q-analogs of permutation and tableau containment counts.

pub mod error;
pub mod contain;
pub mod exact;
pub mod jset;
pub mod limits;
pub mod perm;
pub mod qstat;
pub mod rsk;
pub mod tableau;

pub use error::{ExactError, JSetError, LimitError, PermError, TableauError};
pub use contain::Report;
pub use exact::{BivarPoly, Rational};
pub use jset::IntSet;
pub use perm::{BinaryWord, Permutation, ZeroOneMatrix};
pub use tableau::{Partition, SkewShape, Tableau};
