//! Skew shapes, expansions of skew Schur functions in the Schur and
//! quasisymmetric bases, overlap partitions, and exhaustive checks of the
//! relations between F-support containment and overlap dominance.

pub mod cache;
pub mod comparisons;
pub mod config;
pub mod error;
pub mod overlaps;
pub mod posets;
pub mod qsym;
pub mod shapes;
pub mod tableaux;

pub use config::{Limits, Shard};
pub use error::{Error, Result};
pub use overlaps::{
    dominance_leq, overlap_cols, overlap_rows, overlaps_dominated, profile_equal, rects, OverlapProfile,
};
pub use shapes::{Composition, Partition, Ribbon, SkewShape};
pub use tableaux::{Basis, QsymExpansion, SymExpansion};
