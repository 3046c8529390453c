//! Partitions, compositions and skew shapes.

mod enumerate;
mod partition;
mod shape;

pub use enumerate::{count_shapes, enumerate_shapes};
pub use partition::{Composition, Partition};
pub use shape::{Ribbon, RowSpan, SkewShape};
