//! Partitions, compositions, permutations and symmetric-group characters.

mod character;
mod composition;
mod partition;
mod permutation;

pub use character::character;
pub(crate) use character::character_unchecked;
pub use composition::Composition;
pub use partition::{partitions_of, Partition};
pub use permutation::{foata_linearize, record_partition, Permutation};
pub(crate) use permutation::next_permutation;
