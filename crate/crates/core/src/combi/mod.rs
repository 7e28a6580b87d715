//! Permutations, reduced words and partitions in a rectangle.

mod partition;
mod perm;

pub use partition::{parse_parts, BoxPartition};
pub use perm::{Permutation, ReducedWord, MAX_WORD_ENUMERATION_RANK};
