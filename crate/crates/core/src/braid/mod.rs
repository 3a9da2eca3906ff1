//! Disc braid groups `B_n` in the Artin presentation.
//!
//! Words are plain value objects; equality in the group is decided through
//! the left-greedy normal form in [`GarsideForm`].

mod garside;
mod permutation;
mod word;

pub use garside::{garside_normal_form, GarsideForm};
pub use permutation::Permutation;
pub use word::{compose, invert, underlying_permutation, words_equal, BraidWord};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is not a generator of B_{strands}")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("{0}")]
    Parse(String),
}
