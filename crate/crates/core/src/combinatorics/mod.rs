//! Partitions, permutations and words in simple transpositions.

mod partition;
mod permutation;

use thiserror::Error;

pub use partition::{partitions_of, partitions_up_to, Partition};
pub use permutation::{
    coset_decompose, coset_rep, perm_length, reduced_word, word_eval, GeneratorWord, Permutation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("generator s_{letter} is out of range for S_{n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type CombResult<T> = Result<T, CombError>;
