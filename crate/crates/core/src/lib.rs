//! Reduced words of permutations.
//!
//! * [`word`]: words, permutations, evaluation, tower decompositions and the
//!   natural word (the lexicographically largest reduced word).
//! * [`poset`]: the directed short and long braid moves and the poset they
//!   generate on the reduced words of a permutation.
//! * [`sorting`]: selection sort then insertion sort, taking any reduced word
//!   to the natural word along a chain of directed moves.
//! * [`generation`]: passage words, basic words and restricted shuffles, which
//!   together produce every reduced word from the natural word.
//! * [`oracle`]: brute-force enumerations and the staircase count used to
//!   check the rest.
//! * [`cli`]: the `redwords` command line.

pub mod cli;
pub mod error;
pub mod generation;
pub mod oracle;
pub mod poset;
pub mod sorting;
pub mod text;
pub mod word;
pub mod wordset;

pub use error::{Error, Result};
pub use word::{Permutation, TowerDecomposition, Word};
pub use wordset::WordSet;
