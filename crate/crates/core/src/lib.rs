//! Episturmian words, lexicographically extremal factors and fine words.
//!
//! Infinite words are [`WordStream`]s, evaluated on prefixes whose length
//! (the horizon) is always explicit. The main entry points are
//! [`standard_word`] for standard episturmian words, [`min_factor`] and
//! [`max_factor`] for extremal factors, and [`classify`] for deciding
//! whether a word is fine.

pub mod alphabet;
pub mod episturmian;
mod error;
pub mod extremal;
pub mod fine;
pub mod free_group;
pub mod morphism;
pub mod order;
pub mod stream;
pub mod text;
pub mod word;

pub use alphabet::{Alphabet, Letter, LetterSet};
pub use episturmian::{standard_word, DirectiveWord};
pub use error::{Error, Result};
pub use extremal::{max_factor, min_factor, ExtremalResult};
pub use fine::{classify, construct_skew, is_fine_empirical, Classification, SkewSpec, StructuredWord};
pub use free_group::GroupWord;
pub use morphism::PureEpistandardMorphism;
pub use order::LexOrder;
pub use stream::WordStream;
pub use word::Word;
