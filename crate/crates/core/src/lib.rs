//! A braid-group computation engine working through the fundamental group
//! of the punctured disk.
//!
//! A braid is represented by its action on the standard g-base: an ordered
//! tuple of loops around the punctures. The engine keeps two interchangeable
//! presentations of that g-base, a geometric one ([`path_codec::PathList`]
//! link sequences) and a syntactic one (reduced free-group words,
//! [`braid::SyntacticGBase`]), with exact conversions both ways. On top of
//! them sit the group operation on g-bases, the word-problem decision, an
//! independent oracle for differential testing, and a small measurement
//! harness.

pub mod bench;
pub mod braid;
pub mod error;
pub mod free_words;
pub mod oracle;
pub mod path_codec;
pub mod svg;
pub mod workload;

pub use braid::{
    multiply, process_word_geometric, process_word_syntactic, words_equal, BraidLetter,
    BraidWord, Pipeline, ProcessOptions, SyntacticGBase,
};
pub use error::{Error, Result};
pub use free_words::{FGLetter, FGWord, Sign};
pub use oracle::{artin_oracle, perm_of, Permutation};
pub use path_codec::{
    path_to_syntactic, reduce_path, syntactic_to_path, GBase, Link, PathList, Violation,
};
