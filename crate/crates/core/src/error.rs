use crate::path_codec::Violation;
use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient generator count mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("braid letter index {index} out of range 1..={max} (n = {n})")]
    BraidLetterOutOfRange { index: usize, max: usize, n: usize },

    #[error("strand count must be at least 1")]
    ZeroStrands,

    #[error("substitution needs {expected} images, got {got}")]
    ImageArity { expected: usize, got: usize },

    #[error("invalid link ({point},{position})")]
    InvalidLink { point: i32, position: i32 },

    #[error("invalid path: {0}")]
    InvalidPath(Violation),

    #[error("word is not freely reduced")]
    NotReduced,

    #[error("word is not of conjugate shape Q^-1 g Q")]
    NotConjugate,

    #[error("conjugate core is a negative power; no path encoding exists")]
    NegativeCore,

    #[error("expected {expected} paths in the g-base, found {found}")]
    GBaseArity { expected: usize, found: usize },

    #[error("terminal points {points:?} are not a permutation of 1..={n}")]
    NotAPermutation { points: Vec<usize>, n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
