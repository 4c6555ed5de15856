use thiserror::Error;

use crate::composition::Composition;

/// Errors reported by parsing and by operations with violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty composition text")]
    EmptyInput,

    #[error("invalid part {token:?}: not a positive integer")]
    InvalidToken { token: String },

    #[error("part must be positive, got {token:?}")]
    NonPositivePart { token: String },

    #[error("composition parts must be at least 1")]
    ZeroPart,

    #[error("operation requires a non-empty composition")]
    EmptyComposition,

    #[error("support indices must be strictly increasing")]
    UnorderedSupport,

    #[error("support index {index} out of range for a composition of {len} parts")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("text has {len} parts, above the supports enumeration cap of {cap}")]
    SupportsCapExceeded { len: usize, cap: usize },

    #[error("pattern must start with a part of size 1")]
    PatternMustStartWithOne,

    #[error("pattern must start and end with a part of size 1")]
    PatternBoundaryNotOne,

    #[error("prefix length {p} out of range 0..={len}")]
    PrefixOutOfRange { p: usize, len: usize },

    #[error(
        "minimal search for pattern {pattern} exceeded the cap of {cap} rounds; \
         {} elements found so far", .partial.len()
    )]
    RoundCapExceeded {
        pattern: Composition,
        partial: Vec<Composition>,
        cap: usize,
    },

    #[error("pattern does not have the shape 1 e_1 .. e_k 1 with k >= 1 and every e_i > 1")]
    NotMinconstShape,
}
