//! Prolific integer compositions.
//!
//! A text composition is *prolific* for a pattern composition when every
//! one-element extension of the text contains strictly more occurrences of
//! the pattern. This crate decides, counts and explains prolificity:
//!
//! - [`composition`]: compositions as values; containment, occurrence
//!   counting, supports, covering, and the extension/reduction
//!   neighbourhoods.
//! - [`prolific`]: the linear-time suffix-requirement decision procedure,
//!   the covering-based check, and the definitional brute-force oracle.
//! - [`automaton`]: critical intervals, standardisation, and the DFA over
//!   the critical-interval alphabet recognising the prolific texts of a
//!   pattern.
//! - [`minimal`]: the complete finite set of minimal prolific compositions
//!   via shortest-accepted-word search with iterated containment exclusion.
//! - [`selftest`]: bounded exhaustive agreement suites pitting every fast
//!   procedure against its oracle.
//!
//! ```
//! use prolific_core::{
//!     is_prolific, minimal_prolific, parse_composition, ProlificAutomaton, DEFAULT_ROUND_CAP,
//! };
//!
//! let pattern = parse_composition("1441")?;
//! let text = parse_composition("14441")?;
//! assert!(is_prolific(&pattern, &text)?);
//!
//! let automaton = ProlificAutomaton::build(&pattern)?;
//! assert!(automaton.accepts(&text));
//!
//! let minimal = minimal_prolific(&pattern, DEFAULT_ROUND_CAP)?;
//! assert_eq!(minimal.elements(), &[text]);
//! # Ok::<(), prolific_core::Error>(())
//! ```

pub mod automaton;
pub mod composition;
mod error;
pub mod minimal;
pub mod prolific;
pub mod selftest;

pub use automaton::{
    critical_intervals, isomorphic_modulo_standardisation, standardize, AutomatonState, Interval,
    ProlificAutomaton,
};
pub use composition::{
    compositions_of_size, compositions_up_to, contains, count_occurrences,
    count_occurrences_oracle, extensions, is_covered, longest_prefix_contained,
    parse_composition, reductions, subcomposition, supports, supports_capped, Composition,
    OccurrenceCount, Support, DEFAULT_SUPPORTS_CAP,
};
pub use error::Error;
pub use minimal::{
    exclude, is_self_prolific, minconst_formula, minimal_prolific, minimal_prolific_oracle,
    mk_pattern, prune_automaton, shortest_accepted, ExclusionMatcher, MinimalSet, SearchEdge,
    SearchGraph, SearchNode, DEFAULT_ROUND_CAP,
};
pub use prolific::{
    is_prolific, is_prolific_by_corollary, is_prolific_oracle, local_requirement, suffix_trace,
    TraceEntry,
};
