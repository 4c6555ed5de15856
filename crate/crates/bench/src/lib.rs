//! Shared fixture builders for the benchmarks.

use prolific_core::Composition;

/// A long text over small parts that keeps the automaton busy: the pattern's
/// own parts repeated until at least `min_parts` parts.
pub fn cycled_text(pattern: &Composition, min_parts: usize) -> Composition {
    let parts: Vec<u64> = pattern
        .parts()
        .iter()
        .copied()
        .cycle()
        .take(min_parts.max(pattern.len()))
        .collect();
    Composition::new(parts).expect("parts stay positive")
}
