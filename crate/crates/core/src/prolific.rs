//! Prolificity decisions: the linear-time suffix-requirement procedure, the
//! covering-plus-insertion check, and the definitional brute-force oracle.
//!
//! A text is prolific for a pattern when every one-element extension of the
//! text contains strictly more occurrences of the pattern. Prolific texts
//! exist exactly for patterns that start and end with a part of size 1.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::composition::{count_occurrences, extensions, is_covered, Composition};
use crate::error::Error;

/// One row of the suffix-requirement trace: after reading the `index`-th
/// part of the text, the length of the maximal pattern prefix seen so far
/// and the length of the pending suffix requirement (always a suffix of the
/// pattern, identified by its length).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    /// 1-based position in the text.
    pub index: usize,
    /// The part that was read.
    pub part: u64,
    /// Length of the maximal pattern prefix contained so far.
    pub prefix_len: usize,
    /// Length of the current suffix requirement.
    pub suffix_len: usize,
}

// Serialised as the array [index, part, prefix_len, suffix_len].
impl Serialize for TraceEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        seq.serialize_element(&self.index)?;
        seq.serialize_element(&self.part)?;
        seq.serialize_element(&self.prefix_len)?;
        seq.serialize_element(&self.suffix_len)?;
        seq.end()
    }
}

/// The local suffix requirement after a prefix of length `p` has been seen.
///
/// With `b` the largest `j <= p` such that the pattern part following a
/// prefix of length `j` has size 1 (such a `j` exists because the pattern
/// starts with 1), this is `len - b - 1`: the length of the pattern suffix
/// that must still appear so that a 1 inserted now creates a new occurrence.
pub fn local_requirement(pattern: &Composition, p: usize) -> Result<usize, Error> {
    if pattern.parts().first() != Some(&1) {
        return Err(Error::PatternMustStartWithOne);
    }
    if p > pattern.len() {
        return Err(Error::PrefixOutOfRange { p, len: pattern.len() });
    }
    Ok(requirement_table(pattern.parts())[p])
}

/// Local requirement for every prefix length 0..=k. Assumes the pattern
/// starts with 1.
pub(crate) fn requirement_table(u: &[u64]) -> Vec<usize> {
    let k = u.len();
    let mut table = Vec::with_capacity(k + 1);
    let mut best = 0;
    for p in 0..=k {
        if p < k && u[p] == 1 {
            best = p;
        }
        table.push(k - best - 1);
    }
    table
}

/// One step of the suffix-requirement update on reading part `c` from state
/// `(p, s)`. The requirement is the last `s` parts of the pattern; it
/// shrinks when `c` matches its first part, and is then floored at the local
/// requirement of the new prefix length.
pub(crate) fn step(u: &[u64], lr: &[usize], p: usize, s: usize, c: u64) -> (usize, usize) {
    let k = u.len();
    let p_next = if p < k && c >= u[p] { p + 1 } else { p };
    let s_reduced = if s > 0 && c >= u[k - s] { s - 1 } else { s };
    (p_next, s_reduced.max(lr[p_next]))
}

/// Runs the suffix-requirement procedure over the text, one entry per part,
/// starting from the state `(0, pattern length)`.
///
/// Requires a pattern that starts and ends with 1 and a non-empty text.
pub fn suffix_trace(pattern: &Composition, text: &Composition) -> Result<Vec<TraceEntry>, Error> {
    if pattern.is_empty() || !pattern.starts_and_ends_with_one() {
        return Err(Error::PatternBoundaryNotOne);
    }
    if text.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let u = pattern.parts();
    let lr = requirement_table(u);
    let (mut p, mut s) = (0, u.len());
    let mut out = Vec::with_capacity(text.len());
    for (i, &c) in text.parts().iter().enumerate() {
        (p, s) = step(u, &lr, p, s, c);
        out.push(TraceEntry { index: i + 1, part: c, prefix_len: p, suffix_len: s });
    }
    Ok(out)
}

/// Decides prolificity with the suffix-requirement procedure: patterns that
/// do not start and end with 1 have no prolific texts at all; otherwise the
/// text is prolific iff the final suffix requirement is empty.
///
/// Runs in time linear in the text length. Errors on empty inputs.
pub fn is_prolific(pattern: &Composition, text: &Composition) -> Result<bool, Error> {
    if pattern.is_empty() || text.is_empty() {
        return Err(Error::EmptyComposition);
    }
    if !pattern.starts_and_ends_with_one() {
        return Ok(false);
    }
    let trace = suffix_trace(pattern, text)?;
    Ok(trace.last().unwrap().suffix_len == 0)
}

/// Decides prolificity from the definition: true iff every one-element
/// extension of the text contains strictly more occurrences of the pattern.
/// Exponential-ish; exists as an oracle.
pub fn is_prolific_oracle(pattern: &Composition, text: &Composition) -> Result<bool, Error> {
    if pattern.is_empty() || text.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let base = count_occurrences(pattern, text);
    Ok(extensions(text)
        .iter()
        .all(|e| count_occurrences(pattern, e) > base))
}

/// Decides prolificity via covering: the text must be covered by the
/// pattern, and inserting a part of size 1 into any gap flanked by parts of
/// size greater than 1 must strictly increase the occurrence count.
///
/// Gaps next to an existing part of size 1 need no check (the new part can
/// stand in for its neighbour in any occurrence). Boundary gaps next to an
/// end part of size greater than 1 are checked as well; covering guarantees
/// they succeed, so this cannot change the result.
pub fn is_prolific_by_corollary(pattern: &Composition, text: &Composition) -> Result<bool, Error> {
    if pattern.is_empty() || !pattern.starts_and_ends_with_one() {
        return Err(Error::PatternBoundaryNotOne);
    }
    if text.is_empty() {
        return Err(Error::EmptyComposition);
    }
    if !is_covered(pattern, text) {
        return Ok(false);
    }
    let v = text.parts();
    let n = v.len();
    let mut gaps = Vec::new();
    if v[0] > 1 {
        gaps.push(0);
    }
    gaps.extend((1..n).filter(|&i| v[i - 1] > 1 && v[i] > 1));
    if v[n - 1] > 1 {
        gaps.push(n);
    }
    let base = count_occurrences(pattern, text);
    for gap in gaps {
        let mut parts = v.to_vec();
        parts.insert(gap, 1);
        let inserted = Composition::new(parts).expect("insertion keeps parts positive");
        if count_occurrences(pattern, &inserted) <= base {
            return Ok(false);
        }
    }
    Ok(true)
}
