//! Critical intervals, standardisation, and the DFA over the critical
//! interval alphabet that recognises the prolific texts of a pattern.

use std::fmt;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::composition::Composition;
use crate::error::Error;
use crate::prolific::{requirement_table, step};

/// An integer interval `[lo, hi]`, `hi = None` meaning unbounded. The
/// critical intervals of a pattern partition `[1, inf)` and form the
/// automaton's alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl Interval {
    pub fn bounded(lo: u64, hi: u64) -> Self {
        Interval { lo, hi: Some(hi) }
    }

    pub fn unbounded(lo: u64) -> Self {
        Interval { lo, hi: None }
    }

    pub fn contains(&self, value: u64) -> bool {
        value >= self.lo && self.hi.is_none_or(|hi| value <= hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "[{},{}]", self.lo, hi),
            None => write!(f, "[{},inf]", self.lo),
        }
    }
}

/// An automaton state `(p, s)`: length of the pattern prefix seen, length of
/// the pending suffix requirement. Accepting iff `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AutomatonState {
    pub prefix_len: usize,
    pub suffix_len: usize,
}

impl AutomatonState {
    pub fn is_accepting(&self) -> bool {
        self.suffix_len == 0
    }
}

impl fmt::Display for AutomatonState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.prefix_len, self.suffix_len)
    }
}

/// The deterministic automaton recognising the prolific texts of a pattern.
///
/// States are listed in canonical order (prefix length ascending, suffix
/// length descending); transitions are total over the critical-interval
/// alphabet. For a pattern that does not start and end with 1 the recognised
/// language is empty: the automaton then has a single non-accepting state
/// looping on every interval and the `empty_language` flag set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProlificAutomaton {
    pattern: Composition,
    intervals: Vec<Interval>,
    states: Vec<AutomatonState>,
    initial: usize,
    accepting: Vec<bool>,
    /// `transitions[state][interval]` is the target state index.
    transitions: Vec<Vec<usize>>,
    empty_language: bool,
}

/// The critical intervals of a pattern, sorted, partitioning `[1, inf)`:
/// an initial interval `[1, m-1]` when the smallest part value `m` exceeds 1,
/// one interval per gap between consecutive distinct part values, and an
/// unbounded interval from the largest value.
pub fn critical_intervals(pattern: &Composition) -> Result<Vec<Interval>, Error> {
    if pattern.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut values: Vec<u64> = pattern.parts().to_vec();
    values.sort_unstable();
    values.dedup();
    let mut out = Vec::with_capacity(values.len() + 1);
    if values[0] > 1 {
        out.push(Interval::bounded(1, values[0] - 1));
    }
    for pair in values.windows(2) {
        out.push(Interval::bounded(pair[0], pair[1] - 1));
    }
    out.push(Interval::unbounded(*values.last().unwrap()));
    Ok(out)
}

/// Index of the interval containing `value` in a sorted partition of
/// `[1, inf)`.
pub(crate) fn interval_index(intervals: &[Interval], value: u64) -> usize {
    debug_assert!(value >= 1);
    intervals.partition_point(|iv| iv.lo <= value) - 1
}

/// Replaces each part of `w` by the 1-based ordinal of the critical interval
/// of the pattern containing it.
pub fn standardize(pattern: &Composition, w: &Composition) -> Result<Composition, Error> {
    let intervals = critical_intervals(pattern)?;
    let parts = w
        .parts()
        .iter()
        .map(|&part| interval_index(&intervals, part) as u64 + 1)
        .collect();
    Ok(Composition::new(parts).expect("ordinals are positive"))
}

impl ProlificAutomaton {
    /// Builds the automaton by breadth-first closure from the initial state
    /// `(0, pattern length)` under the suffix-requirement update, probing one
    /// representative value per critical interval. Unreachable states are
    /// omitted.
    pub fn build(pattern: &Composition) -> Result<Self, Error> {
        let intervals = critical_intervals(pattern)?;
        let k = pattern.len();
        let initial = AutomatonState { prefix_len: 0, suffix_len: k };

        if !pattern.starts_and_ends_with_one() {
            return Ok(ProlificAutomaton {
                pattern: pattern.clone(),
                transitions: vec![vec![0; intervals.len()]],
                intervals,
                states: vec![initial],
                initial: 0,
                accepting: vec![false],
                empty_language: true,
            });
        }

        let u = pattern.parts();
        let lr = requirement_table(u);
        let max_part = *u.iter().max().unwrap();

        let mut discovered = vec![(initial.prefix_len, initial.suffix_len)];
        let mut transitions_by_state = Vec::new();
        let mut cursor = 0;
        while cursor < discovered.len() {
            let (p, s) = discovered[cursor];
            cursor += 1;
            let mut row = Vec::with_capacity(intervals.len());
            for interval in &intervals {
                let target = step(u, &lr, p, s, interval.lo);
                // the update must be constant across the whole interval
                let probe = interval.hi.unwrap_or(interval.lo + max_part);
                assert_eq!(
                    step(u, &lr, p, s, probe),
                    target,
                    "transition not constant on critical interval {interval} at ({p},{s})"
                );
                row.push(target);
                if !discovered.contains(&target) {
                    discovered.push(target);
                }
            }
            transitions_by_state.push(((p, s), row));
        }

        // canonical order: prefix ascending, suffix descending
        let mut states = discovered;
        states.sort_by_key(|&(p, s)| (p, std::cmp::Reverse(s)));
        let index_of = |st: (usize, usize)| states.iter().position(|&x| x == st).unwrap();
        let mut transitions = vec![Vec::new(); states.len()];
        for (st, row) in &transitions_by_state {
            transitions[index_of(*st)] = row.iter().map(|&t| index_of(t)).collect();
        }
        let accepting = states.iter().map(|&(_, s)| s == 0).collect();
        Ok(ProlificAutomaton {
            pattern: pattern.clone(),
            intervals,
            initial: index_of((0, k)),
            states: states
                .into_iter()
                .map(|(p, s)| AutomatonState { prefix_len: p, suffix_len: s })
                .collect(),
            accepting,
            transitions,
            empty_language: false,
        })
    }

    pub fn pattern(&self) -> &Composition {
        &self.pattern
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn states(&self) -> &[AutomatonState] {
        &self.states
    }

    pub fn initial_index(&self) -> usize {
        self.initial
    }

    pub fn initial_state(&self) -> AutomatonState {
        self.states[self.initial]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> Vec<AutomatonState> {
        self.states
            .iter()
            .zip(&self.accepting)
            .filter(|(_, &acc)| acc)
            .map(|(&st, _)| st)
            .collect()
    }

    /// Target of the transition from `state` on the `interval`-th critical
    /// interval.
    pub fn transition(&self, state: usize, interval: usize) -> usize {
        self.transitions[state][interval]
    }

    pub fn is_empty_language(&self) -> bool {
        self.empty_language
    }

    /// Runs the automaton over the text, mapping each part to its critical
    /// interval; true iff the final state is accepting. Agrees with the
    /// suffix-requirement decision for non-empty texts; the empty text is
    /// rejected since the initial state never accepts.
    pub fn accepts(&self, text: &Composition) -> bool {
        let mut state = self.initial;
        for &part in text.parts() {
            let interval = interval_index(&self.intervals, part);
            state = self.transitions[state][interval];
        }
        self.accepting[state]
    }

    /// DOT rendering: one node per state (accepting states double-circled),
    /// one edge per (state, interval) pair, an entry arrow into the initial
    /// state. Node and edge ordering is canonical, so the output is
    /// byte-stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph prolific {\n");
        out.push_str("    rankdir=LR;\n");
        out.push_str("    __start [shape=point, label=\"\"];\n");
        for (i, st) in self.states.iter().enumerate() {
            let shape = if self.accepting[i] { "doublecircle" } else { "circle" };
            writeln!(out, "    s{i} [shape={shape}, label=\"{st}\"];").unwrap();
        }
        writeln!(out, "    __start -> s{};", self.initial).unwrap();
        for (i, row) in self.transitions.iter().enumerate() {
            for (j, &target) in row.iter().enumerate() {
                writeln!(out, "    s{i} -> s{target} [label=\"{}\"];", self.intervals[j]).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering with indices into the serialised arrays:
    /// `{"pattern", "intervals", "states", "initial", "accepting",
    /// "transitions"}`.
    pub fn to_json(&self) -> Value {
        let states: Vec<Value> = self
            .states
            .iter()
            .map(|st| json!([st.prefix_len, st.suffix_len]))
            .collect();
        let accepting: Vec<Value> = self
            .states
            .iter()
            .zip(&self.accepting)
            .filter(|(_, &acc)| acc)
            .map(|(st, _)| json!([st.prefix_len, st.suffix_len]))
            .collect();
        let mut transitions = Vec::new();
        for (i, row) in self.transitions.iter().enumerate() {
            for (j, &target) in row.iter().enumerate() {
                transitions.push(json!([i, j, target]));
            }
        }
        json!({
            "pattern": self.pattern.parts(),
            "intervals": self.intervals.iter().map(|iv| json!([iv.lo, iv.hi])).collect::<Vec<_>>(),
            "states": states,
            "initial": json!([self.initial_state().prefix_len, self.initial_state().suffix_len]),
            "accepting": accepting,
            "transitions": transitions,
        })
    }
}

/// Checks structural identity of the automata for the pattern and for its
/// self-standardisation, after matching critical intervals by ordinal.
pub fn isomorphic_modulo_standardisation(pattern: &Composition) -> Result<bool, Error> {
    let a = ProlificAutomaton::build(pattern)?;
    let standardised = standardize(pattern, pattern)?;
    let b = ProlificAutomaton::build(&standardised)?;
    Ok(a.intervals.len() == b.intervals.len()
        && a.states == b.states
        && a.initial == b.initial
        && a.accepting == b.accepting
        && a.transitions == b.transitions
        && a.empty_language == b.empty_language)
}
