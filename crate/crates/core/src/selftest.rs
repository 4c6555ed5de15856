//! Bounded exhaustive agreement suites: every decision procedure against its
//! brute-force oracle, plus the structural results, checked over all
//! patterns and texts up to configurable size bounds. These back both the
//! `selftest` command and the test suites.

use std::collections::BTreeSet;

use crate::automaton::{critical_intervals, standardize, ProlificAutomaton};
use crate::composition::{
    compositions_up_to, contains, count_occurrences, count_occurrences_oracle, extensions,
    is_covered, longest_prefix_contained, reductions, supports_capped, Composition,
};
use crate::minimal::{
    is_self_prolific, minconst_formula, minimal_prolific, minimal_prolific_oracle,
    prune_automaton, DEFAULT_ROUND_CAP,
};
use crate::prolific::{
    is_prolific, is_prolific_by_corollary, is_prolific_oracle, local_requirement, suffix_trace,
};

/// Size bounds for the exhaustive suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    /// Maximum total size of enumerated patterns.
    pub pattern_max: u64,
    /// Maximum total size of enumerated texts.
    pub text_max: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { pattern_max: 6, text_max: 9 }
    }
}

/// Outcome of one suite: how many cases ran and the first counterexample, if
/// any. Cases are enumerated in canonical order, so a reported
/// counterexample is minimal for that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct SuiteRun {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl SuiteRun {
    fn new(name: &'static str) -> Self {
        SuiteRun { name, cases: 0, counterexample: None }
    }

    /// Records one case; returns false once a counterexample is held so
    /// callers can stop early.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        self.counterexample.is_none()
    }

    fn finish(self) -> SuiteReport {
        SuiteReport { name: self.name, cases: self.cases, counterexample: self.counterexample }
    }
}

fn patterns(cfg: &SelftestConfig) -> Vec<Composition> {
    compositions_up_to(cfg.pattern_max)
}

fn valid_patterns(cfg: &SelftestConfig) -> Vec<Composition> {
    patterns(cfg)
        .into_iter()
        .filter(Composition::starts_and_ends_with_one)
        .collect()
}

fn texts(cfg: &SelftestConfig) -> Vec<Composition> {
    compositions_up_to(cfg.text_max)
}

fn support_union(pattern: &Composition, text: &Composition) -> BTreeSet<usize> {
    supports_capped(pattern, text, usize::MAX)
        .expect("non-empty pattern, uncapped")
        .iter()
        .flat_map(|s| s.indices().to_vec())
        .collect()
}

/// Greedy containment and longest-prefix against exhaustive subset search.
pub fn suite_containment_agreement(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("containment-greedy-vs-exhaustive");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let exhaustive = !supports_capped(&pattern, &text, usize::MAX).unwrap().is_empty();
            if !run.check(contains(&pattern, &text) == exhaustive, || {
                format!("contains({pattern}, {text}) disagrees with exhaustive search")
            }) {
                break 'outer;
            }
            let greedy = longest_prefix_contained(&pattern, &text);
            let mut best = 0;
            for p in 1..=pattern.len() {
                let prefix = Composition::new(pattern.parts()[..p].to_vec()).unwrap();
                if !supports_capped(&prefix, &text, usize::MAX).unwrap().is_empty() {
                    best = p;
                }
            }
            if !run.check(greedy == best, || {
                format!("longest_prefix_contained({pattern}, {text}) = {greedy}, exhaustive {best}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// The subset-sum count against the peel-last-part recursion.
pub fn suite_counting_agreement(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("counting-dp-agreement");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let direct = count_occurrences(&pattern, &text);
            let recursed = count_occurrences_oracle(&pattern, &text);
            if !run.check(direct == recursed, || {
                format!("count({pattern}, {text}): subset sum {direct}, recursion {recursed}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Occurrence counts never drop under any one-element extension.
pub fn suite_counting_monotonicity(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("counting-extension-monotonicity");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let base = count_occurrences(&pattern, &text);
            for e in extensions(&text) {
                if !run.check(count_occurrences(&pattern, &e) >= base, || {
                    format!("count({pattern}, {e}) dropped below count({pattern}, {text})")
                }) {
                    break 'outer;
                }
            }
        }
    }
    run.finish()
}

/// Counting is symmetric under simultaneous reversal.
pub fn suite_counting_reverse_symmetry(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("counting-reverse-symmetry");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let fwd = count_occurrences(&pattern, &text);
            let rev = count_occurrences(&pattern.reverse(), &text.reverse());
            if !run.check(fwd == rev, || {
                format!("count({pattern}, {text}) = {fwd} but reversed count = {rev}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// The linear-time covering test against the union of all supports.
pub fn suite_covering_agreement(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("covering-support-union-agreement");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let oracle = support_union(&pattern, &text).len() == text.len();
            if !run.check(is_covered(&pattern, &text) == oracle, || {
                format!("is_covered({pattern}, {text}) disagrees with the support union")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// `w` is a reduction of `c` exactly when `c` is an extension of `w`.
pub fn suite_extension_reduction_duality(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("extension-reduction-duality");
    let mut all = texts(cfg);
    all.push(Composition::empty());
    'outer: for c in &all {
        for r in reductions(c) {
            if !run.check(extensions(&r).contains(c), || {
                format!("{c} not among extensions of its reduction {r}")
            }) {
                break 'outer;
            }
        }
        for e in extensions(c) {
            if !run.check(reductions(&e).contains(c), || {
                format!("{c} not among reductions of its extension {e}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// The four prolificity routes agree: suffix-requirement procedure,
/// definitional oracle, covering corollary, automaton acceptance.
pub fn suite_prolific_four_way_agreement(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-four-way-agreement");
    'outer: for pattern in valid_patterns(cfg) {
        let automaton = ProlificAutomaton::build(&pattern).unwrap();
        for text in texts(cfg) {
            let fast = is_prolific(&pattern, &text).unwrap();
            let accepted = automaton.accepts(&text);
            let corollary = is_prolific_by_corollary(&pattern, &text).unwrap();
            let oracle = is_prolific_oracle(&pattern, &text).unwrap();
            if !run.check(
                fast == oracle && fast == corollary && fast == accepted,
                || {
                    format!(
                        "pattern {pattern}, text {text}: procedure {fast}, oracle {oracle}, \
                         corollary {corollary}, automaton {accepted}"
                    )
                },
            ) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Patterns that do not start and end with 1 admit no prolific text.
pub fn suite_prolific_invalid_pattern(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-invalid-pattern-never");
    'outer: for pattern in patterns(cfg) {
        if pattern.starts_and_ends_with_one() {
            continue;
        }
        let automaton = ProlificAutomaton::build(&pattern).unwrap();
        for text in texts(cfg) {
            let oracle = is_prolific_oracle(&pattern, &text).unwrap();
            let fast = is_prolific(&pattern, &text).unwrap();
            if !run.check(!oracle && !fast && !automaton.accepts(&text), || {
                format!("pattern {pattern} (bad boundary) claims a prolific text {text}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Prolific texts stay prolific under every extension.
pub fn suite_prolific_upward_closure(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-upward-closure");
    'outer: for pattern in valid_patterns(cfg) {
        for text in texts(cfg) {
            if !is_prolific(&pattern, &text).unwrap() {
                continue;
            }
            for e in extensions(&text) {
                if !run.check(is_prolific(&pattern, &e).unwrap(), || {
                    format!("{text} is prolific for {pattern} but its extension {e} is not")
                }) {
                    break 'outer;
                }
            }
        }
    }
    run.finish()
}

/// A prolific text contains the pattern and is covered by it.
pub fn suite_prolific_implies_contains_covered(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-implies-contains-and-covered");
    'outer: for pattern in valid_patterns(cfg) {
        for text in texts(cfg) {
            if !is_prolific(&pattern, &text).unwrap() {
                continue;
            }
            if !run.check(contains(&pattern, &text), || {
                format!("{text} is prolific for {pattern} yet does not contain it")
            }) {
                break 'outer;
            }
            if !run.check(is_covered(&pattern, &text), || {
                format!("{text} is prolific for {pattern} yet not covered by it")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Prolificity is symmetric under simultaneous reversal.
pub fn suite_prolific_reverse_symmetry(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-reverse-symmetry");
    'outer: for pattern in patterns(cfg) {
        for text in texts(cfg) {
            let fwd = is_prolific(&pattern, &text).unwrap();
            let rev = is_prolific(&pattern.reverse(), &text.reverse()).unwrap();
            if !run.check(fwd == rev, || {
                format!("is_prolific({pattern}, {text}) = {fwd} but reversed = {rev}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// For `u = 1 a 1`, the doubled word `1 a a 1` is prolific for `u`.
/// Exhaustive over pattern sizes up to 7.
pub fn suite_prolific_witness(_cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prolific-witness-doubling");
    let one = Composition::new(vec![1]).unwrap();
    let mut middles = vec![Composition::empty()];
    middles.extend(compositions_up_to(5));
    for alpha in middles {
        let pattern = one.concat(&alpha).concat(&one);
        let text = one.concat(&alpha).concat(&alpha).concat(&one);
        if !run.check(is_prolific(&pattern, &text).unwrap(), || {
            format!("doubled text {text} not prolific for {pattern}")
        }) {
            break;
        }
    }
    run.finish()
}

/// Trace rows keep their shape: prefix length never decreases, suffix length
/// never increases while the prefix is constant, and the suffix requirement
/// never drops below the local requirement.
pub fn suite_trace_shape(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("trace-shape");
    'outer: for pattern in valid_patterns(cfg) {
        for text in texts(cfg) {
            let trace = suffix_trace(&pattern, &text).unwrap();
            let k = pattern.len();
            let mut prev = (0usize, k);
            for entry in &trace {
                let ok = entry.prefix_len >= prev.0
                    && entry.prefix_len <= k
                    && entry.suffix_len <= k
                    && (entry.prefix_len > prev.0 || entry.suffix_len <= prev.1)
                    && entry.suffix_len
                        >= local_requirement(&pattern, entry.prefix_len).unwrap();
                if !run.check(ok, || {
                    format!(
                        "trace of {pattern} over {text} breaks shape at index {}",
                        entry.index
                    )
                }) {
                    break 'outer;
                }
                prev = (entry.prefix_len, entry.suffix_len);
            }
        }
    }
    run.finish()
}

/// Critical intervals partition the positive integers and standardisation is
/// constant exactly on them.
pub fn suite_interval_partition(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("interval-partition-and-constancy");
    'outer: for pattern in patterns(cfg) {
        let intervals = critical_intervals(&pattern).unwrap();
        let partitioned = intervals[0].lo == 1
            && intervals.last().unwrap().hi.is_none()
            && intervals
                .windows(2)
                .all(|w| w[0].hi == Some(w[1].lo - 1));
        if !run.check(partitioned, || {
            format!("critical intervals of {pattern} do not partition [1, inf)")
        }) {
            break 'outer;
        }
        // standardisation is constant on each interval and distinct across
        let ordinal = |value: u64| {
            standardize(&pattern, &Composition::new(vec![value]).unwrap())
                .unwrap()
                .parts()[0]
        };
        for (i, interval) in intervals.iter().enumerate() {
            let lo = interval.lo;
            let hi = interval.hi.unwrap_or(lo + pattern.size() + 1);
            let mid = lo + (hi - lo) / 2;
            let constant = ordinal(lo) == i as u64 + 1
                && ordinal(hi) == i as u64 + 1
                && ordinal(mid) == i as u64 + 1;
            if !run.check(constant, || {
                format!("standardisation of {pattern} not constant on {interval}")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Prolificity is invariant under standardisation of pattern and text.
pub fn suite_standardisation_theorem(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("standardisation-theorem");
    'outer: for pattern in patterns(cfg) {
        let std_pattern = standardize(&pattern, &pattern).unwrap();
        for text in texts(cfg) {
            let plain = is_prolific(&pattern, &text).unwrap();
            let std_text = standardize(&pattern, &text).unwrap();
            let standardised = is_prolific(&std_pattern, &std_text).unwrap();
            if !run.check(plain == standardised, || {
                format!(
                    "is_prolific({pattern}, {text}) = {plain} but standardised pair gives \
                     {standardised}"
                )
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// The self-standardisation of a pattern is supported by `1..=m`, or by
/// `2..=m+1` when the pattern has no part of size 1.
pub fn suite_standardised_support(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("standardised-pattern-support");
    for pattern in patterns(cfg) {
        let std_pattern = standardize(&pattern, &pattern).unwrap();
        let distinct: BTreeSet<u64> = std_pattern.parts().iter().copied().collect();
        let m = pattern
            .parts()
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .len() as u64;
        let expected: BTreeSet<u64> = if pattern.parts().contains(&1) {
            (1..=m).collect()
        } else {
            (2..=m + 1).collect()
        };
        if !run.check(distinct == expected, || {
            format!("standardisation of {pattern} supported by {distinct:?}, expected {expected:?}")
        }) {
            break;
        }
    }
    run.finish()
}

/// Structural bounds on the automaton and equivalence of the automata for a
/// pattern and its standardisation; the pruned graph is acyclic.
pub fn suite_automaton_structure(cfg: &SelftestConfig) -> SuiteReport {
    use crate::automaton::isomorphic_modulo_standardisation;
    let mut run = SuiteRun::new("automaton-structure");
    'outer: for pattern in patterns(cfg) {
        let automaton = ProlificAutomaton::build(&pattern).unwrap();
        let k = pattern.len();
        if !run.check(automaton.states().len() <= (k + 1) * (k + 1), || {
            format!("automaton of {pattern} has too many states")
        }) {
            break 'outer;
        }
        if !automaton.is_empty_language() {
            for (i, state) in automaton.states().iter().enumerate() {
                for j in 0..automaton.intervals().len() {
                    let target = automaton.states()[automaton.transition(i, j)];
                    let p_ok = target.prefix_len == state.prefix_len
                        || target.prefix_len == state.prefix_len + 1;
                    let s_ok = target.suffix_len == state.suffix_len
                        || target.suffix_len + 1 == state.suffix_len
                        || target.suffix_len
                            == local_requirement(&pattern, target.prefix_len).unwrap();
                    if !run.check(p_ok && s_ok, || {
                        format!("automaton of {pattern}: transition {state} -> {target} off-shape")
                    }) {
                        break 'outer;
                    }
                }
            }
        }
        // non-loop transitions strictly advance (prefix up or suffix down),
        // so the graph without self-loops is acyclic
        let graph = prune_automaton(&automaton);
        let lows: Vec<u64> = automaton.intervals().iter().map(|iv| iv.lo).collect();
        for i in 0..graph.nodes().len() {
            let from = &graph.nodes()[i].state;
            for e in graph.edges_from(i) {
                let to = &graph.nodes()[e.to].state;
                let advances = to.prefix_len > from.prefix_len
                    || (to.prefix_len == from.prefix_len && to.suffix_len < from.suffix_len);
                if !run.check(advances, || {
                    format!("pruned graph of {pattern} has a non-advancing edge")
                }) {
                    break 'outer;
                }
                if !run.check(lows.contains(&e.label), || {
                    format!("pruned graph of {pattern} has label {} off the interval lows", e.label)
                }) {
                    break 'outer;
                }
            }
        }
        if !run.check(isomorphic_modulo_standardisation(&pattern).unwrap(), || {
            format!("automata of {pattern} and its standardisation differ structurally")
        }) {
            break 'outer;
        }
    }
    run.finish()
}

/// The search agrees with the definitional oracle, and every prolific
/// composition up to (largest minimal size + 2) contains a minimal element.
pub fn suite_minimal_vs_oracle(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("minimal-vs-oracle-completeness");
    'outer: for pattern in valid_patterns(cfg) {
        let found = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        let bound = found.elements().iter().map(Composition::size).max().unwrap_or(0) + 2;
        let oracle = minimal_prolific_oracle(&pattern, bound).unwrap();
        if !run.check(found.elements() == oracle.as_slice(), || {
            format!(
                "minimal sets for {pattern} disagree: search {:?}, oracle {:?}",
                found.elements().iter().map(Composition::compact).collect::<Vec<_>>(),
                oracle.iter().map(Composition::compact).collect::<Vec<_>>()
            )
        }) {
            break 'outer;
        }
        for text in compositions_up_to(bound) {
            if !is_prolific(&pattern, &text).unwrap() {
                continue;
            }
            let dominated = found.elements().iter().any(|m| contains(m, &text));
            if !run.check(dominated, || {
                format!("prolific {text} for {pattern} contains no reported minimal element")
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Every reported element is prolific, loses prolificity under every
/// one-element reduction, and the elements are pairwise incomparable.
pub fn suite_minimal_elements_minimality(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("minimal-elements-are-minimal");
    'outer: for pattern in valid_patterns(cfg) {
        let found = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        for (i, a) in found.elements().iter().enumerate() {
            for b in &found.elements()[i + 1..] {
                if !run.check(!contains(a, b) && !contains(b, a), || {
                    format!("minimal elements {a} and {b} for {pattern} are comparable")
                }) {
                    break 'outer;
                }
            }
        }
        for element in found.elements() {
            if !run.check(is_prolific(&pattern, element).unwrap(), || {
                format!("reported element {element} is not prolific for {pattern}")
            }) {
                break 'outer;
            }
            for r in reductions(element) {
                let still = !r.is_empty() && is_prolific(&pattern, &r).unwrap();
                if !run.check(!still, || {
                    format!("reduction {r} of reported element {element} is still prolific")
                }) {
                    break 'outer;
                }
            }
        }
    }
    run.finish()
}

/// Patterns of the shape `1 e_1 .. e_k 1` with all `e_i > 1` have exactly
/// the closed-form minimal composition. Exhaustive over pattern sizes up
/// to 12.
pub fn suite_minconst_agreement(_cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("minconst-closed-form");
    for middle in compositions_up_to(10) {
        if middle.parts().iter().any(|&e| e <= 1) {
            continue;
        }
        let one = Composition::new(vec![1]).unwrap();
        let pattern = one.concat(&middle).concat(&one);
        let found = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        let formula = minconst_formula(&pattern).unwrap();
        if !run.check(found.elements() == std::slice::from_ref(&formula), || {
            format!(
                "pattern {pattern}: search found {:?}, formula gives {formula}",
                found.elements().iter().map(Composition::compact).collect::<Vec<_>>()
            )
        }) {
            break;
        }
    }
    run.finish()
}

/// Prepending a 1 to the pattern prepends a 1 to every minimal composition.
pub fn suite_prepend_one(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("prepend-one-theorem");
    let one = Composition::new(vec![1]).unwrap();
    'outer: for pattern in valid_patterns(cfg) {
        let base = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        let mut extended_pattern = pattern.clone();
        for _ in 0..2 {
            extended_pattern = one.concat(&extended_pattern);
            let extended = minimal_prolific(&extended_pattern, DEFAULT_ROUND_CAP).unwrap();
            let expected: Vec<Composition> = {
                let ones = extended_pattern.len() - pattern.len();
                let mut prefix = Composition::empty();
                for _ in 0..ones {
                    prefix = one.concat(&prefix);
                }
                let mut v: Vec<Composition> =
                    base.elements().iter().map(|m| prefix.concat(m)).collect();
                v.sort();
                v
            };
            if !run.check(extended.elements() == expected.as_slice(), || {
                format!(
                    "minimal set of {extended_pattern} is not the one-prefixed minimal set of \
                     {pattern}"
                )
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Fusing a self-prolific head `1 a 1` onto `1 b 1` maps the minimal set of
/// `1 b 1` to that of `1 a 1 b 1` by prefixing `1 a`. Exhaustive over small
/// heads and tails.
pub fn suite_concatenation_theorem(_cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("self-prolific-concatenation");
    let one = Composition::new(vec![1]).unwrap();
    let mut middles = vec![Composition::empty()];
    middles.extend(compositions_up_to(3));
    'outer: for alpha in &middles {
        let head = one.concat(alpha).concat(&one);
        if !is_self_prolific(&head).unwrap() {
            continue;
        }
        for beta in &middles {
            let tail = one.concat(beta).concat(&one);
            let pattern = one.concat(alpha).concat(&tail);
            let combined = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
            let tail_minimal = minimal_prolific(&tail, DEFAULT_ROUND_CAP).unwrap();
            let mut expected: Vec<Composition> = tail_minimal
                .elements()
                .iter()
                .map(|m| one.concat(alpha).concat(m))
                .collect();
            expected.sort();
            if !run.check(combined.elements() == expected.as_slice(), || {
                format!(
                    "minimal set of {pattern} is not the head-prefixed minimal set of {tail}"
                )
            }) {
                break 'outer;
            }
        }
    }
    run.finish()
}

/// Reversing the pattern reverses the minimal set.
pub fn suite_minimal_reverse_symmetry(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("minimal-reverse-symmetry");
    for pattern in valid_patterns(cfg) {
        let forward = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        let backward = minimal_prolific(&pattern.reverse(), DEFAULT_ROUND_CAP).unwrap();
        let mut expected: Vec<Composition> =
            forward.elements().iter().map(Composition::reverse).collect();
        expected.sort();
        if !run.check(backward.elements() == expected.as_slice(), || {
            format!("minimal set of {} is not the reversed minimal set of {pattern}", pattern.reverse())
        }) {
            break;
        }
    }
    run.finish()
}

/// Repeated runs produce identical ordered output.
pub fn suite_minimal_determinism(cfg: &SelftestConfig) -> SuiteReport {
    let mut run = SuiteRun::new("minimal-determinism");
    for pattern in valid_patterns(cfg) {
        let a = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        let b = minimal_prolific(&pattern, DEFAULT_ROUND_CAP).unwrap();
        if !run.check(a == b, || format!("two runs on {pattern} differ")) {
            break;
        }
    }
    run.finish()
}


/// Runs every suite at the given bounds, in a fixed order.
pub fn run_all(cfg: &SelftestConfig) -> Vec<SuiteReport> {
    vec![
        suite_containment_agreement(cfg),
        suite_counting_agreement(cfg),
        suite_counting_monotonicity(cfg),
        suite_counting_reverse_symmetry(cfg),
        suite_covering_agreement(cfg),
        suite_extension_reduction_duality(cfg),
        suite_prolific_four_way_agreement(cfg),
        suite_prolific_invalid_pattern(cfg),
        suite_prolific_upward_closure(cfg),
        suite_prolific_implies_contains_covered(cfg),
        suite_prolific_reverse_symmetry(cfg),
        suite_prolific_witness(cfg),
        suite_trace_shape(cfg),
        suite_interval_partition(cfg),
        suite_standardisation_theorem(cfg),
        suite_standardised_support(cfg),
        suite_automaton_structure(cfg),
        suite_minimal_vs_oracle(cfg),
        suite_minimal_elements_minimality(cfg),
        suite_minconst_agreement(cfg),
        suite_prepend_one(cfg),
        suite_concatenation_theorem(cfg),
        suite_minimal_reverse_symmetry(cfg),
        suite_minimal_determinism(cfg),
    ]
}
