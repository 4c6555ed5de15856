//! The complete finite set of minimal prolific compositions for a pattern,
//! found by searching a pruned weighted automaton: drop self-loops, label
//! each remaining transition with the smallest value in its interval, find a
//! minimum-weight accepted word, exclude everything containing it, repeat
//! until nothing is accepted. Closed-form constructions and a definitional
//! oracle back the structural results.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use serde_json::{json, Value};

use crate::automaton::{AutomatonState, ProlificAutomaton};
use crate::composition::{compositions_up_to, reductions, Composition};
use crate::error::Error;
use crate::prolific::{is_prolific, is_prolific_oracle};

/// Default cap on search rounds; far above any observed minimal-set size,
/// so exceeding it signals an implementation fault rather than a
/// mathematical possibility.
pub const DEFAULT_ROUND_CAP: usize = 512;

/// A node of the search graph: an automaton state paired with the states of
/// the exclusion matchers layered on by previous rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    pub state: AutomatonState,
    pub matchers: Vec<usize>,
}

/// A weighted edge; the weight of an edge is its label (a concrete part
/// value, always the smallest value of some critical interval).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchEdge {
    pub label: u64,
    pub to: usize,
}

/// The pruned, acyclic, weighted automaton used to search for minimal
/// prolific compositions. Accepting nodes have no outgoing edges: search
/// stops at acceptance. A graph with no accepting node recognises nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchGraph {
    pattern: Composition,
    nodes: Vec<SearchNode>,
    initial: usize,
    accepting: Vec<bool>,
    out: Vec<Vec<SearchEdge>>,
}

impl SearchGraph {
    pub fn pattern(&self) -> &Composition {
        &self.pattern
    }

    pub fn nodes(&self) -> &[SearchNode] {
        &self.nodes
    }

    pub fn initial_index(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, node: usize) -> bool {
        self.accepting[node]
    }

    pub fn edges_from(&self, node: usize) -> &[SearchEdge] {
        &self.out[node]
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// True iff no accepting node exists (the graph recognises nothing).
    pub fn is_empty_language(&self) -> bool {
        !self.accepting.iter().any(|&a| a)
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "state": [n.state.prefix_len, n.state.suffix_len],
                    "matchers": n.matchers,
                })
            })
            .collect();
        let accepting: Vec<usize> =
            (0..self.nodes.len()).filter(|&i| self.accepting[i]).collect();
        let mut edges = Vec::new();
        for (i, row) in self.out.iter().enumerate() {
            for e in row {
                edges.push(json!([i, e.label, e.to]));
            }
        }
        json!({
            "pattern": self.pattern.parts(),
            "nodes": nodes,
            "initial": self.initial,
            "accepting": accepting,
            "edges": edges,
        })
    }

    /// Drops nodes that are unreachable from the initial node or cannot
    /// reach an accepting node (the initial node is always kept), remapping
    /// indices while preserving relative order.
    fn restrict_to_useful(self) -> SearchGraph {
        let n = self.nodes.len();
        let mut forward = vec![false; n];
        let mut queue = VecDeque::from([self.initial]);
        forward[self.initial] = true;
        while let Some(i) = queue.pop_front() {
            for e in &self.out[i] {
                if !forward[e.to] {
                    forward[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        let mut incoming = vec![Vec::new(); n];
        for (i, row) in self.out.iter().enumerate() {
            for e in row {
                incoming[e.to].push(i);
            }
        }
        let mut backward = vec![false; n];
        let mut queue: VecDeque<usize> =
            (0..n).filter(|&i| self.accepting[i]).collect();
        for &i in &queue {
            backward[i] = true;
        }
        while let Some(i) = queue.pop_front() {
            for &j in &incoming[i] {
                if !backward[j] {
                    backward[j] = true;
                    queue.push_back(j);
                }
            }
        }
        let keep: Vec<usize> = (0..n)
            .filter(|&i| i == self.initial || (forward[i] && backward[i]))
            .collect();
        let mut remap = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let mut nodes = Vec::with_capacity(keep.len());
        let mut accepting = Vec::with_capacity(keep.len());
        let mut out = Vec::with_capacity(keep.len());
        for &old in &keep {
            nodes.push(self.nodes[old].clone());
            accepting.push(self.accepting[old]);
            out.push(
                self.out[old]
                    .iter()
                    .filter(|e| remap[e.to] != usize::MAX)
                    .map(|e| SearchEdge { label: e.label, to: remap[e.to] })
                    .collect(),
            );
        }
        SearchGraph {
            pattern: self.pattern,
            nodes,
            initial: remap[self.initial],
            accepting,
            out,
        }
    }
}

/// Prunes the recognising automaton into the search graph: self-loops are
/// dropped, transitions from a state to the same target are merged and
/// labelled with the smallest value causing them, and accepting states keep
/// no outgoing edges. Only nodes on a path from the initial node to an
/// accepting node survive. The result is a DAG.
pub fn prune_automaton(a: &ProlificAutomaton) -> SearchGraph {
    let states = a.states();
    let nodes: Vec<SearchNode> = states
        .iter()
        .map(|&state| SearchNode { state, matchers: Vec::new() })
        .collect();
    let accepting: Vec<bool> = (0..states.len()).map(|i| a.is_accepting(i)).collect();
    let mut out = vec![Vec::new(); states.len()];
    if !a.is_empty_language() {
        for i in 0..states.len() {
            if a.is_accepting(i) {
                continue;
            }
            let mut best: HashMap<usize, u64> = HashMap::new();
            for (j, interval) in a.intervals().iter().enumerate() {
                let target = a.transition(i, j);
                if target == i {
                    continue;
                }
                best.entry(target)
                    .and_modify(|lo| *lo = (*lo).min(interval.lo))
                    .or_insert(interval.lo);
            }
            let mut edges: Vec<SearchEdge> = best
                .into_iter()
                .map(|(to, label)| SearchEdge { label, to })
                .collect();
            edges.sort_by_key(|e| (e.label, e.to));
            out[i] = edges;
        }
    }
    SearchGraph {
        pattern: a.pattern().clone(),
        nodes,
        initial: a.initial_index(),
        accepting,
        out,
    }
    .restrict_to_useful()
}

/// A deterministic matcher tracking the greedy longest prefix of `word`
/// contained in the input read so far; state `word.len()` means the whole
/// word has been found and is absorbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionMatcher {
    word: Composition,
}

impl ExclusionMatcher {
    pub fn new(word: &Composition) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(ExclusionMatcher { word: word.clone() })
    }

    /// The absorbing "contained" state.
    pub fn contained_state(&self) -> usize {
        self.word.len()
    }

    pub fn advance(&self, state: usize, part: u64) -> usize {
        let parts = self.word.parts();
        if state < parts.len() && part >= parts[state] {
            state + 1
        } else {
            state
        }
    }

    /// Runs the matcher over a whole text; true iff the word is contained.
    pub fn contains_in(&self, text: &Composition) -> bool {
        let mut state = 0;
        for &part in text.parts() {
            state = self.advance(state, part);
        }
        state == self.contained_state()
    }
}

/// Product of the graph with the exclusion matcher for `word`: accepted
/// words are those the graph accepted that do not contain `word`. Nodes
/// whose matcher component reaches "contained" are removed, so the result is
/// still a DAG.
pub fn exclude(g: &SearchGraph, word: &Composition) -> Result<SearchGraph, Error> {
    let matcher = ExclusionMatcher::new(word)?;
    let contained = matcher.contained_state();

    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<SearchEdge>> = Vec::new();
    let start = (g.initial, 0);
    index.insert(start, 0);
    pairs.push(start);
    out.push(Vec::new());
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (node, m) = pairs[cursor];
        let mut edges = Vec::new();
        for e in g.edges_from(node) {
            let m_next = matcher.advance(m, e.label);
            if m_next == contained {
                continue;
            }
            let key = (e.to, m_next);
            let to = *index.entry(key).or_insert_with(|| {
                pairs.push(key);
                out.push(Vec::new());
                pairs.len() - 1
            });
            edges.push(SearchEdge { label: e.label, to });
        }
        edges.sort_by_key(|e| (e.label, e.to));
        out[cursor] = edges;
        cursor += 1;
    }

    let nodes: Vec<SearchNode> = pairs
        .iter()
        .map(|&(node, m)| {
            let base = &g.nodes[node];
            let mut matchers = base.matchers.clone();
            matchers.push(m);
            SearchNode { state: base.state, matchers }
        })
        .collect();
    let accepting: Vec<bool> = pairs.iter().map(|&(node, _)| g.accepting[node]).collect();
    Ok(SearchGraph {
        pattern: g.pattern.clone(),
        nodes,
        initial: 0,
        accepting,
        out,
    }
    .restrict_to_useful())
}

/// A minimum-total-weight accepted word, as the label sequence of a cheapest
/// path from the initial node to any accepting node; `None` iff no accepting
/// node is reachable. Ties break deterministically: fewer edges first, then
/// the lexicographically smaller label sequence.
pub fn shortest_accepted(g: &SearchGraph) -> Option<Composition> {
    if g.nodes.is_empty() {
        return None;
    }
    // Dijkstra on the composite key (weight, edges, labels); the first pop
    // of a node carries its best path signature.
    let mut heap: BinaryHeap<Reverse<(u64, usize, Vec<u64>, usize)>> = BinaryHeap::new();
    let mut done = vec![false; g.nodes.len()];
    heap.push(Reverse((0, 0, Vec::new(), g.initial)));
    while let Some(Reverse((weight, hops, labels, node))) = heap.pop() {
        if done[node] {
            continue;
        }
        done[node] = true;
        if g.accepting[node] {
            return Some(Composition::new(labels).expect("labels are positive parts"));
        }
        for e in &g.out[node] {
            if !done[e.to] {
                let mut next = labels.clone();
                next.push(e.label);
                heap.push(Reverse((weight + e.label, hops + 1, next, e.to)));
            }
        }
    }
    None
}

/// The complete set of minimal prolific compositions for a pattern, in
/// canonical order, together with the number of search rounds it took
/// (including the final round that finds nothing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSet {
    pattern: Composition,
    elements: Vec<Composition>,
    rounds: usize,
}

impl MinimalSet {
    pub fn pattern(&self) -> &Composition {
        &self.pattern
    }

    pub fn elements(&self) -> &[Composition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pattern": self.pattern.parts(),
            "minimal": self.elements.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
            "count": self.elements.len(),
            "rounds": self.rounds,
        })
    }
}

/// Enumerates the minimal prolific compositions for the pattern: repeatedly
/// extract a minimum-weight accepted word from the pruned automaton and
/// exclude every word containing it, until no accepting computation remains.
/// Patterns that do not start and end with 1 yield the empty set.
///
/// Termination is mathematically guaranteed; `round_cap` guards against
/// implementation faults and trips [`Error::RoundCapExceeded`] carrying the
/// partial result.
pub fn minimal_prolific(pattern: &Composition, round_cap: usize) -> Result<MinimalSet, Error> {
    if pattern.is_empty() {
        return Err(Error::EmptyComposition);
    }
    if !pattern.starts_and_ends_with_one() {
        return Ok(MinimalSet { pattern: pattern.clone(), elements: Vec::new(), rounds: 0 });
    }
    let automaton = ProlificAutomaton::build(pattern)?;
    let mut graph = prune_automaton(&automaton);
    let mut elements = Vec::new();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let Some(word) = shortest_accepted(&graph) else { break };
        if elements.len() == round_cap {
            return Err(Error::RoundCapExceeded {
                pattern: pattern.clone(),
                partial: elements,
                cap: round_cap,
            });
        }
        graph = exclude(&graph, &word)?;
        elements.push(word);
    }
    elements.sort();
    Ok(MinimalSet { pattern: pattern.clone(), elements, rounds })
}

/// Definitional oracle: enumerate every composition of size up to
/// `max_size`, keep those that are prolific for the pattern and have no
/// prolific reduction (one-step reductions suffice because prolificity is
/// upward closed). Canonically ordered.
pub fn minimal_prolific_oracle(
    pattern: &Composition,
    max_size: u64,
) -> Result<Vec<Composition>, Error> {
    if pattern.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut out = Vec::new();
    for candidate in compositions_up_to(max_size) {
        if !is_prolific_oracle(pattern, &candidate)? {
            continue;
        }
        let minimal = reductions(&candidate).iter().all(|r| {
            r.is_empty() || !is_prolific_oracle(pattern, r).expect("non-empty inputs")
        });
        if minimal {
            out.push(candidate);
        }
    }
    out.sort();
    Ok(out)
}

/// The unique minimal prolific composition for a pattern of the shape
/// `1 e_1 .. e_k 1` with `k >= 1` and every `e_i > 1`:
/// `1 e_1 .. e_{k-1} max(e_k, e_1) e_2 .. e_k 1`.
pub fn minconst_formula(pattern: &Composition) -> Result<Composition, Error> {
    let parts = pattern.parts();
    let n = parts.len();
    if n < 3 || parts[0] != 1 || parts[n - 1] != 1 || parts[1..n - 1].iter().any(|&e| e <= 1) {
        return Err(Error::NotMinconstShape);
    }
    let middle = &parts[1..n - 1];
    let k = middle.len();
    let mut out = Vec::with_capacity(2 * k + 1);
    out.push(1);
    out.extend_from_slice(&middle[..k - 1]);
    out.push(middle[k - 1].max(middle[0]));
    out.extend_from_slice(&middle[1..]);
    out.push(1);
    Ok(Composition::new(out).expect("parts stay positive"))
}

/// True iff the pattern is prolific for itself; equivalently, the pattern
/// starts and ends with 1 and has a part of size 1 between every pair of
/// parts of size greater than 1.
pub fn is_self_prolific(pattern: &Composition) -> Result<bool, Error> {
    is_prolific(pattern, pattern)
}

/// The pattern `1,2,2` followed by `k` parts of size 1 followed by `2,2,1`,
/// whose minimal prolific set has `k + 1` elements for small `k`.
pub fn mk_pattern(k: usize) -> Composition {
    let mut parts = vec![1, 2, 2];
    parts.extend(std::iter::repeat(1).take(k));
    parts.extend_from_slice(&[2, 2, 1]);
    Composition::new(parts).expect("parts are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::parse_composition;

    fn comp(s: &str) -> Composition {
        parse_composition(s).unwrap()
    }

    fn pruned(s: &str) -> SearchGraph {
        prune_automaton(&ProlificAutomaton::build(&comp(s)).unwrap())
    }

    #[test]
    fn pruned_1221_matches_the_reference_chain_and_branch() {
        let g = pruned("1221");
        assert_eq!(g.nodes().len(), 7);
        // chain 1,2,2 from the initial node
        let mut node = g.initial_index();
        for expected in [1u64, 2, 2] {
            assert_eq!(g.edges_from(node).len(), 1);
            let e = g.edges_from(node)[0];
            assert_eq!(e.label, expected);
            node = e.to;
        }
        // branch: label 1 to the looping side, label 2 straight on
        let labels: Vec<u64> = g.edges_from(node).iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![1, 2]);
        // every edge label is the low end of a critical interval
        for row in 0..g.nodes().len() {
            for e in g.edges_from(row) {
                assert!(e.label == 1 || e.label == 2);
            }
        }
        // accepting nodes retain no outgoing edges
        for i in 0..g.nodes().len() {
            if g.is_accepting(i) {
                assert!(g.edges_from(i).is_empty());
            }
        }
    }

    #[test]
    fn pruned_two_ones_is_a_two_edge_chain() {
        let g = pruned("11");
        assert_eq!(g.nodes().len(), 3);
        assert_eq!(g.edge_count(), 2);
        let e0 = g.edges_from(g.initial_index())[0];
        assert_eq!(e0.label, 1);
        let e1 = g.edges_from(e0.to)[0];
        assert_eq!(e1.label, 1);
        assert!(g.is_accepting(e1.to));
    }

    #[test]
    fn pruned_empty_language_has_no_accepting_node() {
        let g = pruned("21");
        assert!(g.is_empty_language());
        assert_eq!(shortest_accepted(&g), None);
    }

    #[test]
    fn shortest_accepted_examples() {
        assert_eq!(shortest_accepted(&pruned("1221")), Some(comp("12221")));
        assert_eq!(shortest_accepted(&pruned("1221")).unwrap().size(), 8);
        // the 1441 graph's cheapest path carries the word 14441 of weight 14
        assert_eq!(shortest_accepted(&pruned("1441")), Some(comp("14441")));
        assert_eq!(shortest_accepted(&pruned("1441")).unwrap().size(), 14);
    }

    #[test]
    fn matcher_examples() {
        let m = ExclusionMatcher::new(&comp("12")).unwrap();
        assert!(m.contains_in(&comp("113")));
        let m = ExclusionMatcher::new(&comp("22")).unwrap();
        assert!(!m.contains_in(&comp("211")));
        assert_eq!(
            ExclusionMatcher::new(&Composition::empty()),
            Err(Error::EmptyComposition)
        );
    }

    #[test]
    fn matcher_agrees_with_containment_on_small_range() {
        use crate::composition::{compositions_up_to, contains};
        for word in compositions_up_to(4) {
            let m = ExclusionMatcher::new(&word).unwrap();
            for text in compositions_up_to(6) {
                assert_eq!(m.contains_in(&text), contains(&word, &text));
            }
        }
    }

    #[test]
    fn excluding_the_unique_minimal_empties_the_language() {
        let g = exclude(&pruned("1221"), &comp("12221")).unwrap();
        assert_eq!(shortest_accepted(&g), None);
    }

    fn accepted_words(g: &SearchGraph) -> Vec<Composition> {
        fn walk(g: &SearchGraph, node: usize, labels: &mut Vec<u64>, out: &mut Vec<Composition>) {
            if g.is_accepting(node) {
                out.push(Composition::new(labels.clone()).unwrap());
            }
            for e in g.edges_from(node) {
                labels.push(e.label);
                walk(g, e.to, labels, out);
                labels.pop();
            }
        }
        let mut out = Vec::new();
        if !g.nodes().is_empty() {
            walk(g, g.initial_index(), &mut Vec::new(), &mut out);
        }
        out
    }

    #[test]
    fn excluded_graph_accepts_only_prolific_words_avoiding_the_word() {
        use crate::composition::contains;
        use crate::prolific::is_prolific;
        let pattern = mk_pattern(1);
        let base = pruned(&pattern.compact());
        let first = shortest_accepted(&base).unwrap();
        let excluded = exclude(&base, &first).unwrap();
        let words = accepted_words(&excluded);
        assert!(!words.is_empty());
        for w in words {
            assert!(is_prolific(&pattern, &w).unwrap(), "accepted word {w} not prolific");
            assert!(!contains(&first, &w), "accepted word {w} contains excluded {first}");
            assert!(accepted_words(&base).contains(&w), "{w} not accepted by the base graph");
        }
    }

    #[test]
    fn exclusion_over_the_one_gap_family_takes_two_rounds() {
        let mut g = pruned(&mk_pattern(1).compact());
        let mut found = Vec::new();
        while let Some(word) = shortest_accepted(&g) {
            g = exclude(&g, &word).unwrap();
            found.push(word);
        }
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn minimal_set_examples() {
        let ms = minimal_prolific(&comp("1441"), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(ms.elements(), &[comp("14441")]);
        let ms = minimal_prolific(&comp("121"), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(ms.elements(), &[comp("121")]);
        let ms = minimal_prolific(&comp("11441"), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(ms.elements(), &[comp("114441")]);
        let ms = minimal_prolific(&mk_pattern(2), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(ms.len(), 3);
        let ms = minimal_prolific(&comp("21"), DEFAULT_ROUND_CAP).unwrap();
        assert!(ms.is_empty());
        assert_eq!(ms.rounds(), 0);
    }

    #[test]
    fn round_cap_reports_partial_progress() {
        let err = minimal_prolific(&mk_pattern(1), 1).unwrap_err();
        match err {
            Error::RoundCapExceeded { pattern, partial, cap } => {
                assert_eq!(pattern, mk_pattern(1));
                assert_eq!(partial.len(), 1);
                assert_eq!(cap, 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            minimal_prolific_oracle(&comp("11"), 6).unwrap(),
            vec![comp("11")]
        );
        assert_eq!(
            minimal_prolific_oracle(&comp("1221"), 10).unwrap(),
            vec![comp("12221")]
        );
        assert_eq!(minimal_prolific_oracle(&comp("21"), 7).unwrap(), vec![]);
    }

    #[test]
    fn minconst_examples() {
        assert_eq!(minconst_formula(&comp("1441")).unwrap(), comp("14441"));
        assert_eq!(minconst_formula(&comp("1231")).unwrap(), comp("12331"));
        assert_eq!(minconst_formula(&comp("1321")).unwrap(), comp("13321"));
        assert_eq!(minconst_formula(&comp("141")).unwrap(), comp("141"));
        assert_eq!(minconst_formula(&comp("1211")), Err(Error::NotMinconstShape));
        assert_eq!(minconst_formula(&comp("221")), Err(Error::NotMinconstShape));
        assert_eq!(minconst_formula(&comp("11")), Err(Error::NotMinconstShape));
    }

    #[test]
    fn self_prolific_examples() {
        assert!(is_self_prolific(&comp("121")).unwrap());
        assert!(!is_self_prolific(&comp("1221")).unwrap());
        assert!(is_self_prolific(&comp("111")).unwrap());
        assert!(!is_self_prolific(&comp("21")).unwrap());
    }

    #[test]
    fn mk_pattern_shape() {
        assert_eq!(mk_pattern(0), comp("122221"));
        assert_eq!(mk_pattern(2), comp("12211221"));
    }

    #[test]
    fn minimal_set_json_shape() {
        let ms = minimal_prolific(&comp("1441"), DEFAULT_ROUND_CAP).unwrap();
        let v = ms.to_json();
        assert_eq!(v["pattern"], serde_json::json!([1, 4, 4, 1]));
        assert_eq!(v["minimal"], serde_json::json!([[1, 4, 4, 4, 1]]));
        assert_eq!(v["count"], serde_json::json!(1));
        assert_eq!(v["rounds"], serde_json::json!(2));
    }

    #[test]
    fn search_is_deterministic() {
        let a = minimal_prolific(&mk_pattern(2), DEFAULT_ROUND_CAP).unwrap();
        let b = minimal_prolific(&mk_pattern(2), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(a, b);
    }
}
