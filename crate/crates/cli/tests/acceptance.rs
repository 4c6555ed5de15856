//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p prolific-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use prolific_core::selftest::{
    suite_concatenation_theorem, suite_counting_agreement, suite_counting_monotonicity,
    suite_minimal_vs_oracle, suite_prepend_one, suite_prolific_four_way_agreement,
    suite_prolific_implies_contains_covered, suite_prolific_reverse_symmetry,
    suite_prolific_upward_closure, suite_prolific_witness, suite_standardisation_theorem,
    SelftestConfig, SuiteReport,
};
use prolific_core::{
    compositions_up_to, critical_intervals, is_prolific, minconst_formula, minimal_prolific,
    mk_pattern, parse_composition, standardize, suffix_trace, supports, Composition, Interval,
    ProlificAutomaton, DEFAULT_ROUND_CAP,
};

fn comp(s: &str) -> Composition {
    parse_composition(s).unwrap()
}

fn pass(label: &str, detail: &str) {
    println!("criterion {label}: PASS ({detail})");
}

fn cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_prolific"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Fastest of a few timed runs, to measure the computation rather than cache
/// warm-up.
fn best_time<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut result = None;
    for _ in 0..runs {
        let started = Instant::now();
        result = Some(f());
        best = best.min(started.elapsed());
    }
    (result.unwrap(), best)
}

fn assert_suite(report: &SuiteReport) {
    assert!(
        report.passed(),
        "suite {} failed after {} cases: {}",
        report.name,
        report.cases,
        report.counterexample.clone().unwrap()
    );
}

// Criterion 1: `check --trace` for u=1213221, v=15512443221 emits exactly
// the eleven (prefix, suffix) pairs of the reference table and verdict true,
// in under a millisecond of computation.
#[test]
fn criterion_01_trace_table_reproduction() {
    let pattern = comp("1213221");
    let text = comp("15512443221");
    let expected_pairs = [
        (1, 6), (2, 5), (3, 4), (3, 4), (3, 4), (4, 4), (5, 4), (6, 3), (7, 2), (7, 1), (7, 0),
    ];
    let expected_rows = [
        ("1", "213221"),
        ("12", "13221"),
        ("121", "3221"),
        ("121", "3221"),
        ("121", "3221"),
        ("1213", "3221"),
        ("12132", "3221"),
        ("121322", "221"),
        ("1213221", "21"),
        ("1213221", "1"),
        ("1213221", "\u{3b5}"),
    ];

    let ((verdict, trace), elapsed) = best_time(100, || {
        (
            is_prolific(&pattern, &text).unwrap(),
            suffix_trace(&pattern, &text).unwrap(),
        )
    });
    assert!(verdict);
    let pairs: Vec<(usize, usize)> = trace.iter().map(|t| (t.prefix_len, t.suffix_len)).collect();
    assert_eq!(pairs, expected_pairs);
    assert!(elapsed < Duration::from_millis(1), "trace took {elapsed:?}");

    let out = cli(&["check", "1213221", "15512443221", "--trace"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "prolific: true");
    assert_eq!(lines.len(), 13, "verdict + header + 11 rows");
    for (i, (prefix, suffix)) in expected_rows.iter().enumerate() {
        let cells: Vec<&str> = lines[i + 2].split_whitespace().collect();
        assert_eq!(cells[0], (i + 1).to_string(), "row index");
        assert_eq!(cells[1], text.parts()[i].to_string(), "part read");
        assert_eq!(cells[2], *prefix, "prefix at row {}", i + 1);
        assert_eq!(cells[3], *suffix, "suffix at row {}", i + 1);
    }
    pass("1 (trace table reproduction)", &format!("11 rows exact, {elapsed:?}"));
}

// Criterion 2: the automaton for 1441 has exactly 7 reachable states,
// accepting state (4,0), the stated self-loops, and the reference
// transition structure.
#[test]
fn criterion_02_automaton_for_1441() {
    let (automaton, elapsed) = best_time(100, || ProlificAutomaton::build(&comp("1441")).unwrap());
    assert!(elapsed < Duration::from_millis(1), "build took {elapsed:?}");

    let states: Vec<(usize, usize)> = automaton
        .states()
        .iter()
        .map(|s| (s.prefix_len, s.suffix_len))
        .collect();
    assert_eq!(states.len(), 7);
    assert_eq!(
        states,
        vec![(0, 4), (1, 3), (2, 3), (3, 2), (4, 2), (4, 1), (4, 0)]
    );
    let accepting: Vec<(usize, usize)> = automaton
        .accepting_states()
        .iter()
        .map(|s| (s.prefix_len, s.suffix_len))
        .collect();
    assert_eq!(accepting, vec![(4, 0)]);
    assert_eq!(
        automaton.intervals(),
        &[Interval::bounded(1, 3), Interval::unbounded(4)]
    );

    let index =
        |p, s| states.iter().position(|&st| st == (p, s)).expect("state present");
    let low = |p, s| states[automaton.transition(index(p, s), 0)];
    let high = |p, s| states[automaton.transition(index(p, s), 1)];

    // self-loops on [1,3] at (1,3), (2,3), (4,2); on every interval at (4,0)
    assert_eq!(low(1, 3), (1, 3));
    assert_eq!(low(2, 3), (2, 3));
    assert_eq!(low(4, 2), (4, 2));
    assert_eq!(low(4, 0), (4, 0));
    assert_eq!(high(4, 0), (4, 0));

    // the remaining transition structure of the reference figure; the
    // initial state is compared structurally as the unique prefix-0 state
    assert_eq!(automaton.initial_state().prefix_len, 0);
    assert_eq!(low(0, 4), (1, 3));
    assert_eq!(high(0, 4), (1, 3));
    assert_eq!(high(1, 3), (2, 3));
    assert_eq!(high(2, 3), (3, 2));
    assert_eq!(low(3, 2), (4, 2));
    assert_eq!(high(3, 2), (4, 1));
    assert_eq!(high(4, 2), (4, 1));
    assert_eq!(low(4, 1), (4, 0));
    assert_eq!(high(4, 1), (4, 0));
    pass("2 (1441 automaton)", &format!("7 states, figure structure, {elapsed:?}"));
}

// Criterion 3: critical intervals of 373499 and the two standardisation
// examples, exactly.
#[test]
fn criterion_03_intervals_and_standardisation() {
    assert_eq!(
        critical_intervals(&comp("373499")).unwrap(),
        vec![
            Interval::bounded(1, 2),
            Interval::bounded(3, 3),
            Interval::bounded(4, 6),
            Interval::bounded(7, 8),
            Interval::unbounded(9),
        ]
    );
    assert_eq!(
        standardize(&comp("373499"), &comp("8,12,4,6,6,3,2,8,1")).unwrap(),
        comp("453332141")
    );
    assert_eq!(standardize(&comp("1441"), &comp("1441")).unwrap(), comp("1221"));
    assert_eq!(
        cli(&["intervals", "373499"]).trim(),
        "[1,2] [3,3] [4,6] [7,8] [9,inf]"
    );
    assert_eq!(
        cli(&["std", "373499", "8,12,4,6,6,3,2,8,1"]).trim(),
        "4,5,3,3,3,2,1,4,1"
    );
    pass("3 (intervals and standardisation)", "exact matches");
}

// Criterion 4: the minimal sets pinned by the structural results, and the
// closed form for every pattern of the shape 1 e_1..e_k 1 up to size 12.
#[test]
fn criterion_04_minimal_sets_from_theorems() {
    let minimal = |s: &str| {
        minimal_prolific(&comp(s), DEFAULT_ROUND_CAP)
            .unwrap()
            .elements()
            .to_vec()
    };
    assert_eq!(minimal("1441"), vec![comp("14441")]);
    assert_eq!(minimal("1221"), vec![comp("12221")]);
    assert_eq!(minimal("121"), vec![comp("121")]);
    assert_eq!(minimal("11441"), vec![comp("114441")]);

    let mut shaped = 0;
    for middle in compositions_up_to(10) {
        if middle.parts().iter().any(|&e| e <= 1) {
            continue;
        }
        let one = comp("1");
        let pattern = one.concat(&middle).concat(&one);
        assert!(pattern.size() <= 12);
        let found = minimal(&pattern.to_string());
        let formula = minconst_formula(&pattern).unwrap();
        assert_eq!(found, vec![formula], "pattern {pattern}");
        shaped += 1;
    }
    pass(
        "4 (minimal sets from closed forms)",
        &format!("4 pinned sets + {shaped} shaped patterns"),
    );
}

// Criterion 5: the family 1,2,2,(1 x k),2,2,1 has exactly k+1 minimal
// prolific compositions for k = 0..8; the sweep finishes within budget.
#[test]
fn criterion_05_mk_experiment() {
    let started = Instant::now();
    let mut small_sweep = Duration::ZERO;
    for k in 0..=8usize {
        let set = minimal_prolific(&mk_pattern(k), DEFAULT_ROUND_CAP).unwrap();
        assert_eq!(set.len(), k + 1, "minimal-set size for k={k}");
        if k == 5 {
            small_sweep = started.elapsed();
        }
    }
    let full_sweep = started.elapsed();
    assert!(small_sweep < Duration::from_secs(5), "k=0..5 took {small_sweep:?}");
    assert!(full_sweep < Duration::from_secs(60), "k=0..8 took {full_sweep:?}");
    pass(
        "5 (family experiment)",
        &format!("counts 1..=9, full sweep {full_sweep:?}"),
    );
}

// Criterion 6: the supports of 122321 in 13224211 number exactly 8.
#[test]
fn criterion_06_supports_example() {
    let found = supports(&comp("122321"), &comp("13224211")).unwrap();
    assert_eq!(found.len(), 8);
    pass("6 (supports example)", "8 supports");
}

// Criterion 7: the four prolificity routes agree exhaustively for every
// pattern of size <= 6 starting and ending with 1 and every text of
// size <= 9, within five minutes.
#[test]
fn criterion_07_oracle_equivalence() {
    let cfg = SelftestConfig { pattern_max: 6, text_max: 9 };
    let started = Instant::now();
    let report = suite_prolific_four_way_agreement(&cfg);
    let elapsed = started.elapsed();
    assert_suite(&report);
    assert!(elapsed < Duration::from_secs(300), "suite took {elapsed:?}");
    pass(
        "7 (four-way oracle equivalence)",
        &format!("{} cases, {elapsed:?}", report.cases),
    );
}

// Criterion 8: both counting routes agree for patterns of size <= 5 and
// texts of size <= 9, and counts never drop under one-element extensions.
#[test]
fn criterion_08_counting_equivalence_and_monotonicity() {
    let cfg = SelftestConfig { pattern_max: 5, text_max: 9 };
    let agreement = suite_counting_agreement(&cfg);
    assert_suite(&agreement);
    let monotonicity = suite_counting_monotonicity(&cfg);
    assert_suite(&monotonicity);
    pass(
        "8 (counting equivalence)",
        &format!("{} + {} cases", agreement.cases, monotonicity.cases),
    );
}

// Criterion 9: the theorem suites, exhaustively within the stated bounds.
#[test]
fn criterion_09_theorem_suites() {
    let cfg = SelftestConfig { pattern_max: 6, text_max: 9 };
    let mut total = 0;
    for (name, report) in [
        ("reverse symmetry", suite_prolific_reverse_symmetry(&cfg)),
        ("prolific implies contains+covered", suite_prolific_implies_contains_covered(&cfg)),
        ("upward closure", suite_prolific_upward_closure(&cfg)),
        ("doubling witness", suite_prolific_witness(&cfg)),
        ("standardisation theorem", suite_standardisation_theorem(&cfg)),
        ("prepend-one", suite_prepend_one(&cfg)),
        ("self-prolific concatenation", suite_concatenation_theorem(&cfg)),
    ] {
        assert_suite(&report);
        assert!(report.cases >= 30, "{name} ran only {} cases", report.cases);
        total += report.cases;
    }
    pass("9 (theorem suites)", &format!("{total} cases across 7 suites"));
}

// Criterion 10: for every valid pattern of size <= 6 the search agrees with
// the definitional oracle, and every prolific composition up to (largest
// minimal size + 2) contains a reported element.
#[test]
fn criterion_10_minimal_set_completeness() {
    let cfg = SelftestConfig { pattern_max: 6, text_max: 9 };
    let report = suite_minimal_vs_oracle(&cfg);
    assert_suite(&report);
    pass("10 (minimal-set completeness)", &format!("{} cases", report.cases));
}
