use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use prolific_bench::cycled_text;
use prolific_core::{
    count_occurrences, count_occurrences_oracle, is_prolific, is_prolific_oracle, minimal_prolific,
    mk_pattern, parse_composition, Composition, ProlificAutomaton, DEFAULT_ROUND_CAP,
};

fn decision_procedures(c: &mut Criterion) {
    let pattern = parse_composition("1213221").unwrap();
    let mut group = c.benchmark_group("decide");
    for parts in [64usize, 1024, 16384] {
        let text = cycled_text(&pattern, parts);
        group.bench_with_input(BenchmarkId::new("suffix_trace", parts), &text, |b, text| {
            b.iter(|| is_prolific(black_box(&pattern), black_box(text)).unwrap());
        });
    }
    // the brute-force oracle only makes sense on small texts
    let small = cycled_text(&pattern, 9);
    group.bench_function("oracle_9_parts", |b| {
        b.iter(|| is_prolific_oracle(black_box(&pattern), black_box(&small)).unwrap());
    });
    group.finish();
}

fn automaton_runs(c: &mut Criterion) {
    let pattern = mk_pattern(8);
    c.bench_function("build_automaton_mk8", |b| {
        b.iter(|| ProlificAutomaton::build(black_box(&pattern)).unwrap());
    });
    let automaton = ProlificAutomaton::build(&pattern).unwrap();
    let text = cycled_text(&pattern, 4096);
    c.bench_function("accepts_4096_parts", |b| {
        b.iter(|| automaton.accepts(black_box(&text)));
    });
}

fn counting_routes(c: &mut Criterion) {
    let pattern = parse_composition("122321").unwrap();
    let text: Composition = cycled_text(&parse_composition("13224211").unwrap(), 16);
    let mut group = c.benchmark_group("count");
    group.bench_function("subset_sum", |b| {
        b.iter(|| count_occurrences(black_box(&pattern), black_box(&text)));
    });
    group.bench_function("recursion", |b| {
        b.iter(|| count_occurrences_oracle(black_box(&pattern), black_box(&text)));
    });
    group.finish();
}

fn minimal_search(c: &mut Criterion) {
    let pattern = mk_pattern(3);
    c.bench_function("minimal_prolific_mk3", |b| {
        b.iter(|| minimal_prolific(black_box(&pattern), DEFAULT_ROUND_CAP).unwrap());
    });
}

criterion_group!(
    benches,
    decision_procedures,
    automaton_runs,
    counting_routes,
    minimal_search
);
criterion_main!(benches);
