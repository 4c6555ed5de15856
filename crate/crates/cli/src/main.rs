//! Command-line surface for the prolific-composition toolkit.
//!
//! Subcommands: `check`, `count`, `automaton`, `std`, `intervals`,
//! `minimal`, `experiment mk`, `selftest`. Every command prints either
//! human-readable text or, with `--json`, a single JSON document.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a cap is exceeded or
//! a cross-check fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use prolific_core::selftest::{run_all, SelftestConfig};
use prolific_core::{
    count_occurrences, critical_intervals, is_prolific, is_prolific_oracle, minimal_prolific,
    minimal_prolific_oracle, mk_pattern, parse_composition, prune_automaton, standardize,
    suffix_trace, supports, Composition, Error, ProlificAutomaton, TraceEntry, DEFAULT_ROUND_CAP,
};

#[derive(Parser)]
#[command(
    name = "prolific",
    version,
    about = "Decide, count and explain prolificity of integer compositions",
    long_about = "A text composition is prolific for a pattern composition when every \
                  one-element extension of the text contains strictly more occurrences of the \
                  pattern. This tool decides prolificity in linear time, counts occurrences and \
                  supports, builds the recognising automaton over critical intervals, and \
                  enumerates the complete set of minimal prolific compositions.\n\n\
                  Compositions are written either comma/whitespace-separated (\"1,4,4,1\") or as \
                  a separator-free digit string (\"1441\")."
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Suppress auxiliary output lines
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether TEXT is prolific for PATTERN
    Check {
        /// Pattern composition
        pattern: String,
        /// Text composition
        text: String,
        /// Also print the per-part prefix/suffix-requirement table
        #[arg(long)]
        trace: bool,
        /// Cross-check against the brute-force oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Count occurrences of PATTERN in TEXT
    Count {
        pattern: String,
        text: String,
        /// Also enumerate and count the supports
        #[arg(long)]
        supports: bool,
    },
    /// Build the automaton recognising PATTERN-prolific compositions
    Automaton {
        pattern: String,
        /// Write a DOT rendering to this path
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Emit the pruned weighted search graph instead
        #[arg(long)]
        pruned: bool,
    },
    /// Standardise WORD relative to the critical intervals of PATTERN
    Std { pattern: String, word: String },
    /// Print the critical intervals of PATTERN
    Intervals { pattern: String },
    /// Enumerate the complete set of minimal PATTERN-prolific compositions
    Minimal {
        pattern: String,
        /// Cross-check against the definitional oracle up to total size N
        #[arg(long, value_name = "N")]
        verify: Option<u64>,
        /// Abort after this many search rounds
        #[arg(long, default_value_t = DEFAULT_ROUND_CAP)]
        round_cap: usize,
    },
    /// Built-in experiments
    #[command(subcommand)]
    Experiment(Experiment),
    /// Run the exhaustive agreement suites
    Selftest(SelftestArgs),
}

#[derive(Subcommand)]
enum Experiment {
    /// Minimal-set sizes for the family 1,2,2,(1 x k),2,2,1
    Mk {
        /// Largest k to evaluate (at most 12)
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
}

#[derive(Args)]
struct SelftestArgs {
    /// Maximum pattern size for the exhaustive suites
    #[arg(long, default_value_t = 6)]
    pattern_max: u64,
    /// Maximum text size for the exhaustive suites
    #[arg(long, default_value_t = 9)]
    text_max: u64,
}

/// Failures that terminate a command, keyed to exit codes.
enum CmdError {
    /// Unparseable or precondition-violating input, or an I/O failure: exit 1.
    Input(String),
    /// A cap was exceeded or a cross-check disagreed: exit 2.
    Cap(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::SupportsCapExceeded { .. } | Error::RoundCapExceeded { .. } => {
                CmdError::Cap(e.to_string())
            }
            other => CmdError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { json: cli.json, quiet: cli.quiet };
    let result = match cli.command {
        Command::Check { pattern, text, trace, oracle } => {
            cmd_check(&out, &pattern, &text, trace, oracle)
        }
        Command::Count { pattern, text, supports } => cmd_count(&out, &pattern, &text, supports),
        Command::Automaton { pattern, dot, pruned } => {
            cmd_automaton(&out, &pattern, dot.as_deref(), pruned)
        }
        Command::Std { pattern, word } => cmd_std(&out, &pattern, &word),
        Command::Intervals { pattern } => cmd_intervals(&out, &pattern),
        Command::Minimal { pattern, verify, round_cap } => {
            cmd_minimal(&out, &pattern, verify, round_cap)
        }
        Command::Experiment(Experiment::Mk { max_k }) => cmd_experiment_mk(&out, max_k),
        Command::Selftest(args) => cmd_selftest(&out, &args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn emit(&self, value: Value) {
        println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
    }
}

fn parse(which: &str, text: &str) -> Result<Composition, CmdError> {
    parse_composition(text).map_err(|e| CmdError::Input(format!("{which}: {e}")))
}

fn compact_or_epsilon(c: &Composition) -> String {
    if c.is_empty() {
        "\u{3b5}".to_string()
    } else {
        c.compact()
    }
}

/// Renders the trace in the layout of the prefix/suffix-requirement table:
/// columns i, v_i, the pattern prefix seen, the pending pattern suffix.
fn render_trace(pattern: &Composition, trace: &[TraceEntry]) -> String {
    let k = pattern.len();
    let rows: Vec<(String, String, String, String)> = trace
        .iter()
        .map(|t| {
            let prefix =
                Composition::new(pattern.parts()[..t.prefix_len].to_vec()).expect("valid parts");
            let suffix =
                Composition::new(pattern.parts()[k - t.suffix_len..].to_vec()).expect("valid parts");
            (
                t.index.to_string(),
                t.part.to_string(),
                compact_or_epsilon(&prefix),
                compact_or_epsilon(&suffix),
            )
        })
        .collect();
    let width = |f: fn(&(String, String, String, String)) -> usize, min: usize| {
        rows.iter().map(f).max().unwrap_or(0).max(min)
    };
    let (w0, w1, w2, w3) = (
        width(|r| r.0.len(), 1),
        width(|r| r.1.len(), 3),
        width(|r| r.2.len(), 8),
        width(|r| r.3.len(), 8),
    );
    let mut out = String::new();
    out.push_str(&format!(
        "{:>w0$}  {:>w1$}  {:<w2$}  {:<w3$}\n",
        "i", "v_i", "u-prefix", "u-suffix"
    ));
    for (i, part, prefix, suffix) in &rows {
        out.push_str(&format!("{i:>w0$}  {part:>w1$}  {prefix:<w2$}  {suffix:<w3$}\n"));
    }
    out
}

fn cmd_check(
    out: &Output,
    pattern: &str,
    text: &str,
    trace: bool,
    oracle: bool,
) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let text = parse("text", text)?;
    let verdict = is_prolific(&pattern, &text)?;
    let trace_rows = if trace && pattern.starts_and_ends_with_one() {
        Some(suffix_trace(&pattern, &text)?)
    } else {
        None
    };
    let oracle_verdict = if oracle {
        Some(is_prolific_oracle(&pattern, &text)?)
    } else {
        None
    };

    if out.json {
        let mut payload = json!({
            "pattern": pattern.parts(),
            "text": text.parts(),
            "prolific": verdict,
        });
        if let Some(rows) = &trace_rows {
            payload["trace"] = serde_json::to_value(rows).expect("serialisable");
        }
        if let Some(o) = oracle_verdict {
            payload["oracle_prolific"] = json!(o);
            payload["oracle_agrees"] = json!(o == verdict);
        }
        out.emit(payload);
    } else {
        println!("prolific: {verdict}");
        if trace && trace_rows.is_none() && !out.quiet {
            println!("(no trace: the pattern does not start and end with 1)");
        }
        if let Some(rows) = &trace_rows {
            print!("{}", render_trace(&pattern, rows));
        }
        if let Some(o) = oracle_verdict {
            println!("oracle: {o} ({})", if o == verdict { "agrees" } else { "DISAGREES" });
        }
    }
    if let Some(o) = oracle_verdict {
        if o != verdict {
            return Err(CmdError::Cap(format!(
                "oracle disagreement for pattern {pattern} and text {text}: procedure says \
                 {verdict}, oracle says {o}"
            )));
        }
    }
    Ok(())
}

fn cmd_count(out: &Output, pattern: &str, text: &str, with_supports: bool) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let text = parse("text", text)?;
    if pattern.is_empty() {
        return Err(CmdError::Input(Error::EmptyComposition.to_string()));
    }
    let count = count_occurrences(&pattern, &text);
    let support_count = if with_supports {
        Some(supports(&pattern, &text)?.len())
    } else {
        None
    };
    if out.json {
        let mut payload = json!({
            "pattern": pattern.parts(),
            "text": text.parts(),
            "occurrences": count.to_string(),
        });
        if let Some(n) = support_count {
            payload["supports"] = json!(n);
        }
        out.emit(payload);
    } else {
        println!("occurrences: {count}");
        if let Some(n) = support_count {
            println!("supports: {n}");
        }
    }
    Ok(())
}

fn cmd_automaton(
    out: &Output,
    pattern: &str,
    dot: Option<&std::path::Path>,
    pruned: bool,
) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let automaton = ProlificAutomaton::build(&pattern)?;
    if pruned {
        let graph = prune_automaton(&automaton);
        if let Some(path) = dot {
            std::fs::write(path, search_graph_dot(&graph))?;
            if !out.json && !out.quiet {
                println!("wrote DOT to {}", path.display());
            }
        }
        if out.json {
            out.emit(graph.to_json());
        } else {
            print_search_graph(&graph);
        }
        return Ok(());
    }
    if let Some(path) = dot {
        std::fs::write(path, automaton.to_dot())?;
        if !out.json && !out.quiet {
            println!("wrote DOT to {}", path.display());
        }
    }
    if out.json {
        out.emit(automaton.to_json());
    } else {
        print_automaton(&automaton);
    }
    Ok(())
}

fn print_automaton(a: &ProlificAutomaton) {
    println!("pattern: {}", a.pattern().compact());
    let intervals: Vec<String> = a.intervals().iter().map(|iv| iv.to_string()).collect();
    println!("intervals: {}", intervals.join(" "));
    let accepting: Vec<String> = a.accepting_states().iter().map(|s| s.to_string()).collect();
    println!(
        "states: {} (initial {}, accepting {{{}}})",
        a.states().len(),
        a.initial_state(),
        accepting.join(", ")
    );
    if a.is_empty_language() {
        println!("language: empty (pattern does not start and end with 1)");
    }
    for (i, state) in a.states().iter().enumerate() {
        for (j, interval) in a.intervals().iter().enumerate() {
            println!("  {state} --{interval}--> {}", a.states()[a.transition(i, j)]);
        }
    }
}

fn print_search_graph(g: &prolific_core::SearchGraph) {
    println!("pattern: {}", g.pattern().compact());
    let accepting: Vec<String> = (0..g.nodes().len())
        .filter(|&i| g.is_accepting(i))
        .map(|i| i.to_string())
        .collect();
    println!(
        "nodes: {} (initial {}, accepting {{{}}})",
        g.nodes().len(),
        g.initial_index(),
        accepting.join(", ")
    );
    if g.is_empty_language() {
        println!("language: empty");
    }
    for (i, node) in g.nodes().iter().enumerate() {
        for edge in g.edges_from(i) {
            println!("  {i} {} --{}--> {} {}", node.state, edge.label, edge.to, g.nodes()[edge.to].state);
        }
    }
}

fn search_graph_dot(g: &prolific_core::SearchGraph) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    out.push_str("digraph prolific_search {\n    rankdir=LR;\n");
    out.push_str("    __start [shape=point, label=\"\"];\n");
    for (i, node) in g.nodes().iter().enumerate() {
        let shape = if g.is_accepting(i) { "doublecircle" } else { "circle" };
        writeln!(out, "    n{i} [shape={shape}, label=\"{}\"];", node.state).unwrap();
    }
    writeln!(out, "    __start -> n{};", g.initial_index()).unwrap();
    for (i, _) in g.nodes().iter().enumerate() {
        for edge in g.edges_from(i) {
            writeln!(out, "    n{i} -> n{} [label=\"{}\"];", edge.to, edge.label).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn cmd_std(out: &Output, pattern: &str, word: &str) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let word = parse("word", word)?;
    let standardised = standardize(&pattern, &word)?;
    if out.json {
        out.emit(json!({
            "pattern": pattern.parts(),
            "word": word.parts(),
            "standardised": standardised.parts(),
        }));
    } else {
        println!("{standardised}");
    }
    Ok(())
}

fn cmd_intervals(out: &Output, pattern: &str) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let intervals = critical_intervals(&pattern)?;
    if out.json {
        out.emit(json!({
            "pattern": pattern.parts(),
            "intervals": intervals.iter().map(|iv| json!([iv.lo, iv.hi])).collect::<Vec<_>>(),
        }));
    } else {
        let rendered: Vec<String> = intervals.iter().map(|iv| iv.to_string()).collect();
        println!("{}", rendered.join(" "));
    }
    Ok(())
}

fn cmd_minimal(
    out: &Output,
    pattern: &str,
    verify: Option<u64>,
    round_cap: usize,
) -> Result<(), CmdError> {
    let pattern = parse("pattern", pattern)?;
    let set = minimal_prolific(&pattern, round_cap)?;
    let verification = match verify {
        Some(max_size) => {
            let oracle = minimal_prolific_oracle(&pattern, max_size)?;
            let reported: Vec<&Composition> =
                set.elements().iter().filter(|m| m.size() <= max_size).collect();
            let agrees = reported.len() == oracle.len()
                && reported.iter().zip(&oracle).all(|(a, b)| *a == b);
            Some((max_size, agrees))
        }
        None => None,
    };
    if out.json {
        let mut payload = set.to_json();
        if let Some((max_size, agrees)) = verification {
            payload["verify_max_size"] = json!(max_size);
            payload["verify_agrees"] = json!(agrees);
        }
        out.emit(payload);
    } else {
        let elements: Vec<String> = set.elements().iter().map(Composition::compact).collect();
        println!("{{{}}}", elements.join(", "));
        if !out.quiet {
            println!("count: {}", set.len());
            println!("rounds: {}", set.rounds());
        }
        if let Some((max_size, agrees)) = verification {
            println!(
                "verify(size <= {max_size}): {}",
                if agrees { "agreement" } else { "DISAGREEMENT" }
            );
        }
    }
    if let Some((max_size, false)) = verification {
        return Err(CmdError::Cap(format!(
            "minimal set for {pattern} disagrees with the oracle up to size {max_size}"
        )));
    }
    Ok(())
}

fn cmd_experiment_mk(out: &Output, max_k: usize) -> Result<(), CmdError> {
    if max_k > 12 {
        return Err(CmdError::Input(format!("max_k must be at most 12, got {max_k}")));
    }
    let mut rows = Vec::new();
    let mut all_match = true;
    for k in 0..=max_k {
        let pattern = mk_pattern(k);
        let started = Instant::now();
        let set = minimal_prolific(&pattern, DEFAULT_ROUND_CAP)?;
        let elapsed = started.elapsed();
        let expected = if k <= 8 { Some(k + 1) } else { None };
        let matches = expected.map(|e| e == set.len());
        if matches == Some(false) {
            all_match = false;
        }
        rows.push((k, pattern, set, elapsed, expected, matches));
    }
    if out.json {
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|(k, pattern, set, elapsed, expected, matches)| {
                json!({
                    "k": k,
                    "pattern": pattern.parts(),
                    "count": set.len(),
                    "expected": expected,
                    "matches": matches,
                    "elapsed_ms": elapsed.as_secs_f64() * 1e3,
                    "minimal": set.elements().iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
                })
            })
            .collect();
        out.emit(json!({ "rows": json_rows, "all_match": all_match }));
    } else {
        println!("{:>2}  {:>7}  {:>8}  {:>10}", "k", "minimal", "expected", "elapsed");
        for (k, _, set, elapsed, expected, matches) in &rows {
            let expected = expected.map_or("-".to_string(), |e| e.to_string());
            let flag = match matches {
                Some(false) => "  MISMATCH",
                _ => "",
            };
            println!(
                "{k:>2}  {:>7}  {expected:>8}  {:>9.2}ms{flag}",
                set.len(),
                elapsed.as_secs_f64() * 1e3
            );
        }
        if !out.quiet {
            println!(
                "{}",
                if all_match {
                    "all counts match the reported values"
                } else {
                    "MISMATCH against the reported values"
                }
            );
        }
    }
    if all_match {
        Ok(())
    } else {
        Err(CmdError::Cap("minimal-set counts disagree with the reported values".into()))
    }
}

fn cmd_selftest(out: &Output, args: &SelftestArgs) -> Result<(), CmdError> {
    let cfg = SelftestConfig { pattern_max: args.pattern_max, text_max: args.text_max };
    let reports = run_all(&cfg);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    if out.json {
        let json_rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "cases": r.cases,
                    "passed": r.passed(),
                    "counterexample": r.counterexample,
                })
            })
            .collect();
        out.emit(json!({ "suites": json_rows, "all_passed": failed.is_empty() }));
    } else {
        for r in &reports {
            match &r.counterexample {
                None => println!("ok   {} ({} cases)", r.name, r.cases),
                Some(cx) => println!("FAIL {} ({} cases): {cx}", r.name, r.cases),
            }
        }
        if !out.quiet {
            println!("{}/{} suites passed", reports.len() - failed.len(), reports.len());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CmdError::Cap(format!("{} selftest suite(s) failed", failed.len())))
    }
}
