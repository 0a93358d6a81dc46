//! Command-line surface: graph input formats, report construction and the
//! `chromideal` argument parser.
//!
//! Reports serialise with sorted keys. Rationals are `"p/q"` strings, vertex
//! sets are sorted 0-based index lists and irreducible components are lists
//! such as `["x1^2", "x3^1"]`.

use crate::coloring::{
    b_fold_chromatic, chromatic_number, classify_chi_f_window, fractional_chromatic, is_critical, Rational,
};
use crate::correspondence::{
    conjecture_search, persistence_check, persistence_sweep, probe_expansion, technical_lemma_monomial,
    verify_correspondence, ConjectureWitness, SearchMode,
};
use crate::error::{Error, Result};
use crate::graph::{connected_graphs, Graph, VertexSet};
use crate::ideal::{
    contains_in_power, cover_ideal, irreducible_decomposition_with, Engine, IrreducibleIdeal, Monomial,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

/// Exit status of a completed command whose check passed.
pub const EXIT_OK: i32 = 0;
/// The command ran but its check failed or no witness was found.
pub const EXIT_FAILED: i32 = 1;
/// Bad arguments or unusable input.
pub const EXIT_USAGE: i32 = 2;
/// An internal consistency check tripped.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

/// A graph as supplied by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDocument {
    Builtin(String),
    EdgeList { name: String, payload: String },
    Graph6 { name: String, payload: String },
}

impl GraphDocument {
    pub fn name(&self) -> String {
        match self {
            GraphDocument::Builtin(spec) => format!("builtin:{spec}"),
            GraphDocument::EdgeList { name, .. } | GraphDocument::Graph6 { name, .. } => name.clone(),
        }
    }

    pub fn format(&self) -> &'static str {
        match self {
            GraphDocument::Builtin(_) => "builtin",
            GraphDocument::EdgeList { .. } => "edge_list",
            GraphDocument::Graph6 { .. } => "graph6",
        }
    }

    /// Parses the document. A graph6 payload with several lines yields its
    /// first graph.
    pub fn parse(&self) -> Result<Graph> {
        match self {
            GraphDocument::Builtin(spec) => parse_builtin(spec),
            GraphDocument::EdgeList { payload, .. } => parse_edge_list(payload),
            GraphDocument::Graph6 { payload, .. } => parse_graph6_corpus(payload)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Parse("no graph6 line in input".into())),
        }
    }
}

/// `kind:n` for `cycle`, `complete`, `antihole`, `path` and
/// `mycielski-cycle`; `petersen` takes no size.
pub fn parse_builtin(spec: &str) -> Result<Graph> {
    if spec == "petersen" || spec == "petersen:10" {
        return Ok(Graph::petersen());
    }
    let (kind, n) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("builtin `{spec}` is not of the form kind:n")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad size in builtin `{spec}`")))?;
    match kind {
        "cycle" => Graph::cycle(n),
        "complete" => Graph::complete(n),
        "antihole" => Graph::antihole(n),
        "path" => Graph::path(n),
        "mycielski-cycle" => Graph::cycle(n)?.mycielski(),
        _ => Err(Error::Parse(format!("unknown builtin family `{kind}`"))),
    }
}

/// First line `n m`, then `m` lines `u v` with 0-based endpoints. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::Parse(format!(
                "expected two non-negative integers, got `{line}`"
            ))),
        }
    };
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = pair(header)?;
    let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

/// One graph in graph6 format (an optional `>>graph6<<` header is allowed).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim().strip_prefix(">>graph6<<").unwrap_or(line.trim()).as_bytes();
    let bad = || Error::Parse(format!("malformed graph6 string `{}`", line.trim()));
    if bytes.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(bad());
    }
    let (n, body) = match bytes {
        [] => return Err(bad()),
        [126, 126, ..] => return Err(Error::TooManyVertices(usize::MAX)),
        [126, a, b, c, rest @ ..] => (
            ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63),
            rest,
        ),
        [126, ..] => return Err(bad()),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if body.len() != (n * n.saturating_sub(1) / 2).div_ceil(6) {
        return Err(bad());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Every non-empty line of a graph6 file.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([
            126,
            (n >> 12) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]);
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    for chunk in bits.chunks(6) {
        let v = chunk.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | b << (5 - k));
        out.push(v + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn rational_str(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `["x1^2", "x3^1"]`.
pub fn component_json(c: &IrreducibleIdeal) -> Value {
    json!(c.pairs().map(|(i, a)| format!("x{}^{a}", i + 1)).collect::<Vec<_>>())
}

/// Variables with positive exponent, as in [`component_json`].
pub fn monomial_json(m: &Monomial) -> Value {
    json!(m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, e)| format!("x{}^{e}", i + 1))
        .collect::<Vec<_>>())
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.as_slice())
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(set_json).collect())
}

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// The check passed or the search succeeded.
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self, timing_ms: Option<f64>) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "passed": self.passed,
        });
        if let Some(ms) = timing_ms {
            v["timing_ms"] = json!(ms);
        }
        v
    }

    /// Indented `key: value` listing.
    pub fn to_text(&self, timing_ms: Option<f64>) -> String {
        let mut out = String::new();
        render(&mut out, 0, &self.to_json(timing_ms));
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Object(_) => None,
        Value::Array(items) if items.iter().any(|i| i.is_object()) => None,
        Value::String(s) => Some(s.clone()),
        other => Some(other.to_string()),
    }
}

fn render(out: &mut String, depth: usize, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(out, depth + 1, item);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (k, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}- [{k}]\n"));
                render(out, depth + 1, item);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn graph_inputs(doc: &GraphDocument, g: &Graph) -> Value {
    json!({ "name": doc.name(), "format": doc.format(), "n": g.n(), "edges": g.edge_count() })
}

pub fn cmd_invariants(doc: &GraphDocument, bfold: &[usize]) -> Result<Report> {
    let g = doc.parse()?;
    let chromatic = chromatic_number(&g);
    let crit = is_critical(&g)?;
    let frac = fractional_chromatic(&g)?;
    let mut chi_b = Vec::new();
    for &b in bfold {
        chi_b.push(json!({ "b": b, "value": b_fold_chromatic(&g, b)?.value }));
    }
    let coloring: Option<Vec<usize>> = chromatic
        .witness
        .map(|c| c.assignment.iter().map(|colors| colors[0]).collect());
    Ok(Report {
        command: "invariants".into(),
        inputs: json!({ "graph": graph_inputs(doc, &g), "bfold": bfold }),
        results: json!({
            "chi": chromatic.value,
            "coloring": coloring,
            "clique_number": g.clique_number(),
            "critical": crit.critical,
            "failing_vertices": crit.failing_vertices,
            "chi_b": chi_b,
            "chi_f": rational_str(&frac.value),
            "chi_f_achieving_b": frac.achieving_b,
            "chi_f_window": classify_chi_f_window(&g)?,
        }),
        passed: true,
    })
}

pub fn cmd_decompose(doc: &GraphDocument, s: usize, engine: Engine) -> Result<Report> {
    let g = doc.parse()?;
    let j = cover_ideal(&g)?.power(s)?;
    let d = irreducible_decomposition_with(&j, engine)?;
    let mut primes: Vec<VertexSet> = d.components().iter().map(IrreducibleIdeal::support).collect();
    primes.sort();
    primes.dedup();
    Ok(Report {
        command: "decompose".into(),
        inputs: json!({ "graph": graph_inputs(doc, &g), "power": s }),
        results: json!({
            "generators": j.gens().len(),
            "component_count": d.len(),
            "components": d.components().iter().map(component_json).collect::<Vec<_>>(),
            "associated_primes": sets_json(&primes),
        }),
        passed: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Correspondence,
    Persistence,
    TechnicalLemma,
}

pub fn cmd_verify(
    doc: &GraphDocument,
    check: Check,
    s: usize,
    w: &VertexSet,
    b: usize,
    converse: bool,
) -> Result<Report> {
    let g = doc.parse()?;
    let inputs = json!({
        "graph": graph_inputs(doc, &g),
        "check": check.to_possible_value().expect("no skipped variants").get_name(),
        "power": s,
        "w": set_json(w),
        "b": b,
        "converse": converse,
    });
    let (results, passed) = match check {
        Check::Correspondence => {
            let r = verify_correspondence(&g, s, converse)?;
            let components: Vec<Value> = r
                .components
                .iter()
                .map(|c| {
                    json!({
                        "component": component_json(&c.component),
                        "y": set_json(&c.y),
                        "chi": c.chi,
                        "critical": c.verified_critical,
                    })
                })
                .collect();
            let results = json!({
                "components": components,
                "converse_candidates": r.converse_candidates,
                "unmatched": r.unmatched.iter().map(component_json).collect::<Vec<_>>(),
                "all_verified": r.all_verified(),
            });
            (results, r.all_verified())
        }
        Check::Persistence => {
            let p = persistence_check(&g, s)?;
            let results = json!({
                "holds": p.holds,
                "missing": sets_json(&p.missing),
                "ass_s": sets_json(&p.ass_s),
                "ass_next": sets_json(&p.ass_next),
            });
            (results, p.holds)
        }
        Check::TechnicalLemma => {
            let j = cover_ideal(&g)?;
            let (d, m) = technical_lemma_monomial(&g, w, b)?;
            let holds = contains_in_power(&j, d, &m)?;
            (json!({ "d": d, "monomial": monomial_json(&m), "holds": holds }), holds)
        }
    };
    Ok(Report {
        command: "verify".into(),
        inputs,
        results,
        passed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    MaximalIndependent,
    AllSubsets,
}

fn witness_json(w: &ConjectureWitness) -> Value {
    json!({
        "w": set_json(&w.w),
        "is_maximal_independent": w.is_maximal_independent,
        "expanded_chi": w.expanded_chi,
        "expanded_critical": w.expanded_critical,
    })
}

/// Searches for a witness, or probes the single candidate `probe`.
pub fn cmd_conjecture(doc: &GraphDocument, mode: Mode, probe: Option<&VertexSet>) -> Result<Report> {
    let g = doc.parse()?;
    let mode_name = mode
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let inputs = json!({ "graph": graph_inputs(doc, &g), "mode": mode_name, "w": probe.map(set_json) });
    if let Some(w) = probe {
        let crit = is_critical(&g)?;
        let p = probe_expansion(&g, w)?;
        let results = json!({ "chi": crit.chi, "critical": crit.critical, "probe": witness_json(&p) });
        return Ok(Report {
            command: "conjecture".into(),
            inputs,
            results,
            passed: p.is_witness(),
        });
    }
    let search_mode = match mode {
        Mode::MaximalIndependent => SearchMode::MaximalIndependentOnly,
        Mode::AllSubsets => SearchMode::AllSubsets,
    };
    let out = conjecture_search(&g, search_mode)?;
    let results = json!({
        "chi": crate::coloring::chi(&g),
        "found": out.found,
        "exhausted": out.exhausted,
        "candidates_tried": out.candidates_tried,
        "witness": out.witness.as_ref().map(witness_json),
    });
    Ok(Report {
        command: "conjecture".into(),
        inputs,
        results,
        passed: out.found,
    })
}

pub fn cmd_sweep(graphs: &[Graph], source: &str, s_max: usize) -> Result<Report> {
    if s_max < 1 {
        return Err(Error::NonPositive { what: "s_max" });
    }
    let r = persistence_sweep(graphs, s_max);
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "graph_index": f.graph_index,
                "graph6": to_graph6(&graphs[f.graph_index]),
                "s": f.s,
                "missing": sets_json(&f.missing),
                "evidence": f.evidence.iter().map(component_json).collect::<Vec<_>>(),
                "error": f.error.as_ref().map(ToString::to_string),
            })
        })
        .collect();
    Ok(Report {
        command: "sweep".into(),
        inputs: json!({ "source": source, "s_max": s_max }),
        results: json!({ "graphs": r.graphs, "checks": r.checks, "failures": failures, "clean": r.clean() }),
        passed: r.clean(),
    })
}

#[derive(Debug, Parser)]
#[command(
    name = "chromideal",
    version,
    about = "Critical graphs, expansions and cover-ideal decompositions"
)]
pub struct Cli {
    /// Emit the report as JSON with sorted keys.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Builtin graph `kind:n` (cycle, complete, antihole, path, mycielski-cycle) or `petersen`.
    #[arg(long, value_name = "KIND:N", conflicts_with = "file")]
    pub builtin: Option<String>,
    /// Graph file; `-` or no file reads standard input.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::EdgeList)]
    pub format: InputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// χ, criticality, χ_b and χ_f.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        /// Values of b for χ_b, comma separated.
        #[arg(long, value_delimiter = ',')]
        bfold: Vec<usize>,
    },
    /// Irreducible components and associated primes of J(G)^s.
    Decompose {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Incremental)]
        engine: EngineArg,
    },
    /// Run one consistency check.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(value_enum)]
        check: Check,
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Vertex set W, comma separated (technical-lemma).
        #[arg(long = "W", value_delimiter = ',')]
        w: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Also enumerate every exponent vector for the converse direction.
        #[arg(long)]
        converse: bool,
    },
    /// Search for W with G[W] critically (χ(G)+1)-chromatic.
    Conjecture {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Mode::MaximalIndependent)]
        mode: Mode,
        /// Probe this single W instead of searching.
        #[arg(long = "W", value_delimiter = ',')]
        w: Option<Vec<usize>>,
    },
    /// Persistence of associated primes across a corpus.
    Sweep {
        /// graph6 corpus, one graph per line; `-` reads standard input.
        #[arg(long, value_name = "PATH", conflicts_with = "connected")]
        file: Option<PathBuf>,
        /// Use every connected graph with 2..=N vertices instead of a file.
        #[arg(long, value_name = "N")]
        connected: Option<usize>,
        #[arg(long, default_value_t = 2)]
        s_max: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Incremental,
    Splitting,
}

fn read_source(path: Option<&PathBuf>, stdin: &mut dyn Read) -> std::result::Result<(String, String), String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map(|text| (p.display().to_string(), text))
            .map_err(|e| format!("cannot read {}: {e}", p.display())),
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(("stdin".into(), text))
        }
    }
}

fn document(args: &GraphArgs, stdin: &mut dyn Read) -> std::result::Result<GraphDocument, String> {
    if let Some(spec) = &args.builtin {
        return Ok(GraphDocument::Builtin(spec.clone()));
    }
    let (name, payload) = read_source(args.file.as_ref(), stdin)?;
    Ok(match args.format {
        InputFormat::EdgeList => GraphDocument::EdgeList { name, payload },
        InputFormat::Graph6 => GraphDocument::Graph6 { name, payload },
    })
}

/// Sizes the global thread pool from `CE_THREADS` when it is set.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("CE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("CE_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> std::result::Result<Result<Report>, String> {
    Ok(match &cli.command {
        Command::Invariants { graph, bfold } => cmd_invariants(&document(graph, stdin)?, bfold),
        Command::Decompose { graph, power, engine } => {
            let engine = match engine {
                EngineArg::Incremental => Engine::Incremental,
                EngineArg::Splitting => Engine::Splitting,
            };
            cmd_decompose(&document(graph, stdin)?, *power, engine)
        }
        Command::Verify {
            graph,
            check,
            power,
            w,
            b,
            converse,
        } => cmd_verify(
            &document(graph, stdin)?,
            *check,
            *power,
            &VertexSet::new(w.iter().copied()),
            *b,
            *converse,
        ),
        Command::Conjecture { graph, mode, w } => {
            let probe = w.as_ref().map(|w| VertexSet::new(w.iter().copied()));
            cmd_conjecture(&document(graph, stdin)?, *mode, probe.as_ref())
        }
        Command::Sweep { file, connected, s_max } => match connected {
            Some(n) => {
                let graphs: Vec<Graph> = (2..=*n).flat_map(connected_graphs).collect();
                cmd_sweep(&graphs, &format!("connected:{n}"), *s_max)
            }
            None => {
                let (name, text) = read_source(file.as_ref(), stdin)?;
                parse_graph6_corpus(&text).and_then(|graphs| cmd_sweep(&graphs, &name, *s_max))
            }
        },
    })
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let started = Instant::now();
    let outcome = match execute(&cli, stdin) {
        Ok(outcome) => outcome,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let report = match outcome {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::InvariantViolation(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            };
        }
    };
    let timing = cli.timing.then(|| started.elapsed().as_secs_f64() * 1000.0);
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&report.to_json(timing)).expect("report values serialise");
        s.push('\n');
        s
    } else {
        report.to_text(timing)
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert_eq!(parse_builtin("cycle:9").unwrap(), Graph::cycle(9).unwrap());
        assert_eq!(parse_builtin("mycielski-cycle:5").unwrap().n(), 11);
        assert_eq!(parse_builtin("petersen").unwrap(), Graph::petersen());
        assert!(matches!(parse_builtin("wheel:5"), Err(Error::Parse(_))));
        assert!(matches!(parse_builtin("cycle"), Err(Error::Parse(_))));
        assert!(parse_builtin("cycle:2").is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(matches!(
            parse_edge_list("2 1\n0 5\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // standard encodings: the 5-cycle 0-1-2-3-4 and the Petersen graph
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5).unwrap());
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(crate::graph::is_isomorphic(&p, &Graph::petersen()));
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert!(parse_graph6("Dh").is_err());
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            Graph::petersen(),
            Graph::cycle(9).unwrap().mycielski().unwrap(),
            Graph::antihole(7).unwrap(),
        ] {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
        let big = Graph::cycle(70).unwrap();
        assert!(to_graph6(&big).starts_with('~'));
        assert_eq!(parse_graph6(&to_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn serialisation_helpers() {
        assert_eq!(rational_str(&Rational::new(10, 4)), "5/2");
        assert_eq!(rational_str(&Rational::from_integer(3)), "3/1");
        let c = IrreducibleIdeal::new(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(component_json(&c), json!(["x1^2", "x3^1"]));
        assert_eq!(monomial_json(&Monomial::new(vec![0, 3, 1])), json!(["x2^3", "x3^1"]));
    }

    #[test]
    fn text_rendering() {
        let r = Report {
            command: "x".into(),
            inputs: json!({}),
            results: json!({ "a": 1, "b": [[0, 1]], "c": [{ "d": "1/2" }] }),
            passed: true,
        };
        let text = r.to_text(None);
        assert!(text.contains("command: x\n"));
        assert!(text.contains("  a: 1\n  b: [[0,1]]\n  c:\n    - [0]\n      d: 1/2\n"));
    }
}
