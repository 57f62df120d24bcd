//! Command-line front end.
//!
//! Exit codes: 0 on success (including sweeps without failures), 1 on usage
//! or input errors, 2 when a verification finds a counterexample.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::with_jobs;
use crate::graph::{Family, Graph};
use crate::harness::{run_check, sweep, Check, Outcome, Summary, SweepDocument, VerificationReport};
use crate::io::{emit_graph6, enumerate_connected_range, parse_edge_list, parse_graph6, Corpus};
use crate::product::{product, ProductGraph, ProductKind};
use crate::search::{geodetic_number, hull_number, t_hull_number, toll_number, InvariantResult};
use crate::toll::{extreme_vertices, toll_interval};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE_FOUND: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tollkit",
    version,
    about = "Toll convexity invariants and strong-product verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an invariant of one graph.
    Compute {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        invariant: Invariant,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the toll interval between two vertices.
    Interval {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Build a product of two graphs and optionally compute an invariant of it.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "strong")]
        kind: ProductKind,
        #[arg(long, value_enum)]
        invariant: Option<Invariant>,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Run checks on the strong product of one factor pair.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        check: CheckList,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run checks over every pair of two corpora.
    Sweep {
        #[command(flatten)]
        corpora: CorpusArgs,
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        check: CheckList,
        /// Worker threads; defaults to all available cores.
        #[arg(long, env = "TOLLKIT_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print connected graphs in graph6, one per line.
    Gen {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        skip_complete: bool,
    },
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Left corpus; defaults to connected graphs on 2..=max-n vertices.
    #[arg(long)]
    left: Option<String>,
    #[arg(long)]
    right: Option<String>,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long)]
    skip_complete: bool,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Tn,
    Th,
    G,
    Hn,
    Ext,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Tn => "tn",
            Invariant::Th => "th",
            Invariant::G => "g",
            Invariant::Hn => "hn",
            Invariant::Ext => "ext",
        }
    }

    fn compute(self, g: &Graph) -> Result<InvariantResult> {
        match self {
            Invariant::Tn => toll_number(g),
            Invariant::Th => t_hull_number(g),
            Invariant::G => geodetic_number(g),
            Invariant::Hn => hull_number(g),
            Invariant::Ext => {
                let ext = extreme_vertices(g)?;
                Ok(InvariantResult {
                    value: ext.len(),
                    witness: ext,
                    explored: 0,
                })
            }
        }
    }
}

#[derive(Clone, Debug)]
struct CheckList(Vec<Check>);

fn parse_checks(s: &str) -> std::result::Result<CheckList, String> {
    Check::parse_list(s).map(CheckList)
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v but got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Resolves `g6:<line>`, `file:<path>` or `family:<kind>:<n>` to one graph.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let bad = || Error::GraphSpec(spec.to_string());
    let (scheme, rest) = spec.split_once(':').ok_or_else(bad)?;
    match scheme {
        "g6" => parse_graph6(rest),
        "family" => {
            let (kind, n) = rest.split_once(':').ok_or_else(bad)?;
            let n: usize = n.parse().map_err(|_| bad())?;
            kind.parse::<Family>()?.build(n)
        }
        "file" => {
            let text = std::fs::read_to_string(rest).map_err(|e| Error::Io {
                path: rest.to_string(),
                message: e.to_string(),
            })?;
            match Corpus::parse(&text, rest) {
                Ok(c) if c.len() == 1 => Ok(c.graphs.into_iter().next().unwrap()),
                Ok(c) if c.len() > 1 => Err(Error::Io {
                    path: rest.to_string(),
                    message: format!("expected one graph, found {}", c.len()),
                }),
                _ => parse_edge_list(&text),
            }
        }
        _ => Err(bad()),
    }
}

/// Like [`parse_graph_spec`], but a `file:` spec may hold many graph6 lines.
pub fn parse_corpus_spec(spec: &str) -> Result<Corpus> {
    if let Some(path) = spec.strip_prefix("file:") {
        if let Ok(c) = Corpus::read(path.as_ref()) {
            return Ok(c);
        }
    }
    Ok(Corpus::new(vec![parse_graph_spec(spec)?], spec))
}

/// Graphviz rendering with `highlight` vertices filled.
pub fn to_dot(g: &Graph, highlight: &VertexSet, names: impl Fn(usize) -> String) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let style = if highlight.contains(v) {
            ", style=filled, fillcolor=\"#f4a261\""
        } else {
            ""
        };
        writeln!(out, "  {v} [label=\"{}\"{style}];", names(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute {
            graph,
            invariant,
            output,
        } => {
            let g = parse_graph_spec(&graph)?;
            let r = invariant.compute(&g)?;
            match output.format {
                Format::Text => {
                    let label = if invariant == Invariant::Ext { "set" } else { "witness" };
                    writeln!(out, "{} = {}, {label} {}", invariant.name(), r.value, r.witness)
                }
                Format::Machine => writeln!(
                    out,
                    "{}",
                    json!({
                        "invariant": invariant.name(),
                        "graph6": emit_graph6(&g),
                        "value": r.value,
                        "witness": r.witness.to_vec(),
                        "explored": r.explored,
                    })
                ),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Interval {
            graph,
            pair: (u, v),
            output,
            emit_dot,
        } => {
            let g = parse_graph_spec(&graph)?;
            let t = toll_interval(&g, u, v)?;
            match output.format {
                Format::Text => writeln!(out, "{t}"),
                Format::Machine => writeln!(
                    out,
                    "{}",
                    json!({"graph6": emit_graph6(&g), "pair": [u, v], "interval": t.to_vec()})
                ),
            }
            .map_err(io_err)?;
            if let Some(path) = emit_dot {
                write_file(&path, &to_dot(&g, &t, |x| x.to_string()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Product {
            left,
            right,
            kind,
            invariant,
            output,
            emit_dot,
        } => {
            let (g, h) = (parse_graph_spec(&left)?, parse_graph_spec(&right)?);
            let p = product(kind, &g, &h);
            let result = invariant.map(|i| i.compute(p.graph()).map(|r| (i, r))).transpose()?;
            write_product(out, &p, result.as_ref(), output.format).map_err(io_err)?;
            if let Some(path) = emit_dot {
                let highlight = result
                    .as_ref()
                    .map(|(_, r)| r.witness.clone())
                    .unwrap_or_else(|| VertexSet::empty(p.graph().order()));
                write_file(&path, &to_dot(p.graph(), &highlight, |x| format!("{:?}", p.coords(x))))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            check,
            left,
            right,
            output,
        } => {
            let (g, h) = (parse_graph_spec(&left)?, parse_graph_spec(&right)?);
            let reports = check
                .0
                .iter()
                .map(|&c| run_check(c, &g, &h))
                .collect::<Result<Vec<_>>>()?;
            write_reports(out, &reports, output.format, false).map_err(io_err)?;
            Ok(exit_for(&reports))
        }
        Command::Sweep {
            corpora,
            check,
            jobs,
            output,
        } => {
            let default = || enumerate_connected_range(2, corpora.max_n, corpora.skip_complete);
            let left = match &corpora.left {
                Some(spec) => parse_corpus_spec(spec)?,
                None => default()?,
            };
            let right = match &corpora.right {
                Some(spec) => parse_corpus_spec(spec)?,
                None => default()?,
            };
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let reports = with_jobs(jobs, |exec| sweep(&left, &right, &check.0, exec))?;
            write_reports(out, &reports, output.format, true).map_err(io_err)?;
            Ok(exit_for(&reports))
        }
        Command::Gen {
            min_n,
            max_n,
            skip_complete,
        } => {
            let corpus = enumerate_connected_range(min_n, max_n, skip_complete)?;
            writeln!(out, "# {} graphs: {}", corpus.len(), corpus.source).map_err(io_err)?;
            out.write_all(corpus.to_graph6_lines().as_bytes()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

fn exit_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.outcome == Outcome::Fail) {
        EXIT_FAILURE_FOUND
    } else {
        EXIT_OK
    }
}

fn write_product(
    out: &mut dyn Write,
    p: &ProductGraph,
    result: Option<&(Invariant, InvariantResult)>,
    format: Format,
) -> std::io::Result<()> {
    let g = p.graph();
    match format {
        Format::Text => {
            writeln!(
                out,
                "{} product: {} x {} factors, {} vertices, {} edges",
                p.kind(),
                p.left_order(),
                p.right_order(),
                g.order(),
                g.size()
            )?;
            writeln!(out, "graph6 {}", emit_graph6(g))?;
            if let Some((inv, r)) = result {
                let label = if *inv == Invariant::Ext { "set" } else { "witness" };
                writeln!(
                    out,
                    "{} = {}, {label} {}",
                    inv.name(),
                    r.value,
                    p.format_set(&r.witness)
                )?;
            }
            Ok(())
        }
        Format::Machine => {
            let mut doc = json!({
                "kind": p.kind().name(),
                "left_order": p.left_order(),
                "right_order": p.right_order(),
                "order": g.order(),
                "size": g.size(),
                "graph6": emit_graph6(g),
            });
            if let Some((inv, r)) = result {
                let coords: Vec<_> = r.witness.iter().map(|v| p.coords(v)).collect();
                doc["invariant"] = json!({
                    "name": inv.name(),
                    "value": r.value,
                    "witness": r.witness.to_vec(),
                    "witness_coords": coords,
                });
            }
            writeln!(out, "{doc}")
        }
    }
}

fn write_reports(
    out: &mut dyn Write,
    reports: &[VerificationReport],
    format: Format,
    with_summary: bool,
) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{}", r.to_line())?;
            }
            if with_summary {
                let s = Summary::of(reports);
                writeln!(out, "summary pass={} fail={} skip={}", s.pass, s.fail, s.skip)?;
            }
            Ok(())
        }
        Format::Machine => {
            let doc = SweepDocument::new(reports.to_vec());
            writeln!(out, "{}", serde_json::to_string(&doc).expect("reports serialize"))
        }
    }
}
