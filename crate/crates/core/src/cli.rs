//! The `tbls` command line.
//!
//! Exit codes: 0 on success or accept, 1 on reject, 2 on usage or input
//! errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::certificate::Certificate;
use crate::certify::{lbfs_pattern_table, ldfs_pattern_table, recognize, CertifyError};
use crate::corpus::corpus;
use crate::engine::{check_fixpoint, check_pairwise, tbls_run_traced};
use crate::graph::{Graph, VertexOrdering};
use crate::hierarchy::{
    verify_hierarchy, witness_graph, HierarchyReport, WitnessGraphError, MAX_UNIVERSE,
};
use crate::io::{parse_graph, parse_graphs, parse_ordering, ParseError};
use crate::label::{LabelOrder, LabelSet, Search};
use crate::multisweep::{is_cocomp_ordering, is_unit_interval_ordering, sweep_sequence, SweepLine};
use crate::search::{run_search, EngineChoice};

#[derive(Debug, Parser)]
#[command(
    name = "tbls",
    version,
    about = "Run and certify tie-breaking label searches"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a search and print the visiting order.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// gen, bfs, dfs, lbfs, ldfs, mcs, mns or meet:X+Y
        #[arg(long)]
        order: LabelOrder,
        /// `identity`, a file, or an inline ordering such as "2 1 3"
        #[arg(long, default_value = "identity")]
        tau: String,
        #[arg(long, default_value = "auto")]
        engine: EngineChoice,
        /// Print the eligible vertices and their labels at every step
        /// (always uses the reference engine).
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether an ordering could have been produced by a search.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: LabelOrder,
        /// A file or an inline ordering such as "1 2 4 3"
        #[arg(long)]
        ordering: String,
        #[arg(long, value_enum, default_value_t = Recognizer::Auto)]
        recognizer: Recognizer,
        /// For lbfs/ldfs, fill the whole pattern table instead of stopping at
        /// the first violated pair.
        #[arg(long)]
        full_table: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Iterate a search, each sweep tie-broken by the reverse of the last.
    Multisweep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "lbfs")]
        order: LabelOrder,
        #[arg(long)]
        sweeps: usize,
        #[arg(long, value_enum)]
        check: Option<SweepCheck>,
        /// First ordering σ0; the identity when omitted.
        #[arg(long)]
        seed_ordering: Option<String>,
    },
    /// Check the extension relation between the seven searches.
    Hierarchy {
        /// Label universe {1..u} for the exhaustive pair check.
        #[arg(long, default_value_t = 5)]
        max_label: usize,
        /// Graphs for the ordering-level check, back to back in edge-list
        /// format. Defaults to all connected graphs on up to five vertices.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Random tie-breaks per graph and arc.
        #[arg(long, default_value_t = 5)]
        taus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a graph and ordering in which labels A and B are both live.
    Witness {
        #[arg(long)]
        order: LabelOrder,
        /// Dates such as "1,3"; empty for ∅.
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        p: usize,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the ordering here instead of stdout.
        #[arg(long)]
        ordering_out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Recognizer {
    /// Specialised certifier when there is one, fixed-point test otherwise.
    Auto,
    Fixpoint,
    Pairwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepCheck {
    UnitInterval,
    Cocomp,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("{what}: {source}")]
    Parse { what: String, source: ParseError },
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Witness(#[from] WitnessGraphError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Whether the command ended in an accept/success or a reject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Accept => 0,
            Verdict::Reject => 1,
        }
    }

    fn of(accepted: bool) -> Self {
        if accepted {
            Verdict::Accept
        } else {
            Verdict::Reject
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        what: path.display().to_string(),
        source,
    })
}

/// `identity`, a readable file, or the ordering written inline.
fn load_ordering(source: &str, n: usize) -> Result<VertexOrdering, CliError> {
    if source == "identity" {
        return Ok(VertexOrdering::identity(n));
    }
    let path = Path::new(source);
    let (text, what) = if path.is_file() {
        (read(path)?, path.display().to_string())
    } else {
        (source.to_string(), format!("ordering `{source}`"))
    };
    parse_ordering(&text, n).map_err(|source| CliError::Parse { what, source })
}

/// Parses "1,3", "1 3", "{1,3}" or "" into a label set.
pub fn parse_label_set(text: &str) -> Result<LabelSet, CliError> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(CliError::Usage(format!(
                "label dates are positive integers, found `{t}`"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(LabelSet::from_dates)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("plain data serializes")
    )?;
    Ok(())
}

fn write_certificate(
    out: &mut dyn Write,
    cert: &Certificate,
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Json => json_line(out, cert),
        Format::Text => {
            match (&cert.rule, &cert.witness) {
                (Some(rule), Some(w)) => {
                    let vs: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
                    write!(out, "reject {rule}: {}", vs.join(" "))?;
                    if !w.labels.is_empty() {
                        let ls: Vec<String> = w.labels.iter().map(|l| l.to_string()).collect();
                        write!(out, " labels {}", ls.join(" "))?;
                    }
                    if let Some(step) = w.step {
                        write!(out, " at step {step}")?;
                    }
                    writeln!(out)?;
                }
                _ => writeln!(out, "accept")?,
            }
            Ok(())
        }
    }
}

/// Runs one parsed command, writing results to `out` and warnings to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    match &cli.command {
        Command::Search {
            graph,
            order,
            tau,
            engine,
            trace,
        } => {
            let g = load_graph(graph)?;
            let tau = load_ordering(tau, g.n())?;
            let sigma = if *trace {
                let mut lines = Vec::new();
                let sigma = tbls_run_traced(&g, order, &tau, |t| {
                    let eligible: Vec<String> =
                        t.eligible.iter().map(|(v, l)| format!("{v}:{l}")).collect();
                    lines.push(format!(
                        "step {}: eligible {} -> {}",
                        t.step,
                        eligible.join(" "),
                        t.chosen
                    ));
                });
                for l in lines {
                    writeln!(out, "{l}")?;
                }
                sigma
            } else {
                let outcome = run_search(&g, order, &tau, *engine);
                if let Some(v) = &outcome.fallback {
                    writeln!(
                        err,
                        "warning: fast engine stopped ({v}); reran with the reference engine"
                    )?;
                }
                outcome.ordering
            };
            writeln!(out, "{sigma}")?;
            Ok(Verdict::Accept)
        }
        Command::Certify {
            graph,
            order,
            ordering,
            recognizer,
            full_table,
            format,
        } => {
            let g = load_graph(graph)?;
            let sigma = load_ordering(ordering, g.n())?;
            let cert = match recognizer {
                Recognizer::Fixpoint => check_fixpoint(&g, order, &sigma),
                Recognizer::Pairwise => check_pairwise(&g, order, &sigma),
                Recognizer::Auto => match order.as_search() {
                    Some(Search::Lbfs) if *full_table => {
                        lbfs_pattern_table(&g, &sigma)?.certificate(&sigma)
                    }
                    Some(Search::Ldfs) if *full_table => {
                        ldfs_pattern_table(&g, &sigma)?.certificate(&sigma)
                    }
                    _ => recognize(&g, order, &sigma)?,
                },
            };
            write_certificate(out, &cert, *format)?;
            Ok(Verdict::of(cert.is_accepted()))
        }
        Command::Multisweep {
            graph,
            order,
            sweeps,
            check,
            seed_ordering,
        } => {
            let g = load_graph(graph)?;
            let sigma0 = load_ordering(seed_ordering.as_deref().unwrap_or("identity"), g.n())?;
            let trace = sweep_sequence(&g, order, &sigma0, *sweeps);
            for (sweep, sigma) in trace.orderings.iter().enumerate() {
                json_line(
                    out,
                    &SweepLine {
                        sweep,
                        ordering: sigma.as_slice(),
                    },
                )?;
            }
            let Some(check) = check else {
                return Ok(Verdict::Accept);
            };
            let cert = match check {
                SweepCheck::UnitInterval => is_unit_interval_ordering(&g, trace.last())?,
                SweepCheck::Cocomp => is_cocomp_ordering(&g, trace.last())?,
            };
            json_line(out, &cert)?;
            Ok(Verdict::of(cert.is_accepted()))
        }
        Command::Hierarchy {
            max_label,
            corpus: path,
            taus,
            seed,
            format,
        } => {
            if *max_label > MAX_UNIVERSE {
                return Err(CliError::Usage(format!(
                    "--max-label is capped at {MAX_UNIVERSE}"
                )));
            }
            let graphs = match path {
                Some(p) => parse_graphs(&read(p)?).map_err(|source| CliError::Parse {
                    what: p.display().to_string(),
                    source,
                })?,
                None => corpus(5, true),
            };
            let report = verify_hierarchy(*max_label, &graphs, *taus, *seed);
            match format {
                Format::Json => json_line(out, &report)?,
                Format::Text => write_hierarchy_text(out, &report, graphs.len())?,
            }
            Ok(Verdict::of(report.matches_expected()))
        }
        Command::Witness {
            order,
            a,
            b,
            p,
            graph_out,
            ordering_out,
        } => {
            let a = parse_label_set(a)?;
            let b = parse_label_set(b)?;
            let (g, sigma) = witness_graph(order, &a, &b, *p)?;
            for (target, text) in [
                (graph_out, g.to_string()),
                (ordering_out, format!("{sigma}\n")),
            ] {
                match target {
                    Some(path) => fs::write(path, &text).map_err(|source| CliError::Write {
                        path: path.clone(),
                        source,
                    })?,
                    None => write!(out, "{text}")?,
                }
            }
            Ok(Verdict::Accept)
        }
    }
}

fn write_hierarchy_text(
    out: &mut dyn Write,
    r: &HierarchyReport,
    graphs: usize,
) -> Result<(), CliError> {
    writeln!(out, "label universe {{1..{}}}", r.universe)?;
    writeln!(out, "arcs (cover relation):")?;
    for (s, t) in &r.arcs {
        writeln!(out, "  {s} -> {t}")?;
    }
    writeln!(out, "all extensions: {}", r.extensions.len())?;
    writeln!(out, "non-arcs:")?;
    for na in &r.non_arcs {
        writeln!(
            out,
            "  {} -/-> {}: {} ≺ {} under {} but not under {}",
            na.from, na.to, na.witness.0, na.witness.1, na.from, na.to
        )?;
    }
    writeln!(out, "ordering-level check on {graphs} graphs:")?;
    for c in &r.ordering_checks {
        let status = if c.failures.is_empty() {
            "ok"
        } else {
            "FAILED"
        };
        writeln!(
            out,
            "  {} -> {}: {} orderings, {} failures, {status}",
            c.from,
            c.to,
            c.orderings_checked,
            c.failures.len()
        )?;
    }
    Ok(())
}
