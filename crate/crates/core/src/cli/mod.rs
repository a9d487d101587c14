//! The command-line front end behind the `coline` binary.
//!
//! Commands take their graph from `--graph6`, `--named` or `--input`
//! (an edge-list file) and print JSON. [`run`] returns the process exit
//! code: [`EXIT_OK`], [`EXIT_MISMATCH`] when a check disagrees,
//! [`EXIT_USAGE`] for bad arguments or inputs, and [`EXIT_IO`] when a file
//! cannot be read or written.

mod input;

pub use crate::graph6::parse as parse_graph6;
pub use input::{format_edge_list, parse_edge_list, InputError, InputGraphSpec};

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::characterize::{
    classify_disconnected_coline, classify_graph, Catalog, CatalogError, CharacterizeError,
    HamClause, OracleCheck, ToughClause, TraceClause, Verdict, WuMengClause,
    CATALOG_FORMAT_VERSION,
};
use crate::graph6;
use crate::graphcore::{coline, Graph};
use crate::oracle::{canonical_form, cms_exact, find_roots, ROOT_SEARCH_LIMIT};
use crate::sweep::{bootstrap_catalog, run_sweep, Check, SweepConfig, SweepError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest edge count `cms` will search.
pub const CMS_EDGE_BUDGET: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Decision(#[from] CharacterizeError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::Input(InputError::Io { .. })
            | CliError::Catalog(CatalogError::Io { .. })
            | CliError::Decision(CharacterizeError::Catalog(CatalogError::Io { .. }))
            | CliError::Sweep(SweepError::Io { .. }) => EXIT_IO,
            CliError::Catalog(_)
            | CliError::Decision(CharacterizeError::Catalog(_))
            | CliError::Sweep(SweepError::Catalog(_) | SweepError::Incomplete(_)) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "coline", version, about = "Toughness, Hamiltonicity and traceability of coline graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide toughness, Hamiltonicity and traceability of co(G)
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Confirm every verdict with the exact oracles
        #[arg(long)]
        verify: bool,
    },
    /// Cross-check every decision over all small graphs
    Sweep {
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        /// Defaults to 10, or every vertex pair if there are fewer
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        /// Write the full JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
        /// Comma-separated checks, or `all`
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Cyclic matching sequenceability of G
    Cms {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Manage the exception catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Graphs G with co(G) or L(G) isomorphic to the input
    Roots {
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest root order searched (at most 8)
        #[arg(long, default_value_t = ROOT_SEARCH_LIMIT)]
        max_vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Derive the catalog by sweeping without one
    Bootstrap {
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Load and validate a catalog file (default: COLINE_CATALOG or the
    /// embedded catalog)
    Validate {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Print the catalog in use
    Show,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Edge-list file
    #[arg(short, long, group = "source")]
    input: Option<PathBuf>,
    /// Named graph such as K5, H1, K3oK1, C4uK2
    #[arg(long, group = "source")]
    named: Option<String>,
    #[arg(long, group = "source")]
    graph6: Option<String>,
}

impl GraphArgs {
    fn spec(&self) -> Result<InputGraphSpec, CliError> {
        match (&self.input, &self.named, &self.graph6) {
            (Some(p), None, None) => Ok(InputGraphSpec::EdgeListFile(p.clone())),
            (None, Some(n), None) => Ok(InputGraphSpec::Named(n.clone())),
            (None, None, Some(s)) => Ok(InputGraphSpec::Graph6(s.clone())),
            _ => Err(CliError::Usage(
                "give exactly one of --input, --named, --graph6".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSection {
    pub canonical: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColineSection {
    pub n: usize,
    pub components: usize,
    /// Structural case when disconnected.
    pub case: String,
    pub rho: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictSection {
    pub tough: Verdict<ToughClause>,
    pub hamiltonian: Verdict<HamClause>,
    pub wu_meng: Verdict<WuMengClause>,
    pub traceable: Verdict<TraceClause>,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub tool: &'static str,
    pub catalog_format: u32,
    pub catalog_source: String,
}

/// The JSON document printed by `classify` and `cms`.
#[derive(Clone, Debug, Serialize)]
pub struct JsonReport {
    pub graph: GraphSection,
    pub coline: Option<ColineSection>,
    pub verdicts: VerdictSection,
    pub oracle: Option<OracleCheck>,
    pub cms: Option<usize>,
    pub versions: Versions,
}

impl JsonReport {
    /// Whether any oracle or cms cross-check disagreed with a verdict.
    pub fn has_mismatch(&self) -> bool {
        let oracle = self.oracle.as_ref().is_some_and(|o| !o.agrees());
        let cms = match (self.cms, self.verdicts.hamiltonian.holds()) {
            (Some(k), Some(h)) => (k >= 2) != h,
            _ => false,
        };
        oracle || cms
    }
}

/// Classify `g`; with `verify`, run the oracles too.
pub fn cmd_classify(g: &Graph, verify: bool) -> Result<JsonReport, CliError> {
    let catalog = Catalog::global()?;
    let report = classify_graph(catalog, g, verify)?;
    // coline graphs on more than 64 vertices do not fit the graph type
    let coline_section = (g.edge_count() <= 64).then(|| {
        let l = coline(g).0;
        let class = classify_disconnected_coline(g);
        ColineSection {
            n: l.order(),
            components: l.component_count(),
            case: class.case.to_string(),
            rho: class.rho,
        }
    });
    Ok(JsonReport {
        graph: GraphSection {
            canonical: report.graph_id.to_string(),
            n: report.n,
            m: report.m,
            max_degree: report.max_degree,
        },
        coline: coline_section,
        verdicts: VerdictSection {
            provenance: report.provenance(),
            tough: report.tough,
            hamiltonian: report.hamiltonian,
            wu_meng: report.wu_meng,
            traceable: report.traceable,
        },
        oracle: report.oracle,
        cms: None,
        versions: Versions {
            tool: env!("CARGO_PKG_VERSION"),
            catalog_format: CATALOG_FORMAT_VERSION,
            catalog_source: catalog.source.clone(),
        },
    })
}

/// The classification report with the exact cms filled in. Needs
/// `1 <= m <= 12`.
pub fn cmd_cms(g: &Graph) -> Result<JsonReport, CliError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(CliError::Usage("cms needs at least one edge".into()));
    }
    if m > CMS_EDGE_BUDGET {
        return Err(CliError::Usage(format!(
            "cms search budget is {CMS_EDGE_BUDGET} edges, the graph has {m}"
        )));
    }
    let mut report = cmd_classify(g, false)?;
    report.cms = Some(cms_exact(g).expect("graph has edges"));
    Ok(report)
}

/// Run a sweep, writing the JSON report to `config.output_path` if set.
pub fn cmd_sweep(config: &SweepConfig) -> Result<crate::sweep::SweepReport, CliError> {
    let report = run_sweep(config)?;
    if let Some(path) = &config.output_path {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(path, json).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(report)
}

#[derive(Serialize)]
struct RootsOutput {
    input: String,
    max_vertices: usize,
    partial: bool,
    roots: Vec<String>,
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    writeln!(out, "{text}").map_err(stdout_error)
}

fn stdout_error(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "stdout".into(),
        message: e.to_string(),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Classify { graph, verify } => {
            let g = graph.spec()?.load()?;
            let report = cmd_classify(&g, verify)?;
            write_json(out, &report)?;
            Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Cms { graph } => {
            let g = graph.spec()?.load()?;
            let report = cmd_cms(&g)?;
            write_json(out, &report)?;
            Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Sweep {
            max_vertices,
            max_edges,
            workers,
            output,
            checks,
        } => {
            if max_vertices > 10 {
                return Err(CliError::Usage(format!("--max-vertices {max_vertices} exceeds 10")));
            }
            let pairs = max_vertices * max_vertices.saturating_sub(1) / 2;
            let defaults = SweepConfig::default();
            let config = SweepConfig {
                max_vertices,
                max_edges: max_edges.unwrap_or(defaults.max_edges.min(pairs)),
                checks: Check::parse_list(&checks)?,
                worker_count: workers.unwrap_or(defaults.worker_count),
                output_path: output,
                ..defaults
            };
            let report = cmd_sweep(&config)?;
            for line in report.summary_lines() {
                writeln!(out, "{line}").map_err(stdout_error)?;
            }
            for m in &report.mismatches {
                writeln!(
                    out,
                    "mismatch {} {}: theorem {}, oracle {}",
                    m.check, m.graph, m.theorem, m.oracle
                )
                .map_err(stdout_error)?;
            }
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Catalog { action } => match action {
            CatalogAction::Bootstrap { output, workers } => {
                let defaults = SweepConfig::default();
                let config = SweepConfig {
                    worker_count: workers.unwrap_or(defaults.worker_count),
                    output_path: output.clone(),
                    ..defaults
                };
                let (catalog, report) = bootstrap_catalog(&config)?;
                match output {
                    Some(p) => {
                        for line in report.summary_lines() {
                            writeln!(out, "{line}").map_err(stdout_error)?;
                        }
                        writeln!(out, "wrote {}", p.display()).map_err(stdout_error)?;
                    }
                    None => write!(out, "{}", catalog.to_text()).map_err(stdout_error)?,
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Validate { input } => {
                let catalog = match input {
                    Some(p) => Catalog::load_path(&p)?,
                    None => Catalog::load()?,
                };
                writeln!(
                    out,
                    "catalog {} valid: {} toughness exceptions, {} trace exceptions, {} wu-meng graphs",
                    catalog.source,
                    catalog.toughness_exceptions.len(),
                    catalog.trace_exceptions.len(),
                    catalog.wu_meng_21.len()
                )
                .map_err(stdout_error)?;
                Ok(EXIT_OK)
            }
            CatalogAction::Show => {
                let catalog = Catalog::global()?;
                writeln!(out, "# source: {}", catalog.source).map_err(stdout_error)?;
                write!(out, "{}", catalog.to_text()).map_err(stdout_error)?;
                Ok(EXIT_OK)
            }
        },
        Command::Roots {
            graph,
            max_vertices,
        } => {
            let l = graph.spec()?.load()?;
            let search = find_roots(&l, max_vertices);
            write_json(
                out,
                &RootsOutput {
                    input: canonical_form(&l).to_string(),
                    max_vertices: max_vertices.min(ROOT_SEARCH_LIMIT),
                    partial: search.partial,
                    roots: search.roots.iter().map(graph6::emit).collect(),
                },
            )?;
            Ok(EXIT_OK)
        }
    }
}

/// Parse `args` (including the program name), run the command and return
/// the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
