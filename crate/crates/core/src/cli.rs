//! Command-line front end.
//!
//! `--input` names a graph file when such a file exists and is otherwise
//! read as a generator spec: `petersen`, `heawood`, `kdd:<d>`, `cycle:<n>`
//! or `random:<d>,<n>` (seeded by `--seed`).
//!
//! Exit codes: 0 success, 1 usage or input error, 2 rejection (a
//! strategy's hypothesis fails, the graph exceeds the exact-search ceiling,
//! or a certificate does not verify), 3 internal invariant violation.
//!
//! JSON output keys:
//! - `analyze`: the hypothesis report (`vertex_count`, `edge_count`,
//!   `regular_degree`, `c4_free`, `has_triangle`, `girth`, `diameter`,
//!   `kappa`, `separator`, `neighborhood_seeding`, `edge_five_cycles`,
//!   `disjoint_five_cycles`, `large_diameter`, `low_connectivity`,
//!   `moderate_connectivity`, `implied_lower_bound`, `upper_bound`), with
//!   `"infinity"` for infinite girth or diameter.
//! - `color`: the certificate (`palette`, `assignment`, `dominating`,
//!   `strategy`); the verification summary goes to stderr.
//! - `exact`: `phi`, `explored` and `witness` (a certificate without
//!   `strategy`).
//! - `verify`: `proper`, `used_colors`, `realized`, `is_b_coloring`,
//!   `witnesses_ok`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::check_theorem_hypotheses;
use crate::constructive::{construct, verify_bcoloring, Certificate, ConstructionError, Strategy};
use crate::graph::{self, Graph, GraphError};
use crate::oracle::{exact_b_chromatic, OracleConfig, OracleError, DEFAULT_MAX_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum StrategyArg {
    LowerBound,
    Diameter,
    Connectivity,
    #[default]
    Auto,
}

impl StrategyArg {
    fn strategy(self) -> Option<Strategy> {
        match self {
            StrategyArg::LowerBound => Some(Strategy::LowerBound),
            StrategyArg::Diameter => Some(Strategy::Diameter),
            StrategyArg::Connectivity => Some(Strategy::Connectivity),
            StrategyArg::Auto => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Write a generated graph (`--input` is the generator spec) to stdout.
    Generate,
    /// Report structural properties and the lower bounds they imply.
    Analyze,
    /// Construct and verify a b-coloring.
    Color,
    /// Compute the b-chromatic number exactly.
    Exact,
    /// Check a coloring certificate against the graph.
    Verify {
        /// Path to a certificate JSON file.
        certificate: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "bchromatic",
    version,
    about = "b-colorings of regular graphs without 4-cycles"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Graph file, or a generator spec if no such file exists.
    #[arg(long, global = true)]
    pub input: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: GraphFormat,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub strategy: StrategyArg,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub output: OutputMode,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    pub oracle_ceiling: usize,
}

/// A failed run: exit code plus message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::Hypothesis(_) => EXIT_REJECTED,
            ConstructionError::Input(_) => EXIT_USAGE,
            ConstructionError::NoMatching { .. } | ConstructionError::Invariant(_) => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::TooLarge { .. } => EXIT_REJECTED,
            OracleError::InvalidK { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses arguments (including the program name) and runs; returns the
/// exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            code
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let input = config
        .input
        .as_deref()
        .ok_or_else(|| Failure::usage("--input is required"))?;
    match &config.command {
        Command::Generate => {
            let g = generate(input, config.seed)?;
            write!(out, "{}", render_graph(&g, config.format))?;
            Ok(EXIT_OK)
        }
        Command::Analyze => analyze(&load_graph(input, config)?, config.output, out),
        Command::Color => color(&load_graph(input, config)?, config, out, err),
        Command::Exact => exact(&load_graph(input, config)?, config, out),
        Command::Verify { certificate } => {
            verify(&load_graph(input, config)?, certificate, config.output, out)
        }
    }
}

/// Builds the graph named by a generator spec.
pub fn generate(spec: &str, seed: u64) -> Result<Graph, GraphError> {
    let bad = || GraphError::InvalidParameters(format!("unknown generator spec {spec:?}"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match spec.split_once(':') {
        None if spec == "petersen" => Ok(graph::petersen()),
        None if spec == "heawood" => Ok(graph::heawood()),
        Some(("kdd", d)) => graph::complete_bipartite(number(d)?),
        Some(("cycle", n)) => graph::cycle(number(n)?),
        Some(("random", rest)) => {
            let (d, n) = rest.split_once(',').ok_or_else(bad)?;
            graph::random_c4_free_regular(number(d)?, number(n)?, seed)
        }
        _ => Err(bad()),
    }
}

fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => graph::to_edge_list(g),
        GraphFormat::Dimacs => graph::to_dimacs(g),
    }
}

fn load_graph(input: &str, config: &RunConfig) -> Result<Graph, Failure> {
    let path = Path::new(input);
    if !path.is_file() {
        return generate(input, config.seed).map_err(|e| {
            Failure::usage(format!("{input}: no such file; as a generator spec: {e}"))
        });
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{input}: {e}")))?;
    let parsed = match config.format {
        GraphFormat::EdgeList => graph::parse_edge_list(&text),
        GraphFormat::Dimacs => graph::parse_dimacs(&text),
    };
    parsed.map_err(|e| Failure::usage(format!("{input}: {e}")))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn analyze(g: &Graph, mode: OutputMode, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = check_theorem_hypotheses(g);
    match mode {
        OutputMode::Json => emit_json(out, &report)?,
        OutputMode::Text => {
            let value = serde_json::to_value(&report)?;
            let object = value.as_object().expect("report serializes to an object");
            for (key, v) in object {
                writeln!(out, "{key}: {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn color(
    g: &Graph,
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let built = construct(g, config.strategy.strategy())?;
    let report = verify_bcoloring(g, &built.coloring)?;
    let certificate = Certificate::new(g, &built.coloring, Some(built.strategy));
    if !report.is_b_coloring || certificate.check_witnesses(g).is_err() {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: format!("self-verification failed: {report:?}"),
        });
    }
    let summary = format!(
        "strategy: {}\ncolors: {}\nguaranteed: {}\nverified: b-coloring\n",
        built.strategy,
        report.color_count(),
        built.guaranteed
    );
    match config.output {
        OutputMode::Json => {
            emit_json(out, &certificate)?;
            write!(err, "{summary}")?;
        }
        OutputMode::Text => {
            write!(out, "{summary}")?;
            writeln!(out, "certificate: {}", serde_json::to_string(&certificate)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn exact(g: &Graph, config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let oracle = OracleConfig {
        max_vertices: config.oracle_ceiling,
    };
    let result = exact_b_chromatic(g, &oracle)?;
    let witness = Certificate::new(g, &result.witness, None);
    match config.output {
        OutputMode::Json => {
            #[derive(Serialize)]
            struct ExactOutput<'a> {
                phi: usize,
                explored: u64,
                witness: &'a Certificate,
            }
            emit_json(
                out,
                &ExactOutput {
                    phi: result.phi,
                    explored: result.explored,
                    witness: &witness,
                },
            )?;
        }
        OutputMode::Text => {
            writeln!(out, "phi: {}", result.phi)?;
            writeln!(out, "explored: {}", result.explored)?;
            writeln!(out, "witness: {}", serde_json::to_string(&witness)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    g: &Graph,
    certificate: &Path,
    mode: OutputMode,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(certificate)
        .map_err(|e| Failure::usage(format!("{}: {e}", certificate.display())))?;
    let cert: Certificate = serde_json::from_str(&text)?;
    let coloring = cert.coloring()?;
    let report = verify_bcoloring(g, &coloring)?;
    let witnesses_ok = cert.check_witnesses(g).is_ok();
    let valid = report.is_b_coloring && witnesses_ok;
    match mode {
        OutputMode::Json => {
            #[derive(Serialize)]
            struct VerifyOutput<'a> {
                #[serde(flatten)]
                report: &'a crate::constructive::VerificationReport,
                witnesses_ok: bool,
            }
            emit_json(
                out,
                &VerifyOutput {
                    report: &report,
                    witnesses_ok,
                },
            )?;
        }
        OutputMode::Text => {
            writeln!(out, "proper: {}", report.proper)?;
            writeln!(out, "colors: {}", report.color_count())?;
            let unrealized = report.unrealized();
            if !unrealized.is_empty() {
                writeln!(out, "unrealized: {unrealized:?}")?;
            }
            writeln!(out, "witnesses_ok: {witnesses_ok}")?;
            writeln!(out, "b-coloring: {valid}")?;
        }
    }
    Ok(if valid { EXIT_OK } else { EXIT_REJECTED })
}
