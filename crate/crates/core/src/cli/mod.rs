//! The `efxo` command line. Every subcommand is a thin layer over the
//! library; [`run`] returns the process exit code.
//!
//! Exit codes: `0` yes / ok, `1` no / not EFX, `2` indeterminate, `10` usage
//! error, `11` unreadable or malformed input, `12` failure while processing.

mod commands;
mod dot;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use dot::export_dot;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 10;
pub const EXIT_INPUT: i32 = 11;
pub const EXIT_FAILURE: i32 = 12;

#[derive(Parser, Debug)]
#[command(name = "efxo", version, about = "EFX orientations of graph instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide instances; directories are searched for *.efx files.
    Solve(SolveArgs),
    /// Check an orientation for EFX.
    Verify { instance: PathBuf, orientation: PathBuf },
    /// Apply reductions and print the reduced instance.
    Preprocess(PreprocessArgs),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Decode an orientation of a generated instance.
    Extract(ExtractArgs),
    /// One JSON object of statistics per instance.
    Stats(StatsArgs),
    /// Graphviz rendering of an instance and optional orientation.
    ExportDot {
        instance: PathBuf,
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = 12)]
    tau: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: u64,
    #[arg(long, default_value_t = 20)]
    max_bf_edges: usize,
    /// Write the orientation here on a yes answer (single input only).
    #[arg(long)]
    emit_orientation: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum StrategyArg {
    Auto,
    #[value(name = "2sat")]
    TwoSat,
    Param,
    Bforce,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReductionArg {
    Basic,
    Zero,
    Cores,
    Full,
}

#[derive(Args, Debug)]
struct PreprocessArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ReductionArg::Full)]
    mode: ReductionArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    emit_trace: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// From a monotone CNF in `p cnf` format.
    Sat {
        #[arg(long)]
        cnf: PathBuf,
        /// Accept clauses mixing positive and negative literals.
        #[arg(long)]
        allow_mixed: bool,
        /// Also reduce every 0-degree to at most one (no mapping available).
        #[arg(long, conflicts_with = "mapping")]
        low_degree: bool,
        #[command(flatten)]
        out: GenOutput,
    },
    /// From a multicolored independent set instance.
    Mis {
        /// `n` on the first line, then `u v` per edge.
        #[arg(long)]
        graph: PathBuf,
        /// One color class per line.
        #[arg(long)]
        colors: PathBuf,
        /// `1`, `2`, `frac:p/q` or `cores`.
        #[arg(long, default_value = "1")]
        gadget: String,
        /// Core used for every color with `--gadget cores`: `path:N`, `star:K` or `pendant:M`.
        #[arg(long, default_value = "path:5")]
        core: String,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Seeded random instance.
    Random {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        p_one: f64,
        #[arg(long, default_value_t = 1)]
        uncut: usize,
        #[arg(long, default_value_t = 9)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        zero_edges: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenOutput {
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Sidecar file for `extract`.
    #[arg(long)]
    mapping: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Uniform,
    BipartitePlusEdges,
    TreeCore,
}

#[derive(Args, Debug)]
struct ExtractArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    mapping: PathBuf,
    #[arg(long)]
    orientation: PathBuf,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Add per-core matching and split-orientation figures.
    #[arg(long)]
    structure: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
pub(crate) struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(m: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: m.into() }
    }

    fn input(m: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: m.into() }
    }

    fn failure(m: impl Into<String>) -> Self {
        CliError { code: EXIT_FAILURE, message: m.into() }
    }
}

/// Runs one command. `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a, out),
        Command::Verify { instance, orientation } => commands::verify(&instance, &orientation, out),
        Command::Preprocess(a) => commands::preprocess(&a, out),
        Command::Gen(g) => commands::gen(&g, out),
        Command::Extract(a) => commands::extract(&a, out),
        Command::Stats(a) => commands::stats(&a, out),
        Command::ExportDot { instance, orientation } => commands::export(&instance, orientation.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
