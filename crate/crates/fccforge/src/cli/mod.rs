//! Command-line driver: argument parsing, dispatch, and the exit-code
//! contract (0 = success/pass, 1 = verified negative, 2 = usage, parse,
//! or computation error).

pub mod commands;
pub mod document;
pub mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Result;
use commands::Outcome;

#[derive(Parser)]
#[command(
    name = "fccforge",
    version,
    about = "Analyze, construct, and verify function-correcting encodings over block codes"
)]
pub struct Cli {
    /// Spaces per JSON indent level on stdout (0 = compact).
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Codes are named by family shorthand ("hamming:3", "rs:5:4:2", "golay",
/// "rep:5", "even:4", "rm1:3", "ext-hamming:3") or by a path to a
/// code-spec JSON file.
#[derive(Subcommand)]
pub enum Command {
    /// Distance structure: component profile, connectivity threshold,
    /// optional graph snapshot and DOT export.
    Analyze {
        code: String,
        /// Also build the alpha-distance graph at this alpha (>= dMin).
        #[arg(long)]
        alpha: Option<usize>,
        /// Write a DOT rendering of that graph to this file.
        #[arg(long, requires = "alpha")]
        dot: Option<PathBuf>,
    },
    /// Can a function with the given number of values be strictly
    /// protected over this code?
    Feasibility {
        code: String,
        /// Number of distinct function values to place.
        #[arg(long, default_value_t = 2)]
        values: u32,
        /// Query one function distance (> dMin); exit 1 when infeasible.
        #[arg(long)]
        df: Option<usize>,
    },
    /// Covering radius of a code.
    Covering {
        code: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Build a two-step encoding (inner code + label code) for a function.
    Construct {
        /// "parity", "weight-mod:s", or "coordinate:i" (1-based).
        #[arg(long)]
        function: String,
        /// Inner code encoding the data; must have one codeword per message.
        #[arg(long)]
        inner: String,
        /// Label code keyed by function value; use a 0-length code to opt out.
        #[arg(long)]
        function_code: String,
        /// Write the encoding document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an encoding file against claimed distances; exit 1 on failure.
    Verify {
        encoding: String,
        /// Claimed data distance d_d.
        #[arg(long)]
        dd: usize,
        /// Claimed function distance d_f (>= dd).
        #[arg(long)]
        df: usize,
    },
    /// Path between two codewords of an MDS code with dMin-length hops.
    MdsPath {
        code: String,
        /// Start codeword ("1043" or "1,0,4,3").
        #[arg(long)]
        from: String,
        /// Target codeword.
        #[arg(long)]
        to: String,
    },
    /// Redundancy lower bounds at classical parameter sets.
    Bound {
        kind: BoundKind,
        /// Field order (required for the perfect bound).
        #[arg(long)]
        q: Option<u32>,
        /// Message length.
        #[arg(long)]
        k: usize,
        /// Data distance.
        #[arg(long)]
        d: usize,
    },
    /// Monte Carlo error injection against an encoding file; exit 1 if
    /// any recovery rate falls below 1.
    Simulate {
        encoding: String,
        /// Errors injected per data-recovery trial (2t+1 must not exceed d_d).
        #[arg(long, default_value_t = 0)]
        t_data: usize,
        /// Errors injected per function-recovery trial (2t+1 must not exceed d_f).
        #[arg(long, default_value_t = 0)]
        t_func: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MethodArg {
    /// Breadth-first sweep of the ambient space.
    Exact,
    /// Coset-leader sweep for linear codes.
    Coset,
    /// Structural value (perfect, quasi-perfect, first-order Reed-Muller).
    Known,
    /// Dual-distance bound, quarantined, with any exact value alongside.
    Bounds,
    /// Known value if any, else exact, else coset.
    Auto,
}

impl MethodArg {
    fn as_str(self) -> &'static str {
        match self {
            MethodArg::Exact => "exact",
            MethodArg::Coset => "coset",
            MethodArg::Known => "known",
            MethodArg::Bounds => "bounds",
            MethodArg::Auto => "auto",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BoundKind {
    Perfect,
    Mds,
}

impl BoundKind {
    fn as_str(self) -> &'static str {
        match self {
            BoundKind::Perfect => "perfect",
            BoundKind::Mds => "mds",
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { code, alpha, dot } => {
            commands::analyze(code, *alpha, dot.as_deref())
        }
        Command::Feasibility { code, values, df } => {
            commands::feasibility(code, *values, *df)
        }
        Command::Covering { code, method } => commands::covering(code, method.as_str()),
        Command::Construct { function, inner, function_code, out } => {
            commands::construct(function, inner, function_code, out.as_deref())
        }
        Command::Verify { encoding, dd, df } => commands::verify(encoding, *dd, *df),
        Command::MdsPath { code, from, to } => commands::mds_path(code, from, to),
        Command::Bound { kind, q, k, d } => commands::bound(kind.as_str(), *q, *k, *d),
        Command::Simulate { encoding, t_data, t_func, trials, seed } => {
            commands::simulate(encoding, *t_data, *t_func, *trials, *seed)
        }
    }
}

/// Cap rayon's worker count when FCCFORGE_THREADS is set.
fn configure_threads() {
    if let Ok(raw) = std::env::var("FCCFORGE_THREADS") {
        if let Ok(n) = raw.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

/// Parse arguments, run one command, print its report, map the outcome
/// to an exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", report::render(&outcome.report, cli.json_indent));
            ExitCode::from(u8::from(outcome.negative))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
