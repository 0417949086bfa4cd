mod commands;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grasscode::{BigUint, Grassmannian, HybridConfig, Scheme};

/// Enumerative coding of k-dimensional subspaces of F_q^n.
#[derive(Parser, Debug)]
#[command(name = "grasscode", version)]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the RREF, identifying vector and Ferrers tableaux of each
    /// subspace read from stdin.
    Canonicalize,
    /// Print the index of each subspace read from stdin.
    Encode(SchemeArgs),
    /// Print the subspace with the given index.
    Decode {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        index: String,
    },
    /// Print the subspace distance between the two subspaces on stdin.
    Distance,
    /// Print Gaussian coefficients, size profiles or box partition counts.
    Count(CountArgs),
    /// Build a greedy lexicode in the order of a scheme.
    Lexicode {
        #[command(flatten)]
        params: Params,
        /// Minimum subspace distance (even, 2..=2k).
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        order: SchemeName,
        #[arg(long)]
        threshold: Option<usize>,
        /// Stop before this index.
        #[arg(long)]
        limit: Option<String>,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<std::path::PathBuf>,
        /// Save the checkpoint every this many indices.
        #[arg(long, default_value_t = 10_000)]
        every: u64,
    },
    /// Run the exhaustive round-trip and ordering checks on small parameters.
    Selftest,
    /// Time encode and decode over a doubling grid of n with k = n/2.
    Bench {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 8)]
        start: usize,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long, default_value_t = 32)]
        samples: usize,
        /// Minimum measuring time per point, in milliseconds.
        #[arg(long, default_value_t = 50)]
        min_ms: u64,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Params {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeName {
    Ferrers,
    Extended,
    Hybrid,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub scheme: SchemeName,
    /// Minimum diagram size of the Ferrers block (hybrid only).
    #[arg(long)]
    pub threshold: Option<usize>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CountArgs {
    /// [n k]_q
    #[arg(long, num_args = 3, value_names = ["N", "K", "Q"])]
    pub gaussian: Option<Vec<u32>>,
    /// Number of diagrams of every size in a k x (n-k) box.
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    pub alpha: Option<Vec<usize>>,
    /// Partitions of m inside a k x eta box.
    #[arg(long, num_args = 3, value_names = ["M", "K", "ETA"])]
    pub pbox: Option<Vec<usize>>,
}

#[derive(Debug)]
pub enum CliError {
    /// Unparseable input.
    Malformed(String),
    Core(grasscode::Error),
    Io(std::io::Error),
}

impl From<grasscode::Error> for CliError {
    fn from(e: grasscode::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_range_error() => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Malformed(m) => f.write_str(m),
            CliError::Core(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_index(s: &str) -> CliResult<BigUint> {
    s.trim().parse().map_err(|_| {
        CliError::Malformed(format!("index {s:?} is not a non-negative decimal integer"))
    })
}

impl SchemeArgs {
    pub fn check(&self) -> CliResult<()> {
        if self.threshold.is_some() && self.scheme != SchemeName::Hybrid {
            return Err(CliError::Malformed(
                "--threshold only applies to the hybrid scheme".into(),
            ));
        }
        Ok(())
    }

    pub fn resolve(&self, g: &Grassmannian) -> CliResult<Scheme> {
        resolve_scheme(self.scheme, self.threshold, g)
    }
}

pub fn resolve_scheme(
    name: SchemeName,
    threshold: Option<usize>,
    g: &Grassmannian,
) -> CliResult<Scheme> {
    match (name, threshold) {
        (SchemeName::Ferrers, None) => Ok(Scheme::Ferrers),
        (SchemeName::Extended, None) => Ok(Scheme::Extended),
        (SchemeName::Hybrid, None) => Ok(Scheme::Hybrid(HybridConfig::default_for(g))),
        (SchemeName::Hybrid, Some(threshold)) => {
            let cfg = HybridConfig { threshold };
            g.hybrid_block(cfg)?;
            Ok(Scheme::Hybrid(cfg))
        }
        (_, Some(_)) => Err(CliError::Malformed(
            "--threshold only applies to the hybrid scheme".into(),
        )),
    }
}

fn init_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("GRASSCODE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Malformed(format!(
                "GRASSCODE_THREADS={value:?} is not a positive integer"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Malformed(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = init_threads().and_then(|()| commands::run(&cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grasscode: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
