use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod bench;
mod report;
mod solve;
mod verify;

/// Exact maximum s-bundle solver.
#[derive(Parser, Debug)]
#[command(name = "sbundle", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one instance to optimality (or until the time limit).
    Solve(SolveArgs),
    /// Check whether a vertex set induces an s-bundle.
    Verify(VerifyArgs),
    /// Run every instance in a directory over a range of s and variants.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LbArg {
    Randwalk,
    Greedy,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Pub,
    Color,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// DIMACS clique file or edge list.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    s: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 3600.0)]
    time_limit: f64,
    #[arg(long, value_enum, default_value_t = LbArg::Randwalk)]
    lb: LbArg,
    #[arg(long, value_enum, default_value_t = BoundArg::Pub)]
    bound: BoundArg,
    #[arg(long)]
    no_preprocess: bool,
    /// Build bound partitions by plain sequential insertion.
    #[arg(long)]
    no_expand: bool,
    /// Also write the result record as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Print only the solution size.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    s: u64,
    /// Comma-separated vertex labels as they appear in the graph file.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    vertices: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Directory whose regular files are read as instances.
    #[arg(long)]
    dir: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,8,10,15")]
    s_list: Vec<usize>,
    #[arg(long, default_value_t = 3600.0)]
    time_limit: f64,
    #[arg(long, value_delimiter = ',', default_value = "default")]
    variants: Vec<String>,
    /// Concurrent solver runs; each run is single-threaded.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Result file; `.json` selects JSON, anything else CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub const EXIT_INFEASIBLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_TIMEOUT: u8 = 124;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SBUNDLE_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => solve::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
