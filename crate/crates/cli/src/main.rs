//! `equibip` command-line interface.
//!
//! Exit codes: 0 success, 1 input error, 2 infeasible, 3 verification failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equibip::formats::GraphFormat;
use equibip::Mode;

#[derive(Parser)]
#[command(
    name = "equibip",
    version,
    about = "Equitable colorings of bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct GraphInput {
    /// Graph file (edge list or DIMACS .col).
    pub graph: PathBuf,
    /// Input format; `auto` picks DIMACS when the file starts with `c` or `p`.
    #[arg(long = "input-format", default_value = "auto", value_parser = parse_graph_format)]
    pub input_format: GraphFormat,
    /// Drop duplicate edges with a warning instead of failing.
    #[arg(long)]
    pub dedup: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphOutputFormat {
    Edgelist,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with ceil(delta/2)+1 colors.
    Color {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "best-effort", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a `vertex color` file against a graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        coloring: PathBuf,
        /// Expected number of colors; defaults to the largest color + 1.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exact equitable chromatic number by brute force (small graphs only).
    Chie {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        kmax: Option<usize>,
        /// Vertex limit for the search.
        #[arg(long, default_value_t = equibip::oracle::DEFAULT_MAX_VERTICES)]
        limit: usize,
    },
    /// Degree threshold constants K0, K and c for a rational zeta > 41/2.
    Constants {
        /// e.g. `21` or `41/2+1/10`
        zeta: String,
    },
    /// Generate a random bipartite graph.
    Gen {
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        #[arg(long = "delta-cap")]
        delta_cap: usize,
        /// Edge probability as a rational, e.g. `1/20`.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphOutputFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the pipeline on generated instances and write CSV.
    Bench {
        /// Comma-separated orders, e.g. `10000,20000,40000`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "21")]
        zeta: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_graph_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color {
            input,
            mode,
            format,
            output,
        } => commands::color(&input, mode, format, output.as_deref()),
        Command::Verify { input, coloring, k } => commands::verify(&input, &coloring, k),
        Command::Chie { input, kmax, limit } => commands::chie(&input, kmax, limit),
        Command::Constants { zeta } => commands::constants(&zeta),
        Command::Gen {
            na,
            nb,
            delta_cap,
            p,
            seed,
            format,
            output,
        } => commands::gen(na, nb, delta_cap, &p, seed, format, output.as_deref()),
        Command::Bench {
            sizes,
            zeta,
            seed,
            output,
        } => commands::bench(&sizes, &zeta, seed, output.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::EXIT_INPUT)
        }
    }
}
