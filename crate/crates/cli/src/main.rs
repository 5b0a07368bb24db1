use std::path::PathBuf;

use anyhow::Result;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use thresh_cli::{cmd_bench, cmd_charpoly, cmd_det, cmd_eval, Algo, Format, Settings};
use thresh_core::{DEFAULT_AUTO_CROSSOVER, DEFAULT_ORACLE_CAP};

/// Exact characteristic polynomials and determinants of threshold graphs.
#[derive(Debug, Parser)]
#[command(name = "thresh", version)]
struct Cli {
    /// Largest n the dense oracle accepts.
    #[arg(long, global = true, env = thresh_cli::ORACLE_CAP_ENV, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    /// Vertex count from which `--algo auto` switches to the balanced product.
    #[arg(long, global = true, env = thresh_cli::CROSSOVER_ENV, default_value_t = DEFAULT_AUTO_CROSSOVER)]
    crossover: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic polynomial of the threshold graph with creation sequence BITS.
    Charpoly {
        /// Creation sequence b_1..b_(n-1) over {0,1}; empty for one vertex.
        #[arg(long, allow_hyphen_values = true)]
        bits: String,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Determinant of a weighted threshold graph matrix.
    Det {
        /// Off-diagonal values b_1..b_(n-1), comma separated.
        #[arg(long = "b", allow_hyphen_values = true)]
        b: String,
        /// Diagonal values d_1..d_n, comma separated.
        #[arg(long = "d", allow_hyphen_values = true)]
        d: String,
    },
    /// Value of the characteristic polynomial at an integer point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        bits: String,
        #[arg(long, allow_hyphen_values = true)]
        at: BigInt,
    },
    /// Time algorithms on seeded random instances and write a CSV.
    Bench {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 64)]
        min_n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algo::Quadratic, Algo::Balanced])]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let settings = Settings {
        oracle_cap: cli.oracle_cap,
        crossover: cli.crossover,
    };
    match cli.command {
        Command::Charpoly { bits, algo, format } => {
            println!("{}", cmd_charpoly(&bits, algo, format, &settings)?);
        }
        Command::Det { b, d } => println!("{}", cmd_det(&b, &d)?),
        Command::Eval { bits, at } => println!("{}", cmd_eval(&bits, &at)?),
        Command::Bench {
            max_n,
            min_n,
            algos,
            seed,
            out,
        } => {
            for r in cmd_bench(min_n, max_n, &algos, seed, &out, &settings)? {
                eprintln!("n={:<6} {:<10} {:>10.4}s  maxbits={}", r.n, r.algo, r.wall_time, r.coeff_maxbits);
            }
        }
    }
    Ok(())
}
