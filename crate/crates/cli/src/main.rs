use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Dehornoy ordering, Dehornoy floor and genus bounds for braids.
///
/// Braids are written `B<n>: <signed generator indices>`, e.g. "B3: 1 -2 1 -2".
#[derive(Debug, Parser)]
#[command(name = "braidfloor", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Seed for random sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Number of random braids (and of random band products) to sample.
    #[arg(long, default_value_t = 1000, global = true)]
    pub trials: usize,

    /// Largest strand count used when sampling.
    #[arg(long, default_value_t = 5, global = true, value_parser = clap::value_parser!(u64).range(2..))]
    pub max_strands: u64,

    /// Largest word length (and band count) used when sampling.
    #[arg(long, default_value_t = 20, global = true)]
    pub max_len: usize,

    /// Maximum number of handle reductions per operation.
    #[arg(long, default_value_t = 10_000_000, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub step_limit: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two braids in the Dehornoy order.
    Compare { a: String, b: String },
    /// Handle-reduce a braid word.
    Reduce { braid: String },
    /// Compute the Dehornoy floor.
    Floor { braid: String },
    /// Alexander polynomial of a knot closure.
    Alexander { braid: String },
    /// Genus bounds for a knot closure.
    Genus { braid: String },
    /// Check the floor inequalities for one braid.
    Verify { braid: String },
    /// Verify random braids and random positive band products.
    Sample,
    /// Certified knots with both floor inequalities instantiated.
    Catalogue,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match commands::run(&cli) {
        Ok(report) => (report.stdout, report.code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            (String::new(), e.code)
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
