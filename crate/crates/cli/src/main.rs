use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccsec_core::golden::Golden;

mod commands;
mod render;

#[derive(Parser, Debug)]
#[command(name = "ccsec", version, about = "Invariants of secant varieties of rational normal curves")]
struct Cli {
    /// Worker threads (0 picks a default).
    #[arg(long, env = "CCSEC_THREADS", default_value_t = 0, global = true, hide_env_values = true)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Csm,
    Degrees,
    Qpoly,
    Dyck,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one of the reference tables.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Last `r` for `csm` and `degrees`.
        #[arg(long, default_value_t = 7)]
        rmax: usize,
        /// Last index for `qpoly` and `dyck`.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Invariants of Sec_k of the rational normal curve in P^n.
    Secant(SecantArgs),
    /// Hilbert series of Sec_k of the rational normal curve in P^n.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the column-by-column algorithm.
    Algorithm {
        #[arg(long)]
        rmax: usize,
        #[arg(long)]
        emit_polys: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every consistency suite.
    Verify {
        #[arg(long, default_value_t = 12)]
        rmax: usize,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        /// Read reference tables from this directory instead of the built-in copy.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct SecantArgs {
    /// Shorthand for the hypersurface case n = 2r, k = r.
    #[arg(long, conflicts_with_all = ["n", "k"])]
    r: Option<usize>,
    #[arg(long, requires = "k")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Failure of a command, carrying its exit code.
pub enum Failure {
    Verification(String),
    Usage(String),
}

fn run(cli: Cli) -> Result<String, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    match cli.command {
        Command::Table { kind, rmax, nmax, format } => commands::table(kind, rmax, nmax, format),
        Command::Secant(a) => match (a.r, a.n, a.k) {
            (Some(r), None, None) => commands::secant_r(r, a.format),
            (None, Some(n), Some(k)) => commands::secant_nk(n, k, a.format),
            _ => Err(Failure::Usage("secant needs either --r or both --n and --k".into())),
        },
        Command::Hilbert { n, k, format } => commands::hilbert(n, k, format),
        Command::Algorithm { rmax, emit_polys, format } => commands::algorithm(rmax, emit_polys, format),
        Command::Verify { rmax, nmax, data, format } => {
            let loaded;
            let golden = match data {
                Some(dir) => {
                    loaded = Golden::from_dir(&dir).map_err(|e| Failure::Usage(e.to_string()))?;
                    &loaded
                }
                None => Golden::embedded(),
            };
            commands::verify(rmax, nmax, golden, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
