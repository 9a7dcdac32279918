//! `jackdiag`: exact pairings, oracles and diagram evaluation from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use jackdiag_core::heisenberg::PresentationKind;
use jackdiag_core::partitions_symfunc::{Partition, SymBasis};

mod algebra;
mod commands;
mod render;

use render::{render, Format, Report};

/// Malformed input; exits with status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Debug, Parser)]
#[command(name = "jackdiag", version, about = "Exact diagrammatic pairings and their algebraic oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Hh,
    He,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BasisArg {
    P,
    S,
    H,
    E,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the standing assumptions on an algebra.
    ValidateFrobenius {
        #[arg(long)]
        algebra: String,
    },
    /// Diagrammatic pairing of two cycle-type classes.
    Pair {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        /// Log every rewrite applied.
        #[arg(long)]
        transcript: bool,
    },
    /// The same pairing from the Heisenberg algebra.
    OraclePair {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
    },
    /// Pairings of all partitions up to a size.
    GramMatrix {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Commutation relations between complete and elementary generators.
    VerifyPresentations {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Closed forms for graded symmetric and exterior powers against the generating product.
    MacdonaldDims {
        #[arg(long)]
        k: usize,
    },
    /// `(1 - q^{kn}) / (1 - q^n)` is a polynomial with value `k` at `q = 1`.
    JackLimitCheck {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Reduce a closed diagram read from a file.
    EvalDiagram {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        transcript: bool,
    },
    /// Expansions of cycle closures in clockwise circles over the field.
    CenterBasis {
        #[arg(long)]
        max_n: usize,
    },
    /// Image of a cycle-type class in symmetric functions.
    Phi {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, default_value = "field")]
        algebra: String,
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
    },
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::ValidateFrobenius { algebra } => commands::validate_frobenius(algebra),
        Command::Pair { algebra, lambda, mu, transcript } => commands::pair(algebra, lambda, mu, *transcript),
        Command::OraclePair { algebra, lambda, mu } => commands::oracle_pair(algebra, lambda, mu),
        Command::GramMatrix { algebra, max_degree } => commands::gram_matrix(algebra, *max_degree),
        Command::VerifyPresentations { algebra, kind, bound } => {
            let kind = match kind {
                Kind::Hh => PresentationKind::HH,
                Kind::He => PresentationKind::HE,
            };
            commands::verify_presentations(algebra, kind, *bound)
        }
        Command::MacdonaldDims { k } => commands::macdonald_dims(*k),
        Command::JackLimitCheck { k, bound } => commands::jack_limit_check(*k, *bound),
        Command::EvalDiagram { algebra, file, transcript } => commands::eval_diagram(algebra, file, *transcript),
        Command::CenterBasis { max_n } => commands::center_basis(*max_n),
        Command::Phi { lambda, algebra, basis } => {
            let basis = match basis {
                BasisArg::P => SymBasis::P,
                BasisArg::S => SymBasis::S,
                BasisArg::H => SymBasis::H,
                BasisArg::E => SymBasis::E,
            };
            commands::phi(algebra, lambda, basis)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(UsageError("--threads must be positive".into()).into());
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().context("starting worker pool")?;
    let report = pool.install(|| dispatch(&cli.command))?;
    if cli.format != Format::Json {
        if let Some(t) = &report.transcript {
            for line in t {
                eprintln!("{}", line);
            }
        }
    }
    let text = render(&report, cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", text),
    }
    if cli.verbose > 0 {
        eprintln!("{}", if report.ok { "all checks passed" } else { "some checks failed" });
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
