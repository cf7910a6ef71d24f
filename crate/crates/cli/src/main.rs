//! `wreath-centers`: structure coefficients of `Z(ℂ[G ≀ Sₙ])`, their
//! polynomials in `n`, and pointwise checks against shifted symmetric
//! functions.

mod commands;
mod config;
mod error;
mod group_input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Context;
use config::{Format, RunConfig, CONFIG_ENV};
use error::{exit, CliError};

#[derive(Parser, Debug)]
#[command(name = "wreath-centers", version, about = "Centers of wreath-product group algebras")]
struct Cli {
    /// Built-in group (trivial, cyclic:k, sym:k, dihedral:k) or a JSON group file.
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Class-indexed family as JSON, e.g. '{"1": [2, 1]}'.
    #[arg(long, global = true)]
    lam: Option<String>,
    #[arg(long, global = true)]
    del: Option<String>,
    #[arg(long, global = true)]
    gam: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true)]
    cap_class_size: Option<u64>,
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, conjugacy classes and character table.
    GroupInfo,
    /// Every class of G ≀ Sₙ with Z_Λ and |C_Λ|.
    Classes,
    /// Structure coefficients of Z(ℂ[G ≀ Sₙ]).
    Ccoeff,
    /// n-independent coefficients of the universal algebra.
    Kcoeff,
    /// Structure coefficients as polynomials in n.
    Poly,
    /// Polynomials against direct center products.
    VerifyPoly {
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Pointwise evaluation-chain and homomorphism checks.
    VerifyIso {
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Largest evaluation point; defaults to |Δ₁| + |Δ₂| + 1.
        #[arg(long)]
        point_size: Option<usize>,
        #[arg(long, default_value_t = 200)]
        max_points: usize,
    },
    /// Members of the partial class C_{Λ;n}.
    EnumeratePartial,
}

fn build_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut c = RunConfig::default();
    if let Ok(path) = std::env::var(CONFIG_ENV) {
        if !path.is_empty() {
            c.apply(RunConfig::from_file(path.as_ref())?);
        }
    }
    if let Some(v) = &cli.group {
        c.group = v.clone();
    }
    if let Some(v) = cli.format {
        c.format = v;
    }
    if let Some(v) = cli.seed {
        c.seed = v;
    }
    if let Some(v) = cli.workers {
        c.workers = v;
    }
    if let Some(v) = cli.cap_class_size {
        c.max_class_size = v;
    }
    if let Some(v) = cli.tolerance {
        c.tolerance = v;
    }
    c.validate()?;
    Ok(c)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let config = build_config(&cli)?;
    if config.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    let (group, table) = group_input::load(&config.group)?;
    let ctx = Context { config, group, table };
    let (lam, del, gam) = (cli.lam.as_deref(), cli.del.as_deref(), cli.gam.as_deref());
    let report = match cli.command {
        Command::GroupInfo => commands::group_info(&ctx)?,
        Command::Classes => commands::classes(&ctx, cli.n)?,
        Command::Ccoeff => commands::ccoeff(&ctx, cli.n, lam, del, gam)?,
        Command::Kcoeff => commands::kcoeff(&ctx, lam, del, gam)?,
        Command::Poly => commands::poly(&ctx, lam, del, gam)?,
        Command::VerifyPoly { max_size, n_max } => commands::verify_poly(&ctx, max_size, n_max)?,
        Command::VerifyIso { max_size, point_size, max_points } => {
            commands::verify_iso(&ctx, max_size, point_size, max_points)?
        }
        Command::EnumeratePartial => commands::enumerate_partial(&ctx, cli.n, lam)?,
    };
    let text = report.render(ctx.config.format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(exit::OK as u8),
        Ok(false) => {
            eprintln!("wreath-centers: {}", CliError::VerificationFailed("one or more checks did not pass".into()));
            ExitCode::from(exit::VERIFICATION_FAILED as u8)
        }
        Err(e) => {
            eprintln!("wreath-centers: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
