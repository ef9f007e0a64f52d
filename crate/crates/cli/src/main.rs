use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use jacobound::explicit::DEFAULT_NMAX;
use jacobound::interval::DEFAULT_PRECISION;
use jacobound::{CurveProfile, Error, FillPolicy};

mod output;
mod run;

use output::Format;
use run::{BoundKind, RunConfig};

/// Highest working precision tried before giving up on an enclosure.
const MAX_PRECISION: u32 = 4096;

#[derive(Parser)]
#[command(name = "jacobound", version, about = "Class number bounds for curves over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, ValueEnum)]
enum Fill {
    Best,
    SerreOnly,
    ZeroFill,
}

impl From<Fill> for FillPolicy {
    fn from(f: Fill) -> Self {
        match f {
            Fill::Best => FillPolicy::Best,
            Fill::SerreOnly => FillPolicy::SerreOnly,
            Fill::ZeroFill => FillPolicy::ZeroFill,
        }
    }
}

#[derive(clap::Args)]
struct Common {
    /// Largest truncation order tried
    #[arg(long, default_value_t = DEFAULT_NMAX, value_parser = clap::value_parser!(u32).range(1..))]
    nmax: u32,
    /// Working precision in bits (raised automatically when needed)
    #[arg(long = "precision-bits", default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(64..=4096))]
    precision_bits: u32,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate bounds for one curve profile
    Bounds {
        profile: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of lz,mertens,brt,ahl,lmd,weil
        #[arg(long, value_enum, value_delimiter = ',', default_value = "lz,mertens,brt,ahl,lmd,weil")]
        bounds: Vec<BoundKind>,
        #[arg(long, value_enum, default_value = "best")]
        fill: Fill,
        #[arg(long = "sig-digits", default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=10000))]
        sig_digits: u32,
        /// Also report AHL variant (1) under its literal reading (not rigorous)
        #[arg(long = "experimental-ahl")]
        experimental_ahl: bool,
    },
    /// Recompute the bundled tower tables and compare with the printed values
    Reproduce {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "best")]
        fill: Fill,
    },
    /// Zeta numerator, class number and residue from point counts N_1..N_g
    Zeta {
        profile: PathBuf,
        #[arg(long = "precision-bits", default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(64..=4096))]
        precision_bits: u32,
    },
}

enum Failure {
    Usage(String),
    Profile(Error),
    Precision(u32),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PrecisionExhausted(bits) => Failure::Precision(bits),
            e => Failure::Other(e),
        }
    }
}

fn load(path: &Path) -> Result<CurveProfile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    jacobound::profile::parse_profile(&text).map_err(Failure::Profile)
}

/// Runs `f` at `start` bits, doubling on precision failures up to the cap.
fn with_precision<T>(start: u32, mut f: impl FnMut(u32) -> jacobound::Result<T>) -> Result<T, Failure> {
    let mut prec = start;
    loop {
        match f(prec) {
            Err(Error::PrecisionExhausted(_)) if prec < MAX_PRECISION => prec = (prec * 2).min(MAX_PRECISION),
            other => return other.map_err(Failure::from),
        }
    }
}

fn execute(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Bounds { profile, common, bounds, fill, sig_digits, experimental_ahl } => {
            let profile = load(&profile)?;
            let config = RunConfig {
                nmax: common.nmax,
                bounds,
                policy: fill.into(),
                sig_digits: sig_digits as usize,
                experimental_ahl,
            };
            let rows = with_precision(common.precision_bits, |prec| run::bound_rows(&profile, &config, prec))?;
            Ok(output::render_bounds(&profile, &rows, common.format))
        }
        Command::Reproduce { common, fill } => {
            let rep = jacobound::reproduce::reproduce(common.nmax, fill.into(), common.precision_bits)?;
            Ok(output::render_reproduction(&rep, common.format))
        }
        Command::Zeta { profile, precision_bits } => {
            let profile = load(&profile)?;
            let z = run::zeta_of(&profile).map_err(Failure::Profile)?;
            let json = with_precision(precision_bits, |prec| output::zeta_json(&z, prec))?;
            Ok(json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(1)
        }
        Err(Failure::Profile(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Precision(bits)) => {
            eprintln!("error: enclosure did not stabilise below {bits} bits");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
