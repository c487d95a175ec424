use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxwell_cli::commands::{self, ConstitutiveArgs, Emit, PlaneWaveArgs, EXIT_USAGE};
use maxwell_cli::io::{parse_list, parse_seed};
use maxwell_cli::CliError;
use maxwell_core::maxwell::Helicity;
use maxwell_core::sampling::{DEFAULT_POINTS, DEFAULT_SEED};

/// Numerical checks of the complex 3-vector matrix form of Maxwell's equations.
#[derive(Parser)]
#[command(name = "maxwell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// all, algebra, group, covariance, constitutive or esposito.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Emit the report as JSON (no timestamp).
        #[arg(long)]
        json: bool,
        /// Seed for random inputs; MAXWELL_SEED takes precedence.
        #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Append a boost to the frame of a scenario file.
    Boost {
        #[arg(long, allow_hyphen_values = true)]
        rapidity: f64,
        /// Unit axis X,Y,Z.
        #[arg(long, value_parser = parse_list::<3>, allow_hyphen_values = true)]
        axis: [f64; 3],
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Append a rotation to the frame of a scenario file.
    Rotate {
        /// Angle in radians.
        #[arg(long, allow_hyphen_values = true)]
        angle: f64,
        #[arg(long, value_parser = parse_list::<3>, allow_hyphen_values = true)]
        axis: [f64; 3],
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Circularly polarized plane wave in a uniform medium.
    Planewave {
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Wave vector KX,KY,KZ.
        #[arg(long, value_parser = parse_list::<3>, allow_hyphen_values = true)]
        k: [f64; 3],
        /// +1 or -1.
        #[arg(long, value_parser = parse_helicity, allow_hyphen_values = true, default_value = "+1")]
        helicity: Helicity,
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        /// Evaluate residuals at sampled points.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Residual of a scenario at sampled points.
    Residual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest acceptable residual.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write per-point residuals to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Constitutive coefficient blocks in a moving frame.
    Constitutive {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        mu: f64,
        /// 3x3 JSON matrix file.
        #[arg(long)]
        alpha_m: Option<PathBuf>,
        #[arg(long)]
        beta_m: Option<PathBuf>,
        /// Rapidity and unit axis B,NX,NY,NZ.
        #[arg(long, value_parser = parse_list::<4>, allow_hyphen_values = true, default_value = "0,0,0,1")]
        boost: [f64; 4],
        #[arg(long, value_enum, default_value_t = EmitArg::Json)]
        emit: EmitArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Json,
    Csv,
}

fn parse_helicity(text: &str) -> Result<Helicity, String> {
    match text.trim() {
        "+1" | "1" | "+" => Ok(Helicity::Positive),
        "-1" | "-" => Ok(Helicity::Negative),
        other => Err(format!("helicity must be +1 or -1, got {other:?}")),
    }
}

/// `MAXWELL_SEED` overrides the command-line seed.
fn effective_seed(seed: u64) -> Result<u64, CliError> {
    match std::env::var("MAXWELL_SEED") {
        Ok(v) => parse_seed(&v).map_err(|e| CliError::Usage(format!("MAXWELL_SEED: {e}"))),
        Err(_) => Ok(seed),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify { suite, json, seed } => commands::verify(&suite, effective_seed(seed)?, json, out),
        Command::Boost { rapidity, axis, input, output } => {
            commands::boost_scenario(rapidity, axis, &input, output.as_deref(), out)
        }
        Command::Rotate { angle, axis, input, output } => {
            commands::rotate_scenario(angle, axis, &input, output.as_deref(), out)
        }
        Command::Planewave { eps, mu, k, helicity, amplitude, check, points, seed } => {
            let args = PlaneWaveArgs { eps, mu, k, helicity, amplitude, check, points, seed: effective_seed(seed)? };
            commands::planewave(&args, out)
        }
        Command::Residual { input, points, seed, tol, csv } => {
            commands::residual(&input, points, effective_seed(seed)?, tol, csv.as_deref(), out)
        }
        Command::Constitutive { eps, mu, alpha_m, beta_m, boost, emit } => {
            let emit = match emit {
                EmitArg::Json => Emit::Json,
                EmitArg::Csv => Emit::Csv,
            };
            commands::constitutive(&ConstitutiveArgs { eps, mu, alpha_m, beta_m, boost, emit }, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Usage(_) = e {
                eprintln!("\nrun `maxwell --help` for usage");
            }
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
