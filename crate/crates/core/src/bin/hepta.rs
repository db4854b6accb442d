use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hepta::factor::{factor, factor_float};
use hepta::io::{self, BenchConfig, GenSpec, IoError, Mode, VerifyOptions};
use hepta::scalars::FloatTolerance;
use hepta::solve::{invert_structured, solve_structured, structured_determinant};
use hepta::{DenseMatrix, Kind, Rational, SolveError, Structured};

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const SINGULAR: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "hepta", version, about = "Exact determinants, solves and inverses of cyclic heptadiagonal matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Matrix input: a `hepta-band-v1` JSON file, or a dense `.csv` read with `--kind`.
#[derive(clap::Args)]
struct Input {
    file: PathBuf,
    /// How to interpret a dense CSV input.
    #[arg(long, default_value = "cyclic")]
    kind: Kind,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(clap::Args)]
struct Tolerance {
    /// Relative pivot threshold for float mode.
    #[arg(long, default_value_t = 1e-12)]
    eps_rel: f64,
    /// Absolute pivot threshold for float mode.
    #[arg(long, default_value_t = 0.0)]
    eps_abs: f64,
}

impl Tolerance {
    fn get(&self) -> FloatTolerance {
        FloatTolerance { abs: self.eps_abs, rel: self.eps_rel }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the determinant.
    Det {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        tolerance: Tolerance,
    },
    /// Solve M x = rhs; prints one component per line.
    Solve {
        #[command(flatten)]
        input: Input,
        /// One rational per line.
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Exact inverse as CSV.
    Invert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inverse of M = H P where H is the file's cyclic core.
    AntiInvert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check everything against dense elimination.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, hide = true)]
        corrupt_pivot: Option<usize>,
    },
    /// Write a reproducible random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        zero_pivots: usize,
        #[arg(long, default_value = "cyclic")]
        kind: Kind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time factor, solve and invert over a list of sizes.
    Bench {
        /// Comma-separated orders.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value = "float")]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Run exact mode above the default size cap.
        #[arg(long)]
        allow_large_exact: bool,
        #[arg(long)]
        skip_invert: bool,
        #[command(flatten)]
        tolerance: Tolerance,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure { code: INPUT, message: e.to_string() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::input(e)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = if e.is_singular() { SINGULAR } else { INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn load(input: &Input) -> Result<Structured, Failure> {
    let is_csv = input.file.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        let dense = io::read_dense_csv(&input.file)?;
        Structured::from_dense(&dense, input.kind).map_err(|e| Failure::input(format!("{}: {e}", input.file.display())))
    } else {
        Ok(io::load_band_file(&input.file)?)
    }
}

fn emit_csv(m: &DenseMatrix<Rational>, out: Option<&Path>) -> Result<(), Failure> {
    let text = io::dense_to_csv_string(m);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Det { input, mode, tolerance } => {
            let m = load(&input)?;
            match mode {
                ModeArg::Exact => println!("{}", structured_determinant(&factor(m.core()), &m)),
                ModeArg::Float => {
                    let fz = factor_float(m.core(), tolerance.get()).map_err(|e| Failure { code: SINGULAR, message: e.to_string() })?;
                    let sign = if m.kind() == Kind::Anti && (m.order() / 2) % 2 == 1 { -1.0 } else { 1.0 };
                    println!("{}", sign * fz.determinant());
                }
            }
        }
        Command::Solve { input, rhs } => {
            let m = load(&input)?;
            let rhs = io::read_rhs(&rhs)?;
            let report = solve_structured(&factor(m.core()), &m, &rhs)?;
            for x in report.solution {
                println!("{x}");
            }
        }
        Command::Invert { input, out } => {
            let m = load(&input)?;
            emit_csv(&invert_structured(&factor(m.core()), &m)?, out.as_deref())?;
        }
        Command::AntiInvert { input, out } => {
            let m = load(&input)?;
            let anti = Structured::wrap(m.core().clone(), Kind::Anti);
            emit_csv(&invert_structured(&factor(anti.core()), &anti)?, out.as_deref())?;
        }
        Command::Verify { input, corrupt_pivot } => {
            let m = load(&input)?;
            let report = io::verify(&m, VerifyOptions { corrupt_pivot });
            println!("{report}");
            if let Some(fail) = report.first_failure() {
                eprintln!("mismatch in {}: {}", fail.name, fail.detail.as_deref().unwrap_or("no detail"));
                return Ok(MISMATCH);
            }
        }
        Command::Gen { n, seed, zero_pivots, kind, out } => {
            let m = io::generate_matrix(GenSpec { n, seed, zero_pivots, kind }).map_err(Failure::input)?;
            io::save_band_file(&out, &m)?;
        }
        Command::Bench { sizes, mode, trials, seed, json, allow_large_exact, skip_invert, tolerance } => {
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Float => Mode::Float,
            };
            let config = BenchConfig {
                seed,
                tolerance: tolerance.get(),
                allow_large_exact,
                invert: !skip_invert,
                ..BenchConfig::new(sizes, mode, trials)
            };
            let report = io::bench(&config).map_err(Failure::input)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
    }
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
