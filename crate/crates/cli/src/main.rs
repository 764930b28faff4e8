//! Batch CLI for finite-strain computations.
//!
//! Exit codes: 0 success, 1 self-check property failure, 2 input or usage
//! error, 3 row-level computation failures present in the output table.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use logstrain::{Frame, StrainFamily, VarianceCase};
use logstrain_cli::{
    cmd_curve, cmd_strain, cmd_stress, load_request, parse_family_flag, run_check, NumberFormat,
    Overrides,
};

#[derive(Parser)]
#[command(
    name = "logstrain",
    version,
    about = "Finite-strain tensors, deviators, invariants, and stress in batch"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrameArg {
    Eulerian,
    Lagrangian,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarianceArg {
    Alpha,
    Beta,
}

#[derive(Args)]
struct BatchArgs {
    /// Request file (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Output file; standard output when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    /// Strain family as NAME or NAME:m (overrides the request file)
    #[arg(long)]
    family: Option<String>,
    /// Strain frame (overrides the request file)
    #[arg(long, value_enum)]
    frame: Option<FrameArg>,
    /// Default variance case for chart entries
    #[arg(long, value_enum)]
    variance: Option<VarianceArg>,
    /// Fixed number of fractional digits; shortest round-trip when omitted
    #[arg(long)]
    digits: Option<usize>,
    /// Compute rows on worker threads (output is identical to serial)
    #[arg(long)]
    parallel: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Strain, deviator, invariants, and classification per entry
    Strain(BatchArgs),
    /// Strain table extended with Kirchhoff/Cauchy stress columns
    Stress(BatchArgs),
    /// Sample the scale function of a family over a range
    Curve {
        /// Strain family as NAME or NAME:m
        #[arg(long)]
        family: String,
        /// Sampling range MIN:MAX
        #[arg(long, default_value = "-2:4.2", allow_hyphen_values = true)]
        range: String,
        /// Number of evenly spaced samples
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        digits: Option<usize>,
    },
    /// Run the seeded property suite over every module
    Check {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| format!("cannot write to standard output: {e}"))
        }
    }
}

fn number_format(digits: Option<usize>) -> NumberFormat {
    match digits {
        Some(digits) => NumberFormat::Fixed(digits),
        None => NumberFormat::Shortest,
    }
}

fn overrides_from(args: &BatchArgs) -> Result<Overrides, String> {
    let family = match &args.family {
        Some(flag) => Some(parse_family_flag(flag)?),
        None => None,
    };
    Ok(Overrides {
        family,
        frame: args.frame.map(|f| match f {
            FrameArg::Eulerian => Frame::Eulerian,
            FrameArg::Lagrangian => Frame::Lagrangian,
        }),
        variance: args.variance.map(|v| match v {
            VarianceArg::Alpha => VarianceCase::Alpha,
            VarianceArg::Beta => VarianceCase::Beta,
        }),
    })
}

fn run_batch_command(args: &BatchArgs, stress: bool) -> Result<ExitCode, String> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {:?}: {e}", args.input))?;
    let overrides = overrides_from(args)?;
    let request = load_request(&text, &overrides).map_err(|e| e.to_string())?;
    let output = if stress {
        cmd_stress(&request, args.parallel)?
    } else {
        cmd_strain(&request, args.parallel)
    };
    emit(&args.output, &output.table.render(number_format(args.digits)))?;
    if output.failed_rows > 0 {
        eprintln!(
            "{} of {} rows failed; see the error column",
            output.failed_rows,
            request.entries.len()
        );
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("range must look like MIN:MAX, got `{text}`"))?;
    let lo: f64 = lo.parse().map_err(|_| format!("range minimum `{lo}` is not a number"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("range maximum `{hi}` is not a number"))?;
    Ok((lo, hi))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Strain(args) => run_batch_command(args, false),
        Command::Stress(args) => run_batch_command(args, true),
        Command::Curve {
            family,
            range,
            samples,
            output,
            digits,
        } => {
            let (name, m) = parse_family_flag(family)?;
            let family = StrainFamily::builtin(&name, m).map_err(|e| e.to_string())?;
            let table = cmd_curve(&family, parse_range(range)?, *samples)?;
            emit(output, &table.render(number_format(*digits)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            seed,
            trials,
            output,
        } => {
            if *trials == 0 {
                return Err("trials must be at least 1".into());
            }
            let report = run_check(*seed, *trials);
            emit(output, &report.text)?;
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
