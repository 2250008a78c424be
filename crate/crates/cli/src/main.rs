use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scator::Tolerance;
use scator_cli::grid::GridError;
use scator_cli::{eval_to_string, parse, parse_number, run_identity_suite, sample_regions, Backend, GridSpec, Module};

#[derive(Parser)]
#[command(name = "scator", version, about = "Hyperbolic scator algebra toolkit")]
struct Cli {
    /// Relative tolerance for floating-point comparisons.
    #[arg(long, global = true, env = "SCATOR_EPS", default_value_t = Tolerance::DEFAULT_EPS)]
    eps: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression, e.g. "norm2(dual((2;1,1)))".
    Eval(EvalArgs),
    /// Classify a square grid of the (a1, a2) plane and write CSV.
    Grid(GridArgs),
    /// Run the seeded identity suite and write a JSON-lines report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Exact rational arithmetic (default).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Double-precision arithmetic.
    #[arg(long)]
    float: bool,
    expr: String,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    a0: String,
    #[arg(long, allow_hyphen_values = true)]
    min: String,
    #[arg(long, allow_hyphen_values = true)]
    max: String,
    #[arg(long, allow_hyphen_values = true)]
    step: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Classify on f64 instead of exact rationals.
    #[arg(long)]
    float: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    All,
    Core,
    Embed,
    Dual,
    Metric,
    #[value(name = "3d")]
    ThreeD,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    trials: u64,
    #[arg(long, value_enum, default_value = "all")]
    module: ModuleArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = Tolerance::with_eps(cli.eps);
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Grid(args) => grid(args),
        Command::Verify(args) => verify(args, &tol),
    }
}

fn eval(args: EvalArgs) -> ExitCode {
    let backend = if args.float { Backend::Float } else { Backend::Exact };
    let expr = match parse(&args.expr) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{}", args.expr);
            eprintln!("{}^", " ".repeat(args.expr[..e.offset].chars().count()));
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match eval_to_string(&expr, backend) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn usage(flag: &str, err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: invalid value for --{flag}: {err}");
    ExitCode::from(2)
}

fn grid(args: GridArgs) -> ExitCode {
    let mut fields = Vec::with_capacity(4);
    for (flag, text) in [
        ("a0", &args.a0),
        ("min", &args.min),
        ("max", &args.max),
        ("step", &args.step),
    ] {
        match parse_number(text) {
            Ok(n) => fields.push(n),
            Err(e) => return usage(flag, e),
        }
    }
    let [a0, min, max, step]: [_; 4] = fields.try_into().expect("four fields");
    let spec = GridSpec { a0, min, max, step };
    let backend = if args.float { Backend::Float } else { Backend::Exact };

    let result = match &args.out {
        Some(path) => match File::create(path) {
            Ok(f) => sample_regions(&spec, backend, BufWriter::new(f)),
            Err(e) => Err(e.into()),
        },
        None => sample_regions(&spec, backend, io::stdout().lock()),
    };
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(GridError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn verify(args: VerifyArgs, tol: &Tolerance) -> ExitCode {
    let modules: Vec<Module> = match args.module {
        ModuleArg::All => Module::ALL.to_vec(),
        ModuleArg::Core => vec![Module::Core],
        ModuleArg::Embed => vec![Module::Embed],
        ModuleArg::Dual => vec![Module::Dual],
        ModuleArg::Metric => vec![Module::Metric],
        ModuleArg::ThreeD => vec![Module::ThreeD],
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let summary = match run_identity_suite(&modules, args.seed, args.trials, tol, &mut out) {
        Ok(s) => s,
        Err(scator_cli::verify::VerifyError::NoTrials) => return usage("trials", "must be at least 1"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let _ = out.flush();
    eprintln!(
        "{} records, {} failed ({} on the exact backend)",
        summary.records, summary.failures, summary.exact_failures
    );
    if summary.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
