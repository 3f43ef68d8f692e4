//! `adomian`: generate Adomian polynomials, time the generators against each
//! other, and solve small first-order initial value problems by ADM.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use adomian_core::bench::{format_summary, run_bench, write_report, Algorithm, BenchConfig, ReportFormat};
use adomian_core::reference::oracle_1d_all;
use adomian_core::{
    adomian_power_1d, adomian_power_2d, oracle_2d, solve, Error, IvProblem, Polynomial, PowerSpec, Rational, UniPoly,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "adomian", version, about = "Adomian polynomials by iterated convolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Adomian polynomials of u^N.
    Gen(GenArgs),
    /// Time the generators and write a report.
    Bench(BenchArgs),
    /// Solve u' = a*u + c*u^N + g(x), u(0) = u0 by ADM.
    Solve(SolveArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenAlgo {
    Matrix,
    Duan1,
    Duan3,
    Oracle,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    power: u32,
    /// Number of polynomials A[0..order] (1D).
    #[arg(long)]
    order: Option<usize>,
    /// Row extent (2D).
    #[arg(long)]
    rows: Option<usize>,
    /// Column extent (2D).
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long, value_enum, default_value = "matrix")]
    algo: GenAlgo,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    dim: u8,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated generator names.
    #[arg(long, value_delimiter = ',', default_value = "matrix,duan1,duan3")]
    algos: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "3,5,10")]
    powers: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "10,30,50,100")]
    orders: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    warmup: usize,
    /// Per-run timeout in seconds.
    #[arg(long, default_value_t = 600.0)]
    timeout: f64,
    /// Report destination; only the summary is printed when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long)]
    power: u32,
    /// Forcing term, a polynomial in x such as "1 - 2*x^2".
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    g: String,
    #[arg(long, allow_hyphen_values = true)]
    u0: String,
    #[arg(long, default_value_t = 5)]
    depth: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

/// Exit status plus message for everything that is not a success.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Disagreement { .. } | Error::Timeout => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Solve(args) => cmd_solve(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    // (index, polynomial) in row-major order
    let (shape, entries): (Vec<usize>, Vec<(Vec<usize>, Polynomial)>) = if args.dim == 1 {
        if args.rows.is_some() || args.cols.is_some() {
            return Err(Failure::usage("--rows/--cols need --dim 2"));
        }
        let order = args.order.ok_or_else(|| Failure::usage("--order is required with --dim 1"))?;
        let spec = PowerSpec::new_1d(args.power, order)?;
        let polys = match args.algo {
            GenAlgo::Matrix => adomian_power_1d(spec)?.grid.into_entries(),
            GenAlgo::Duan1 => adomian_core::duan_c1(args.power, order),
            GenAlgo::Duan3 => adomian_core::duan_c3(args.power, order),
            GenAlgo::Oracle => oracle_1d_all(args.power, order),
        };
        (vec![order], polys.into_iter().enumerate().map(|(k, p)| (vec![k], p)).collect())
    } else {
        if matches!(args.algo, GenAlgo::Duan1 | GenAlgo::Duan3) {
            return Err(Failure::usage("duan1 and duan3 support --dim 1 only"));
        }
        if args.order.is_some() {
            return Err(Failure::usage("--order is for --dim 1; use --rows and --cols"));
        }
        let (Some(rows), Some(cols)) = (args.rows, args.cols) else {
            return Err(Failure::usage("--rows and --cols are required with --dim 2"));
        };
        let spec = PowerSpec::new_2d(args.power, rows, cols)?;
        let polys = match args.algo {
            GenAlgo::Matrix => adomian_power_2d(spec)?.grid.into_entries(),
            _ => (0..rows * cols).map(|i| oracle_2d(args.power, ((i / cols) as u32, (i % cols) as u32))).collect(),
        };
        (vec![rows, cols], polys.into_iter().enumerate().map(|(i, p)| (vec![i / cols, i % cols], p)).collect())
    };

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match args.format {
        OutputFormat::Text => {
            for (idx, p) in &entries {
                let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
                writeln!(out, "A[{}] = {p}", idx.join(","))?;
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "power": args.power,
                "shape": shape,
                "polynomials": entries
                    .iter()
                    .map(|(idx, p)| json!({"index": idx, "polynomial": p}))
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data serializes"))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    let algorithms = args.algos.iter().map(|a| a.trim().parse::<Algorithm>()).collect::<Result<Vec<_>, _>>()?;
    let format: ReportFormat = args.format.parse()?;
    if !(args.timeout.is_finite() && args.timeout > 0.0) {
        return Err(Failure::usage("--timeout must be a positive number of seconds"));
    }
    let cfg = BenchConfig {
        algorithms,
        powers: args.powers,
        orders: args.orders,
        repetitions: args.reps,
        timeout: Duration::from_secs_f64(args.timeout),
        warmup: args.warmup,
    };
    cfg.validate()?;
    let report = run_bench(&cfg)?;
    if let Some(path) = &args.out {
        write_report(&report, format, path)?;
    }
    print!("{}", format_summary(&report));
    if report.all_timed_out() {
        return Err(Failure { code: 3, message: "every run timed out".into() });
    }
    Ok(())
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational, Failure> {
    s.trim().parse().map_err(|e| Failure::usage(format!("--{flag}: {e}")))
}

fn cmd_solve(args: SolveArgs) -> Result<(), Failure> {
    let problem = IvProblem {
        a: parse_rational("a", &args.a)?,
        c: parse_rational("c", &args.c)?,
        power: args.power,
        g: args.g.parse::<UniPoly>().map_err(|e| Failure::usage(format!("--g: {e}")))?,
        u0: parse_rational("u0", &args.u0)?,
        depth: args.depth,
    };
    let solution = solve(&problem)?;

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match args.format {
        OutputFormat::Text => {
            for (k, u) in solution.components.iter().enumerate() {
                writeln!(out, "u[{k}] = {u}")?;
            }
            writeln!(out, "S = {}", solution.partial_sum(problem.depth)?)?;
        }
        OutputFormat::Json => {
            let doc = serde_json::to_string_pretty(&solution.to_json()).expect("plain data serializes");
            writeln!(out, "{doc}")?;
        }
    }
    out.flush()?;
    Ok(())
}
