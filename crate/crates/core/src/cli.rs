//! `fde` command line: `solve`, `table`, `figure` and `bench`.
//!
//! Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 output
//! not writable.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::harness::reference::{published_seconds, LOGISTIC_TIMINGS, TANH_TIMINGS};
use crate::harness::{
    error_table, figure_series, timing_run, write_error_csv, write_figure_csv, write_timing_csv,
    Method, TableMode,
};
use crate::model::{DEFAULT_GUARD, DEFAULT_TERMS};
use crate::{Error, Problem, ProblemKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_OUTPUT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "fde",
    version,
    about = "Series solutions of the foam drainage equation"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Method values at the given points.
    Solve(Common),
    /// Error table (tanh problem) or value table (logistic problem).
    Table(Common),
    /// RDTM absolute-error curve along x.
    Figure(Common),
    /// Wall time and multiplication counts per method and step count.
    Bench(Common),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Tanh,
    Logistic,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "tanh")]
    problem: ProblemArg,
    /// Wave speed of the tanh problem.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    /// Comma list `a,b,c` or inclusive range `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    xs: Option<String>,
    #[arg(long, default_value = "rdtm,adm,ldm")]
    methods: String,
    /// Output file, `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,
    /// Report errors for points ahead of the wave front.
    #[arg(long)]
    allow_past_front: bool,
    #[arg(long, default_value = "5,10,15,20,25")]
    steps: String,
    #[arg(long, default_value_t = 5)]
    reps: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Solve,
    Table,
    Figure,
    Bench,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Stdout,
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub problem: Problem,
    /// Unused by `bench`.
    pub t: f64,
    pub xs: Vec<f64>,
    pub methods: Vec<Method>,
    pub out: Output,
    pub allow_past_front: bool,
    pub steps: Vec<usize>,
    pub reps: usize,
}

/// Diagnostic plus the exit code it maps to (0 for `--help`/`--version`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> UsageError {
    UsageError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `start:stop:step` (inclusive within half a step) or `a,b,c`.
pub fn parse_xs(spec: &str) -> Result<Vec<f64>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("--xs: '{s}' is not a number"))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let xs = match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step == 0.0 || !step.is_finite() {
                return Err("--xs: range step must be non-zero".into());
            }
            let span = (stop - start) / step;
            if span < -0.5 {
                return Err("--xs: range step points away from stop".into());
            }
            let count = (span + 0.5).floor() as usize;
            (0..=count).map(|i| start + i as f64 * step).collect()
        }
        [_] => spec.split(',').map(num).collect::<Result<Vec<_>, _>>()?,
        _ => return Err(format!("--xs: cannot read '{spec}'")),
    };
    if xs.iter().any(|x| !x.is_finite()) {
        return Err("--xs: values must be finite".into());
    }
    Ok(xs)
}

fn parse_list<T: std::str::FromStr>(flag: &str, spec: &str) -> Result<Vec<T>, String> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| format!("{flag}: cannot read '{s}'"))
        })
        .collect()
}

pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
        message: e.render().to_string(),
    })?;
    let (command, a) = match cli.command {
        CommandArgs::Solve(a) => (Command::Solve, a),
        CommandArgs::Table(a) => (Command::Table, a),
        CommandArgs::Figure(a) => (Command::Figure, a),
        CommandArgs::Bench(a) => (Command::Bench, a),
    };

    if a.terms == 0 {
        return Err(usage("--terms: must be at least 1"));
    }
    let kind = match a.problem {
        ProblemArg::Tanh => {
            if !(a.c > 0.0 && a.c.is_finite()) {
                return Err(usage(format!(
                    "--c: wave speed must be positive, got {}",
                    a.c
                )));
            }
            ProblemKind::TanhWave { c: a.c }
        }
        ProblemArg::Logistic => ProblemKind::LogisticFront,
    };
    let problem = Problem::new(kind, a.terms, a.guard).map_err(|e| usage(e.to_string()))?;

    let methods: Vec<Method> = parse_list("--methods", &a.methods).map_err(usage)?;
    if methods.is_empty() {
        return Err(usage("--methods: need at least one method"));
    }

    let needs_grid = command != Command::Bench;
    let t = match (a.t, needs_grid) {
        (Some(t), _) if !(t.is_finite() && t >= 0.0) => {
            return Err(usage("--t: must be finite and ≥ 0"))
        }
        (Some(t), _) => t,
        (None, true) => return Err(usage("--t: required")),
        (None, false) => 0.0,
    };
    let xs = match (&a.xs, needs_grid) {
        (Some(spec), _) => parse_xs(spec).map_err(usage)?,
        (None, true) => return Err(usage("--xs: required")),
        (None, false) => Vec::new(),
    };
    if command == Command::Figure && kind == ProblemKind::LogisticFront {
        return Err(usage("--problem: figure curves need the tanh problem"));
    }

    let steps: Vec<usize> = parse_list("--steps", &a.steps).map_err(usage)?;
    if command == Command::Bench && a.reps < 3 {
        return Err(usage("--reps: need at least 3"));
    }

    let out = if a.out == "-" {
        Output::Stdout
    } else {
        Output::File(PathBuf::from(&a.out))
    };

    Ok(RunConfig {
        command,
        problem,
        t,
        xs,
        methods,
        out,
        allow_past_front: a.allow_past_front,
        steps,
        reps: a.reps,
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PastWaveFront { .. } | Error::InvalidProblem(_) | Error::InvalidArgument(_) => {
            EXIT_USAGE
        }
        _ => EXIT_NUMERICAL,
    }
}

fn render(config: &RunConfig) -> Result<Vec<u8>, Error> {
    let mut buf = Vec::new();
    let p = &config.problem;
    match config.command {
        Command::Solve => {
            let rows = error_table(
                p,
                &config.methods,
                &config.xs,
                config.t,
                TableMode::ValuesOnly,
            )?;
            write_error_csv(&rows, &mut buf)?;
        }
        Command::Table => {
            let mode = match p.kind {
                ProblemKind::TanhWave { .. } => TableMode::Errors {
                    allow_past_front: config.allow_past_front,
                },
                ProblemKind::LogisticFront => TableMode::ValuesOnly,
            };
            let rows = error_table(p, &config.methods, &config.xs, config.t, mode)?;
            write_error_csv(&rows, &mut buf)?;
        }
        Command::Figure => {
            let pts = figure_series(p, config.t, &config.xs, p.terms)?;
            write_figure_csv(&pts, &mut buf)?;
        }
        Command::Bench => {
            let published = match p.kind {
                ProblemKind::TanhWave { .. } => &TANH_TIMINGS,
                ProblemKind::LogisticFront => &LOGISTIC_TIMINGS,
            };
            let mut records = Vec::new();
            for &m in &config.methods {
                for &s in &config.steps {
                    let rec = timing_run(p, m, s, config.reps)?;
                    let context = published_seconds(published, m, s)
                        .map_or_else(|| "-".to_string(), |v| format!("{v} s"));
                    eprintln!(
                        "{:>4} steps={:<3} best={:.3e} s muls={:<6} published={context}",
                        m, s, rec.wall_seconds, rec.mul_count
                    );
                    records.push(rec);
                }
            }
            write_timing_csv(&records, &mut buf)?;
        }
    }
    Ok(buf)
}

/// Executes a validated configuration and returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let bytes = match render(config) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("fde: {e}");
            return exit_code(&e);
        }
    };
    let written = match &config.out {
        Output::Stdout => io::stdout().lock().write_all(&bytes),
        Output::File(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("fde: cannot write output: {e}");
            EXIT_OUTPUT
        }
    }
}

pub fn main_with_args<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config),
        Err(e) => {
            if e.code == EXIT_OK {
                print!("{}", e.message);
            } else {
                eprintln!("{}", e.message.trim_end());
            }
            e.code
        }
    }
}
