//! Error tables, figure curves and cost measurements for the three solvers,
//! plus the CSV formats they are exchanged in.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::decomposition::{assemble_partial_sum, build_components, Decomposition};
use crate::model::{exact_u, ProblemKind};
use crate::rdtm::{build_spectra, SpectrumSequence};
use crate::series::count_muls;
use crate::{Error, Problem, Result};

pub mod reference;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Rdtm,
    Adm,
    Ldm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Rdtm, Method::Adm, Method::Ldm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Rdtm => "rdtm",
            Method::Adm => "adm",
            Method::Ldm => "ldm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rdtm" => Ok(Method::Rdtm),
            "adm" => Ok(Method::Adm),
            "ldm" => Ok(Method::Ldm),
            other => Err(Error::InvalidArgument(format!("unknown method '{other}'"))),
        }
    }
}

/// Method's K-term approximation at `(x, t)`, built about `x`.
pub fn method_value(p: &Problem, method: Method, x: f64, t: f64) -> Result<f64> {
    let v = match method {
        Method::Rdtm => build_spectra(p, x)?.partial_sum_at(t),
        Method::Adm => assemble_partial_sum(&build_components(p, x, Decomposition::Adomian)?, t),
        Method::Ldm => assemble_partial_sum(&build_components(p, x, Decomposition::Laplace)?, t),
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("partial sum"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    /// Values and absolute errors against the exact solution. Points past
    /// the tanh front are refused unless `allow_past_front`.
    Errors { allow_past_front: bool },
    /// Method values only, no exact column.
    ValuesOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorRow {
    pub x: f64,
    pub exact: Option<f64>,
    pub values: Vec<(Method, f64)>,
}

impl ErrorRow {
    pub fn value(&self, method: Method) -> Option<f64> {
        self.values
            .iter()
            .find(|(m, _)| *m == method)
            .map(|&(_, v)| v)
    }

    pub fn abs_error(&self, method: Method) -> Option<f64> {
        Some((self.value(method)? - self.exact?).abs())
    }
}

pub fn error_table(
    p: &Problem,
    methods: &[Method],
    xs: &[f64],
    t: f64,
    mode: TableMode,
) -> Result<Vec<ErrorRow>> {
    if methods.is_empty() {
        return Err(Error::InvalidArgument("no methods requested".into()));
    }
    if let TableMode::Errors {
        allow_past_front: false,
    } = mode
    {
        if let Some(front) = p.front(t) {
            if let Some(&x) = xs.iter().find(|&&x| x > front) {
                return Err(Error::PastWaveFront { x, front });
            }
        }
    }
    xs.par_iter()
        .map(|&x| {
            let values = methods
                .iter()
                .map(|&m| method_value(p, m, x, t).map(|v| (m, v)))
                .collect::<Result<Vec<_>>>()?;
            let exact = match mode {
                TableMode::Errors { .. } => Some(exact_u(p, x, t)),
                TableMode::ValuesOnly => None,
            };
            Ok(ErrorRow { x, exact, values })
        })
        .collect()
}

/// `|RDTM − exact|` along `xs` at time `t` with `terms` spectra.
pub fn figure_series(p: &Problem, t: f64, xs: &[f64], terms: usize) -> Result<Vec<(f64, f64)>> {
    if !matches!(p.kind, ProblemKind::TanhWave { .. }) {
        return Err(Error::InvalidArgument(
            "figure curves are defined for the tanh problem".into(),
        ));
    }
    let q = Problem::new(p.kind, terms, p.guard)?;
    let rows = error_table(
        &q,
        &[Method::Rdtm],
        xs,
        t,
        TableMode::Errors {
            allow_past_front: false,
        },
    )?;
    Ok(rows
        .iter()
        .map(|r| (r.x, r.abs_error(Method::Rdtm).expect("error mode")))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TimingRecord {
    pub method: Method,
    pub steps: usize,
    /// Best over `reps` runs.
    pub wall_seconds: f64,
    pub mul_count: u64,
    pub reps: usize,
}

/// Builds the method's representation to `steps` terms at `center`.
fn build_representation(p: &Problem, method: Method, steps: usize, center: f64) -> Result<()> {
    let q = Problem { terms: steps, ..*p };
    match method {
        Method::Rdtm => {
            let mut seq = SpectrumSequence::start(q, center)?;
            for _ in 0..steps {
                seq.push_next()?;
            }
        }
        Method::Adm => {
            build_components(&q, center, Decomposition::Adomian)?;
        }
        Method::Ldm => {
            build_components(&q, center, Decomposition::Laplace)?;
        }
    }
    Ok(())
}

/// Series multiplications needed to build `steps` terms at the origin.
pub fn mul_count(p: &Problem, method: Method, steps: usize) -> Result<u64> {
    let (res, n) = count_muls(|| build_representation(p, method, steps, 0.0));
    res.map(|()| n)
}

/// Best-of-`reps` wall time on the calling thread.
pub fn timing_run(p: &Problem, method: Method, steps: usize, reps: usize) -> Result<TimingRecord> {
    if reps < 3 {
        return Err(Error::InvalidArgument(format!(
            "timing needs at least 3 repetitions, got {reps}"
        )));
    }
    let mut best = f64::INFINITY;
    let mut muls = 0;
    for _ in 0..reps {
        let start = Instant::now();
        let (res, n) = count_muls(|| build_representation(p, method, steps, 0.0));
        let elapsed = start.elapsed().as_secs_f64();
        res?;
        best = best.min(elapsed);
        muls = n;
    }
    Ok(TimingRecord {
        method,
        steps,
        wall_seconds: best,
        mul_count: muls,
        reps,
    })
}

// CSV formats. Reals are written with `{:e}`, the shortest round-trip
// scientific form.

pub const ERROR_HEADER: [&str; 5] = ["x", "method", "approx", "exact", "abs_error"];
pub const FIGURE_HEADER: [&str; 2] = ["x", "abs_error"];
pub const TIMING_HEADER: [&str; 5] = ["method", "steps", "wall_seconds", "mul_count", "reps"];

pub fn fmt_real(v: f64) -> String {
    format!("{v:e}")
}

fn csv_err(e: impl fmt::Display) -> Error {
    Error::InvalidArgument(format!("csv: {e}"))
}

pub fn write_error_csv<W: Write>(rows: &[ErrorRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ERROR_HEADER).map_err(csv_err)?;
    for row in rows {
        for &(m, v) in &row.values {
            let exact = row.exact.map(fmt_real).unwrap_or_default();
            let err = row.abs_error(m).map(fmt_real).unwrap_or_default();
            w.write_record([fmt_real(row.x), m.to_string(), fmt_real(v), exact, err])
                .map_err(csv_err)?;
        }
    }
    w.flush().map_err(csv_err)
}

pub fn write_figure_csv<W: Write>(points: &[(f64, f64)], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIGURE_HEADER).map_err(csv_err)?;
    for &(x, e) in points {
        w.write_record([fmt_real(x), fmt_real(e)])
            .map_err(csv_err)?;
    }
    w.flush().map_err(csv_err)
}

pub fn write_timing_csv<W: Write>(records: &[TimingRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TIMING_HEADER).map_err(csv_err)?;
    for r in records {
        w.write_record([
            r.method.to_string(),
            r.steps.to_string(),
            fmt_real(r.wall_seconds),
            r.mul_count.to_string(),
            r.reps.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(csv_err)
}

/// One line of the error-table CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorRecord {
    pub x: f64,
    pub method: Method,
    pub approx: f64,
    pub exact: Option<f64>,
    pub abs_error: Option<f64>,
}

fn read_rows<R: Read>(input: R, header: &[&str]) -> Result<Vec<csv::StringRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let got = r.headers().map_err(csv_err)?.clone();
    if got.iter().ne(header.iter().copied()) {
        return Err(Error::InvalidArgument(format!(
            "unexpected csv header {got:?}"
        )));
    }
    r.records().map(|rec| rec.map_err(csv_err)).collect()
}

fn real(field: &str) -> Result<f64> {
    field
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("not a number: '{field}'")))
}

fn opt_real(field: &str) -> Result<Option<f64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        real(field).map(Some)
    }
}

pub fn read_error_csv<R: Read>(input: R) -> Result<Vec<ErrorRecord>> {
    read_rows(input, &ERROR_HEADER)?
        .iter()
        .map(|rec| {
            Ok(ErrorRecord {
                x: real(&rec[0])?,
                method: rec[1].parse()?,
                approx: real(&rec[2])?,
                exact: opt_real(&rec[3])?,
                abs_error: opt_real(&rec[4])?,
            })
        })
        .collect()
}

pub fn read_figure_csv<R: Read>(input: R) -> Result<Vec<(f64, f64)>> {
    read_rows(input, &FIGURE_HEADER)?
        .iter()
        .map(|rec| Ok((real(&rec[0])?, real(&rec[1])?)))
        .collect()
}

pub fn read_timing_csv<R: Read>(input: R) -> Result<Vec<TimingRecord>> {
    let int = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("not an integer: '{s}'")))
    };
    read_rows(input, &TIMING_HEADER)?
        .iter()
        .map(|rec| {
            Ok(TimingRecord {
                method: rec[0].parse()?,
                steps: int(&rec[1])? as usize,
                wall_seconds: real(&rec[2])?,
                mul_count: int(&rec[3])?,
                reps: int(&rec[4])? as usize,
            })
        })
        .collect()
}
