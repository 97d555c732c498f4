//! The foam drainage equation in u-form, its two initial-value problems and
//! exact traveling-wave solutions.
//!
//! With `A = u²` the channel-dominated equation becomes
//!
//! ```text
//! u_t = −2 u² u_x + (u_x)² + ½ u u_xx
//! ```
//!
//! and both problems are members of the traveling-wave family
//! `u = −√c tanh(√c (x − c t))`: the logistic front is the `c = 1/4` case.

use crate::series::{logistic_series, tanh_series};
use crate::{Error, Result, Scalar, TruncatedSeries};

/// Default x-order margin on top of `2K`.
pub const DEFAULT_GUARD: usize = 4;
/// Default number of t-terms.
pub const DEFAULT_TERMS: usize = 10;
/// Default central-difference step for [`pde_residual`].
pub const DEFAULT_RESIDUAL_STEP: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProblemKind {
    /// `u(x, 0) = −√c tanh(√c x)`, a forced-drainage front of speed `c`.
    TanhWave { c: f64 },
    /// `u(x, 0) = −1/2 + 1/(1 + e^x)`.
    LogisticFront,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Problem {
    pub kind: ProblemKind,
    /// Highest t-power `K`; spectra `U_0..U_K` are built.
    pub terms: usize,
    pub guard: usize,
}

impl Problem {
    /// `c = 0` is accepted (the zero solution) and reported by
    /// [`Problem::is_degenerate`].
    pub fn tanh_wave(c: f64, terms: usize) -> Result<Self> {
        Self::new(ProblemKind::TanhWave { c }, terms, DEFAULT_GUARD)
    }

    pub fn logistic(terms: usize) -> Result<Self> {
        Self::new(ProblemKind::LogisticFront, terms, DEFAULT_GUARD)
    }

    pub fn new(kind: ProblemKind, terms: usize, guard: usize) -> Result<Self> {
        let p = Self { kind, terms, guard };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms == 0 {
            return Err(Error::InvalidProblem(
                "term count K must be at least 1".into(),
            ));
        }
        if let ProblemKind::TanhWave { c } = self.kind {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidProblem(format!(
                    "wave speed c must be ≥ 0, got {c}"
                )));
            }
        }
        Ok(())
    }

    pub fn with_terms(self, terms: usize) -> Self {
        Self { terms, ..self }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.kind, ProblemKind::TanhWave { c } if c == 0.0)
    }

    /// x-order of `U_0`: each recurrence step spends up to two derivatives.
    pub fn series_order(&self) -> usize {
        2 * self.terms + self.guard
    }

    /// Speed of the traveling wave solving this problem.
    pub fn wave_speed(&self) -> f64 {
        match self.kind {
            ProblemKind::TanhWave { c } => c,
            ProblemKind::LogisticFront => 0.25,
        }
    }

    /// Position of the front `x = c t` past which the piecewise tanh solution
    /// is zero. `None` for the logistic problem.
    pub fn front<T: Scalar>(&self, t: T) -> Option<T> {
        match self.kind {
            ProblemKind::TanhWave { c } => Some(T::lit(c) * t),
            ProblemKind::LogisticFront => None,
        }
    }
}

/// `U_0` expanded about `center` to x-order `order`.
pub fn initial_condition<T: Scalar>(
    p: &Problem,
    center: T,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    match p.kind {
        ProblemKind::TanhWave { c } => {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidProblem(format!(
                    "wave speed c must be ≥ 0, got {c}"
                )));
            }
            let root = T::lit(c).sqrt();
            tanh_series(center, root, order)?.scale(-root)
        }
        ProblemKind::LogisticFront => {
            let shift = TruncatedSeries::constant(T::lit(-0.5), center, order)?;
            logistic_series(center, order)?.add(&shift)
        }
    }
}

/// Right-hand side of the spectrum recurrence before division by `k + 1`:
///
/// ```text
/// −2 Σ_r Σ_s U_r U_s U'_{k−r−s} + Σ_r U'_r U'_{k−r} + ½ Σ_r U_r U''_{k−r}
/// ```
///
/// The cubic term is evaluated as `Σ_m (U·U)_m U'_{k−m}`.
pub fn convolved_nonlinearity<T: Scalar>(
    seq: &[TruncatedSeries<T>],
    k: usize,
) -> Result<TruncatedSeries<T>> {
    let us = spectra_window(seq, k)?;
    let squares = (0..k)
        .map(|m| square_convolution(us, m))
        .collect::<Result<Vec<_>>>()?;
    nonlinearity_from_squares(us, &squares, &square_convolution(us, k)?, k)
}

fn spectra_window<T: Scalar>(
    seq: &[TruncatedSeries<T>],
    k: usize,
) -> Result<&[TruncatedSeries<T>]> {
    let us = seq.get(..=k).ok_or_else(|| {
        Error::InvalidArgument(format!("need {} spectra, have {}", k + 1, seq.len()))
    })?;
    let valid = us
        .iter()
        .map(TruncatedSeries::valid_order)
        .min()
        .unwrap_or(0);
    if valid < 2 {
        return Err(Error::SpectrumBudget {
            step: k,
            valid_order: valid,
        });
    }
    Ok(us)
}

/// `(U·U)_m = Σ_r U_r U_{m−r}`.
pub(crate) fn square_convolution<T: Scalar>(
    us: &[TruncatedSeries<T>],
    m: usize,
) -> Result<TruncatedSeries<T>> {
    let mut acc = TruncatedSeries::zero(us[0].center(), us[0].order());
    for r in 0..=m {
        acc = acc.add(&us[r].cauchy_mul(&us[m - r])?)?;
    }
    Ok(acc)
}

/// The recurrence right-hand side given `(U·U)_0..(U·U)_{k−1}` in `squares`
/// and `(U·U)_k` in `newest`.
pub(crate) fn nonlinearity_from_squares<T: Scalar>(
    seq: &[TruncatedSeries<T>],
    squares: &[TruncatedSeries<T>],
    newest: &TruncatedSeries<T>,
    k: usize,
) -> Result<TruncatedSeries<T>> {
    let us = spectra_window(seq, k)?;
    let d1 = us
        .iter()
        .map(TruncatedSeries::differentiate)
        .collect::<Result<Vec<_>>>()?;
    let d2 = d1
        .iter()
        .map(TruncatedSeries::differentiate)
        .collect::<Result<Vec<_>>>()?;

    let center = us[0].center();
    let order = d2.iter().map(TruncatedSeries::order).min().unwrap_or(0);
    let mut cubic = TruncatedSeries::zero(center, order);
    let mut grad = TruncatedSeries::zero(center, order);
    let mut curv = TruncatedSeries::zero(center, order);
    for m in 0..=k {
        let square = if m == k { newest } else { &squares[m] };
        cubic = cubic.add(&square.cauchy_mul(&d1[k - m])?)?;
        grad = grad.add(&d1[m].cauchy_mul(&d1[k - m])?)?;
        curv = curv.add(&us[m].cauchy_mul(&d2[k - m])?)?;
    }
    cubic
        .scale(T::lit(-2.0))?
        .add(&grad)?
        .add(&curv.scale(T::lit(0.5))?)
}

/// Smooth traveling wave through the initial data, ignoring the front.
///
/// For the logistic problem this is `−1/2 + 1/(1 + e^{x − t/4})`.
pub fn wave_u<T: Scalar>(p: &Problem, x: T, t: T) -> T {
    match p.kind {
        ProblemKind::TanhWave { c } => {
            let c = T::lit(c);
            let root = c.sqrt();
            -root * (root * (x - c * t)).tanh()
        }
        ProblemKind::LogisticFront => {
            let one = T::one();
            T::lit(-0.5) + one / (one + (x - t / T::lit(4.0)).exp())
        }
    }
}

/// Exact solution in u-form. For the tanh problem this is the piecewise
/// forced-drainage profile, zero ahead of the front `x > c t`.
pub fn exact_u<T: Scalar>(p: &Problem, x: T, t: T) -> T {
    match p.front(t) {
        Some(front) if x > front => T::zero(),
        _ => wave_u(p, x, t),
    }
}

/// Liquid cross-section `A = c tanh²(√c (x − c t))` behind the front, zero
/// ahead of it.
pub fn exact_a<T: Scalar>(x: T, t: T, c: T) -> T {
    if x > c * t {
        return T::zero();
    }
    let th = (c.sqrt() * (x - c * t)).tanh();
    c * th * th
}

/// Central-difference estimate of `u_t + 2u²u_x − (u_x)² − ½ u u_xx` at
/// `(x, t)` with step `h` in both variables.
pub fn pde_residual<T: Scalar>(u: impl Fn(T, T) -> T, x: T, t: T, h: T) -> Result<T> {
    if h.is_nan() || h <= T::zero() {
        return Err(Error::InvalidArgument(
            "residual step must be positive".into(),
        ));
    }
    let two = T::lit(2.0);
    let u0 = u(x, t);
    let (xp, xm) = (u(x + h, t), u(x - h, t));
    let (tp, tm) = (u(x, t + h), u(x, t - h));
    if ![u0, xp, xm, tp, tm].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("residual stencil"));
    }
    let ut = (tp - tm) / (two * h);
    let ux = (xp - xm) / (two * h);
    let uxx = (xp - two * u0 + xm) / (h * h);
    Ok(ut + two * u0 * u0 * ux - ux * ux - T::lit(0.5) * u0 * uxx)
}
