//! Truncated one-variable Taylor series about a fixed center.
//!
//! A [`TruncatedSeries`] stores `a_0..a_M` for `Σ a_k (x − center)^k` plus a
//! `valid_order ≤ M`: the highest power whose coefficient is still exact.
//! Differentiation consumes one order of validity; binary operations keep the
//! smaller of the two.

use std::cell::Cell;

use crate::{Error, Result, Scalar};

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Runs `f` and returns its result together with the number of
/// [`TruncatedSeries::cauchy_mul`] calls it made on this thread.
pub fn count_muls<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = MUL_COUNT.with(Cell::get);
    let out = f();
    let after = MUL_COUNT.with(Cell::get);
    (out, after - before)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    center: T,
    coeffs: Vec<T>,
    valid_order: usize,
}

fn check_finite<T: Scalar>(coeffs: &[T], what: &'static str) -> Result<()> {
    if coeffs.iter().all(|c| c.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn new(center: T, coeffs: Vec<T>, valid_order: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "series needs at least one coefficient".into(),
            ));
        }
        if valid_order >= coeffs.len() {
            return Err(Error::InvalidArgument(format!(
                "valid order {valid_order} exceeds series order {}",
                coeffs.len() - 1
            )));
        }
        if !center.is_finite() {
            return Err(Error::NonFinite("series center"));
        }
        check_finite(&coeffs, "series coefficients")?;
        Ok(Self {
            center,
            coeffs,
            valid_order,
        })
    }

    /// Series with every coefficient valid.
    pub fn from_coeffs(center: T, coeffs: Vec<T>) -> Result<Self> {
        let valid = coeffs.len().saturating_sub(1);
        Self::new(center, coeffs, valid)
    }

    pub fn constant(value: T, center: T, order: usize) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite("constant"));
        }
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = value;
        Self::new(center, coeffs, order)
    }

    pub fn zero(center: T, order: usize) -> Self {
        Self {
            center,
            coeffs: vec![T::zero(); order + 1],
            valid_order: order,
        }
    }

    pub fn center(&self) -> T {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn valid_order(&self) -> usize {
        self.valid_order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Trusted coefficients `a_0..=a_V`.
    pub fn valid_coeffs(&self) -> &[T] {
        &self.coeffs[..=self.valid_order]
    }

    /// Value at the center, `a_0`.
    pub fn value(&self) -> T {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.valid_coeffs().iter().all(|c| c.is_zero())
    }

    fn same_center(&self, other: &Self) -> Result<()> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(Error::CenterMismatch {
                left: self.center.to_f64_lossy(),
                right: other.center.to_f64_lossy(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(T, T) -> T) -> Result<Self> {
        self.same_center(other)?;
        let order = self.order().min(other.order());
        let coeffs: Vec<T> = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(&a, &b)| op(a, b))
            .collect();
        check_finite(&coeffs, "series sum")?;
        Ok(Self {
            center: self.center,
            coeffs,
            valid_order: self.valid_order.min(other.valid_order),
        })
    }

    pub fn scale(&self, alpha: T) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite("scale factor"));
        }
        let coeffs: Vec<T> = self.coeffs.iter().map(|&a| a * alpha).collect();
        check_finite(&coeffs, "scaled series")?;
        Ok(Self {
            center: self.center,
            coeffs,
            valid_order: self.valid_order,
        })
    }

    /// Truncated product. Coefficients above the resulting valid order are
    /// left at zero.
    pub fn cauchy_mul(&self, other: &Self) -> Result<Self> {
        self.same_center(other)?;
        MUL_COUNT.with(|c| c.set(c.get() + 1));
        let order = self.order().min(other.order());
        let valid = self.valid_order.min(other.valid_order);
        let mut coeffs = vec![T::zero(); order + 1];
        for (k, out) in coeffs.iter_mut().enumerate().take(valid + 1) {
            let mut acc = T::zero();
            for r in 0..=k {
                acc = acc + self.coeffs[r] * other.coeffs[k - r];
            }
            *out = acc;
        }
        check_finite(&coeffs, "series product")?;
        Ok(Self {
            center: self.center,
            coeffs,
            valid_order: valid,
        })
    }

    pub fn differentiate(&self) -> Result<Self> {
        if self.valid_order == 0 {
            return Err(Error::DerivativeExhausted);
        }
        let coeffs: Vec<T> = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, &a)| T::from_count(k + 1) * a)
            .collect();
        check_finite(&coeffs, "derivative")?;
        Ok(Self {
            center: self.center,
            coeffs,
            valid_order: self.valid_order - 1,
        })
    }

    /// Horner evaluation of `Σ_{k ≤ V} a_k (x − center)^k`. Truncation error
    /// away from the center is the caller's business.
    pub fn eval(&self, x: T) -> T {
        let h = x - self.center;
        self.valid_coeffs()
            .iter()
            .rev()
            .fold(T::zero(), |acc, &a| acc * h + a)
    }

    /// Largest coefficient difference over the common valid range.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let n = self.valid_order.min(other.valid_order);
        (0..=n)
            .map(|k| (self.coeffs[k] - other.coeffs[k]).abs())
            .fold(T::zero(), T::max)
    }
}

/// Series of `tanh(s·x)` about `center`.
///
/// With `y = tanh(s x)` and `w = 1 − y²` we have `y' = s w`, so
/// `(k+1) a_{k+1} = s w_k` where `w_k = −(y·y)_k` for `k ≥ 1`. `w_0` is
/// taken as `sech²(s·center)` directly; `1 − tanh²` loses every digit once
/// `|s·center|` exceeds about 18.
pub fn tanh_series<T: Scalar>(center: T, scale: T, order: usize) -> Result<TruncatedSeries<T>> {
    if !scale.is_finite() {
        return Err(Error::NonFinite("tanh scale"));
    }
    let z = scale * center;
    let mut a = vec![T::zero(); order + 1];
    a[0] = z.tanh();
    let sech = z.cosh().recip();
    for k in 0..order {
        let w = if k == 0 {
            sech * sech
        } else {
            -self_convolution(&a, k)
        };
        a[k + 1] = scale * w / T::from_count(k + 1);
    }
    TruncatedSeries::new(center, a, order)
}

/// Series of the logistic function `1/(1 + e^x)` about `center`.
///
/// `y' = y² − y`, so `(k+1) a_{k+1} = (y·y)_k − a_k`. The first step uses
/// `−y(1 − y)` with `1 − y = 1/(1 + e^{−x})` evaluated directly.
pub fn logistic_series<T: Scalar>(center: T, order: usize) -> Result<TruncatedSeries<T>> {
    let one = T::one();
    let mut a = vec![T::zero(); order + 1];
    a[0] = one / (one + center.exp());
    let complement = one / (one + (-center).exp());
    for k in 0..order {
        let rhs = if k == 0 {
            -a[0] * complement
        } else {
            self_convolution(&a, k) - a[k]
        };
        a[k + 1] = rhs / T::from_count(k + 1);
    }
    TruncatedSeries::new(center, a, order)
}

fn self_convolution<T: Scalar>(a: &[T], k: usize) -> T {
    (0..=k).fold(T::zero(), |acc, r| acc + a[r] * a[k - r])
}

/// Transform of `x^m t^n` at t-index `k`: the series of `x^m` about
/// `center` when `k == n`, zero otherwise.
pub fn monomial_spectrum<T: Scalar>(
    m: usize,
    n: usize,
    k: usize,
    center: T,
    order: usize,
) -> TruncatedSeries<T> {
    let mut out = TruncatedSeries::zero(center, order);
    if k != n {
        return out;
    }
    // x^m = (center + h)^m = Σ_j C(m, j) center^{m−j} h^j
    let mut binom = T::one();
    for j in 0..=m.min(order) {
        out.coeffs[j] = binom * center.powi((m - j) as i32);
        binom = binom * T::from_count(m - j) / T::from_count(j + 1);
    }
    out
}
