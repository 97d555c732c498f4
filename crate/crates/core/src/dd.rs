//! Double-double reals: an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`,
//! giving about 106 significand bits on top of binary64 hardware.
//!
//! Arithmetic uses the error-free transformations two-sum and two-product
//! (the latter through a fused multiply-add). Elementary functions refine a
//! binary64 seed or reduce the argument and sum a Taylor series, so they are
//! accurate to a few units in the last double-double place over the ranges
//! this crate evaluates them on.

use std::fmt;
use std::num::FpCategory;
use std::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign,
};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    pub const fn new(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }

    const fn raw(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Exact sum `a + b` of two doubles.
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self::finish(hi, lo)
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    fn finish(hi: f64, lo: f64) -> Self {
        if hi.is_finite() {
            let (hi, lo) = quick_two_sum(hi, lo);
            Self { hi, lo }
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    /// Multiplication by `2^n`, exact barring overflow and underflow.
    fn ldexp(self, n: i32) -> Self {
        let half = n / 2;
        let (a, b) = (2f64.powi(half), 2f64.powi(n - half));
        Self::raw(self.hi * a * b, self.lo * a * b)
    }

    fn square(self) -> Self {
        self * self
    }

    /// `Σ_{i ≥ 1} x^i / i!` for small `|x|`.
    fn expm1_taylor(self) -> Self {
        let mut term = self;
        let mut sum = self;
        for i in 2..60 {
            term = term * self / Self::new(i as f64);
            sum += term;
            if term.hi.abs() <= 1e-36 * sum.hi.abs() {
                break;
            }
        }
        sum
    }

    /// `sin r` and `cos r` for `|r| ≤ π/4`.
    fn sin_cos_taylor(r: Self) -> (Self, Self) {
        let r2 = r.square();
        let mut term = r;
        let mut sin = r;
        for i in (2..60).step_by(2) {
            term = -term * r2 / Self::new((i * (i + 1)) as f64);
            sin += term;
            if term.hi.abs() <= 1e-36 {
                break;
            }
        }
        let mut term = Self::ONE;
        let mut cos = Self::ONE;
        for i in (1..60).step_by(2) {
            term = -term * r2 / Self::new((i * (i + 1)) as f64);
            cos += term;
            if term.hi.abs() <= 1e-36 {
                break;
            }
        }
        (sin, cos)
    }
}

impl From<f64> for DoubleDouble {
    fn from(v: f64) -> Self {
        Self::new(v)
    }
}

impl From<DoubleDouble> for f64 {
    fn from(v: DoubleDouble) -> Self {
        v.hi + v.lo
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        if !s.is_finite() {
            return Self::raw(s, 0.0);
        }
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::finish(s, e + f)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        if !p.is_finite() {
            return Self::raw(p, 0.0);
        }
        Self::finish(p, e + (self.hi * rhs.lo + self.lo * rhs.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        if !q1.is_finite() || q1 == 0.0 {
            return Self::raw(q1, 0.0);
        }
        let r = self - rhs * Self::new(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Self::new(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self::raw(hi, lo) + Self::new(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        self - rhs * (self / rhs).trunc()
    }
}

macro_rules! assign_ops {
    ($($tr:ident $f:ident $op:tt),*) => {$(
        impl $tr for DoubleDouble {
            fn $f(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }
    )*};
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl Zero for DoubleDouble {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        Self::ONE
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;

    /// Parses through `f64`, so decimal input carries binary64 precision.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Self::new)
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        let v = t.hi as i128 + t.lo as i128;
        i64::try_from(v).ok().filter(|_| t.hi.is_finite())
    }

    fn to_u64(&self) -> Option<u64> {
        let t = self.trunc();
        let v = t.hi as i128 + t.lo as i128;
        u64::try_from(v).ok().filter(|_| t.hi.is_finite())
    }

    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::from_sum(hi, lo))
    }

    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::from_sum(hi, lo))
    }

    fn from_f64(n: f64) -> Option<Self> {
        Some(Self::new(n))
    }

    fn from_f32(n: f32) -> Option<Self> {
        Some(Self::new(n as f64))
    }
}

impl NumCast for DoubleDouble {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        match n.to_i64() {
            Some(i) if n.to_f64() == Some(i as f64) => Self::from_i64(i),
            _ => n.to_f64().map(Self::new),
        }
    }
}

macro_rules! consts {
    ($($name:ident: $lo:expr,)*) => {
        impl FloatConst for DoubleDouble {
            $(fn $name() -> Self { Self::raw(std::f64::consts::$name, $lo) })*
        }
    };
}

consts! {
    E: 1.4456468917292502e-16,
    PI: 1.2246467991473532e-16,
    LN_2: 2.3190468138462996e-17,
    LN_10: -2.1707562233822494e-16,
    LOG2_E: 2.0355273740931033e-17,
    LOG10_E: 1.098319650216765e-17,
    FRAC_1_PI: -1.9678676675182486e-17,
    FRAC_2_PI: -3.935735335036497e-17,
    FRAC_2_SQRT_PI: 1.533545961316588e-17,
    FRAC_1_SQRT_2: -4.833646656726457e-17,
    FRAC_PI_2: 6.123233995736766e-17,
    FRAC_PI_3: -1.072081766451091e-16,
    FRAC_PI_4: 3.061616997868383e-17,
    FRAC_PI_6: -5.360408832255455e-17,
    FRAC_PI_8: 1.5308084989341915e-17,
    SQRT_2: -9.667293313452913e-17,
    TAU: 2.4492935982947064e-16,
    LOG10_2: -2.8037281277851704e-18,
    LOG2_10: 1.661617516973592e-16,
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        Self::raw(f64::NAN, 0.0)
    }
    fn infinity() -> Self {
        Self::raw(f64::INFINITY, 0.0)
    }
    fn neg_infinity() -> Self {
        Self::raw(f64::NEG_INFINITY, 0.0)
    }
    fn neg_zero() -> Self {
        Self::raw(-0.0, 0.0)
    }
    fn min_value() -> Self {
        Self::raw(f64::MIN, 0.0)
    }
    fn min_positive_value() -> Self {
        Self::raw(f64::MIN_POSITIVE, 0.0)
    }
    /// `2^-104`.
    fn epsilon() -> Self {
        Self::raw(4.930380657631324e-32, 0.0)
    }
    fn max_value() -> Self {
        Self::raw(f64::MAX, 0.0)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }

    fn floor(self) -> Self {
        let hi = self.hi.floor();
        if hi == self.hi {
            Self::finish(hi, self.lo.floor())
        } else {
            Self::raw(hi, 0.0)
        }
    }
    fn ceil(self) -> Self {
        -(-self).floor()
    }
    fn round(self) -> Self {
        if self.hi < 0.0 {
            -(-self).round()
        } else {
            (self + Self::new(0.5)).floor()
        }
    }
    fn trunc(self) -> Self {
        if self.hi < 0.0 {
            self.ceil()
        } else {
            self.floor()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        Self::new(self.hi.signum())
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Self::ONE / self
    }
    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
    fn powf(self, n: Self) -> Self {
        if n.is_zero() {
            return Self::ONE;
        }
        if n == n.trunc() && n.hi.abs() < i32::MAX as f64 {
            return self.powi(n.hi as i32);
        }
        (n * self.ln()).exp()
    }
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 || !self.hi.is_finite() {
            return Self::new(self.hi.sqrt());
        }
        let x = self.hi.sqrt().recip();
        let y = Self::new(self.hi * x);
        y + Self::new((self - y.square()).hi * x * 0.5)
    }
    fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Self::infinity();
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        let n = (self.hi / std::f64::consts::LN_2).round();
        let r = (self - Self::LN_2() * Self::new(n)).ldexp(-10);
        // e^{2r} − 1 = m (m + 2) keeps the small part exact while squaring.
        let mut m = r.expm1_taylor();
        for _ in 0..10 {
            m = m * (m + Self::new(2.0));
        }
        (m + Self::ONE).ldexp(n as i32)
    }
    fn exp2(self) -> Self {
        (self * Self::LN_2()).exp()
    }
    fn ln(self) -> Self {
        if self.hi <= 0.0 || !self.hi.is_finite() {
            return Self::new(self.hi.ln());
        }
        let y = Self::new(self.hi.ln());
        y + self * (-y).exp() - Self::ONE
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() * Self::LOG2_E()
    }
    fn log10(self) -> Self {
        self.ln() * Self::LOG10_E()
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Self::ZERO
        }
    }
    fn cbrt(self) -> Self {
        if self.hi == 0.0 || !self.hi.is_finite() {
            return self;
        }
        let y = Self::new(self.hi.cbrt());
        y - (y.powi(3) - self) / (Self::new(3.0) * y.square())
    }
    fn hypot(self, other: Self) -> Self {
        (self.square() + other.square()).sqrt()
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }
    fn asin(self) -> Self {
        self.atan2((Self::ONE - self.square()).sqrt())
    }
    fn acos(self) -> Self {
        (Self::ONE - self.square()).sqrt().atan2(self)
    }
    fn atan(self) -> Self {
        self.atan2(Self::ONE)
    }
    fn atan2(self, other: Self) -> Self {
        let theta = Self::new(self.hi.atan2(other.hi));
        let r = self.hypot(other);
        if r.is_zero() || !r.is_finite() {
            return theta;
        }
        // One Newton step: y cos θ − x sin θ = r sin(θ* − θ).
        let (s, c) = theta.sin_cos();
        theta + (self * c - other * s) / r
    }
    fn sin_cos(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::nan(), Self::nan());
        }
        let k = (self.hi / std::f64::consts::FRAC_PI_2).round();
        let r = self - Self::FRAC_PI_2() * Self::new(k);
        let (s, c) = Self::sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.5 {
            self.expm1_taylor()
        } else {
            self.exp() - Self::ONE
        }
    }
    fn ln_1p(self) -> Self {
        if self.hi <= -1.0 || !self.hi.is_finite() {
            return Self::new(self.hi.ln_1p());
        }
        // Newton on e^y = 1 + x: y + x e^{−y} + (e^{−y} − 1).
        let y = Self::new(self.hi.ln_1p());
        y + self * (-y).exp() + (-y).exp_m1()
    }
    fn sinh(self) -> Self {
        let a = self.abs();
        let m = a.exp_m1();
        let s = m * (m + Self::new(2.0)) / (Self::new(2.0) * (m + Self::ONE));
        if self.hi < 0.0 {
            -s
        } else {
            s
        }
    }
    fn cosh(self) -> Self {
        let e = self.abs().exp();
        (e + e.recip()) * Self::new(0.5)
    }
    fn tanh(self) -> Self {
        let a = self.abs();
        let t = if a.hi > 40.0 {
            Self::ONE
        } else {
            let m = (a * Self::new(2.0)).exp_m1();
            m / (m + Self::new(2.0))
        };
        if self.hi < 0.0 {
            -t
        } else {
            t
        }
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let s = (a + (a.square() + Self::ONE).sqrt()).ln();
        if self.hi < 0.0 {
            -s
        } else {
            s
        }
    }
    fn acosh(self) -> Self {
        (self + (self.square() - Self::ONE).sqrt()).ln()
    }
    fn atanh(self) -> Self {
        ((Self::ONE + self) / (Self::ONE - self)).ln() * Self::new(0.5)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
}

impl fmt::Display for DoubleDouble {
    /// Scientific notation with 32 significant digits unless a precision is
    /// given.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.hi.is_finite() || self.hi == 0.0 {
            return write!(f, "{}", self.hi);
        }
        let digits = f.precision().map_or(32, |p| p + 1).min(34);
        let mut exp10 = self.hi.abs().log10().floor() as i32;
        let mut y = self.abs() / Self::new(10.0).powi(exp10);
        if y.hi >= 10.0 {
            y /= Self::new(10.0);
            exp10 += 1;
        } else if y.hi < 1.0 {
            y *= Self::new(10.0);
            exp10 -= 1;
        }
        let mut out: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = y.hi.floor().clamp(0.0, 9.0);
            out.push(d as u8);
            y = (y - Self::new(d)) * Self::new(10.0);
        }
        // Round on the guard digit, carrying leftwards.
        let guard = out.pop().unwrap_or(0);
        if guard >= 5 {
            let mut i = out.len();
            loop {
                if i == 0 {
                    out.insert(0, 1);
                    out.pop();
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if out[i] == 9 {
                    out[i] = 0;
                } else {
                    out[i] += 1;
                    break;
                }
            }
        }
        let sign = if self.hi < 0.0 { "-" } else { "" };
        let mut text: String = out.iter().map(|d| char::from(b'0' + d)).collect();
        if text.len() > 1 {
            text.insert(1, '.');
        }
        write!(f, "{sign}{text}e{exp10}")
    }
}
