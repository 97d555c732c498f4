//! Independent oracles shared by the integration suites. Nothing here calls
//! into the recurrences it is used to check.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::fmt::Display;

use fde_series::Scalar;
use num_complex::Complex64;

pub fn report(id: &str, pass: bool, detail: impl Display) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {detail}");
}

/// U_1..U_4 of the tanh problem in closed form.
pub fn tanh_spectrum_closed(c: f64, x: f64, k: usize) -> f64 {
    let z = c.sqrt() * x;
    let (sh, ch) = (z.sinh(), z.cosh());
    match k {
        1 => c.powi(2) / ch.powi(2),
        2 => c.powf(3.5) * sh / ch.powi(3),
        3 => c.powi(5) * (2.0 * ch * ch - 3.0) / (3.0 * ch.powi(4)),
        4 => c.powf(6.5) * sh * (ch * ch - 3.0) / (3.0 * ch.powi(5)),
        _ => panic!("no closed form for U_{k}"),
    }
}

/// U_1..U_5 of the logistic problem in closed form.
pub fn logistic_spectrum_closed(x: f64, k: usize) -> f64 {
    let e = x.exp();
    let d = 1.0 + e;
    match k {
        1 => 0.25 * e / d.powi(2),
        2 => e * (e - 1.0) / (32.0 * d.powi(3)),
        3 => -e * (-1.0 + 4.0 * e - e * e) / (384.0 * d.powi(4)),
        4 => e * (e.powi(3) - 1.0 + 11.0 * e - 11.0 * e * e) / (6144.0 * d.powi(5)),
        5 => {
            e * (-66.0 * e * e - 1.0 + 26.0 * e + 26.0 * e.powi(3) - e.powi(4))
                / (122880.0 * d.powi(6))
        }
        _ => panic!("no closed form for U_{k}"),
    }
}

/// k-th central difference of `f` at `t0` with spacing `h`.
pub fn central_difference<T: Scalar>(f: impl Fn(T) -> T, t0: T, h: T, k: usize) -> T {
    let half = T::lit(k as f64 / 2.0);
    let mut binom = T::one();
    let mut acc = T::zero();
    for j in 0..=k {
        let offset = (half - T::from_count(j)) * h;
        let term = binom * f(t0 + offset);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
        binom = binom * T::from_count(k - j) / T::from_count(j + 1);
    }
    acc / h.powi(k as i32)
}

pub fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

// Complex-coefficient x-series with the same truncation rules as the
// library: products keep the shorter length, derivatives drop one term.

pub type CSeries = Vec<Complex64>;

fn cmul(a: &CSeries, b: &CSeries) -> CSeries {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|r| a[r] * b[k - r]).sum())
        .collect()
}

fn cdiff(a: &CSeries) -> CSeries {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

fn cadd(a: &CSeries, b: &CSeries) -> CSeries {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn cscale(a: &CSeries, s: f64) -> CSeries {
    a.iter().map(|x| x * s).collect()
}

/// `−2 v² v' + (v')² + ½ v v''` on complex series.
pub fn fde_rhs(v: &CSeries) -> CSeries {
    let d1 = cdiff(v);
    let d2 = cdiff(&d1);
    let cubic = cmul(&cmul(v, v), &d1);
    let grad = cmul(&d1, &d1);
    let curv = cmul(v, &d2);
    let n = d2.len();
    let trunc = |s: CSeries| s.into_iter().take(n).collect::<CSeries>();
    cadd(
        &cadd(&cscale(&trunc(cubic), -2.0), &trunc(grad)),
        &cscale(&trunc(curv), 0.5),
    )
}

pub fn square(v: &CSeries) -> CSeries {
    cmul(v, v)
}

/// Adomian polynomial from its definition
/// `A_k = (1/k!) d^k/dλ^k N(Σ u_i λ^i) |_{λ=0}`, with the λ-derivative taken
/// as a discrete Cauchy integral over the unit circle. `components[i]` are
/// the x-coefficients of `u_i`.
pub fn adomian_by_definition(
    components: &[Vec<f64>],
    k: usize,
    nonlinearity: impl Fn(&CSeries) -> CSeries,
) -> Vec<f64> {
    let n = 64;
    let len = components.iter().map(Vec::len).min().unwrap();
    let mut acc: Option<CSeries> = None;
    for j in 0..n {
        let lambda = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
        let mut v = vec![Complex64::new(0.0, 0.0); len];
        for (i, u) in components.iter().enumerate().take(k + 1) {
            let w = lambda.powu(i as u32);
            for (slot, &c) in v.iter_mut().zip(u) {
                *slot += w * c;
            }
        }
        let weight = lambda.powu(k as u32).inv();
        let term = cscale(&nonlinearity(&v), 1.0)
            .into_iter()
            .map(|c| c * weight)
            .collect::<CSeries>();
        acc = Some(match acc {
            None => term,
            Some(prev) => cadd(&prev, &term),
        });
    }
    acc.unwrap().iter().map(|c| c.re / n as f64).collect()
}
