//! Reduced differential transform: t-spectra `U_k(x)` of the solution and
//! their inverse transform `u(x, t) ≈ Σ_{k ≤ K} U_k(x) t^k`.

use rayon::prelude::*;

use crate::model::{initial_condition, nonlinearity_from_squares, square_convolution};
use crate::{Error, Problem, Result, Scalar, TruncatedSeries};

/// Spectra `U_0..U_k` expanded about one center.
#[derive(Clone, Debug)]
pub struct SpectrumSequence<T> {
    center: T,
    spectra: Vec<TruncatedSeries<T>>,
    /// `(U·U)_m` for `m < k`, reused by later steps.
    squares: Vec<TruncatedSeries<T>>,
    problem: Problem,
}

impl<T: Scalar> SpectrumSequence<T> {
    /// Sequence holding only `U_0`.
    pub fn start(problem: Problem, center: T) -> Result<Self> {
        let u0 = initial_condition(&problem, center, problem.series_order())?;
        Ok(Self {
            center,
            spectra: vec![u0],
            squares: Vec::new(),
            problem,
        })
    }

    pub fn center(&self) -> T {
        self.center
    }

    pub fn problem(&self) -> &Problem {
        &self.problem
    }

    pub fn spectra(&self) -> &[TruncatedSeries<T>] {
        &self.spectra
    }

    /// `U_k(center)` for every stored `k`.
    pub fn center_values(&self) -> Vec<T> {
        self.spectra.iter().map(TruncatedSeries::value).collect()
    }

    /// `U_{k+1} = N_k / (k + 1)` from the stored `U_0..U_k`.
    pub fn next_spectrum(&self) -> Result<TruncatedSeries<T>> {
        self.step().map(|(next, _)| next)
    }

    pub fn push_next(&mut self) -> Result<()> {
        let (next, square) = self.step()?;
        self.squares.push(square);
        self.spectra.push(next);
        Ok(())
    }

    fn step(&self) -> Result<(TruncatedSeries<T>, TruncatedSeries<T>)> {
        let k = self.spectra.len() - 1;
        let last = self.spectra[k].valid_order();
        if last < 2 {
            return Err(Error::SpectrumBudget {
                step: k,
                valid_order: last,
            });
        }
        let square = square_convolution(&self.spectra, k)?;
        let n = nonlinearity_from_squares(&self.spectra, &self.squares, &square, k)?;
        Ok((n.scale(T::one() / T::from_count(k + 1))?, square))
    }

    /// `Σ_k U_k(center) t^k`. Only the center value of each spectrum is used.
    pub fn partial_sum_at(&self, t: T) -> T {
        self.spectra
            .iter()
            .rev()
            .fold(T::zero(), |acc, u| acc * t + u.value())
    }
}

/// `U_0..U_K` about `center`, with `U_0` of order `2K + guard`.
pub fn build_spectra<T: Scalar>(p: &Problem, center: T) -> Result<SpectrumSequence<T>> {
    let mut seq = SpectrumSequence::start(*p, center)?;
    for _ in 0..p.terms {
        seq.push_next()?;
    }
    Ok(seq)
}

/// Partial sums at time `t`, one recentered spectrum build per grid point.
pub fn solve_grid<T: Scalar>(p: &Problem, xs: &[T], t: T) -> Result<Vec<T>> {
    if xs.iter().any(|x| !x.is_finite()) || !t.is_finite() {
        return Err(Error::NonFinite("grid"));
    }
    xs.par_iter()
        .map(|&x| build_spectra(p, x).map(|seq| seq.partial_sum_at(t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{convolved_nonlinearity, exact_u};

    fn sech(x: f64) -> f64 {
        1.0 / x.cosh()
    }

    #[test]
    fn first_tanh_spectra_at_origin() {
        let p = Problem::tanh_wave(1.0, 4).unwrap();
        let seq = build_spectra(&p, 0.0f64).unwrap();
        let v = seq.center_values();
        let expected = [0.0, 1.0, 0.0, -1.0 / 3.0, 0.0];
        for (k, (&got, &want)) in v.iter().zip(&expected).enumerate() {
            assert!((got - want).abs() < 1e-14, "U_{k}(0) = {got}");
        }
    }

    #[test]
    fn tanh_spectra_match_closed_forms_off_origin() {
        let c: f64 = 1.0;
        let x = 0.5;
        let p = Problem::tanh_wave(c, 4).unwrap();
        let v = build_spectra(&p, x).unwrap().center_values();
        let (sh, ch) = ((c.sqrt() * x).sinh(), (c.sqrt() * x).cosh());
        let closed = [
            c.powi(2) / ch.powi(2),
            c.powf(3.5) * sh / ch.powi(3),
            c.powi(5) * (2.0 * ch * ch - 3.0) / (3.0 * ch.powi(4)),
            c.powf(6.5) * sh * (ch * ch - 3.0) / (3.0 * ch.powi(5)),
        ];
        for k in 0..4 {
            assert!((v[k + 1] - closed[k]).abs() < 1e-12, "U_{}", k + 1);
        }
    }

    #[test]
    fn logistic_spectra_at_origin() {
        let p = Problem::logistic(3).unwrap();
        let v = build_spectra(&p, 0.0f64).unwrap().center_values();
        assert!((v[1] - 0.0625).abs() < 1e-16);
        assert!(v[2].abs() < 1e-16);
        assert!((v[3] + 1.0 / 3072.0).abs() < 1e-16);
    }

    #[test]
    fn cached_squares_match_direct_recurrence() {
        let p = Problem::tanh_wave(2.0, 6).unwrap();
        let seq = build_spectra(&p, -0.7f64).unwrap();
        for k in 0..6 {
            let direct = convolved_nonlinearity(seq.spectra(), k)
                .unwrap()
                .scale(1.0 / (k as f64 + 1.0))
                .unwrap();
            assert_eq!(direct.valid_coeffs(), seq.spectra()[k + 1].valid_coeffs());
        }
    }

    #[test]
    fn zero_data_gives_zero_spectra() {
        let p = Problem::tanh_wave(0.0, 5).unwrap();
        let seq = build_spectra(&p, -0.4f64).unwrap();
        assert!(seq.spectra().iter().all(TruncatedSeries::is_zero));
    }

    #[test]
    fn budget_is_checked() {
        let p = Problem::new(crate::ProblemKind::TanhWave { c: 1.0 }, 3, 0).unwrap();
        let mut seq = SpectrumSequence::start(p, 0.0f64).unwrap();
        for _ in 0..3 {
            seq.push_next().unwrap();
        }
        assert_eq!(
            seq.next_spectrum().unwrap_err(),
            Error::SpectrumBudget {
                step: 3,
                valid_order: 0
            }
        );
    }

    #[test]
    fn partial_sums() {
        let p = Problem::tanh_wave(1.0, 3).unwrap();
        let seq = build_spectra(&p, 0.0f64).unwrap();
        assert_eq!(seq.partial_sum_at(0.0), seq.center_values()[0]);
        let expected = 0.1 - 1e-3 / 3.0;
        assert!((seq.partial_sum_at(0.1) - expected).abs() < 1e-15);

        let p = Problem::tanh_wave(3.0, 10).unwrap();
        let seq = build_spectra(&p, 0.0f64).unwrap();
        let err = (seq.partial_sum_at(0.1) - exact_u(&p, 0.0f64, 0.1)).abs();
        assert!((err - 1.0317037658e-5).abs() < 1e-9, "{err}");
    }

    #[test]
    fn grid_solutions() {
        let p = Problem::tanh_wave(3.0, 10).unwrap();
        assert_eq!(solve_grid(&p, &[0.0f64], 0.0).unwrap(), vec![0.0]);
        let v = solve_grid(&p, &[-2.0f64], 0.1).unwrap()[0];
        let err = (v - exact_u(&p, -2.0, 0.1)).abs();
        assert!((err - 8.51484003871e-11).abs() < 1e-13, "{err}");

        // logistic value at x = −1; the tabulated value is reproduced at t = 0.1
        let p = Problem::logistic(10).unwrap();
        let v = solve_grid(&p, &[-1.0f64], 0.1).unwrap()[0];
        assert!((v - 0.2359453940).abs() < 5e-9, "{v}");
        assert!(solve_grid(&p, &[f64::NAN], 0.1).is_err());
    }

    #[test]
    fn parity_about_origin() {
        let p = Problem::tanh_wave(1.0, 6).unwrap();
        let seq = build_spectra(&p, 0.0f64).unwrap();
        for (k, u) in seq.spectra().iter().enumerate() {
            let sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &[0.1, 0.2] {
                assert!((u.eval(-x) - sign * u.eval(x)).abs() < 1e-12, "k={k}");
            }
        }
    }

    #[test]
    fn u1_scales_with_c_squared() {
        let v1 = build_spectra(&Problem::tanh_wave(1.5, 2).unwrap(), 0.0f64)
            .unwrap()
            .center_values();
        let v4 = build_spectra(&Problem::tanh_wave(6.0, 2).unwrap(), 0.0f64)
            .unwrap()
            .center_values();
        assert!((v4[1] / v1[1] - 16.0).abs() < 1e-13);
        assert!((v1[1] - 2.25 * sech(0.0).powi(2)).abs() < 1e-15);
    }

    #[test]
    fn ten_terms_beat_five_at_small_time() {
        let xs = [-10.0f64, -8.0, -6.0, -4.0, -2.0, 0.0];
        let p10 = Problem::tanh_wave(3.0, 10).unwrap();
        let p5 = p10.with_terms(5);
        let t = 0.01;
        let a10 = solve_grid(&p10, &xs, t).unwrap();
        let a5 = solve_grid(&p5, &xs, t).unwrap();
        for (i, &x) in xs.iter().enumerate() {
            let exact = exact_u(&p10, x, t);
            assert!((a10[i] - exact).abs() <= (a5[i] - exact).abs(), "x={x}");
        }
    }
}
