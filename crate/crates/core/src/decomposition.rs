//! Adomian (ADM) and Laplace (LDM) decomposition over t-polynomial
//! components whose coefficients are x-series.
//!
//! `u = Σ u_k`, `u_0 = u(x, 0)` and `u_{k+1} = ∫_0^t A_k dt'`, where `A_k` is
//! the k-th Adomian polynomial of the right-hand side
//! `N(u) = −2u²u_x + (u_x)² + ½ u u_xx`. LDM computes the same integral as
//! `L⁻¹[(1/s) L[A_k]]`.

use std::collections::BTreeMap;

use crate::model::initial_condition;
use crate::{Error, Problem, Result, Scalar, TruncatedSeries};

/// One decomposition component `u_k = Σ_n S_n(x) t^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TPolyComponent<T> {
    index: usize,
    center: T,
    order: usize,
    terms: BTreeMap<usize, TruncatedSeries<T>>,
}

impl<T: Scalar> TPolyComponent<T> {
    pub fn zero(index: usize, center: T, order: usize) -> Self {
        Self {
            index,
            center,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(index: usize, power: usize, coeff: TruncatedSeries<T>) -> Self {
        let mut out = Self::zero(index, coeff.center(), coeff.order());
        out.terms.insert(power, coeff);
        out
    }

    pub fn from_terms(
        index: usize,
        center: T,
        order: usize,
        terms: impl IntoIterator<Item = (usize, TruncatedSeries<T>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(index, center, order);
        for (power, coeff) in terms {
            out.add_term(power, coeff)?;
        }
        Ok(out)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn center(&self) -> T {
        self.center
    }

    pub fn terms(&self) -> &BTreeMap<usize, TruncatedSeries<T>> {
        &self.terms
    }

    pub fn coefficient(&self, power: usize) -> Option<&TruncatedSeries<T>> {
        self.terms.get(&power)
    }

    /// `S_power(center)`, zero when the power is absent.
    pub fn center_coefficient(&self, power: usize) -> T {
        self.terms
            .get(&power)
            .map_or(T::zero(), TruncatedSeries::value)
    }

    /// Largest valid coefficient over all t-powers other than `power`.
    pub fn off_power_mass(&self, power: usize) -> T {
        self.terms
            .iter()
            .filter(|(&n, _)| n != power)
            .flat_map(|(_, s)| s.valid_coeffs().iter().map(|c| c.abs()))
            .fold(T::zero(), T::max)
    }

    fn with_index(mut self, index: usize) -> Self {
        self.index = index;
        self
    }

    fn add_term(&mut self, power: usize, coeff: TruncatedSeries<T>) -> Result<()> {
        let merged = match self.terms.remove(&power) {
            Some(prev) => prev.add(&coeff)?,
            None => coeff,
        };
        self.terms.insert(power, merged);
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&n, s) in &other.terms {
            out.add_term(n, s.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, alpha: T) -> Result<Self> {
        let mut out = Self::zero(self.index, self.center, self.order);
        for (&n, s) in &self.terms {
            out.terms.insert(n, s.scale(alpha)?);
        }
        Ok(out)
    }

    /// Product of t-polynomials: t-powers add, x-series Cauchy-multiply.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(
            self.index + other.index,
            self.center,
            self.order.min(other.order),
        );
        for (&n, a) in &self.terms {
            for (&m, b) in &other.terms {
                out.add_term(n + m, a.cauchy_mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// `∂_x` applied to every coefficient.
    pub fn dx(&self) -> Result<Self> {
        let mut out = Self::zero(self.index, self.center, self.order.saturating_sub(1));
        for (&n, s) in &self.terms {
            out.terms.insert(n, s.differentiate()?);
        }
        Ok(out)
    }

    /// `∫_0^t`: `S t^n ↦ S t^{n+1} / (n + 1)`.
    pub fn integrate_t(&self) -> Result<Self> {
        let mut out = Self::zero(self.index, self.center, self.order);
        for (&n, s) in &self.terms {
            out.terms
                .insert(n + 1, s.scale(T::one() / T::from_count(n + 1))?);
        }
        Ok(out)
    }

    /// `Σ_n S_n(center) t^n`.
    pub fn value_at(&self, t: T) -> T {
        self.terms
            .iter()
            .fold(T::zero(), |acc, (&n, s)| acc + s.value() * t.powi(n as i32))
    }
}

/// One Laplace-image term `weight · series / s^e`. The integer weight (a
/// factorial) is kept apart from the series so the transform and its inverse
/// introduce a single rounding, the same one `∫ dt` would.
#[derive(Clone, Debug, PartialEq)]
pub struct LaplaceTerm<T> {
    weight: u128,
    series: TruncatedSeries<T>,
}

impl<T: Scalar> LaplaceTerm<T> {
    pub fn weight(&self) -> u128 {
        self.weight
    }

    pub fn series(&self) -> &TruncatedSeries<T> {
        &self.series
    }

    /// The numerator `weight · series` as one series.
    pub fn coefficient(&self) -> Result<TruncatedSeries<T>> {
        self.series.scale(integer::<T>(self.weight))
    }
}

/// Laplace image `Σ b_e / s^e` of a t-polynomial, keyed by exponent `e ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaplaceImage<T> {
    center: T,
    order: usize,
    terms: BTreeMap<usize, LaplaceTerm<T>>,
}

impl<T: Scalar> LaplaceImage<T> {
    /// Image with numerators `b_e` given directly.
    pub fn from_terms(
        center: T,
        order: usize,
        terms: impl IntoIterator<Item = (usize, TruncatedSeries<T>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, b) in terms {
            if e == 0 {
                return Err(Error::LaplaceExponent(e));
            }
            map.insert(
                e,
                LaplaceTerm {
                    weight: 1,
                    series: b,
                },
            );
        }
        Ok(Self {
            center,
            order,
            terms: map,
        })
    }

    pub fn terms(&self) -> &BTreeMap<usize, LaplaceTerm<T>> {
        &self.terms
    }

    /// Multiplication by `1/s`.
    pub fn div_s(&self) -> Self {
        Self {
            center: self.center,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(&e, b)| (e + 1, b.clone()))
                .collect(),
        }
    }
}

fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128)
        .try_fold(1u128, u128::checked_mul)
        .ok_or_else(|| Error::InvalidArgument(format!("{n}! overflows the Laplace weight")))
}

fn integer<T: Scalar>(v: u128) -> T {
    T::from_u128(v).unwrap_or_else(|| T::lit(v as f64))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `t^n ↦ n! / s^{n+1}` termwise.
pub fn laplace_of_tpoly<T: Scalar>(p: &TPolyComponent<T>) -> Result<LaplaceImage<T>> {
    let terms = p
        .terms
        .iter()
        .map(|(&n, s)| {
            Ok((
                n + 1,
                LaplaceTerm {
                    weight: factorial(n)?,
                    series: s.clone(),
                },
            ))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(LaplaceImage {
        center: p.center,
        order: p.order,
        terms,
    })
}

/// `w·S / s^{n+1} ↦ (w / n!) S t^n` termwise, with `w / n!` reduced before it
/// is rounded. The result carries component index 0.
pub fn inverse_laplace<T: Scalar>(img: &LaplaceImage<T>) -> Result<TPolyComponent<T>> {
    let mut out = TPolyComponent::zero(0, img.center, img.order);
    for (&e, term) in &img.terms {
        if e == 0 {
            return Err(Error::LaplaceExponent(e));
        }
        let den = factorial(e - 1)?;
        let g = gcd(term.weight, den);
        let series = if term.weight / g == 1 {
            term.series.scale(T::one() / integer::<T>(den / g))?
        } else {
            term.series
                .scale(integer::<T>(term.weight / g) / integer::<T>(den / g))?
        };
        out.terms.insert(e - 1, series);
    }
    Ok(out)
}

/// Quadratic Adomian polynomial `Σ_{i+j=k} u_i u_j` of `N(u) = u²`.
pub fn adomian_square<T: Scalar>(
    components: &[TPolyComponent<T>],
    k: usize,
) -> Result<TPolyComponent<T>> {
    let us = window(components, k)?;
    let mut acc = TPolyComponent::zero(k, us[0].center, us[0].order);
    for i in 0..=k {
        acc = acc.add(&us[i].mul(&us[k - i])?)?;
    }
    Ok(acc.with_index(k))
}

/// Adomian polynomial `A_k` of the foam drainage right-hand side:
///
/// ```text
/// A_k = −2 Σ_{i+j+l=k} u_i u_j ∂u_l + Σ_{i+j=k} ∂u_i ∂u_j + ½ Σ_{i+j=k} u_i ∂²u_j
/// ```
pub fn adomian_polynomial<T: Scalar>(
    components: &[TPolyComponent<T>],
    k: usize,
) -> Result<TPolyComponent<T>> {
    let us = window(components, k)?;
    let d1 = us
        .iter()
        .map(TPolyComponent::dx)
        .collect::<Result<Vec<_>>>()?;
    let d2 = d1
        .iter()
        .map(TPolyComponent::dx)
        .collect::<Result<Vec<_>>>()?;
    let (center, order) = (us[0].center, us[0].order);

    // The triple sum is grouped as Σ_m (Σ_{i+j=m} u_i u_j) ∂u_{k−m}; the
    // inner square is rebuilt for every k since components carry no state.
    let mut cubic = TPolyComponent::zero(k, center, order);
    let mut grad = TPolyComponent::zero(k, center, order);
    let mut curv = TPolyComponent::zero(k, center, order);
    for m in 0..=k {
        let mut square = TPolyComponent::zero(m, center, order);
        for i in 0..=m {
            square = square.add(&us[i].mul(&us[m - i])?)?;
        }
        cubic = cubic.add(&square.mul(&d1[k - m])?)?;
        grad = grad.add(&d1[m].mul(&d1[k - m])?)?;
        curv = curv.add(&us[m].mul(&d2[k - m])?)?;
    }
    let a = cubic
        .scale(T::lit(-2.0))?
        .add(&grad)?
        .add(&curv.scale(T::lit(0.5))?)?;
    Ok(a.with_index(k))
}

fn window<T>(components: &[TPolyComponent<T>], k: usize) -> Result<&[TPolyComponent<T>]> {
    components.get(..=k).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "need components 0..={k}, have {}",
            components.len()
        ))
    })
}

/// `u_{k+1} = ∫_0^t A_k dt'`.
pub fn adm_next_component<T: Scalar>(
    components: &[TPolyComponent<T>],
    k: usize,
) -> Result<TPolyComponent<T>> {
    Ok(adomian_polynomial(components, k)?
        .integrate_t()?
        .with_index(k + 1))
}

/// `u_{k+1} = L⁻¹[(1/s) L[A_k]]`.
pub fn ldm_next_component<T: Scalar>(
    components: &[TPolyComponent<T>],
    k: usize,
) -> Result<TPolyComponent<T>> {
    let a = adomian_polynomial(components, k)?;
    Ok(inverse_laplace(&laplace_of_tpoly(&a)?.div_s())?.with_index(k + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Adomian,
    Laplace,
}

/// Components `u_0..u_K` about `center`.
pub fn build_components<T: Scalar>(
    p: &Problem,
    center: T,
    method: Decomposition,
) -> Result<Vec<TPolyComponent<T>>> {
    let u0 = initial_condition(p, center, p.series_order())?;
    let mut comps = vec![TPolyComponent::monomial(0, 0, u0)];
    for k in 0..p.terms {
        let next = match method {
            Decomposition::Adomian => adm_next_component(&comps, k)?,
            Decomposition::Laplace => ldm_next_component(&comps, k)?,
        };
        comps.push(next);
    }
    Ok(comps)
}

/// `Σ_k Σ_n S_{k,n}(center) t^n`.
pub fn assemble_partial_sum<T: Scalar>(components: &[TPolyComponent<T>], t: T) -> T {
    components
        .iter()
        .fold(T::zero(), |acc, u| acc + u.value_at(t))
}
