//! Truncated power series and the Catalan generating functions.

use std::ops::Div;

use num_traits::{One, Signed};

use crate::error::{domain, Result};
use crate::exact::{to_exact, BigInt, ExactRational, Ring};

/// Scalars a [`PowerSeries`] can hold: a ring with division and a square
/// root of constants (exact when one exists).
pub trait SeriesScalar: Ring + Div<Output = Self> {
    fn sqrt_constant(&self) -> Option<Self>;
    fn is_strictly_positive(&self) -> bool;
}

impl SeriesScalar for f64 {
    fn sqrt_constant(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn is_strictly_positive(&self) -> bool {
        *self > 0.0
    }
}

impl SeriesScalar for ExactRational {
    fn sqrt_constant(&self) -> Option<Self> {
        exact_sqrt(self)
    }
    fn is_strictly_positive(&self) -> bool {
        self.is_positive()
    }
}

/// Rational square root when `q` is the square of a rational.
pub fn exact_sqrt(q: &ExactRational) -> Option<ExactRational> {
    if q.is_negative() {
        return None;
    }
    let root = |v: &BigInt| {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    Some(ExactRational::new(root(q.numer())?, root(q.denom())?))
}

/// Coefficients `c_0 .. c_{order-1}` of a series truncated at `x^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: SeriesScalar> PowerSeries<T> {
    /// Pads or truncates `coeffs` to exactly `order` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order, T::zero());
        PowerSeries { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    fn truncated(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..order).map(|i| self.coeffs[i].clone() + other.coeffs[i].clone()).collect(),
            order,
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), self.order())
    }

    /// Product truncated to the shorter order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out, order)
    }
}

/// `1/s`, by Newton iteration `r <- r (2 - s r)`, doubling the number of
/// correct coefficients per step.
pub fn series_recip<T: SeriesScalar>(s: &PowerSeries<T>) -> Result<PowerSeries<T>> {
    let order = s.order();
    if order == 0 {
        return Ok(s.clone());
    }
    let c0 = s.coeffs[0].clone();
    if c0.is_zero() {
        return domain("reciprocal of a series with zero constant term");
    }
    let inv = T::one() / c0;
    let mut r = PowerSeries::constant(inv.clone(), 1);
    let mut m = 1;
    while m < order {
        m = (2 * m).min(order);
        let r_m = r.truncated(m);
        let sr = s.truncated(m).mul(&r_m);
        let two_minus = PowerSeries::constant(T::from_i64(2), m).add(&sr.scale(&-T::one()));
        r = r_m.mul(&two_minus);
        // already correct; keeps floating-point rounding out of c_0
        r.coeffs[0] = inv.clone();
    }
    Ok(r)
}

/// `sqrt(s)` for a positive constant term, by Newton iteration
/// `r <- (r + s/r)/2`, doubling the number of correct coefficients per step.
/// Exact rational series need an exactly representable root of the constant.
pub fn series_sqrt<T: SeriesScalar>(s: &PowerSeries<T>) -> Result<PowerSeries<T>> {
    let order = s.order();
    if order == 0 {
        return Ok(s.clone());
    }
    let c0 = &s.coeffs[0];
    if !c0.is_strictly_positive() {
        return domain("square root of a series needs a positive constant term");
    }
    let Some(root) = c0.sqrt_constant() else {
        return domain("constant term has no exact square root");
    };
    let half = T::one() / T::from_i64(2);
    let mut r = PowerSeries::constant(root.clone(), 1);
    let mut m = 1;
    while m < order {
        m = (2 * m).min(order);
        let r_m = r.truncated(m);
        let q = s.truncated(m).mul(&series_recip(&r_m)?);
        r = r_m.add(&q).scale(&half);
        r.coeffs[0] = root.clone();
    }
    Ok(r)
}

/// `G(x) = 2/(1 + sqrt(1 - 4x))`, whose coefficients are `C_n`.
pub fn gf_catalan(order: usize) -> Result<PowerSeries<ExactRational>> {
    if order == 0 {
        return domain("generating function order must be at least 1");
    }
    let one_minus_4x = PowerSeries::new(vec![ExactRational::one(), ExactRational::from_integer((-4).into())], order);
    let denom = PowerSeries::constant(ExactRational::one(), order).add(&series_sqrt(&one_minus_4x)?);
    Ok(series_recip(&denom)?.scale(&ExactRational::from_integer(2.into())))
}

/// Expansion of `G_{a,b}(x) = 1/(a + sqrt(b - x))`, exact when both `a` and
/// `sqrt(b)` are rational.
#[derive(Debug, Clone, PartialEq)]
pub enum Gf2Series {
    Exact(PowerSeries<ExactRational>),
    Real(PowerSeries<f64>),
}

impl Gf2Series {
    pub fn order(&self) -> usize {
        match self {
            Gf2Series::Exact(s) => s.order(),
            Gf2Series::Real(s) => s.order(),
        }
    }

    pub fn coeff_f64(&self, n: usize) -> f64 {
        match self {
            Gf2Series::Exact(s) => crate::exact::to_f64(s.coeff(n)),
            Gf2Series::Real(s) => *s.coeff(n),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Gf2Series::Exact(_))
    }
}

fn gf2_generic<T: SeriesScalar>(a: T, b: T, order: usize) -> Result<PowerSeries<T>> {
    let b_minus_x = PowerSeries::new(vec![b, -T::one()], order);
    let denom = PowerSeries::constant(a, order).add(&series_sqrt(&b_minus_x)?);
    series_recip(&denom)
}

/// Exact expansion of `1/(a + sqrt(b - x))`; `None` when `sqrt(b)` is irrational.
pub fn gf_catalan2_exact(a: &ExactRational, b: &ExactRational, order: usize) -> Result<Option<PowerSeries<ExactRational>>> {
    if a.is_negative() || !b.is_positive() || order == 0 {
        return domain("generating function needs a >= 0, b > 0, order >= 1");
    }
    if exact_sqrt(b).is_none() {
        return Ok(None);
    }
    gf2_generic(a.clone(), b.clone(), order).map(Some)
}

/// Coefficients of `1/(a + sqrt(b - x))`, the generating-function oracle for `C_n(a, b)`.
pub fn gf_catalan2(a: f64, b: f64, order: usize) -> Result<Gf2Series> {
    if !(a >= 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) || order == 0 {
        return domain(format!("generating function needs a >= 0, b > 0, order >= 1 (got a={a}, b={b})"));
    }
    let (aq, bq) = (to_exact(a).expect("finite"), to_exact(b).expect("finite"));
    match gf_catalan2_exact(&aq, &bq, order)? {
        Some(s) => Ok(Gf2Series::Exact(s)),
        None => Ok(Gf2Series::Real(gf2_generic(a, b, order)?)),
    }
}
