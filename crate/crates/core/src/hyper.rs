//! Gauss and generalized hypergeometric series, plus the Jacobi polynomials
//! and Ferrers associated Legendre functions built on them.
//!
//! Terminating series are summed exactly over the rationals (every finite
//! `f64` parameter is an exact dyadic rational) and rounded once at the end,
//! so alternating terminating sums carry no cancellation error.

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{to_exact, to_f64, BigInt, ExactRational};

/// How a hypergeometric series is summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HypTermination {
    /// Sum terms `0..=k_max` exactly; the series is expected to vanish beyond.
    Terminating { k_max: usize },
    /// Sum until `|term| <= tol * |partial sum|` holds for three consecutive terms.
    Convergent { tol: f64, max_terms: usize },
}

impl HypTermination {
    pub const DEFAULT_CONVERGENT: HypTermination = HypTermination::Convergent {
        tol: 1e-17,
        max_terms: 200_000,
    };

    fn validate(&self) -> Result<()> {
        match *self {
            HypTermination::Terminating { .. } => Ok(()),
            HypTermination::Convergent { tol, max_terms } => {
                if !(tol > 0.0 && tol < 1.0) || max_terms == 0 {
                    return domain(format!(
                        "convergent mode needs 0 < tol < 1 and max_terms >= 1 (got {tol}, {max_terms})"
                    ));
                }
                Ok(())
            }
        }
    }
}

/// Smallest `m` such that some upper parameter equals `-m`: the index of the
/// last nonzero term of a terminating series.
pub fn terminating_degree(upper: &[f64]) -> Option<usize> {
    upper
        .iter()
        .filter(|a| **a <= 0.0 && a.fract() == 0.0 && a.is_finite())
        .map(|a| (-a) as usize)
        .min()
}

fn exact_params(params: &[f64], what: &str) -> Result<Vec<ExactRational>> {
    params
        .iter()
        .map(|&v| to_exact(v).ok_or_else(|| Error::Domain(format!("non-finite {what} {v}"))))
        .collect()
}

/// Exact partial sum `sum_{k=0}^{k_max} prod(upper)_k / prod(lower)_k z^k / k!`.
///
/// Stops early once an upper parameter makes every later term vanish; a
/// lower parameter reaching zero first is a pole.
pub fn pfq_exact(
    upper: &[ExactRational],
    lower: &[ExactRational],
    z: &ExactRational,
    k_max: usize,
) -> Result<ExactRational> {
    // Terms share the running denominator, so the sum is kept unreduced over
    // it and reduced once; per-step gcds dominate otherwise.
    let (mut term_num, mut den) = (BigInt::one(), BigInt::one());
    let mut sum_num = BigInt::one();
    for k in 0..k_max {
        let kq = ExactRational::from_integer(k.into());
        let num = upper
            .iter()
            .fold(ExactRational::one(), |acc, a| acc * (a + &kq));
        if num.is_zero() {
            break;
        }
        let lower_prod = lower
            .iter()
            .fold(ExactRational::one(), |acc, c| acc * (c + &kq));
        if lower_prod.is_zero() {
            return Err(Error::ParameterPole(format!(
                "lower parameter reaches zero at term {}",
                k + 1
            )));
        }
        let ratio = num * z / (lower_prod * (&kq + ExactRational::one()));
        term_num *= ratio.numer();
        den *= ratio.denom();
        sum_num = sum_num * ratio.denom() + &term_num;
    }
    Ok(ExactRational::new(sum_num, den))
}

/// Generalized hypergeometric series `pFq(upper; lower; z)`.
pub fn pfq_series(upper: &[f64], lower: &[f64], z: f64, term: HypTermination) -> Result<f64> {
    term.validate()?;
    if !z.is_finite() {
        return domain(format!("non-finite argument {z}"));
    }
    match term {
        HypTermination::Terminating { k_max } => {
            let up = exact_params(upper, "upper parameter")?;
            let lo = exact_params(lower, "lower parameter")?;
            let zq = to_exact(z).expect("finite");
            Ok(to_f64(&pfq_exact(&up, &lo, &zq, k_max)?))
        }
        HypTermination::Convergent { tol, max_terms } => {
            if terminating_degree(upper).is_none() {
                let (p, q) = (upper.len(), lower.len());
                if p > q + 1 && z != 0.0 {
                    return Err(Error::Divergent(format!(
                        "{p}F{q} has zero radius of convergence"
                    )));
                }
                if p == q + 1 && z.abs() >= 1.0 {
                    return Err(Error::Divergent(format!("|z| = {} >= 1", z.abs())));
                }
            }
            sum_convergent(upper, lower, z, tol, max_terms)
        }
    }
}

fn sum_convergent(upper: &[f64], lower: &[f64], z: f64, tol: f64, max_terms: usize) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut small_run = 0;
    for k in 0..max_terms {
        let kf = k as f64;
        let num: f64 = upper.iter().map(|a| a + kf).product();
        if num == 0.0 || z == 0.0 {
            return Ok(sum);
        }
        let den: f64 = lower.iter().map(|c| c + kf).product();
        if den == 0.0 {
            return Err(Error::ParameterPole(format!(
                "lower parameter reaches zero at term {}",
                k + 1
            )));
        }
        term *= num / den * z / (kf + 1.0);
        sum += term;
        if term.abs() <= tol * sum.abs() {
            small_run += 1;
            if small_run == 3 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::MaxTerms { max_terms })
}

/// Gauss hypergeometric series `2F1(a1, a2; c; z)`.
pub fn gauss_2f1(a1: f64, a2: f64, c: f64, z: f64, term: HypTermination) -> Result<f64> {
    pfq_series(&[a1, a2], &[c], z, term)
}

/// `pFq` with the summation mode chosen from the parameters: exact when an
/// upper parameter is a nonpositive integer, convergent otherwise.
pub fn pfq_auto(upper: &[f64], lower: &[f64], z: f64) -> Result<f64> {
    let term = match terminating_degree(upper) {
        Some(k_max) => HypTermination::Terminating { k_max },
        None => HypTermination::DEFAULT_CONVERGENT,
    };
    pfq_series(upper, lower, z, term)
}

/// Jacobi polynomial `P_n^(alpha, beta)(x) =
/// binom(n+alpha, n) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)`.
pub fn jacobi_p(n: usize, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha.is_finite() && beta.is_finite() && x.is_finite()) {
        return domain("non-finite Jacobi argument");
    }
    let prefactor: f64 = (1..=n).map(|k| (alpha + k as f64) / k as f64).product();
    let nf = n as f64;
    let f = gauss_2f1(
        -nf,
        nf + alpha + beta + 1.0,
        alpha + 1.0,
        (1.0 - x) / 2.0,
        HypTermination::Terminating { k_max: n },
    )?;
    Ok(prefactor * f)
}

/// Ferrers function of the first kind on `-1 < x < 1`:
/// `P^mu_nu(x) = ((1+x)/(1-x))^(mu/2) 2F1(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu)`.
pub fn assoc_legendre_p(nu: f64, mu: f64, x: f64) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return domain(format!("Ferrers function needs -1 < x < 1 (got {x})"));
    }
    let c = 1.0 - mu;
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::ParameterPole(format!("1 - mu = {c} is a nonpositive integer")));
    }
    let f = pfq_auto(&[-nu, nu + 1.0], &[c], (1.0 - x) / 2.0)?;
    let ratio = ((1.0 + x) / (1.0 - x)).powf(mu / 2.0);
    Ok(ratio * f / libm::tgamma(c))
}

/// Sign-aware relative difference used across the crate's comparisons.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{catalan, int, rat};
    use approx::assert_relative_eq;

    #[test]
    fn catalan_as_terminating_2f1() {
        let v = gauss_2f1(-3.0, -2.0, 2.0, 1.0, HypTermination::Terminating { k_max: 3 }).unwrap();
        assert_eq!(v, 5.0);
        for n in 0..=50u32 {
            let ni = int(n as i64);
            let exact = pfq_exact(&[-ni.clone(), int(1) - ni], &[int(2)], &int(1), n as usize).unwrap();
            assert_eq!(exact, ExactRational::from_integer(catalan(n)));
        }
    }

    #[test]
    fn zero_argument_gives_one() {
        assert_eq!(gauss_2f1(0.3, 1.7, 2.2, 0.0, HypTermination::DEFAULT_CONVERGENT).unwrap(), 1.0);
        assert_eq!(pfq_series(&[1.0, 2.0, 3.0], &[4.0], 0.0, HypTermination::DEFAULT_CONVERGENT).unwrap(), 1.0);
    }

    #[test]
    fn logarithm_identity() {
        let v = gauss_2f1(1.0, 1.0, 2.0, 0.5, HypTermination::DEFAULT_CONVERGENT).unwrap();
        assert_relative_eq!(v, 2.0 * std::f64::consts::LN_2, max_relative = 1e-15);
    }

    #[test]
    fn exponential_series_without_parameters() {
        let v = pfq_series(&[], &[], 0.5, HypTermination::DEFAULT_CONVERGENT).unwrap();
        assert_relative_eq!(v, 0.5f64.exp(), max_relative = 1e-15);
        assert_relative_eq!(v, 1.6487212707001282, max_relative = 1e-15);
    }

    #[test]
    fn error_paths() {
        let conv = HypTermination::DEFAULT_CONVERGENT;
        assert!(matches!(gauss_2f1(0.5, 0.5, 1.0, 1.0, conv), Err(Error::Divergent(_))));
        assert!(matches!(pfq_series(&[0.5, 0.5, 0.5], &[1.0], 0.1, conv), Err(Error::Divergent(_))));
        assert!(matches!(gauss_2f1(1.0, 1.0, -2.0, 0.5, conv), Err(Error::ParameterPole(_))));
        assert!(matches!(
            gauss_2f1(0.5, 0.5, 1.0, 0.999, HypTermination::Convergent { tol: 1e-16, max_terms: 5 }),
            Err(Error::MaxTerms { max_terms: 5 })
        ));
        assert!(gauss_2f1(1.0, 1.0, 1.0, 0.5, HypTermination::Convergent { tol: 2.0, max_terms: 5 }).is_err());
        // terminates before the pole
        let v = gauss_2f1(-2.0, 1.0, -3.0, 0.5, HypTermination::Terminating { k_max: 2 }).unwrap();
        assert_relative_eq!(v, 1.0 + (-2.0 / -3.0) * 0.5 + (-2.0 * -1.0 * 2.0) / (-3.0 * -2.0 * 2.0) * 0.25);
    }

    #[test]
    fn terminating_exact_matches_float_summation() {
        // rational parameters that are not dyadic, so the f64 path sees rounded inputs
        for n in 1..=30i64 {
            let nf = n as f64;
            let b = rat(3 * n + 1, 3);
            let exact = to_f64(&pfq_exact(&[int(-n), b], &[rat(5, 4)], &rat(-3, 7), n as usize).unwrap());
            let real = gauss_2f1(-nf, nf + 1.0 / 3.0, 1.25, -3.0 / 7.0, HypTermination::Terminating { k_max: n as usize })
                .unwrap();
            assert!(rel_diff(exact, real) < 1e-13, "n = {n}: {exact} vs {real}");
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_p(0, 1.3, -0.4, 0.2).unwrap(), 1.0);
        assert_eq!(jacobi_p(1, 3.0, -3.0, 1.0).unwrap(), 4.0);
        assert_relative_eq!(jacobi_p(2, 4.0, -4.0, 0.0).unwrap(), 7.5, max_relative = 1e-15);
        for n in 0..=10usize {
            let (a, b) = (1.5, -0.25);
            let expected: f64 = (1..=n).map(|k| (a + k as f64) / k as f64).product();
            assert_relative_eq!(jacobi_p(n, a, b, 1.0).unwrap(), expected, max_relative = 1e-15);
        }
        // Legendre P_2 = (3x^2 - 1)/2
        assert_relative_eq!(jacobi_p(2, 0.0, 0.0, 0.3).unwrap(), (3.0 * 0.09 - 1.0) / 2.0, max_relative = 1e-14);
        assert!(matches!(jacobi_p(3, -2.0, 0.0, 0.5), Err(Error::ParameterPole(_))));
    }

    #[test]
    fn ferrers_examples() {
        assert_eq!(assoc_legendre_p(0.0, 0.0, 0.4).unwrap(), 1.0);
        assert_relative_eq!(assoc_legendre_p(0.0, -2.0, 0.5).unwrap(), 1.0 / 6.0, max_relative = 1e-15);
        // P_1^{-1}(x) = sqrt(1-x^2)/2
        assert_relative_eq!(assoc_legendre_p(1.0, 0.0, 0.3).unwrap(), 0.3, max_relative = 1e-15);
        assert_relative_eq!(
            assoc_legendre_p(1.0, -1.0, 0.3).unwrap(),
            (1.0f64 - 0.09).sqrt() / 2.0,
            max_relative = 1e-14
        );
        assert!(assoc_legendre_p(0.0, 0.0, 1.0).is_err());
        assert!(matches!(assoc_legendre_p(0.0, 1.0, 0.5), Err(Error::ParameterPole(_))));
    }

    #[test]
    fn exact_rational_mode_is_exact() {
        let s = pfq_exact(&[rat(-2, 1), rat(3, 1)], &[rat(5, 1)], &rat(1, 2), 2).unwrap();
        assert_eq!(s, rat(1, 2));
    }
}
