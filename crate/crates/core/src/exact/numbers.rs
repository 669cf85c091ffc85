use num_traits::{One, Zero};

use super::{BigInt, ExactRational, Ring};
use crate::error::{domain, Result};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `upper (upper-1) ... (upper-k+1) / k!` for
/// any integer `upper`, so `binomial(-1, 0) == 1`. Negative `k` gives 0.
pub fn binomial(upper: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= upper - i;
    }
    num / factorial(k as u32)
}

/// `n!!` with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return domain(format!("double factorial of {n} is undefined (need n >= -1)"));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// `(a)_n = a (a+1) ... (a+n-1)`, `(a)_0 = 1`, over any [`Ring`].
pub fn rising_factorial<T: Ring>(a: &T, n: u32) -> T {
    (0..n).fold(T::one(), |acc, i| acc * (a.clone() + T::from_i64(i as i64)))
}

/// [`rising_factorial`] for a rational, as `prod (p + i q) / q^n` with a single
/// reduction.
pub fn rising_factorial_exact(a: &ExactRational, n: u32) -> ExactRational {
    let (p, q) = (a.numer(), a.denom());
    let num = (0..n).fold(BigInt::one(), |acc, i| acc * (p + q * BigInt::from(i)));
    ExactRational::new(num, q.pow(n))
}

/// `<a>_n = a (a-1) ... (a-n+1)`, `<a>_0 = 1`.
pub fn falling_factorial<T: Ring>(a: &T, n: u32) -> T {
    (0..n).fold(T::one(), |acc, i| acc * (a.clone() - T::from_i64(i as i64)))
}

/// The four closed forms of `C_n`, each evaluated independently.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalanFormulas {
    /// `(2n)! / (n! (n+1)!)`
    pub factorial_quotient: ExactRational,
    /// `binom(2n, n) / (n+1)`
    pub binomial: ExactRational,
    /// `4^n Gamma(n+1/2) / (sqrt(pi) Gamma(n+2))`, with `Gamma(n+1/2)/sqrt(pi) = (1/2)_n`
    pub gamma_ratio: ExactRational,
    /// `2F1(-n, 1-n; 2; 1)`
    pub hypergeometric: ExactRational,
}

impl CatalanFormulas {
    pub fn agree(&self) -> bool {
        self.factorial_quotient == self.binomial
            && self.binomial == self.gamma_ratio
            && self.gamma_ratio == self.hypergeometric
    }
}

pub fn catalan_formulas(n: u32) -> CatalanFormulas {
    let q = |b: BigInt| ExactRational::from_integer(b);
    let factorial_quotient = ExactRational::new(factorial(2 * n), factorial(n) * factorial(n + 1));
    let binomial = ExactRational::new(binomial(2 * n as i64, n as i64), BigInt::from(n + 1));
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let gamma_ratio = q(BigInt::from(4).pow(n)) * rising_factorial_exact(&half, n) / q(factorial(n + 1));
    let ni = ExactRational::from_integer(BigInt::from(n));
    let hypergeometric = crate::hyper::pfq_exact(
        &[-ni.clone(), ExactRational::one() - ni],
        &[ExactRational::from_integer(BigInt::from(2))],
        &ExactRational::one(),
        n as usize,
    )
    .expect("2F1(-n, 1-n; 2; 1) has no parameter pole");
    CatalanFormulas {
        factorial_quotient,
        binomial,
        gamma_ratio,
        hypergeometric,
    }
}

/// `C_n`. All four closed forms are evaluated and must agree.
pub fn catalan(n: u32) -> BigInt {
    let forms = catalan_formulas(n);
    assert!(forms.agree(), "Catalan closed forms disagree at n = {n}: {forms:?}");
    assert!(forms.binomial.is_integer());
    forms.binomial.to_integer()
}

/// First `count` Catalan numbers from `C_{n+1} = 2(2n+1) C_n / (n+2)`.
pub fn catalan_stream(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut c = BigInt::one();
    for n in 0..count {
        out.push(c.clone());
        c = c * (2 * (2 * n + 1)) / (n + 2);
    }
    out
}
