//! Exact integer and rational combinatorics.
//!
//! Everything here is computed with arbitrary-size integers and reduced
//! rationals; nothing rounds. Floating-point callers convert at the boundary
//! with [`to_exact`] and [`to_f64`].

mod numbers;
mod poly;
mod polylog;
mod ratfunc;
mod stirling;

pub use numbers::{
    binomial, catalan, catalan_formulas, catalan_stream, double_factorial, factorial,
    falling_factorial, rising_factorial, rising_factorial_exact, CatalanFormulas,
};
pub use poly::{Polynomial, Ring};
pub use polylog::polylog_neg;
pub use ratfunc::RationalFunction;
pub use stirling::{
    geometric_inverse_check, geometric_polynomial, stirling_first, stirling_first_row,
    stirling_second, stirling_second_row,
};

use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

pub type BigInt = num_bigint::BigInt;
pub type ExactRational = num_rational::BigRational;

/// Exact value of a finite `f64` (every finite double is a dyadic rational).
pub fn to_exact(x: f64) -> Option<ExactRational> {
    ExactRational::from_f64(x)
}

/// Correctly rounded nearest double, `NaN` never produced for finite inputs.
pub fn to_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

/// `num/den` form used by every printer in the crate; integers print bare.
pub fn format_rational(q: &ExactRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"3"`, `"-7/4"`, `"0.25"` or `"1.5e-3"` as the rational it denotes
/// (decimals are taken at face value, not as the nearest double).
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        return (!d.is_zero()).then(|| ExactRational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int_part.starts_with('-');
    let int_digits = int_part.trim_start_matches(['-', '+']);
    if int_digits.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_digits.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int_digits}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        ExactRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        ExactRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        q = -q;
    }
    Some(q)
}

/// `b^p` when it is rational: `p = u/v` with a small `v` and `b` a perfect `v`-th power.
pub fn rational_pow(b: &ExactRational, p: &ExactRational) -> Option<ExactRational> {
    if b.is_negative() || p.is_negative() {
        return None;
    }
    if b.is_one() || b.is_zero() {
        return Some(b.clone());
    }
    let v = p.denom().to_u32().filter(|&v| v <= 64)?;
    let u = p.numer().to_u32().filter(|&u| u <= 4096)?;
    let root = |x: &BigInt| {
        let r = x.nth_root(v);
        (num_traits::pow(r.clone(), v as usize) == *x).then_some(r)
    };
    let base = ExactRational::new(root(b.numer())?, root(b.denom())?);
    Some(num_traits::pow(base, u as usize))
}
