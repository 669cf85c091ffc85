use num_traits::{One, Zero};

use super::{factorial, BigInt, ExactRational, Polynomial};

/// Row `n` of the signed Stirling numbers of the first kind, `s(n, 0..=n)`.
pub fn stirling_first_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        // s(m+1, k) = s(m, k-1) - m s(m, k)
        let mut next = vec![BigInt::zero(); m + 2];
        for (k, s) in row.iter().enumerate() {
            next[k + 1] += s;
            next[k] -= s * m;
        }
        row = next;
    }
    row
}

/// Row `n` of the Stirling numbers of the second kind, `S(n, 0..=n)`.
pub fn stirling_second_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        // S(m+1, k) = k S(m, k) + S(m, k-1)
        let mut next = vec![BigInt::zero(); m + 2];
        for (k, s) in row.iter().enumerate() {
            next[k] += s * k;
            next[k + 1] += s;
        }
        row = next;
    }
    row
}

/// Signed `s(n, k)`; zero when `k > n`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    stirling_first_row(n).get(k).cloned().unwrap_or_default()
}

/// `S(n, k)`; zero when `k > n`.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    stirling_second_row(n).get(k).cloned().unwrap_or_default()
}

/// `omega_n(x) = sum_k S(n, k) k! x^k`.
pub fn geometric_polynomial(n: usize) -> Polynomial<ExactRational> {
    Polynomial::new(
        stirling_second_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, s)| ExactRational::from_integer(s * factorial(k as u32)))
            .collect(),
    )
}

/// Checks `x^n = (1/n!) sum_k (-1)^(n-k) |s(n, k)| omega_k(x)` as polynomials.
///
/// `(-1)^(n-k) |s(n, k)|` is the signed `s(n, k)`; the sign factor only makes
/// sense against unsigned Stirling numbers.
pub fn geometric_inverse_check(n: usize) -> bool {
    let s = stirling_first_row(n);
    let sum = (0..=n).fold(Polynomial::zero(), |acc, k| {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        let unsigned = s[k].magnitude().clone();
        let c = ExactRational::from_integer(BigInt::from(unsigned) * sign);
        acc + geometric_polynomial(k).scale(&c)
    });
    let inv = ExactRational::from_integer(factorial(n as u32)).recip();
    sum.scale(&inv) == Polynomial::monomial(ExactRational::one(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_kind() {
        assert_eq!(stirling_first(1, 1), BigInt::from(1));
        assert_eq!(stirling_first(3, 2), BigInt::from(-3));
        assert_eq!(stirling_first(0, 0), BigInt::from(1));
        assert_eq!(stirling_first(4, 0), BigInt::from(0));
        assert_eq!(stirling_first(2, 5), BigInt::from(0));
        let abs: Vec<_> = stirling_first_row(5)[1..].iter().map(|s| s.magnitude().clone()).collect();
        let expected: Vec<_> = [24u32, 50, 35, 10, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(abs, expected);
    }

    #[test]
    fn second_kind() {
        assert_eq!(stirling_second(3, 2), BigInt::from(3));
        assert_eq!(stirling_second(6, 6), BigInt::from(1));
        assert_eq!(stirling_second_row(4), ints(&[0, 1, 7, 6, 1]));
        assert_eq!(stirling_second(3, 4), BigInt::from(0));
    }

    #[test]
    fn geometric_polynomials() {
        assert_eq!(geometric_polynomial(0), Polynomial::from_i64s(&[1]));
        assert_eq!(geometric_polynomial(2), Polynomial::from_i64s(&[0, 1, 2]));
        assert_eq!(geometric_polynomial(4), Polynomial::from_i64s(&[0, 1, 14, 36, 24]));
        assert_eq!(
            geometric_polynomial(5),
            Polynomial::from_i64s(&[0, 1, 30, 150, 240, 120])
        );
        for n in 0..=8 {
            assert!(geometric_inverse_check(n), "n = {n}");
        }
    }
}
