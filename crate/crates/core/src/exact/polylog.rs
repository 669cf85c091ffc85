use super::{ExactRational, Polynomial, RationalFunction};

/// Closed form of `Li_{-k}(x) = sum_{m>=1} m^k x^m` as a rational function,
/// built from `Li_0(x) = x/(1-x)` by `Li_{-k} = x d/dx Li_{-k+1}`.
pub fn polylog_neg(k: u32) -> RationalFunction {
    let x = RationalFunction::from_poly(Polynomial::<ExactRational>::x());
    let mut li = RationalFunction::new(Polynomial::x(), Polynomial::from_i64s(&[1, -1]))
        .expect("nonzero denominator");
    for _ in 0..k {
        li = x.clone() * li.derivative();
    }
    li
}
