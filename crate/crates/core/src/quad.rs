//! Adaptive Gauss-Kronrod integration over `[0, inf)`.
//!
//! The half line is mapped onto `(0, 1)` by `t = u/(1-u)` composed with an
//! endpoint-graded power map, giving `t = w^ma / (1-w)^mb`. The grades `ma`
//! and `mb` come from the declared endpoint behaviour `t^sigma` at zero and
//! `t^-tau` at infinity and are chosen so the transformed integrand vanishes
//! at least like `w^3` and `(1-w)^3`. Globally adaptive bisection with the
//! 21-point Kronrod rule and its embedded 10-point Gauss rule does the rest.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Error, Result};
use crate::hyper::pfq_auto;

/// Absolute error floor: keeps integrals of true zeros from stalling.
pub const ABS_FLOOR: f64 = 1e-300;
/// Evaluation budget per integral.
pub const MAX_EVALUATIONS: usize = 21 * 6000;

const MAX_GRADE: f64 = 64.0;

/// A function on `(0, inf)` behaving like `t^sigma` at `0+` and `t^-tau` at infinity.
pub struct HalflineIntegrand<F> {
    f: F,
    endpoint_exponent: f64,
    decay_exponent: f64,
}

impl<F: Fn(f64) -> f64> HalflineIntegrand<F> {
    pub fn new(f: F, endpoint_exponent: f64, decay_exponent: f64) -> Result<Self> {
        if !(endpoint_exponent > -1.0) {
            return domain(format!(
                "endpoint exponent {endpoint_exponent} is not integrable at 0 (need > -1)"
            ));
        }
        if !(decay_exponent > 1.0) {
            return domain(format!(
                "decay exponent {decay_exponent} is not integrable at infinity (need > 1)"
            ));
        }
        Ok(HalflineIntegrand {
            f,
            endpoint_exponent,
            decay_exponent,
        })
    }

    pub fn endpoint_exponent(&self) -> f64 {
        self.endpoint_exponent
    }

    pub fn decay_exponent(&self) -> f64 {
        self.decay_exponent
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub evaluations: usize,
}

fn grade(exponent_plus_one: f64) -> f64 {
    (4.0 / exponent_plus_one).ceil().clamp(1.0, MAX_GRADE)
}

#[rustfmt::skip]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[rustfmt::skip]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
#[rustfmt::skip]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    // largest error first; ties broken by position so the order is total
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        scaled = res_asc * (200.0 * scaled / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn kronrod21(h: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = h(center);
    let mut res_k = f_center * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let (f1, f2) = (h(center - x), h(center + x));
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let err = (res_k - res_g) * half;
    Segment {
        lo,
        hi,
        value: res_k * half,
        err: rescale_error(err, res_abs * half.abs(), res_asc * half.abs()),
    }
}

/// Integrates `g` over `[0, inf)` to relative tolerance `tol` (absolute floor [`ABS_FLOOR`]).
///
/// Deterministic: identical inputs produce bit-identical results.
pub fn integrate_halfline<F: Fn(f64) -> f64>(g: &HalflineIntegrand<F>, tol: f64) -> Result<QuadResult> {
    if !(1e-14..=1e-3).contains(&tol) {
        return domain(format!("tolerance {tol} outside [1e-14, 1e-3]"));
    }
    let ma = grade(g.endpoint_exponent + 1.0);
    let mb = grade(g.decay_exponent - 1.0);
    let f = &g.f;
    let h = move |w: f64| -> f64 {
        if w <= 0.0 || w >= 1.0 {
            return 0.0;
        }
        let t = (ma * w.ln() - mb * (-w).ln_1p()).exp();
        if t == 0.0 || !t.is_finite() {
            // graded map makes the integrand vanish here
            return 0.0;
        }
        f(t) * t * (ma / w + mb / (1.0 - w))
    };

    let first = kronrod21(&h, 0.0, 1.0);
    let mut evaluations = 21;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    heap.push(first);

    loop {
        let (value, err) = totals(heap.iter().chain(frozen.iter()));
        if !value.is_finite() || !err.is_finite() {
            return domain("integrand produced non-finite values");
        }
        if err <= (tol * value.abs()).max(ABS_FLOOR) {
            let mut all: Vec<Segment> = heap.into_iter().chain(frozen).collect();
            all.sort_by(|a, b| a.lo.total_cmp(&b.lo));
            let (value, abs_err_est) = totals(all.iter());
            return Ok(QuadResult {
                value,
                abs_err_est,
                evaluations,
            });
        }
        let fail = Error::Quadrature {
            value,
            abs_err: err,
            evaluations,
        };
        if evaluations + 42 > MAX_EVALUATIONS {
            return Err(fail);
        }
        let Some(worst) = heap.pop() else {
            return Err(fail);
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi || worst.hi - worst.lo < 100.0 * f64::EPSILON * worst.hi {
            frozen.push(worst);
            continue;
        }
        heap.push(kronrod21(&h, worst.lo, mid));
        heap.push(kronrod21(&h, mid, worst.hi));
        evaluations += 42;
    }
}

fn totals<'a>(segs: impl Iterator<Item = &'a Segment>) -> (f64, f64) {
    segs.fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err))
}

/// `int_0^inf t^(s-1) / (b+t)^r dt = b^(s-r) Gamma(s) Gamma(r-s) / Gamma(r)`.
pub fn beta_halfline(s: f64, r: f64, b: f64) -> Result<f64> {
    if !(s > 0.0 && r > s && b > 0.0) || !r.is_finite() || !b.is_finite() {
        return domain(format!("beta_halfline needs 0 < s < r and b > 0 (got s={s}, r={r}, b={b})"));
    }
    Ok(b.powf(s - r) * gamma_ratio(&[s, r - s], &[r]))
}

/// `prod Gamma(num) / prod Gamma(den)`, through log-gamma once arguments get large.
pub(crate) fn gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    let all_small = num.iter().chain(den).all(|&x| x.abs() < 140.0);
    if all_small {
        let n: f64 = num.iter().map(|&x| libm::tgamma(x)).product();
        let d: f64 = den.iter().map(|&x| libm::tgamma(x)).product();
        return n / d;
    }
    let sign_lg = |x: f64| {
        let (lg, sign) = libm::lgamma_r(x);
        (lg, sign as f64)
    };
    let (mut log, mut sign) = (0.0, 1.0);
    for &x in num {
        let (l, s) = sign_lg(x);
        log += l;
        sign *= s;
    }
    for &x in den {
        let (l, s) = sign_lg(x);
        log -= l;
        sign *= s;
    }
    sign * log.exp()
}

/// Both sides of the Euler-type integral
/// `int_0^inf s^(beta-1) (1+s)^(gamma-beta-1) (1+s z)^(-alpha) ds
///  = Gamma(beta) Gamma(alpha+1-gamma) / Gamma(alpha+beta-gamma+1) 2F1(alpha, beta; alpha+beta-gamma+1; 1-z)`,
/// returned as `(quadrature, closed form)`.
pub fn euler_integral_2f1_check(alpha: f64, beta: f64, gamma: f64, z: f64) -> Result<(f64, f64)> {
    if !(beta > 0.0 && alpha + 1.0 - gamma > 0.0 && z > 0.0) {
        return domain("euler integral needs beta > 0, alpha + 1 - gamma > 0, z > 0");
    }
    let integrand = HalflineIntegrand::new(
        move |s: f64| s.powf(beta - 1.0) * (1.0 + s).powf(gamma - beta - 1.0) * (1.0 + s * z).powf(-alpha),
        beta - 1.0,
        alpha + 2.0 - gamma,
    )?;
    let quadrature = integrate_halfline(&integrand, 1e-12)?.value;
    let c = alpha + beta - gamma + 1.0;
    let closed = gamma_ratio(&[beta, alpha + 1.0 - gamma], &[c]) * pfq_auto(&[alpha, beta], &[c], 1.0 - z)?;
    Ok((quadrature, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn beta_integrand(s: f64, r: f64, b: f64) -> HalflineIntegrand<impl Fn(f64) -> f64> {
        HalflineIntegrand::new(move |t: f64| t.powf(s - 1.0) / (b + t).powf(r), s - 1.0, r - s + 1.0).unwrap()
    }

    #[test]
    fn beta_examples() {
        let q = integrate_halfline(&beta_integrand(1.5, 3.0, 1.0), 1e-12).unwrap();
        assert_relative_eq!(q.value, PI / 8.0, max_relative = 1e-12);
        assert_relative_eq!(beta_halfline(1.5, 2.0, 1.0).unwrap(), PI / 2.0, max_relative = 1e-15);
        assert_relative_eq!(beta_halfline(1.0, 2.0, 3.7).unwrap(), 1.0 / 3.7, max_relative = 1e-15);
        let reference = 4f64.powf(-2.5) * libm::tgamma(1.5) * libm::tgamma(2.5) / 6.0;
        assert_relative_eq!(beta_halfline(1.5, 4.0, 4.0).unwrap(), reference, max_relative = 1e-15);
        let q = integrate_halfline(&beta_integrand(1.5, 4.0, 4.0), 1e-11).unwrap();
        assert_relative_eq!(q.value, reference, max_relative = 1e-10);
        let q = integrate_halfline(&beta_integrand(1.5, 10.0, 1.0), 1e-12).unwrap();
        let reference = libm::tgamma(1.5) * libm::tgamma(8.5) / libm::tgamma(10.0);
        assert_relative_eq!(q.value, reference, max_relative = 1e-11);
    }

    #[test]
    fn partial_fraction_example() {
        let g = HalflineIntegrand::new(|t: f64| t.sqrt() / ((1.0 + t) * (1.0 + t)), 0.5, 1.5).unwrap();
        let q = integrate_halfline(&g, 1e-12).unwrap();
        assert_relative_eq!(q.value, PI / 2.0, max_relative = 1e-12);
        assert!(q.abs_err_est >= 0.0 && q.abs_err_est.is_finite());
        assert!(q.evaluations >= 21);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(HalflineIntegrand::new(|t: f64| t, -1.0, 2.0).is_err());
        assert!(HalflineIntegrand::new(|t: f64| t, 0.0, 1.0).is_err());
        let g = HalflineIntegrand::new(|t: f64| 1.0 / (1.0 + t * t), 0.0, 2.0).unwrap();
        assert!(integrate_halfline(&g, 1e-15).is_err());
        assert!(integrate_halfline(&g, 1e-2).is_err());
        assert!(beta_halfline(2.0, 2.0, 1.0).is_err());
        assert!(beta_halfline(1.0, 2.0, 0.0).is_err());
        assert!(euler_integral_2f1_check(1.0, 0.0, 0.5, 1.0).is_err());
    }

    #[test]
    fn deterministic() {
        let g = beta_integrand(0.7, 3.3, 2.0);
        let a = integrate_halfline(&g, 1e-10).unwrap();
        let b = integrate_halfline(&g, 1e-10).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.abs_err_est.to_bits(), b.abs_err_est.to_bits());
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn euler_integral_instances() {
        let (q, c) = euler_integral_2f1_check(1.0, 1.5, 1.5, 1.0).unwrap();
        assert_relative_eq!(q, PI / 2.0, max_relative = 1e-11);
        assert_relative_eq!(c, PI / 2.0, max_relative = 1e-14);
        let (q, c) = euler_integral_2f1_check(2.0, 1.0, 1.0, 0.5).unwrap();
        assert_relative_eq!(q, c, max_relative = 1e-10);
    }

    #[test]
    fn non_converging_integrand_is_reported() {
        // declared decay is a lie: the integral is infinite
        let g = HalflineIntegrand::new(|t: f64| 1.0 / (1.0 + t), 0.0, 2.0).unwrap();
        assert!(integrate_halfline(&g, 1e-10).is_err());
    }
}
