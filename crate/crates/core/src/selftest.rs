//! Built-in verification suites: quadrature calibration on integrals with
//! known values, and the exact identities the closed forms rest on.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalan2::{c2_gf_coefficient, double_factorial_sum_with, C2Params};
use crate::exact::{
    catalan_formulas, catalan_stream, double_factorial, geometric_inverse_check, rat, BigInt, ExactRational,
    Polynomial,
};
use crate::functional::cf_half_reduction_check;
use crate::hyper::rel_diff;
use crate::qfunc::{
    boyadzhiev_check, printed_q_row, printed_zform_row, q_form_polylog, q_form_stirling, q_forms_recurrence,
    q_recurrence_check, q_zform, pochhammer_derivative_check,
};
use crate::quad::{beta_halfline, euler_integral_2f1_check, integrate_halfline, HalflineIntegrand};

/// `(alpha, beta, gamma, z)` with both sides of the Euler integral finite and
/// the hypergeometric argument `1 - z` inside the unit disc.
pub const EULER_CASES: [(f64, f64, f64, f64); 10] = [
    (1.0, 1.5, 1.5, 1.0),
    (2.0, 1.0, 1.0, 0.5),
    (1.0, 1.5, -0.5, 0.25),
    (1.0, 1.5, -1.5, 1.6),
    (0.5, 2.0, 0.25, 0.8),
    (3.0, 0.75, 2.5, 1.3),
    (1.5, 2.5, 1.0, 0.4),
    (2.5, 1.25, 0.5, 1.5),
    (0.75, 0.6, 0.2, 0.9),
    (4.0, 3.0, 2.0, 0.7),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelftestConfig {
    pub quad_tol: f64,
    pub beta_cases: usize,
    pub seed: u64,
    /// Replaces `(-1)!! = 1` by `(-1)!! = 0` in the double-factorial sum; the
    /// suite must then fail.
    pub mutate_double_factorial: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            quad_tol: 1e-10,
            beta_cases: 50,
            seed: 20_240_611,
            mutate_double_factorial: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {} ({} cases)\n", s.name, s.cases));
            for f in &s.failures {
                out.push_str(&format!("  - {f}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaCase {
    pub s: f64,
    pub r: f64,
    pub b: f64,
    pub value: f64,
    pub reference: f64,
    pub abs_err_est: f64,
}

impl BetaCase {
    pub fn rel_error(&self) -> f64 {
        (self.value - self.reference).abs() / self.reference.abs()
    }

    /// The estimate bounds the true error.
    pub fn calibrated(&self) -> bool {
        self.abs_err_est >= (self.value - self.reference).abs()
    }
}

/// Parameters of random `int_0^inf t^(s-1)/(b+t)^r dt` with `s in (0.2, 3)`,
/// `r - s in (1.1, 8)`, `b in (0.1, 10)`.
pub fn beta_class_params(cases: usize, seed: u64) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let s = rng.gen_range(0.2..3.0);
            let r = s + rng.gen_range(1.1..8.0);
            (s, r, rng.gen_range(0.1..10.0))
        })
        .collect()
}

/// One Beta-class integral by quadrature, against the Gamma-function value.
pub fn beta_case(s: f64, r: f64, b: f64, tol: f64) -> crate::Result<BetaCase> {
    let g = HalflineIntegrand::new(move |t: f64| t.powf(s - 1.0) / (b + t).powf(r), s - 1.0, r - s + 1.0)?;
    let q = integrate_halfline(&g, tol)?;
    Ok(BetaCase {
        s,
        r,
        b,
        value: q.value,
        reference: beta_halfline(s, r, b)?,
        abs_err_est: q.abs_err_est,
    })
}

pub fn beta_class_suite(cases: usize, seed: u64, tol: f64) -> crate::Result<Vec<BetaCase>> {
    beta_class_params(cases, seed)
        .into_iter()
        .map(|(s, r, b)| beta_case(s, r, b, tol))
        .collect()
}

fn suite(name: &'static str, cases: usize, failures: Vec<String>) -> SuiteResult {
    SuiteResult { name, cases, failures }
}

fn quad_beta(cfg: &SelftestConfig) -> SuiteResult {
    let tol = cfg.quad_tol;
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for (s, r, b) in beta_class_params(cfg.beta_cases, cfg.seed) {
        match beta_case(s, r, b, tol) {
            Ok(c) if c.rel_error() > 10.0 * tol => {
                failures.push(format!("s={s}, r={r}, b={b}: relative error {:e} > 10 tol", c.rel_error()));
                cases.push(c);
            }
            Ok(c) => cases.push(c),
            Err(e) => failures.push(format!("s={s}, r={r}, b={b}: {e}")),
        }
    }
    let calibrated = cases.iter().filter(|c| c.calibrated()).count();
    if (calibrated as f64) < 0.95 * cases.len() as f64 {
        failures.push(format!("error estimate bounds the error in only {calibrated}/{} cases", cases.len()));
    }
    suite("quad_beta", cfg.beta_cases, failures)
}

fn euler() -> SuiteResult {
    let failures = EULER_CASES
        .iter()
        .filter_map(|&(a, b, g, z)| match euler_integral_2f1_check(a, b, g, z) {
            Ok((q, c)) if rel_diff(q, c) <= 1e-9 => None,
            Ok((q, c)) => Some(format!("({a}, {b}, {g}, {z}): quadrature {q:e} vs closed form {c:e}")),
            Err(e) => Some(format!("({a}, {b}, {g}, {z}): {e}")),
        })
        .collect();
    suite("euler_2f1", EULER_CASES.len(), failures)
}

fn double_factorial_suite(cfg: &SelftestConfig) -> SuiteResult {
    let dfact = |m: i64| -> BigInt {
        if cfg.mutate_double_factorial && m == -1 {
            BigInt::zero()
        } else {
            double_factorial(m).expect("m >= -1")
        }
    };
    let mut failures = Vec::new();
    let mut cases = 0;
    for &(a, b) in &[(0.5, 0.25), (1.0, 4.0), (2.0, 1.0), (0.3, 1.0)] {
        for n in 0..=10 {
            cases += 1;
            let p = C2Params::new(a, b, n).expect("valid grid");
            let sum = double_factorial_sum_with(&p, dfact);
            let gf = c2_gf_coefficient(&p).expect("valid grid").0;
            if rel_diff(sum, gf) > 1e-12 {
                failures.push(format!("(a, b, n) = ({a}, {b}, {n}): sum {sum:e} vs generating function {gf:e}"));
            }
        }
    }
    suite("double_factorial", cases, failures)
}

fn catalan_suite() -> SuiteResult {
    let stream = catalan_stream(101);
    let failures = (0..=100u32)
        .filter_map(|n| {
            let f = catalan_formulas(n);
            (!f.agree() || f.binomial != ExactRational::from_integer(stream[n as usize].clone())).then(|| format!("n = {n}: formulas disagree"))
        })
        .collect();
    suite("catalan_exact", 101, failures)
}

fn identity_suites(cfg: &SelftestConfig) -> Vec<SuiteResult> {
    let mut out = Vec::new();

    let failures = (0..=8).filter(|&n| !geometric_inverse_check(n)).map(|n| format!("n = {n}")).collect();
    out.push(suite("geometric_inverse", 9, failures));

    let mut failures = Vec::new();
    for n in 0..=8u32 {
        for k in 0..=n {
            if !pochhammer_derivative_check(n, k) {
                failures.push(format!("(n, k) = ({n}, {k})"));
            }
        }
    }
    out.push(suite("pochhammer_derivative", 45, failures));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for case in 0..20 {
        let f = random_polynomial(&mut rng, 5);
        let y = rat(rng.gen_range(-9..=9), 10);
        if !matches!(boyadzhiev_check(&f, &y), Ok(true)) {
            failures.push(format!("case {case}: f = {}, y = {y}", f.display("k")));
        }
    }
    out.push(suite("boyadzhiev", 20, failures));

    let mut failures = Vec::new();
    let rec = q_forms_recurrence(6);
    for n in 0..=6u32 {
        let s = q_form_stirling(n);
        if s != rec[n as usize] {
            failures.push(format!("n = {n}: stirling vs recurrence"));
        }
        if n > 0 && q_form_polylog(n).as_ref() != Ok(&s) {
            failures.push(format!("n = {n}: stirling vs polylog"));
        }
        if let Some(row) = printed_q_row(n) {
            if row != s {
                failures.push(format!("n = {n}: tabulated row"));
            }
        }
        if let Some(z) = printed_zform_row(n) {
            if q_zform(&s, n).as_ref() != Some(&z) {
                failures.push(format!("n = {n}: z-form"));
            }
        }
        if !q_recurrence_check(n, &rat(1, 2), &rat(2, 7)) {
            failures.push(format!("n = {n}: differential-difference equation"));
        }
    }
    out.push(suite("q_forms", 7, failures));

    let mut failures = Vec::new();
    for &(a, b) in &[(1.0, 1.0), (1.0, 4.0), (2.0, 1.0), (2.0, 4.0), (0.5, 0.25)] {
        for n in 0..=8 {
            if !matches!(cf_half_reduction_check(a, b, n, 1e-12), Ok(true)) {
                failures.push(format!("(a, b, n) = ({a}, {b}, {n})"));
            }
        }
    }
    out.push(suite("half_reduction", 45, failures));
    out
}

/// Polynomial of degree `<= max_degree` with small random rational coefficients.
pub fn random_polynomial(rng: &mut impl Rng, max_degree: usize) -> Polynomial<ExactRational> {
    let degree = rng.gen_range(0..=max_degree);
    Polynomial::new(
        (0..=degree)
            .map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
            .collect(),
    )
}

pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let mut suites = vec![quad_beta(cfg), euler(), double_factorial_suite(cfg), catalan_suite()];
    suites.extend(identity_suites(cfg));
    SelftestReport { suites }
}
