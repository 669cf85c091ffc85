//! Acceptance criteria 1-10. Runs without the libtest harness so every
//! criterion prints a single PASS/FAIL line; the process fails if any does.

use std::time::{Duration, Instant};

use catalan2_core::catalan2::{
    c2_double_factorial_sum, c2_gf_coefficient, c2_hyp_closed, c2_hyp_unbounded, c2_jacobi, c2_quadrature,
    c2_table_printed,
};
use catalan2_core::errata::{pi_ratios, prefactor_ratios, ERRATA_QUAD_TOL, PREFACTOR_POINTS};
use catalan2_core::exact::{
    catalan_formulas, catalan_stream, geometric_inverse_check, rat, to_exact, to_f64, ExactRational,
};
use catalan2_core::functional::{
    cf_double_sum, cf_half_reduction_check, cf_limit_equal, cf_quadrature, cf_series, cf_via_q_exact,
};
use catalan2_core::hyper::rel_diff;
use catalan2_core::qfunc::{
    boyadzhiev_check, pochhammer_derivative_check, printed_q_row, printed_zform_row, q_form_polylog,
    q_form_stirling, q_forms_recurrence, q_series, q_stirling_exact, q_zform,
};
use catalan2_core::quad::euler_integral_2f1_check;
use catalan2_core::selftest::{beta_class_suite, random_polynomial, EULER_CASES};
use catalan2_core::{C2Params, CFParams, Normalization, QParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL_SPECIALIZATION: f64 = 1e-10;
const TOL_GRID: f64 = 1e-8;
const TOL_PI: f64 = 1e-8;
const TOL_FUNCTIONAL_REL: f64 = 1e-8;
const TOL_FUNCTIONAL_ABS: f64 = 1e-12;
const TOL_PREFACTOR: f64 = 1e-8;
const TOL_HALF: f64 = 1e-8;
const TOL_Q_SERIES: f64 = 1e-11;
const TOL_BETA: f64 = 1e-10;
const TOL_EULER: f64 = 1e-9;

const QUAD_TOL: f64 = 1e-11;
const SERIES_TOL: f64 = 1e-18;
const SERIES_MAX_TERMS: usize = 1_000_000;
const SEED: u64 = 20_240_611;

const GRID_A: [f64; 5] = [0.3, 0.5, 1.0, 2.0, 5.0];
const GRID_B: [f64; 3] = [0.25, 1.0, 4.0];

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1_exact_catalan() -> Outcome {
    const LIST: [u64; 8] = [1, 1, 2, 5, 14, 42, 132, 429];
    let stream = catalan_stream(301);
    for (n, rec) in stream.iter().enumerate() {
        let f = catalan_formulas(n as u32);
        if !f.agree() || f.binomial != ExactRational::from_integer(rec.clone()) {
            return Err(format!("disagreement at n = {n}"));
        }
    }
    for (n, &c) in LIST.iter().enumerate() {
        if stream[n] != c.into() {
            return Err(format!("C_{n} = {} != {c}", stream[n]));
        }
    }
    Ok("four closed forms and recurrence agree for n <= 300; C_0..C_7 = 1,1,2,5,14,42,132,429".into())
}

fn c2_specialization() -> Outcome {
    let stream = catalan_stream(16);
    let mut worst = 0.0f64;
    let mut evaluated = 0;
    for n in 0..=15u32 {
        let c = to_f64(&ExactRational::from_integer(stream[n as usize].clone()));
        let p = C2Params::new(0.5, 0.25, n).map_err(|e| e.to_string())?;
        let gf = Normalization::GeneratingFunction;
        let mut values = vec![
            ("double_factorial", c2_double_factorial_sum(&p)),
            ("hyp_closed", c2_hyp_closed(&p, gf).map_err(|e| e.to_string())?),
            ("hyp_unbounded", c2_hyp_unbounded(&p, gf).map_err(|e| e.to_string())?),
            ("quadrature", c2_quadrature(&p, QUAD_TOL).map_err(|e| e.to_string())?.value),
            ("gf_coefficient", c2_gf_coefficient(&p).map_err(|e| e.to_string())?.0),
        ];
        if n >= 1 {
            values.push(("jacobi", c2_jacobi(&p, gf).map_err(|e| e.to_string())?));
        }
        if let Some(t) = c2_table_printed(n, 0.5, 0.25) {
            values.push(("table_printed / pi", t / std::f64::consts::PI));
        }
        for (name, v) in values {
            let d = rel_diff(v, c);
            if d > TOL_SPECIALIZATION {
                return Err(format!("{name} at n = {n}: {v} vs C_n = {c}"));
            }
            worst = worst.max(d);
            evaluated += 1;
        }
    }
    Ok(format!(
        "{evaluated} values, max rel diff {worst:.2e} <= {TOL_SPECIALIZATION:e} (Legendre excluded: a = sqrt b)"
    ))
}

fn grid_values(a: f64, b: f64, n: u32) -> Result<Vec<f64>, String> {
    let p = C2Params::new(a, b, n).map_err(|e| e.to_string())?;
    let gf = Normalization::GeneratingFunction;
    let mut v = vec![
        c2_double_factorial_sum(&p),
        c2_hyp_closed(&p, gf).map_err(|e| e.to_string())?,
        c2_quadrature(&p, QUAD_TOL).map_err(|e| e.to_string())?.value,
        c2_gf_coefficient(&p).map_err(|e| e.to_string())?.0,
    ];
    if n >= 1 {
        v.push(c2_jacobi(&p, gf).map_err(|e| e.to_string())?);
    }
    Ok(v)
}

fn c3_grid() -> Outcome {
    let mut worst = (0.0f64, (0.0, 0.0, 0));
    for &a in &GRID_A {
        for &b in &GRID_B {
            for n in 0..=12 {
                let v = grid_values(a, b, n)?;
                for i in 0..v.len() {
                    for j in i + 1..v.len() {
                        let d = rel_diff(v[i], v[j]);
                        if d > worst.0 {
                            worst = (d, (a, b, n));
                        }
                    }
                }
            }
        }
    }
    let (d, at) = worst;
    check(d <= TOL_GRID, format!("195 points, max pairwise rel diff {d:.2e} at (a, b, n) = {at:?}, tol {TOL_GRID:e}"))
}

fn c4_pi() -> Outcome {
    let rows = pi_ratios(12, &GRID_A, &GRID_B, ERRATA_QUAD_TOL).map_err(|e| e.to_string())?;
    let pi = std::f64::consts::PI;
    let worst = rows.iter().map(|r| (r.ratio - pi).abs() / pi).fold(0.0, f64::max);
    check(
        !rows.is_empty() && worst <= TOL_PI,
        format!("{} printed/quadrature ratios, max |ratio - pi|/pi {worst:.2e}, tol {TOL_PI:e}", rows.len()),
    )
}

fn c5_functional() -> Outcome {
    let mut worst_quad = 0.0f64;
    let mut worst_series = 0.0f64;
    let mut points = 0;
    let mut series_points = 0;
    for a in [0.5, 1.0, 2.0, 4.0] {
        for b in [0.5, 1.0, 4.0] {
            for p in [0.25, 0.5, 0.75] {
                for n in 0..=8 {
                    let params = CFParams::new(a, b, p, n).map_err(|e| e.to_string())?;
                    let ds = cf_double_sum(&params);
                    let q = cf_quadrature(&params, QUAD_TOL).map_err(|e| e.to_string())?.value;
                    let abs = (ds - q).abs();
                    if abs > TOL_FUNCTIONAL_ABS && abs > TOL_FUNCTIONAL_REL * ds.abs() {
                        return Err(format!("double_sum {ds} vs quadrature {q} at {:?}", (a, b, p, n)));
                    }
                    worst_quad = worst_quad.max(rel_diff(ds, q));
                    points += 1;
                    let y = params.ratio();
                    if !(0.9..=1.1).contains(&y.abs()) {
                        let s = cf_series(&params, SERIES_TOL, SERIES_MAX_TERMS).map_err(|e| e.to_string())?.value;
                        let abs = (ds - s).abs();
                        if abs > TOL_FUNCTIONAL_ABS && abs > TOL_FUNCTIONAL_REL * ds.abs() {
                            return Err(format!("series {s} vs double_sum {ds} at {:?}", (a, b, p, n)));
                        }
                        worst_series = worst_series.max(rel_diff(ds, s));
                        series_points += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{points} points, double_sum vs quadrature max rel {worst_quad:.2e}; \
         {series_points} off-boundary series max rel {worst_series:.2e}"
    ))
}

fn c6_prefactor() -> Outcome {
    let rows = prefactor_ratios(&[1, 2, 3, 4], &PREFACTOR_POINTS, ERRATA_QUAD_TOL).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for r in &rows {
        let printed_vs_expected = rel_diff(r.ratio, r.expected);
        let corrected_vs_oracle = rel_diff(r.corrected, r.oracle);
        let printed_vs_oracle = rel_diff(r.printed / r.expected, r.oracle);
        let d = printed_vs_expected.max(corrected_vs_oracle).max(printed_vs_oracle);
        if d > TOL_PREFACTOR {
            return Err(format!("{r:?}"));
        }
        worst = worst.max(d);
    }
    Ok(format!("{} cases, printed/corrected = n!/(n+1) and corrected = oracle, max rel {worst:.2e}", rows.len()))
}

fn c7_half() -> Outcome {
    let mut cases = 0;
    for a in [1.0, 2.0] {
        for b in [1.0, 4.0] {
            for n in 0..=8 {
                if !cf_half_reduction_check(a, b, n, TOL_HALF).map_err(|e| e.to_string())? {
                    return Err(format!("c_n(a,b;1/2) != C_n(a,b) at {:?}", (a, b, n)));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases within {TOL_HALF:e}"))
}

fn c8_q() -> Outcome {
    let rec = q_forms_recurrence(6);
    for n in 0..=4u32 {
        let stirling = q_form_stirling(n);
        let printed = printed_q_row(n).ok_or("missing printed row")?;
        if stirling != printed || rec[n as usize] != printed {
            return Err(format!("symbolic Q_{n} disagrees with the printed table"));
        }
        if n >= 1 && q_form_polylog(n).map_err(|e| e.to_string())? != printed {
            return Err(format!("polylog Q_{n} disagrees"));
        }
    }
    for n in 1..=5u32 {
        let z = q_zform(&q_form_stirling(n), n).ok_or("z-form not divisible")?;
        if Some(z) != printed_zform_row(n) {
            return Err(format!("z-form n = {n} disagrees"));
        }
    }
    for n in 5..=6u32 {
        if q_form_stirling(n) != rec[n as usize] || q_form_polylog(n).map_err(|e| e.to_string())? != rec[n as usize] {
            return Err(format!("symbolic Q_{n} disagrees"));
        }
    }

    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 0..=6u32 {
        for y in [0.05, 0.1, 0.3, 0.5, 0.7, 0.8, 0.9] {
            for p in [0.1, 0.25, 0.35, 0.5, 0.75, 0.9] {
                let exact = q_stirling_exact(n, &to_exact(y).unwrap(), &to_exact(p).unwrap()).map_err(|e| e.to_string())?;
                let e = to_f64(&exact);
                let params = QParams::new(n, y, p).map_err(|e| e.to_string())?;
                let s = q_series(&params, SERIES_TOL, SERIES_MAX_TERMS).map_err(|e| e.to_string())?.value;
                let d = if e == 0.0 { s.abs() } else { rel_diff(s, e) };
                if d > TOL_Q_SERIES {
                    return Err(format!("q_series {s} vs exact {e} at {:?}", (n, y, p)));
                }
                worst = worst.max(d);
                cases += 1;
            }
        }
    }

    let half = rat(1, 2);
    if q_stirling_exact(1, &rat(1, 1), &half).map_err(|e| e.to_string())? != rat(1, 8) {
        return Err("Q(1, 1, 1/2) != 1/8".into());
    }
    for n in 1..=6 {
        for p in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            if q_stirling_exact(n, &rat(0, 1), &p).map_err(|e| e.to_string())? != rat(0, 1) {
                return Err(format!("Q({n}, 0, {p}) != 0"));
            }
        }
    }
    // c_0(b^p, b; p) = 1/(2 b^p): exactly at b = 4, p = 1/2 and in floats elsewhere
    let bp = rat(2, 1);
    if cf_via_q_exact(&bp, &rat(4, 1), &half, &bp, 0).map_err(|e| e.to_string())? != rat(1, 4) {
        return Err("c_0(2, 4; 1/2) != 1/4".into());
    }
    for (b, p) in [(0.5, 0.25), (3.0, 0.75), (9.0, 0.5)] {
        let v = cf_limit_equal(b, p, 0).map_err(|e| e.to_string())?;
        let expected = 1.0 / (2.0 * f64::powf(b, p));
        if rel_diff(v, expected) > 1e-14 {
            return Err(format!("c_0(b^p, b; p) = {v} != {expected} at b = {b}, p = {p}"));
        }
    }
    Ok(format!(
        "exact forms agree (n <= 6, printed n <= 4, z-forms n <= 5); {cases} series cases max rel {worst:.2e}; \
         Q(1,1,1/2) = 1/8, Q(n,0,p) = 0, c_0(b^p,b;p) = 1/(2b^p)"
    ))
}

fn c9_proofs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ys = [rat(1, 2), rat(-1, 3), rat(2, 7), rat(9, 10)];
    for i in 0..20 {
        let f = random_polynomial(&mut rng, 5);
        let y = &ys[i % ys.len()];
        if !boyadzhiev_check(&f, y).map_err(|e| e.to_string())? {
            return Err(format!("boyadzhiev fails for f = {} at y = {y}", f.display("k")));
        }
    }
    for n in 0..=8 {
        for k in 0..=n {
            if !pochhammer_derivative_check(n, k) {
                return Err(format!("pochhammer derivative fails at n = {n}, k = {k}"));
            }
        }
    }
    for n in 0..=8 {
        if !geometric_inverse_check(n) {
            return Err(format!("geometric inverse fails at n = {n}"));
        }
    }
    Ok("20 boyadzhiev cases, 45 pochhammer cases, geometric inverse n <= 8 (exact)".into())
}

fn c10_quadrature() -> Outcome {
    let cases = beta_class_suite(50, SEED, TOL_BETA).map_err(|e| e.to_string())?;
    let worst_beta = cases.iter().map(|c| c.rel_error()).fold(0.0, f64::max);
    if worst_beta > 10.0 * TOL_BETA {
        return Err(format!("Beta-class max rel error {worst_beta:.2e} > 10 tol"));
    }
    let mut worst_euler = 0.0f64;
    for &(alpha, beta, gamma, z) in &EULER_CASES {
        let (quad, series) = euler_integral_2f1_check(alpha, beta, gamma, z).map_err(|e| e.to_string())?;
        let d = rel_diff(quad, series);
        if d > TOL_EULER {
            return Err(format!("Euler integral {quad} vs 2F1 {series} at {:?}", (alpha, beta, gamma, z)));
        }
        worst_euler = worst_euler.max(d);
    }
    Ok(format!(
        "{} Beta cases max rel {worst_beta:.2e} <= 10 x {TOL_BETA:e}; {} Euler cases max rel {worst_euler:.2e}",
        cases.len(),
        EULER_CASES.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 10] = [
        ("1 exact Catalan agreement", c1_exact_catalan, Some(Duration::from_secs(1))),
        ("2 specialization (1/2, 1/4)", c2_specialization, None),
        ("3 cross-representation grid", c3_grid, Some(Duration::from_secs(60))),
        ("4 pi normalization erratum", c4_pi, None),
        ("5 functional grid", c5_functional, Some(Duration::from_secs(120))),
        ("6 prefactor erratum", c6_prefactor, None),
        ("7 p = 1/2 reduction", c7_half, None),
        ("8 Q exactness", c8_q, None),
        ("9 proof-machinery identities", c9_proofs, None),
        ("10 quadrature calibration", c10_quadrature, None),
    ];
    let total = Instant::now();
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = budget.is_some_and(|b| elapsed > b);
        let (ok, detail) = match outcome {
            Ok(d) if over_budget => (false, format!("{d}; exceeded {:?} budget", budget.unwrap())),
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        println!("{} criterion {name} [{:.2?}]: {detail}", if ok { "PASS" } else { "FAIL" }, elapsed);
        if !ok {
            failed.push(name);
        }
    }
    let elapsed = total.elapsed();
    let over = elapsed > Duration::from_secs(300);
    println!("acceptance: {}/10 passed in {elapsed:.2?}", 10 - failed.len());
    if over {
        println!("FAIL total runtime exceeds 5 minutes");
    }
    if !failed.is_empty() || over {
        std::process::exit(1);
    }
}
