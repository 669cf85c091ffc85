use super::*;
use crate::exact::{int, rat, rising_factorial};
use approx::assert_relative_eq;

#[test]
fn generated_forms_agree_with_table() {
    let rec = q_forms_recurrence(6);
    for n in 0..=4u32 {
        let printed = printed_q_row(n).unwrap();
        assert_eq!(q_form_stirling(n), printed, "stirling n={n}");
        assert_eq!(rec[n as usize], printed, "recurrence n={n}");
        if n > 0 {
            assert_eq!(q_form_polylog(n).unwrap(), printed, "polylog n={n}");
        }
    }
    for n in 5..=6u32 {
        assert_eq!(q_form_stirling(n), rec[n as usize]);
        assert_eq!(q_form_polylog(n).unwrap(), rec[n as usize]);
    }
}

#[test]
fn zforms_match_corrected_table() {
    for n in 1..=5u32 {
        let z = q_zform(&q_form_stirling(n), n).expect("divisible");
        assert_eq!(z, printed_zform_row(n).unwrap(), "n={n}");
    }
}

#[test]
fn zform_with_literal_cubic_typo_does_not_match() {
    // z^3 - 14z + 36z - 24 collapses to z^3 + 22z - 24
    let zf = q_zform(&q_form_stirling(4), 4).unwrap();
    let p3 = zf.coeffs().iter().map(|c| c.coeff(3)).collect::<Vec<_>>();
    assert_eq!(p3, vec![int(-24), int(36), int(-14), int(1)]);
}

#[test]
fn q1_closed_form() {
    // Q(1) = p y / (1+y)^2
    let q = QParams::new(1, 0.5, 0.3).unwrap();
    let expected = 0.3 * 0.5 / 2.25;
    assert_relative_eq!(q_stirling(&q), expected, max_relative = 1e-15);
    assert_relative_eq!(q_polylog(&q).unwrap(), expected, max_relative = 1e-15);
    assert_relative_eq!(q_series(&q, 1e-15, 10_000).unwrap().value, expected, max_relative = 1e-13);
}

#[test]
fn exact_representations_coincide() {
    for n in 1..=6 {
        for (y, p) in [(rat(1, 2), rat(3, 10)), (rat(1, 1), rat(1, 3)), (rat(7, 8), rat(9, 10))] {
            let a = q_stirling_exact(n, &y, &p).unwrap();
            assert_eq!(a, q_polylog_exact(n, &y, &p).unwrap());
            assert_eq!(a, eval_form(&q_forms_recurrence(n)[n as usize], &y, &p));
        }
    }
    assert_eq!(q_stirling_exact(0, &int(1), &rat(1, 2)).unwrap(), rat(1, 2));
    assert!(q_polylog_exact(0, &int(1), &rat(1, 2)).is_err());
}

#[test]
fn series_converges_to_closed_form() {
    for n in 0..=5 {
        for (y, p) in [(0.5, 0.3), (0.9, 0.7), (0.1, 0.5), (0.0, 0.4)] {
            let q = QParams::new(n, y, p).unwrap();
            let s = q_series(&q, 1e-15, 1_000_000).unwrap();
            assert_relative_eq!(s.value, q_stirling(&q), max_relative = 1e-11, epsilon = 1e-300);
        }
    }
}

#[test]
fn series_rejects_boundary_and_bad_params() {
    let q = QParams::new(2, 1.0, 0.5).unwrap();
    assert!(matches!(q_series(&q, 1e-12, 1000), Err(Error::Divergent(_))));
    assert!(QParams::new(1, 1.5, 0.5).is_err());
    assert!(QParams::new(1, 0.5, 1.0).is_err());
    assert!(QParams::new(1, 0.5, 0.0).is_err());
}

#[test]
fn printed_hypergeometric_form_is_off() {
    let c = q_hyp_comparison(&QParams::new(1, 0.5, 0.3).unwrap()).unwrap();
    assert_relative_eq!(c.ratio, 8.0, max_relative = 1e-13);
    let c = q_hyp_comparison(&QParams::new(2, 0.5, 0.3).unwrap()).unwrap();
    assert!((c.ratio - 1.0).abs() > 1.0);
}

#[test]
fn rederived_hypergeometric_form_matches() {
    for n in 1..=5 {
        for (y, p) in [(0.5, 0.35), (0.8, 0.7), (0.2, 0.45)] {
            let q = QParams::new(n, y, p).unwrap();
            let c = q_hyp_comparison(&q).unwrap_or_else(|e| panic!("{q:?}: {e}"));
            assert_relative_eq!(c.rederived, c.reference, max_relative = 1e-11);
        }
    }
}

#[test]
fn hypergeometric_form_rejects_degenerate_parameters() {
    // the printed form terminates before the pole
    let q = QParams::new(2, 1.0 / 3.0, 1.0 / 3.0).unwrap();
    assert!(q_hyp(&q, 1e-15, 1000).unwrap().is_finite());
    assert!(matches!(q_hyp_rederived(&q, 1e-15, 1000), Err(Error::ParameterPole(_))));
    let q = QParams::new(2, 0.5, 0.25).unwrap();
    assert!(matches!(q_hyp_rederived(&q, 1e-15, 1000), Err(Error::ParameterPole(_))));
}

#[test]
fn recurrence_holds() {
    for n in 0..=6 {
        assert!(q_recurrence_check(n, &rat(1, 2), &rat(3, 10)));
        assert!(q_recurrence_check(n, &rat(1, 1), &rat(2, 3)));
    }
}

#[test]
fn derivative_form_and_pochhammer() {
    for n in 0..=5 {
        assert!(q_derivative_form_check(n, 60, 0.4, 0.3), "n={n}");
        assert!(q_derivative_form_check(n, 5, 0.9, 0.6), "n={n} short");
        for k in 0..=n + 1 {
            assert!(pochhammer_derivative_check(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn boyadzhiev_identity() {
    let f = Polynomial::from_i64s(&[3, -1, 0, 2, 1]);
    assert!(boyadzhiev_check(&f, &rat(1, 3)).unwrap());
    assert!(boyadzhiev_check(&f, &rat(-1, 2)).unwrap());
    assert!(boyadzhiev_check(&f, &int(1)).is_err());
}

#[test]
fn display_is_readable() {
    assert_eq!(display_form(&printed_q_row(0).unwrap(), "t"), "(1)t");
}

#[test]
fn boyadzhiev_examples() {
    assert!(boyadzhiev_check(&Polynomial::from_i64s(&[1]), &rat(2, 5)).unwrap());
    let k = Polynomial::from_i64s(&[0, 1]);
    assert_eq!(polynomial_series_closed(&k, &rat(1, 2)).unwrap(), int(2));
    assert!(boyadzhiev_check(&k, &rat(1, 2)).unwrap());
    // f(k) = (-p k)_3 reproduces the Stirling closed form at x = -y
    let p = rat(2, 7);
    let f = rising_factorial(&k.scale(&-p.clone()), 3);
    let y = rat(3, 5);
    assert!(boyadzhiev_check(&f, &-y.clone()).unwrap());
    assert_eq!(polynomial_series_closed(&f, &-y.clone()).unwrap(), q_stirling_exact(3, &y, &p).unwrap());
}

#[test]
fn exact_forms_on_random_rationals() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut pairs: Vec<(ExactRational, ExactRational)> = (0..19)
        .map(|_| {
            let yd = rng.gen_range(1..50i64);
            let pd = rng.gen_range(2..50i64);
            (rat(rng.gen_range(0..=yd), yd), rat(rng.gen_range(1..pd), pd))
        })
        .collect();
    pairs.push((int(1), rat(1, 2)));
    let rec = q_forms_recurrence(6);
    for n in 0..=6u32 {
        for (y, p) in &pairs {
            let s = q_stirling_exact(n, y, p).unwrap();
            assert_eq!(s, eval_form(&rec[n as usize], y, p));
            if n > 0 {
                assert_eq!(s, q_polylog_exact(n, y, p).unwrap());
            }
            if let Some(row) = printed_q_row(n) {
                assert_eq!(s, eval_form(&row, y, p));
            }
        }
    }
}

#[test]
fn documented_values() {
    assert_eq!(q_stirling_exact(1, &int(1), &rat(1, 2)).unwrap(), rat(1, 8));
    assert_eq!(q_stirling_exact(2, &int(1), &rat(1, 2)).unwrap(), rat(1, 8));
    assert_eq!(q_polylog_exact(2, &int(1), &rat(1, 2)).unwrap(), rat(1, 8));
    let q = QParams::new(0, 1.0 / 3.0, 0.5).unwrap();
    assert_relative_eq!(q_series(&q, 1e-15, 1000).unwrap().value, 0.75, max_relative = 1e-14);
    let q = QParams::new(1, 0.5, 0.5).unwrap();
    assert_relative_eq!(q_series(&q, 1e-15, 1000).unwrap().value, 1.0 / 9.0, max_relative = 1e-14);
    for n in 1..=6 {
        let q = QParams::new(n, 0.0, 0.3).unwrap();
        assert_eq!(q_series(&q, 1e-15, 10).unwrap().value, 0.0);
        assert_eq!(q_stirling(&q), 0.0);
        assert_eq!(q_polylog(&q).unwrap(), 0.0);
    }
    assert_eq!(q_stirling(&QParams::new(0, 0.0, 0.3).unwrap()), 1.0);
    assert!(q_derivative_form_check(2, 10, 0.5, 1.0 / 3.0));
    assert!(pochhammer_derivative_check(1, 1));
    assert!(pochhammer_derivative_check(2, 1));
}
