//! `--rep all` reports over the standard grids: every in-domain row agrees
//! and no grid point errors out.

use catalan2_core::report::{
    c2_report, functional_report, q_report, C2Request, FunctionalRequest, QRequest, C2_REPRESENTATIONS,
    FUNCTIONAL_REPRESENTATIONS, Q_REPRESENTATIONS,
};
use catalan2_core::{Normalization, RowStatus, Scalar};

const TOL: f64 = 1e-8;

fn s(text: &str) -> Scalar {
    Scalar::parse(text).unwrap()
}

fn ok_rows(report: &catalan2_core::CompareReport) -> usize {
    report.results.iter().filter(|r| r.status == RowStatus::Ok).count()
}

#[test]
fn c2_reports_agree_in_both_normalizations() {
    for a in ["0", "0.3", "1/2", "1", "2", "5"] {
        for b in ["1/4", "1", "4", "2"] {
            for n in 0..=12 {
                for normalization in [Normalization::GeneratingFunction, Normalization::PrintedPi] {
                    let req = C2Request { a: s(a), b: s(b), n, normalization, tol: TOL };
                    let r = c2_report(&req, C2_REPRESENTATIONS).unwrap();
                    assert!(r.within(TOL), "c2 {a} {b} {n}: {}", r.to_text());
                    assert!(ok_rows(&r) >= 2, "c2 {a} {b} {n}");
                }
            }
        }
    }
}

#[test]
fn functional_reports_agree() {
    for a in ["1/2", "1", "2", "4"] {
        for b in ["1/2", "1", "4", "16"] {
            for p in ["1/4", "1/2", "3/4"] {
                for n in 0..=8 {
                    let req = FunctionalRequest { a: s(a), b: s(b), p: s(p), n, tol: TOL };
                    let r = functional_report(&req, FUNCTIONAL_REPRESENTATIONS).unwrap();
                    assert!(r.within(TOL), "functional {a} {b} {p} {n}: {}", r.to_text());
                    assert!(ok_rows(&r) >= 2);
                }
            }
        }
    }
}

#[test]
fn q_reports_agree() {
    for y in ["0", "1/10", "1/3", "1/2", "0.9", "1"] {
        for p in ["0.2", "1/3", "0.35", "1/2", "0.9"] {
            for n in 0..=6 {
                let req = QRequest { n, y: s(y), p: s(p), tol: TOL };
                let r = q_report(&req, Q_REPRESENTATIONS).unwrap();
                assert!(r.within(TOL), "q {n} {y} {p}: {}", r.to_text());
                assert!(ok_rows(&r) >= 2, "q {n} {y} {p}: {}", r.to_text());
            }
        }
    }
}
