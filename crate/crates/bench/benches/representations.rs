use std::hint::black_box;

use catalan2_core::catalan2::{c2_double_factorial_sum, c2_gf_coefficient, c2_hyp_closed, c2_jacobi, c2_quadrature};
use catalan2_core::exact::{catalan_formulas, rat};
use catalan2_core::functional::{cf_double_sum, cf_quadrature, cf_series};
use catalan2_core::qfunc::{q_series, q_stirling_exact};
use catalan2_core::report::{c2_report, C2Request, C2_REPRESENTATIONS};
use catalan2_core::{C2Params, CFParams, Normalization, QParams, Scalar};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn catalan2(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalan2");
    for n in [2u32, 12] {
        let p = C2Params::new(0.3, 4.0, n).unwrap();
        g.bench_with_input(BenchmarkId::new("double_factorial", n), &p, |b, p| {
            b.iter(|| c2_double_factorial_sum(black_box(p)))
        });
        g.bench_with_input(BenchmarkId::new("hyp_closed", n), &p, |b, p| {
            b.iter(|| c2_hyp_closed(black_box(p), Normalization::GeneratingFunction).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("jacobi", n), &p, |b, p| {
            b.iter(|| c2_jacobi(black_box(p), Normalization::GeneratingFunction).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("gf_coefficient", n), &p, |b, p| {
            b.iter(|| c2_gf_coefficient(black_box(p)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("quadrature", n), &p, |b, p| {
            b.iter(|| c2_quadrature(black_box(p), 1e-10).unwrap())
        });
    }
    g.finish();
}

fn functional(c: &mut Criterion) {
    let mut g = c.benchmark_group("functional");
    // ascending (y = 0.5) and descending (y = 2) branches
    for (a, b) in [(4.0, 4.0), (1.0, 4.0)] {
        let p = CFParams::new(a, b, 0.5, 6).unwrap();
        let id = format!("y={}", p.ratio());
        g.bench_with_input(BenchmarkId::new("double_sum", &id), &p, |bch, p| bch.iter(|| cf_double_sum(black_box(p))));
        g.bench_with_input(BenchmarkId::new("series", &id), &p, |bch, p| {
            bch.iter(|| cf_series(black_box(p), 1e-18, 1_000_000).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("quadrature", &id), &p, |bch, p| {
            bch.iter(|| cf_quadrature(black_box(p), 1e-10).unwrap())
        });
    }
    g.finish();
}

fn qfunc(c: &mut Criterion) {
    let mut g = c.benchmark_group("q");
    for y in [0.5, 0.9] {
        let q = QParams::new(6, y, 0.35).unwrap();
        g.bench_with_input(BenchmarkId::new("series", y), &q, |b, q| {
            b.iter(|| q_series(black_box(q), 1e-18, 1_000_000).unwrap())
        });
    }
    let (y, p) = (rat(9, 10), rat(7, 20));
    g.bench_function("stirling_exact/6", |b| b.iter(|| q_stirling_exact(6, black_box(&y), black_box(&p)).unwrap()));
    g.finish();
}

fn exact(c: &mut Criterion) {
    c.bench_function("catalan_formulas/300", |b| b.iter(|| catalan_formulas(black_box(300))));
}

fn report(c: &mut Criterion) {
    let req = C2Request {
        a: Scalar::parse("0.3").unwrap(),
        b: Scalar::parse("4").unwrap(),
        n: 12,
        normalization: Normalization::GeneratingFunction,
        tol: 1e-8,
    };
    c.bench_function("c2_report_all/12", |b| b.iter(|| c2_report(black_box(&req), C2_REPRESENTATIONS).unwrap()));
}

criterion_group!(benches, catalan2, functional, qfunc, exact, report);
criterion_main!(benches);
