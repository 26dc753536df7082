use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sosq_bench::{form, s4_field, shrink_pair};
use sosq_core::boundary::demo;
use sosq_core::boundary::demo::{demo_sextic, p1, p2, p3};
use sosq_core::gram::{extract_qsos, shrink_span};
use sosq_core::numfield::{norm_form, obstruction_check, LinearForm, ObstructionOptions};
use sosq_core::permgroup::{bundled_catalog, classify_catalog, DEFAULT_ENUM_BOUND};

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("groups");
    g.sample_size(10);
    for degree in [4, 6, 8] {
        let cat = bundled_catalog(degree).unwrap();
        g.bench_function(format!("table degree {degree}"), |b| {
            b.iter(|| classify_catalog(black_box(&cat), degree, DEFAULT_ENUM_BOUND))
        });
    }
    g.finish();
}

fn fields(c: &mut Criterion) {
    let (m, galois) = s4_field();
    let l = LinearForm::canonical(3);
    c.bench_function("norm form t^4+t+1", |b| {
        b.iter(|| norm_form(black_box(&m), &l).unwrap())
    });
    c.bench_function("obstruction t^4+t+1", |b| {
        b.iter(|| {
            obstruction_check(
                black_box(&m),
                &l,
                Some(&galois),
                ObstructionOptions::default(),
            )
            .unwrap()
        })
    });
}

fn boundary(c: &mut Criterion) {
    let mut g = c.benchmark_group("boundary");
    g.sample_size(10);
    g.bench_function("demo chain", |b| b.iter(|| demo().unwrap()));
    g.finish();
}

fn gram(c: &mut Criterion) {
    let f = demo_sextic();
    let u = [p1(), p2(), p3()];
    c.bench_function("extract demo sextic", |b| {
        b.iter(|| extract_qsos(black_box(&f), &u).unwrap())
    });
    let fermat = form("x1^6 + x2^6 + x3^6");
    let cubes = [form("x1^3"), form("x2^3"), form("x3^3")];
    c.bench_function("extract fermat sextic", |b| {
        b.iter(|| extract_qsos(black_box(&fermat), &cubes).unwrap())
    });
    let (g1, g2) = shrink_pair();
    c.bench_function("shrink binary quartic", |b| {
        b.iter(|| shrink_span(black_box(&g1), &g2).unwrap())
    });
}

criterion_group!(benches, groups, fields, boundary, gram);
criterion_main!(benches);
