use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use urcode_bench::{division_pairs, long_product, named_matrices, sequence, word};
use urcode_core::beta::{beta_decode, beta_encode};
use urcode_core::dyadic::{dyad_concat, sm_encode};
use urcode_core::markov::normal_form;
use urcode_core::rings::m2_euclid;

fn normal_forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_form");
    for (name, m) in named_matrices() {
        g.bench_with_input(BenchmarkId::new("named", name), &m, |b, m| b.iter(|| normal_form(black_box(m))));
    }
    for runs in [4, 8, 16] {
        let m = long_product(runs);
        g.bench_with_input(BenchmarkId::new("runs", runs), &m, |b, m| b.iter(|| normal_form(black_box(m))));
    }
    g.finish();
}

fn beta(c: &mut Criterion) {
    let mut g = c.benchmark_group("beta");
    for (len, bound) in [(4, 20), (8, 10_000), (8, 1_000_000)] {
        let xs = sequence(len, bound);
        let code = beta_encode(&xs);
        g.bench_with_input(BenchmarkId::new("encode", format!("{len}x{bound}")), &xs, |b, xs| {
            b.iter(|| beta_encode(black_box(xs)))
        });
        g.bench_with_input(BenchmarkId::new("decode", format!("{len}x{bound}")), &code, |b, s| {
            b.iter(|| beta_decode(black_box(s)))
        });
    }
    g.finish();
}

fn dyadic(c: &mut Criterion) {
    let mut g = c.benchmark_group("dyadic_concat");
    for len in [16, 256, 4096] {
        let x = sm_encode(&word(len));
        g.bench_with_input(BenchmarkId::from_parameter(len), &x, |b, x| b.iter(|| dyad_concat(black_box(x), black_box(x))));
    }
    g.finish();
}

fn division(c: &mut Criterion) {
    let mut g = c.benchmark_group("m2_division");
    for (i, (a, d)) in division_pairs().into_iter().enumerate() {
        g.bench_function(BenchmarkId::from_parameter(i), |b| b.iter(|| m2_euclid(black_box(&a), black_box(&d))));
    }
    g.finish();
}

criterion_group!(benches, normal_forms, beta, dyadic, division);
criterion_main!(benches);
