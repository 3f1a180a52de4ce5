//! Sequential against rayon-backed sweeps. Without the `parallel` feature both
//! rows measure the sequential path.

use std::hint::black_box;

use condense_core::condensed::lemma_a1_certificates;
use condense_core::dplusxl::vs_closed;
use condense_core::exactnum::NumberField;
use condense_core::exec::Strategy;
use condense_core::rings::DomainSpec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [Strategy; 2] = [Strategy::Sequential, Strategy::Parallel];

fn certificates(c: &mut Criterion) {
    let mut g = c.benchmark_group("lemma_a1_certificates");
    g.sample_size(10);
    for (name, d, h) in [("Z", DomainSpec::Integers, 20), ("Zsqrt(-5)", DomainSpec::quadratic(-5).unwrap(), 3)] {
        for s in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(format!("{s:?}"), name), &(d.clone(), h), |b, (d, h)| {
                b.iter(|| lemma_a1_certificates(black_box(d), *h, s).unwrap())
            });
        }
    }
    g.finish();
}

fn vs_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("vs_closed");
    g.sample_size(10);
    let fields = [("x^3-2", NumberField::from_ints(&[-2, 0, 0, 1]).unwrap()), ("x^4-2", NumberField::from_ints(&[-2, 0, 0, 0, 1]).unwrap())];
    for (name, f) in &fields {
        for s in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(format!("{s:?}"), name), f, |b, f| b.iter(|| vs_closed(black_box(f), 2, s).unwrap()));
        }
    }
    g.finish();
}

criterion_group!(benches, certificates, vs_sweep);
criterion_main!(benches);
