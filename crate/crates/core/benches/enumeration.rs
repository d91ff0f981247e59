use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use floorsq::enumerate::{enum_with, vsearch::enum_v_with, EnumConfig};
use floorsq::homog::{euler_brick_system, euler_brick_witness, scan_multipliers_with, BracketKind};
use floorsq::par::Parallelism;
use floorsq::{Bracket, Rational};

const MODES: [(&str, Parallelism); 2] = [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Parallel)];

fn enum_t(c: &mut Criterion) {
    let mut g = c.benchmark_group("enum_t");
    g.sample_size(10);
    let alpha: Rational = "1/2".parse().unwrap();
    for x in [1000u64, 3000] {
        for (name, par) in MODES {
            let cfg = EnumConfig { parallelism: par, ..EnumConfig::default() };
            g.bench_with_input(BenchmarkId::new(name, x), &x, |b, &x| {
                b.iter(|| enum_with(&alpha, Bracket::Floor, x, cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn enum_v(c: &mut Criterion) {
    let mut g = c.benchmark_group("enum_v");
    g.sample_size(10);
    for x in [5000u64, 20000] {
        for (name, par) in MODES {
            g.bench_with_input(BenchmarkId::new(name, x), &x, |b, &x| b.iter(|| enum_v_with(x, par)));
        }
    }
    g.finish();
}

fn multiplier_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan_multipliers");
    g.sample_size(10);
    let sys = euler_brick_system();
    let w = euler_brick_witness();
    let alpha: Rational = "2/7".parse().unwrap();
    for (name, par) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| scan_multipliers_with(&sys, &w, &alpha, 2000, BracketKind::Floor, par).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enum_t, enum_v, multiplier_scan);
criterion_main!(benches);
