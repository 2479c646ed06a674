use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{rngs::StdRng, Rng, SeedableRng};

use cubic_iso::{campaign, sweep, Execution, IsolateOptions, MonicCubic, SweepConfig, Tolerance};

fn random_cubics(n: usize) -> Vec<MonicCubic> {
    let mut rng = StdRng::seed_from_u64(7);
    (0..n)
        .map(|_| {
            MonicCubic::new(
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            )
            .unwrap()
        })
        .collect()
}

fn executions() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Execution::Parallel));
    }
    v
}

fn bench_campaign(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("campaign");
    for n in [1_000usize, 10_000] {
        let cubics = random_cubics(n);
        for (name, exec) in executions() {
            group.bench_with_input(BenchmarkId::new(name, n), &cubics, |bch, cubics| {
                bch.iter(|| campaign(black_box(cubics), &tol, IsolateOptions::default(), exec))
            });
        }
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let cfg = SweepConfig::rayleigh(0.01, 0.74, 200);
    let mut group = c.benchmark_group("rayleigh_sweep");
    for (name, exec) in executions() {
        group.bench_function(name, |bch| bch.iter(|| sweep(black_box(&cfg), exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_campaign, bench_sweep);
criterion_main!(benches);
