use criterion::{criterion_group, criterion_main, Criterion};
use polyperm_core::carlitz::{verify_p2_isomorphism, VerifyMode};

fn p2(c: &mut Criterion) {
    c.bench_function("p2 exhaustive p=2", |b| {
        b.iter(|| verify_p2_isomorphism(2, VerifyMode::Exhaustive).unwrap())
    });
    c.bench_function("p2 randomized p=5", |b| {
        b.iter(|| {
            verify_p2_isomorphism(
                5,
                VerifyMode::Randomized {
                    pairs: 1_000,
                    seed: 1,
                },
            )
            .unwrap()
        })
    });
    let mut group = c.benchmark_group("p2 slow");
    group.sample_size(10);
    group.bench_function("exhaustive p=3", |b| {
        b.iter(|| verify_p2_isomorphism(3, VerifyMode::Exhaustive).unwrap())
    });
    group.finish();
}

criterion_group!(benches, p2);
criterion_main!(benches);
