use criterion::{black_box, criterion_group, criterion_main, Criterion};
use polyperm_core::carlitz::{enumerate_polynomial_functions, is_polynomial_function, Gates};
use polyperm_core::Permutation;

fn enumeration(c: &mut Criterion) {
    let gates = Gates::default();
    let mut group = c.benchmark_group("enumerate");
    for (p, k) in [(2u64, 2u32), (3, 2), (2, 3)] {
        group.bench_function(format!("{p}^{k}"), |b| {
            b.iter(|| enumerate_polynomial_functions(black_box(p), black_box(k), &gates).unwrap())
        });
    }
    group.sample_size(10);
    group.bench_function("2^4", |b| {
        b.iter(|| enumerate_polynomial_functions(2, 4, &gates).unwrap())
    });
    group.finish();
}

fn membership(c: &mut Criterion) {
    let f = Permutation::parse_cycles(
        "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)",
        27,
    )
    .unwrap();
    let table = (&f).into();
    c.bench_function("is_polynomial_function z27", |b| {
        b.iter(|| is_polynomial_function(black_box(&table), 3, 3).unwrap())
    });
}

criterion_group!(benches, enumeration, membership);
criterion_main!(benches);
