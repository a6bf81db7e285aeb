use criterion::{black_box, criterion_group, criterion_main, Criterion};
use polyperm_core::perm::StabChain;
use polyperm_core::{PermGroup, Permutation};

fn perms(cycles: &[&str], n: usize) -> Vec<Permutation> {
    cycles
        .iter()
        .map(|c| Permutation::parse_cycles(c, n).unwrap())
        .collect()
}

fn schreier_sims(c: &mut Criterion) {
    let z8 = perms(&["(0,1,2,3,4,5,6,7)", "(1,3,5,7)(2,6)", "(1,5)"], 8);
    c.bench_function("chain z8", |b| {
        b.iter(|| StabChain::from_generators(black_box(8), black_box(&z8)).order())
    });
    let s64 = perms(
        &[
            "(0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63)",
            "(0,1)",
        ],
        64,
    );
    c.bench_function("chain s64", |b| {
        b.iter(|| StabChain::from_generators(64, black_box(&s64)).order())
    });
    c.bench_function("closure z8", |b| {
        b.iter(|| PermGroup::generate(black_box(&z8)).unwrap().order().clone())
    });
}

criterion_group!(benches, schreier_sims);
criterion_main!(benches);
