use std::hint::black_box;

use cliffordforge::checkerboard::{series_psi, Psi};
use cliffordforge::dirac::{build_u, DiracAlgebra, DiracConfig, EnergyMomentum};
use cliffordforge::{cd_mul, ga_mul, hat_mul, to_matrix, GroupAlgebra, Sampler};
use cliffordforge_bench::{cd_pair, clifford_pair, group_pair, hat_pair, SEED};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn products(c: &mut Criterion) {
    let mut rng = Sampler::new(SEED);

    let (x, y) = hat_pair(&mut rng);
    c.bench_function("hat_mul/rational", |b| b.iter(|| hat_mul(black_box(&x), black_box(&y))));

    let mut group = c.benchmark_group("clifford_mul");
    for n in [2, 3, 4, 5] {
        let (x, y) = clifford_pair(n, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(x, y), |b, (x, y)| b.iter(|| x.mul(y)));
    }
    group.finish();

    let mut group = c.benchmark_group("ga_mul");
    for n in [2, 3, 4] {
        let alg = GroupAlgebra::cyclic(n).expect("cyclic");
        let (x, y) = group_pair(&alg, &mut rng);
        group.bench_with_input(BenchmarkId::new("cyclic", n), &(x, y), |b, (x, y)| {
            b.iter(|| ga_mul(x, y))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("cd_mul");
    for level in [2, 3, 4] {
        let (x, y) = cd_pair(level, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(level), &(x, y), |b, (x, y)| {
            b.iter(|| cd_mul(x, y))
        });
    }
    group.finish();

    let alg = GroupAlgebra::cyclic(4).expect("cyclic");
    let (x, _) = group_pair(&alg, &mut rng);
    c.bench_function("to_matrix/4", |b| b.iter(|| to_matrix(black_box(&x))));
}

fn physics(c: &mut Criterion) {
    let alg = DiracAlgebra::new();
    let pm = EnergyMomentum::new(5.into(), vec![1.into(), 2.into(), 2.into()], 4.into()).expect("on shell");
    c.bench_function("dirac/build_u_3d", |b| {
        b.iter(|| build_u(&alg, DiracConfig::ThreeD, black_box(&pm)))
    });
    c.bench_function("checkerboard/psi0_32", |b| {
        b.iter(|| series_psi(Psi::Zero, black_box(32)))
    });
}

criterion_group!(benches, products, physics);
criterion_main!(benches);
