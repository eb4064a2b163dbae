use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use uturn::demazure::{atom_polynomial, CartanData};
use uturn::patterns::{compute_key_tableau, enumerate_tableaux};
use uturn::ybe::{solve_rll_kernel_generic, verify_ybe, RKind};
use uturn::{CartanType, Family, Model, Partition, SignedPermutation};

fn partition_functions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_function");
    let lambda = Partition::parse("2,1,1").unwrap();
    let w0 = SignedPermutation::longest(3);
    for family in [Family::Atom, Family::Character] {
        let model = Model::new(&lambda, &w0, family, CartanType::C).unwrap();
        group.bench_with_input(BenchmarkId::new("C3_w0", family), &model, |b, m| {
            b.iter(|| black_box(m).partition_function())
        });
    }
    let cd = CartanData::new(CartanType::C, 3);
    group.bench_function("C3_w0_atom_operators", |b| {
        b.iter(|| atom_polynomial(black_box(&w0), black_box(&lambda), &cd).unwrap())
    });
    group.finish();
}

fn yang_baxter(c: &mut Criterion) {
    let mut group = c.benchmark_group("yang_baxter");
    group.sample_size(20);
    for kind in [RKind::GammaGamma, RKind::DeltaGamma] {
        group.bench_with_input(BenchmarkId::new("verify", kind), &kind, |b, &k| {
            b.iter(|| verify_ybe(k, Family::Atom).unwrap().pass())
        });
    }
    group.bench_function("kernel_gamma_gamma_4_colors", |b| {
        b.iter(|| solve_rll_kernel_generic(RKind::GammaGamma, Family::Atom, 4, black_box(7)).unwrap())
    });
    group.finish();
}

fn keys(c: &mut Criterion) {
    let tableaux = enumerate_tableaux(&Partition::parse("2,1").unwrap(), 2, CartanType::B).unwrap();
    c.bench_function("key_B2_shape_21", |b| {
        b.iter(|| tableaux.iter().map(|t| compute_key_tableau(t).unwrap().w).collect::<Vec<_>>())
    });
}

criterion_group!(benches, partition_functions, yang_baxter, keys);
criterion_main!(benches);
