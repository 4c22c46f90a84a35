use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use genusmap_bench::{quadrangles, quadrangulations};
use genusmap_core::boundary::{make_pattern, PatternKind};
use genusmap_core::explore::{occ, peel_sequence};
use genusmap_core::sample::sample_uniform;
use genusmap_core::{beta, beta_marked, FaceDegreeSequence};

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("beta");
    group.sample_size(10);
    for n in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::new("quadrangles", n), &n, |b, &n| {
            b.iter(|| beta(black_box(&quadrangles(n)), 0))
        });
    }
    let mixed = FaceDegreeSequence::from_pairs([(1, 2), (2, 1), (3, 1)]);
    group.bench_function("mixed_genus1", |b| b.iter(|| beta(black_box(&mixed), 1)));
    group.bench_function("marked_two_digons", |b| {
        b.iter(|| beta_marked(&[1, 1], black_box(&quadrangles(3)), 0))
    });
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_uniform");
    group.sample_size(10);
    for n in [4, 8] {
        group.bench_with_input(BenchmarkId::new("quadrangulations_x100", n), &n, |b, &n| {
            b.iter(|| sample_uniform(black_box(&quadrangles(n)), 0, 1, 100).unwrap())
        });
    }
    group.finish();
}

fn exploration(c: &mut Criterion) {
    let maps = quadrangulations(10, 20);
    let pattern = make_pattern(PatternKind::Single, 2);
    c.bench_function("occ_m1_2_q10_x20", |b| {
        b.iter(|| {
            maps.iter()
                .map(|m| occ(black_box(&pattern), m))
                .sum::<usize>()
        })
    });
    c.bench_function("canonical_form_q10_x20", |b| {
        b.iter(|| maps.iter().map(|m| m.canonical_form()).collect::<Vec<_>>())
    });
    c.bench_function("peel_q10_x20", |b| {
        b.iter(|| {
            maps.iter()
                .map(|m| peel_sequence(black_box(m)).steps.len())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, counting, sampling, exploration);
criterion_main!(benches);
