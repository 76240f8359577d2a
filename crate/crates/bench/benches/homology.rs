use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use idealis::fixtures::nonlinear_square_ideal;
use idealis::resolution::{betti_table, taylor_betti_oracle};
use idealis::{cover_ideal, edge_ideal, Field, Graph};
use idealis_bench::bench_graphs;

fn nonlinear_square(c: &mut Criterion) {
    let sq = nonlinear_square_ideal().power(2).unwrap();
    c.bench_function("betti/nonlinear-square-I2", |b| {
        b.iter(|| betti_table(black_box(&sq), Field::Rationals).unwrap())
    });
}

fn cover_powers(c: &mut Criterion) {
    let j = cover_ideal(&Graph::cycle(5, "u")).unwrap();
    for s in 1..=3 {
        let p = j.power(s).unwrap();
        c.bench_function(&format!("betti/c5-cover-power-{s}"), |b| {
            b.iter(|| betti_table(black_box(&p), Field::Rationals).unwrap())
        });
    }
}

fn edge_squares(c: &mut Criterion) {
    let ideals: Vec<_> = bench_graphs(5, 8)
        .iter()
        .map(|g| edge_ideal(g).power(2).unwrap())
        .collect();
    c.bench_function("betti/edge-squares-n8", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(betti_table(i, Field::GF2).unwrap());
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let i = edge_ideal(&Graph::cycle(7, "v"));
    let mut group = c.benchmark_group("c7-edge-ideal");
    group.bench_function("lattice", |b| b.iter(|| betti_table(black_box(&i), Field::Rationals).unwrap()));
    group.bench_function("taylor", |b| b.iter(|| taylor_betti_oracle(black_box(&i), Field::Rationals).unwrap()));
    group.finish();
}

criterion_group!(benches, nonlinear_square, cover_powers, edge_squares, oracle);
criterion_main!(benches);
