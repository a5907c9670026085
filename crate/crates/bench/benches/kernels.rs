//! Benchmarks of the big-integer kernels on walk matrices, where entry
//! growth (hundreds of bits by n = 64) is what actually costs.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use walkmat::graph::dynkin_graph;
use walkmat::{
    det_bareiss, graph_walk_matrix, hat_walk_matrix, rank_mod2, rank_rational, smith_normal_form,
};

fn bench_walk_matrix(c: &mut Criterion) {
    let g = dynkin_graph(64).unwrap();
    c.bench_function("walk_matrix_d64", |b| {
        b.iter(|| black_box(graph_walk_matrix(&g)))
    });
}

fn bench_det(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_bareiss_hat");
    for n in [16usize, 32, 48, 64] {
        let hat = hat_walk_matrix(&dynkin_graph(n).unwrap()).unwrap();
        group.bench_function(format!("n{n}"), |b| {
            b.iter(|| black_box(det_bareiss(&hat).unwrap()))
        });
    }
    group.finish();
}

fn bench_rank(c: &mut Criterion) {
    let w = graph_walk_matrix(&dynkin_graph(48).unwrap());
    c.bench_function("rank_rational_w48", |b| {
        b.iter(|| black_box(rank_rational(&w)))
    });
    c.bench_function("rank_mod2_w48", |b| b.iter(|| black_box(rank_mod2(&w))));
}

fn bench_snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form_w");
    group.sample_size(20);
    for n in [16usize, 32, 48] {
        let w = graph_walk_matrix(&dynkin_graph(n).unwrap());
        group.bench_function(format!("n{n}"), |b| {
            b.iter(|| black_box(smith_normal_form(&w)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_walk_matrix, bench_det, bench_rank, bench_snf);
criterion_main!(benches);
