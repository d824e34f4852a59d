use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use topolap_bench::{c60, dense_hypergraph, ring};
use topolap_core::complex::{betti_numbers, rips_complex};
use topolap_core::digraph::{self, Digraph};
use topolap_core::hypergraph;
use topolap_core::persistence::{build_filtration, track_harmonics};
use topolap_core::Tolerance;

fn rips(c: &mut Criterion) {
    let cloud = c60();
    let mut g = c.benchmark_group("rips_c60");
    for t in [1.5, 2.5, 3.0] {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| b.iter(|| rips_complex(&cloud, t, 2).unwrap()));
    }
    g.finish();
}

fn betti(c: &mut Criterion) {
    let tol = Tolerance::default();
    let k = rips_complex(&c60(), 2.5, 2).unwrap();
    c.bench_function("betti_c60_2.5", |b| b.iter(|| betti_numbers(black_box(&k), &tol).unwrap()));
}

fn hypergraph_laplacian(c: &mut Criterion) {
    let tol = Tolerance::default();
    let h = dense_hypergraph(9);
    c.bench_function("hypergraph_laplacian_l1", |b| {
        b.iter(|| hypergraph::hypergraph_laplacian(black_box(&h), 1, &tol).unwrap())
    });
}

fn path_homology(c: &mut Criterion) {
    let tol = Tolerance::default();
    let edges: Vec<(usize, usize)> = (0..8).flat_map(|i| [(i, (i + 1) % 8), (i, (i + 3) % 8)]).collect();
    let g = Digraph::from_edges(&edges).unwrap();
    c.bench_function("path_betti_len3", |b| b.iter(|| digraph::path_betti(black_box(&g), 3, &tol).unwrap()));
}

fn harmonic_tracking(c: &mut Criterion) {
    let tol = Tolerance::default();
    let cloud = ring(16);
    let ts: Vec<f64> = (0..6).map(|i| 0.3 + 0.15 * i as f64).collect();
    let f = build_filtration(&cloud, &ts, 2).unwrap();
    c.bench_function("track_harmonics_ring16", |b| b.iter(|| track_harmonics(black_box(&f), 1, &tol).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = rips, betti, hypergraph_laplacian, path_homology, harmonic_tracking
}
criterion_main!(benches);
