use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use tollkit::harness::{sweep, Check};
use tollkit::io::enumerate_connected_range;
use tollkit::{family, strong_product, toll_interval, toll_interval_oracle, Execution, Family, Graph};

fn sweep_modes(c: &mut Criterion) {
    let corpus = enumerate_connected_range(3, 4, true).unwrap();
    let mut group = c.benchmark_group("sweep_3_4");
    group.sample_size(10);
    for (name, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        group.bench_function(name, |b| b.iter(|| sweep(&corpus, &corpus, &Check::ALL, exec).unwrap()));
    }
    group.finish();
}

fn all_pairs(g: &Graph, f: impl Fn(&Graph, usize, usize) -> usize) -> usize {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| f(g, u, v))
        .sum()
}

fn interval_algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("toll_interval_all_pairs");
    let paw = family(Family::PawPendant, 4).unwrap();
    let cases = [
        ("paw_pendant_squared", strong_product(&paw, &paw).into_graph()),
        ("cycle_40", family(Family::Cycle, 40).unwrap()),
        (
            "p5_x_c6",
            strong_product(&family(Family::Path, 5).unwrap(), &family(Family::Cycle, 6).unwrap()).into_graph(),
        ),
    ];
    for (name, g) in &cases {
        group.bench_with_input(BenchmarkId::new("components", name), g, |b, g| {
            b.iter(|| all_pairs(black_box(g), |g, u, v| toll_interval(g, u, v).unwrap().len()))
        });
        group.bench_with_input(BenchmarkId::new("state_search", name), g, |b, g| {
            b.iter(|| all_pairs(black_box(g), |g, u, v| toll_interval_oracle(g, u, v).unwrap().len()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep_modes, interval_algorithms);
criterion_main!(benches);
