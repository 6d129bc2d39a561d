use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use shortcut_forge::{approx_shortcut_dag, gen, SolveParams};

fn bench_shortcut_dag(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_shortcut_dag");
    for &n in &[50usize, 100, 200] {
        let g = gen::gen_random_dag(n, 4.0 / n as f64, 7);
        let d = (g.diameter() / 2).max(2);
        let p = SolveParams::new(n, d, 2, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| approx_shortcut_dag(g, &p).unwrap());
        });
    }
    group.finish();
}

fn bench_path_two_shortcut(c: &mut Criterion) {
    let g = gen::gen_path(512);
    let chain: Vec<usize> = (0..512).collect();
    c.bench_function("path_two_shortcut/512", |b| {
        b.iter(|| shortcut_forge::decompose::path_two_shortcut(&g, &chain).unwrap());
    });
}

criterion_group!(benches, bench_shortcut_dag, bench_path_two_shortcut);
criterion_main!(benches);
