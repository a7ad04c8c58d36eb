use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use jya::{
    generate_half_angle_table, generate_recursion_table, halving_grid, AngleGrid, RecursionConfig,
};

// Recursion cost should scale linearly in the node count.
fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursion");
    for count in [1_000usize, 2_000, 4_000, 8_000, 16_000] {
        let grid = AngleGrid::pi_over(2.0 * count as f64, count).unwrap();
        for (name, cfg) in [
            ("historical", RecursionConfig::historical(grid)),
            ("exact", RecursionConfig::exact(grid)),
        ] {
            group.bench_with_input(BenchmarkId::new(name, count), &cfg, |b, cfg| {
                b.iter(|| generate_recursion_table(black_box(cfg)).unwrap())
            });
        }
    }
    group.finish();
}

fn aryabhata(c: &mut Criterion) {
    let grid = AngleGrid::pi_over(48.0, 24).unwrap();
    let cfg = RecursionConfig::historical(grid);
    c.bench_function("aryabhata_table", |b| {
        b.iter(|| generate_recursion_table(black_box(&cfg)).unwrap())
    });
}

fn half_angle(c: &mut Criterion) {
    let mut group = c.benchmark_group("half_angle");
    for k in [4u32, 8, 12] {
        let grid = halving_grid(k, 3 << (k - 1)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &grid, |b, grid| {
            b.iter(|| generate_half_angle_table(black_box(grid)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, recursion, aryabhata, half_angle);
criterion_main!(benches);
