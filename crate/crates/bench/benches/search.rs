use criterion::{criterion_group, criterion_main, Criterion};

use rota_core::catalog;
use rota_core::homotopy::search_homotopy_oop;
use rota_core::lie::search_rbo;
use rota_core::Rational;

fn grid() -> Vec<Rational> {
    (-1..=1).map(Rational::from_int).collect()
}

fn rota_baxter_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search-rbo");
    group.sample_size(10);
    for (name, l) in [("aff2", catalog::aff2()), ("heisenberg", catalog::heisenberg())] {
        for parallel in [false, true] {
            let id = format!("{name} {}", if parallel { "parallel" } else { "serial" });
            group.bench_function(id, |b| b.iter(|| search_rbo(&l, &grid(), 1 << 20, parallel).unwrap()));
        }
    }
    group.finish();
}

fn homotopy_search(c: &mut Criterion) {
    let (g, rep) = catalog::borel_pair();
    let mut group = c.benchmark_group("search-homotopy");
    group.sample_size(10);
    group.bench_function("borel defining, truncation 2", |b| {
        b.iter(|| search_homotopy_oop(&g, &rep, 2, &grid(), 1 << 16, 4, true).unwrap())
    });
    group.finish();
}

criterion_group!(benches, rota_baxter_search, homotopy_search);
criterion_main!(benches);
