//! Sequential against data-parallel execution of the main sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qqsh::par::Exec;
use qqsh::verify::{self, Fixture};

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn product_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("product_routes_A4");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            // fresh caches per iteration so both modes do the same work
            b.iter(|| verify::check_product_routes(&Fixture::by_name("A4").unwrap(), 5, exec))
        });
    }
    g.finish();
}

fn associativity(c: &mut Criterion) {
    let mut g = c.benchmark_group("associativity_Kt_flip");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify::check_associativity(&Fixture::by_name("Kt-flip").unwrap(), 5, exec))
        });
    }
    g.finish();
}

fn zeta_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("zeta_routes");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify::check_zeta_routes(3, 4, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, product_routes, associativity, zeta_routes);
criterion_main!(benches);
