use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use multalg_bench::{fat_point_jets, grassmann_map, grassmannians};
use multalg_core::multiplicity::verify_structure_theorem;
use multalg_core::GroebnerConfig;

fn groebner(c: &mut Criterion) {
    let cfg = GroebnerConfig::default();
    let mut g = c.benchmark_group("groebner");
    for (name, ring) in grassmannians(&[(4, 2), (5, 2), (6, 3)]) {
        g.bench_with_input(BenchmarkId::new("grassmann", name), &ring, |b, r| b.iter(|| r.groebner(&cfg).unwrap()));
    }
    for d in [3, 5, 7] {
        let ring = fat_point_jets(2, d);
        g.bench_with_input(BenchmarkId::new("jets_a2", d), &ring, |b, r| b.iter(|| r.groebner(&cfg).unwrap()));
    }
    g.finish();
}

fn structure(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_theorem");
    g.sample_size(20);
    for (n, k) in [(4, 2), (6, 3)] {
        let map = grassmann_map(n, k);
        g.bench_function(format!("Gr({k},{n})"), |b| b.iter(|| verify_structure_theorem(&map).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, groebner, structure);
criterion_main!(benches);
