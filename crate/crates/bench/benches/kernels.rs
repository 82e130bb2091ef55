use criterion::{black_box, criterion_group, criterion_main, Criterion};

use g2split::algebra::poly::QPoly;
use g2split::algebra::resultant::resultant_q;
use g2split::aut::classify;
use g2split::igusa::classical_invariants;
use g2split::ratpoints::{naive_point_search, torsion_subgroup};
use g2split::split3::{e3_fiber, nondegenerate_sextic, theta};
use g2split_bench::*;

fn kernels(c: &mut Criterion) {
    let f = nondegenerate_sextic(&example_four_point()).unwrap();
    c.bench_function("classical_invariants", |b| b.iter(|| classical_invariants(black_box(&f))));
    c.bench_function("theta", |b| b.iter(|| theta(black_box(&example_six_point())).unwrap()));
    c.bench_function("classify", |b| b.iter(|| classify(black_box(&f)).unwrap()));
    let e = z6_curve();
    c.bench_function("torsion_subgroup", |b| b.iter(|| torsion_subgroup(black_box(&e)).unwrap()));
    let p = QPoly::from_i64s(&[3, -1, 4, 1, -5, 9, 2]);
    let q = QPoly::from_i64s(&[6, 5, -3, 5, 8, 9, 7]);
    c.bench_function("resultant_deg6", |b| b.iter(|| resultant_q(black_box(&p), black_box(&q)).unwrap()));
    let g = boundary_sextic();
    c.bench_function("naive_search_100", |b| b.iter(|| naive_point_search(black_box(&g), 100)));

    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    let i = example_six_invariants();
    slow.bench_function("e3_fiber", |b| b.iter(|| e3_fiber(black_box(&i)).unwrap()));
    slow.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
