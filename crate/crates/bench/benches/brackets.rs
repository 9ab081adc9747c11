use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qta_core::algebra::{regular_representation, AssociativeAlgebra};
use qta_core::cohomology::coboundary_matrix;
use qta_core::linfty::block_signature;
use qta_core::quasi_twilled::validate;
use qta_core::scalar::int;
use qta_core::{
    build_standard, circle, CochainComplex, CurvedLInftyStructure, ExactMatrix, Ingredients, MultilinearMap,
    QuasiTwilledAlgebra, Side, Space,
};

fn semidirect_dual() -> QuasiTwilledAlgebra {
    let dual = AssociativeAlgebra::dual_numbers(Space::A);
    build_standard(&Ingredients::Semidirect { rep: regular_representation(&dual) }).unwrap()
}

fn cochain(q: &QuasiTwilledAlgebra, side: Side, arity: usize) -> MultilinearMap {
    let mut k = arity as i64;
    MultilinearMap::from_fn(q.split(), &block_signature(side, arity), |_, _| {
        k = (k * 7 + 3) % 11;
        int(k - 5)
    })
}

fn euler(q: &QuasiTwilledAlgebra) -> MultilinearMap {
    let m = ExactMatrix::from_rows(vec![vec![int(0), int(0)], vec![int(0), int(1)]]).unwrap();
    MultilinearMap::from_matrix(q.split(), Space::A, Space::Aprime, &m).unwrap()
}

fn products(c: &mut Criterion) {
    let q = semidirect_dual();
    let mut group = c.benchmark_group("circle");
    for (m, n) in [(2, 1), (2, 2), (3, 2)] {
        let f = cochain(&q, Side::Right, m).lift();
        let g = cochain(&q, Side::Right, n).lift();
        group.bench_with_input(BenchmarkId::from_parameter(format!("{m}x{n}")), &(f, g), |b, (f, g)| {
            b.iter(|| circle(black_box(f), black_box(g)).unwrap())
        });
    }
    group.finish();
    c.bench_function("validate", |b| b.iter(|| validate(black_box(&q))));
}

fn brackets(c: &mut Criterion) {
    let q = semidirect_dual();
    let mut group = c.benchmark_group("derived_bracket");
    for side in [Side::Right, Side::Left] {
        let s = CurvedLInftyStructure::from_algebra(&q, side).unwrap();
        for k in 1..=3 {
            let args: Vec<_> = (0..k).map(|_| cochain(&q, side, 1)).collect();
            group.bench_with_input(BenchmarkId::new(side.to_string(), k), &args, |b, args| {
                b.iter(|| s.bracket(black_box(args)).unwrap())
            });
        }
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let q = semidirect_dual();
    let d = euler(&q);
    let mut group = c.benchmark_group("coboundary_matrix");
    group.sample_size(20);
    for n in 0..=2 {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| coboundary_matrix(&q, &d, Side::Right, n).unwrap())
        });
    }
    group.finish();
    c.bench_function("complex_to_degree_2", |b| {
        b.iter(|| CochainComplex::new(&q, &d, Side::Right, 2).unwrap().cohomology_dims())
    });
}

criterion_group!(benches, products, brackets, cohomology);
criterion_main!(benches);
