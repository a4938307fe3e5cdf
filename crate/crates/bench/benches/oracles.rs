use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use classtab::lie::family_character;
use classtab::verify::random_filling;
use classtab::{
    enumerate_basis, BasisFamily, FormalSum, Group, OracleConfig, RelationSpan, Shape, SpanCache, Straightener,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn configs() -> Vec<(BasisFamily, Arc<Shape>)> {
    let plain = |p: &[usize], n| Arc::new(Shape::plain(p, n).unwrap());
    let spin = |p: &[usize], n| Arc::new(Shape::spin(p, n).unwrap());
    vec![
        (BasisFamily::Symplectic, plain(&[2, 2], 2)),
        (BasisFamily::OrthogonalOdd, plain(&[2, 1], 2)),
        (BasisFamily::OrthogonalEven, plain(&[3, 1], 2)),
        (BasisFamily::PinOdd, spin(&[2, 1], 2)),
    ]
}

fn label(family: BasisFamily, shape: &Shape) -> String {
    format!("{family}{}", shape.partition())
}

fn relation_span(c: &mut Criterion) {
    let mut g = c.benchmark_group("relation_span");
    for (family, shape) in configs() {
        g.bench_with_input(BenchmarkId::from_parameter(label(family, &shape)), &shape, |b, sh| {
            b.iter(|| RelationSpan::build(black_box(sh), Group::of_family(family), &OracleConfig::default()).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_basis");
    for (family, shape) in configs() {
        g.bench_with_input(BenchmarkId::from_parameter(label(family, &shape)), &shape, |b, sh| {
            b.iter(|| enumerate_basis(black_box(sh), family).unwrap())
        });
    }
    g.finish();
}

fn characters(c: &mut Criterion) {
    let mut g = c.benchmark_group("character");
    for (family, shape) in configs() {
        g.bench_with_input(BenchmarkId::from_parameter(label(family, &shape)), &shape, |b, sh| {
            b.iter(|| family_character(family, black_box(sh)).unwrap())
        });
    }
    g.finish();
}

fn straightening(c: &mut Criterion) {
    let mut g = c.benchmark_group("straighten_100");
    for (family, shape) in configs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let inputs: Vec<FormalSum> =
            (0..100).map(|_| FormalSum::from_filling(&random_filling(&shape, family, &mut rng).unwrap())).collect();
        let cache = Arc::new(SpanCache::new(OracleConfig::default()));
        let st = Straightener::new(family, shape.rank()).with_cache(cache);
        st.straighten(&inputs[0]).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(label(family, &shape)), &inputs, |b, xs| {
            b.iter(|| xs.iter().map(|x| st.straighten(x).unwrap().steps).sum::<u64>())
        });
    }
    g.finish();
}

criterion_group!(benches, relation_span, enumeration, characters, straightening);
criterion_main!(benches);
