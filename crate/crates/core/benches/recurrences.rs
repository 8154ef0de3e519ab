use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use polarize::curve::{polar_value_curve, polar_value_curve_direct};
use polarize::poly::{Poly1, Poly2};
use polarize::rect::{polar_value_rect, polar_value_rect_direct};
use polarize::tri::{polar_value_tri, polar_value_tri_direct, Point2};
use polarize::Ratio;

fn rational(rng: &mut ChaCha8Rng) -> Ratio {
    Ratio::new(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=17)).unwrap()
}

fn curve(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("curve");
    for m in [4usize, 10, 20] {
        let poly = Poly1::from_terms((0..=m as u32).map(|k| (k, rational(&mut rng))));
        let args: Vec<Ratio> = (0..m).map(|_| rational(&mut rng)).collect();
        group.bench_with_input(BenchmarkId::new("sigma", m), &m, |b, _| {
            b.iter(|| polar_value_curve(black_box(&poly), black_box(&args)))
        });
        group.bench_with_input(BenchmarkId::new("direct", m), &m, |b, _| {
            b.iter(|| polar_value_curve_direct(black_box(&poly), black_box(&args)))
        });
    }
    group.finish();
}

fn rect(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut group = c.benchmark_group("rect");
    for n in [2usize, 4, 6] {
        let poly = Poly2::from_terms(
            (0..=n as u32)
                .flat_map(|h| (0..=n as u32).map(move |k| (h, k)))
                .map(|e| (e, Ratio::from(e.0 as i64 - e.1 as i64))),
        );
        let ua: Vec<Ratio> = (0..n).map(|_| rational(&mut rng)).collect();
        let va: Vec<Ratio> = (0..n).map(|_| rational(&mut rng)).collect();
        group.bench_with_input(BenchmarkId::new("sigma", n), &n, |b, _| {
            b.iter(|| polar_value_rect(black_box(&poly), &ua, &va))
        });
        group.bench_with_input(BenchmarkId::new("direct", n), &n, |b, _| {
            b.iter(|| polar_value_rect_direct(black_box(&poly), &ua, &va))
        });
    }
    group.finish();
}

fn tri(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut group = c.benchmark_group("tri");
    for m in [3usize, 6, 9] {
        let poly = Poly2::from_terms(
            (0..=m as u32)
                .flat_map(|h| (0..=m as u32 - h).map(move |k| (h, k)))
                .map(|e| (e, Ratio::from(1 + e.0 as i64))),
        );
        let args: Vec<Point2> = (0..m).map(|_| Point2 { u: rational(&mut rng), v: rational(&mut rng) }).collect();
        group.bench_with_input(BenchmarkId::new("sigma", m), &m, |b, _| {
            b.iter(|| polar_value_tri(black_box(&poly), &args))
        });
        group.bench_with_input(BenchmarkId::new("direct", m), &m, |b, _| {
            b.iter(|| polar_value_tri_direct(black_box(&poly), &args))
        });
    }
    group.finish();
}

criterion_group!(benches, curve, rect, tri);
criterion_main!(benches);
