use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use supertgw_bench::{composition_example, superdiagonal};
use supertgw_core::support::{enumerate_support, is_in_support, oracle_membership, BoxSpec, DEFAULT_BOX_CAP};
use supertgw_core::Sign;

fn membership(c: &mut Criterion) {
    let g = composition_example();
    c.bench_function("member_1_2_1", |b| b.iter(|| is_in_support(&g, black_box(&[1, 2, 1]))));
    c.bench_function("member_4_5_3", |b| b.iter(|| is_in_support(&g, black_box(&[4, 5, 3]))));
    c.bench_function("oracle_1_2_1", |b| b.iter(|| oracle_membership(&g, black_box(&[1, 2, 1]), 8)));
}

fn enumeration(c: &mut Criterion) {
    let g = superdiagonal(Sign::Minus, &[1, 1, 0, 0]);
    let bx = BoxSpec::cube(3, 3);
    c.bench_function("enumerate_radius3_m3", |b| {
        b.iter(|| enumerate_support(&g, black_box(&bx), false, DEFAULT_BOX_CAP))
    });
}

criterion_group!(benches, membership, enumeration);
criterion_main!(benches);
