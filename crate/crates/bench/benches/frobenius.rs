use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pqfrob::covering::{self, CoveringInstance};
use pqfrob::oracle::AperyTable;
use pqfrob::pairmodel;
use pqfrob::witness;
use pqfrob::PrimePair;

fn apery(c: &mut Criterion) {
    let mut group = c.benchmark_group("apery_table");
    for (p, q) in [(11, 17), (29, 103), (97, 149), (149, 293)] {
        let pair = PrimePair::new(p, q).unwrap();
        let w = pairmodel::weights(&pair).unwrap().as_array();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{p}x{q}")),
            &w,
            |b, w| b.iter(|| AperyTable::build(black_box(w)).unwrap().frobenius_number()),
        );
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let pair = PrimePair::new(29, 103).unwrap();
    let d1 = pairmodel::weights(&pair).unwrap().d1;
    c.bench_function("above_ga_full_range_29x103", |b| {
        b.iter(|| {
            for t in 0..d1 {
                black_box(witness::represent_above_ga(&pair, t).unwrap());
            }
        })
    });
    let twin = PrimePair::new(71, 73).unwrap();
    let d1 = pairmodel::weights(&twin).unwrap().d1;
    c.bench_function("above_gc_full_range_71x73", |b| {
        b.iter(|| {
            for t in 0..d1 {
                black_box(witness::represent_above_gc_twin(&twin, t).unwrap());
            }
        })
    });
}

fn nu_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("nu_search");
    for n in [143, 1105, 1463] {
        let inst = CoveringInstance::new(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| covering::nu_cyclic_bruteforce(black_box(inst)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, apery, constructions, nu_search);
criterion_main!(benches);
