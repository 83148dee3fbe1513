//! Benchmarks for the hot paths: equilibrium enumeration with witness
//! synthesis, the two-sided feasibility crosscheck, exhaustive profile
//! verification, and a full welfare audit.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use autobid_eq_bench::fixture;
use autobid_eq_core::audit::ic_audit;
use autobid_eq_core::model::TieBreak;
use autobid_eq_core::nonuniform::{verify_equilibrium, BidProfile};
use autobid_eq_core::oracle::crosscheck_uniform;
use autobid_eq_core::rational::{rat, Rat};
use autobid_eq_core::uniform::{enumerate_equilibria, witness_multipliers};

fn enumerate_and_witness(c: &mut Criterion) {
    let (norm, targets) = fixture(7, 8);
    c.bench_function("enumerate_and_witness_n8", |b| {
        b.iter(|| {
            for k in enumerate_equilibria(black_box(&norm), &targets) {
                let w = witness_multipliers(&norm, &targets, k, TieBreak::Bidder1Wins).unwrap();
                black_box(w);
            }
        })
    });
}

fn crosscheck(c: &mut Criterion) {
    let (norm, targets) = fixture(7, 8);
    c.bench_function("crosscheck_uniform_n8", |b| {
        b.iter(|| black_box(crosscheck_uniform(black_box(&norm), &targets).unwrap()))
    });
}

fn exhaustive_verification(c: &mut Criterion) {
    let (norm, targets) = fixture(11, 12);
    let k = *enumerate_equilibria(&norm, &targets)
        .first()
        .expect("fixture 11 has at least one split");
    let w = witness_multipliers(&norm, &targets, k, TieBreak::Bidder1Wins).unwrap();
    let bids = BidProfile::from_uniform(&norm, &targets, &w);
    c.bench_function("verify_equilibrium_n12", |b| {
        b.iter(|| {
            black_box(
                verify_equilibrium(
                    black_box(norm.instance()),
                    &targets,
                    &bids,
                    TieBreak::Bidder1Wins,
                    12,
                )
                .unwrap(),
            )
        })
    });
}

fn welfare_audit(c: &mut Criterion) {
    let (norm, targets) = fixture(7, 8);
    let truth = targets.get(0).clone();
    let grid: Vec<Rat> = (1..=10).map(|i| &truth * rat(i, 10)).collect();
    c.bench_function("ic_audit_n8_grid10", |b| {
        b.iter(|| black_box(ic_audit(black_box(&norm), &truth, targets.get(1), &grid).unwrap()))
    });
}

criterion_group!(
    benches,
    enumerate_and_witness,
    crosscheck,
    exhaustive_verification,
    welfare_audit
);
criterion_main!(benches);
