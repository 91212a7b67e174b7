//! Sequential versus parallel execution of the main sweeps.
//!
//! Each group runs the same workload under both [`Exec`] modes after
//! checking that the two produce identical output.

use std::time::Duration;

use affine_weyl::hecke::{ClassPolyEngine, SearchOrder};
use affine_weyl::reduction::reduce_to_minimal;
use affine_weyl::weyl_core::{ball, length, OmegaScope};
use affine_weyl::{Exec, GroupElement, WeylType};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn workload(ty: WeylType, n: usize, maxlen: u64) -> Vec<GroupElement> {
    ball(ty, n, maxlen, OmegaScope::Integral, Exec::Sequential).expect("ball")
}

fn reduction_sweep(ws: &[GroupElement], exec: Exec) -> Vec<u64> {
    exec.map(ws, |w| length(&reduce_to_minimal(w).expect("reduces").0))
}

fn classpoly_sweep(ws: &[GroupElement], exec: Exec) -> Vec<String> {
    let engine = ClassPolyEngine::new(SearchOrder::Canonical);
    exec.map(ws, |w| engine.table(w).expect("table").to_json())
}

fn bench_ball(c: &mut Criterion) {
    let mut g = c.benchmark_group("ball_c3_len7");
    assert_eq!(
        ball(WeylType::C, 3, 7, OmegaScope::All, Exec::Sequential).unwrap(),
        ball(WeylType::C, 3, 7, OmegaScope::All, Exec::Parallel).unwrap()
    );
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| ball(WeylType::C, 3, 7, OmegaScope::All, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_reduction(c: &mut Criterion) {
    let ws = workload(WeylType::B, 3, 7);
    assert_eq!(reduction_sweep(&ws, Exec::Sequential), reduction_sweep(&ws, Exec::Parallel));
    let mut g = c.benchmark_group("reduction_sweep_b3_len7");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &ws, |b, ws| b.iter(|| reduction_sweep(ws, exec)));
    }
    g.finish();
}

fn bench_classpoly(c: &mut Criterion) {
    let ws = workload(WeylType::A, 3, 6);
    assert_eq!(classpoly_sweep(&ws, Exec::Sequential), classpoly_sweep(&ws, Exec::Parallel));
    let mut g = c.benchmark_group("classpoly_sweep_a3_len6");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &ws, |b, ws| b.iter(|| classpoly_sweep(ws, exec)));
    }
    g.finish();
}

criterion_group! {
    name = exec_modes;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(5));
    targets = bench_ball, bench_reduction, bench_classpoly
}
criterion_main!(exec_modes);
