//! Flow-batch timings: the thread-pool fan-out against its sequential twin
//! integrating the same seeded set of initial conditions.
//!
//! `integrate_batch` routes through the shared batch helper, which uses the
//! thread pool when the `parallel` feature (on by default) is enabled and
//! the batch is large enough; `integrate_batch_seq` is always sequential.
//! Comparing the two inside one run isolates the dispatch overhead, and a
//! `--no-default-features` build times the fallback end to end.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use qgal_dynamics::hamiltonian::{HamiltonianSystem, Potential};
use qgal_dynamics::integrate::{integrate_batch, integrate_batch_seq, Method};
use qgal_dynamics::realize::{DeformParams, PhaseRealization, PoissonFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BATCH: usize = 128;
const T_END: f64 = 1.0;
const DT: f64 = 1e-2;

fn chain() -> HamiltonianSystem {
    let params = DeformParams {
        xi: 0.2,
        nu: 0.15,
        alpha: 0.3,
        beta1: 0.1,
        beta2: 0.1,
        beta3: 0.12,
    };
    let realization =
        PhaseRealization::new(PoissonFamily::Standard, params, vec![1.0, 1.5, 0.8]).unwrap();
    HamiltonianSystem::new(realization, 3, Potential::Harmonic).unwrap()
}

fn initial_conditions(count: usize, n: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..count)
        .map(|_| {
            let q = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let p = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            (q, p)
        })
        .collect()
}

fn bench_flow_batch(c: &mut Criterion) {
    let system = chain();
    let initials = initial_conditions(BATCH, 3);

    let mut group = c.benchmark_group("flow_batch");
    group.sample_size(10);
    group.bench_function("fan_out", |b| {
        b.iter_batched(
            || initials.clone(),
            |batch| black_box(integrate_batch(&system, batch, T_END, DT, Method::Rk4).unwrap()),
            BatchSize::LargeInput,
        )
    });
    group.bench_function("sequential_twin", |b| {
        b.iter_batched(
            || initials.clone(),
            |batch| {
                black_box(integrate_batch_seq(&system, batch, T_END, DT, Method::Rk4).unwrap())
            },
            BatchSize::LargeInput,
        )
    });
    group.finish();
}

criterion_group!(benches, bench_flow_batch);
criterion_main!(benches);
