//! Engine kernel timings: the batch fan-out against a plain sequential map
//! over identical workloads, plus the end-to-end exchange-matrix build.
//!
//! With the `parallel` feature (on by default) the fan-out ships batches of
//! PAR_THRESHOLD or more items to the thread pool; compiling the bench with
//! `--no-default-features` times the in-place fallback on the same code
//! path, so the two strategies can be compared either within one run (first
//! group) or across feature sets (second group).

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use qgal_core::hopf::nonstandard_stages;
use qgal_core::par::{self, PAR_THRESHOLD};
use qgal_core::series::qi;
use qgal_core::{CommutationTable, CoreError, Tensor2, UniversalR};

const ORDER: u32 = 4;

/// A batch of distinct exponentiated-stage tensors plus the exchange matrix
/// they are multiplied with, mirroring the verification hot loop.
fn workload() -> (CommutationTable, Vec<Tensor2>, Tensor2) {
    let table = CommutationTable::nonstandard(ORDER);
    let stages = nonstandard_stages(ORDER);
    let items: Vec<Tensor2> = (0..PAR_THRESHOLD)
        .map(|i| {
            let stage = &stages[i % 3];
            stage
                .scale_q(&qi(1 + (i / 3) as i64))
                .exp(&table)
                .expect("stage exponentials are nilpotent in the symbols")
        })
        .collect();
    let r = UniversalR::nonstandard(&table).unwrap();
    (table, items, r.tensor().clone())
}

fn bench_fan_out(c: &mut Criterion) {
    let (table, items, r) = workload();
    let task = |t: Tensor2| -> Result<Tensor2, CoreError> { t.mul(&r, &table) };

    let mut group = c.benchmark_group("tensor_batch");
    group.sample_size(10);
    group.bench_function("map_batch", |b| {
        b.iter_batched(
            || items.clone(),
            |batch| black_box(par::try_map_batch(batch, task).unwrap()),
            BatchSize::LargeInput,
        )
    });
    group.bench_function("sequential_map", |b| {
        b.iter_batched(
            || items.clone(),
            |batch| {
                black_box(
                    batch
                        .into_iter()
                        .map(task)
                        .collect::<Result<Vec<_>, _>>()
                        .unwrap(),
                )
            },
            BatchSize::LargeInput,
        )
    });
    group.finish();
}

fn bench_exchange_matrix(c: &mut Criterion) {
    let table = CommutationTable::nonstandard(ORDER);
    let mut group = c.benchmark_group("exchange_matrix");
    group.sample_size(10);
    // end to end: build, then one tensor product of the matrix with itself;
    // the inner strategy follows the compiled feature set
    group.bench_function("build_and_square", |b| {
        b.iter(|| {
            let r = UniversalR::nonstandard(&table).unwrap();
            black_box(r.tensor().mul(r.tensor(), &table).unwrap())
        })
    });
    group.finish();
}

criterion_group!(benches, bench_fan_out, bench_exchange_matrix);
criterion_main!(benches);
