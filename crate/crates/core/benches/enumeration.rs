use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use selfsim::action::checks::Bounds;
use selfsim::exec::Exec;
use selfsim::fixtures;
use selfsim::isg::InverseSemigroup;
use selfsim::ugroup::sigma::{check_idempotent_pure, odometer_sigma};

fn purity(c: &mut Criterion) {
    let odo = fixtures::odometer(2);
    let sigma = odometer_sigma(&odo).unwrap();
    let bounds = Bounds {
        radius: 16,
        path_len: 4,
    };
    let mut group = c.benchmark_group("idempotent_purity_r2");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| black_box(check_idempotent_pure(&odo, &sigma, bounds, exec).is_pure()))
        });
    }
    group.finish();
}

fn estar(c: &mut Criterion) {
    let odo = fixtures::odometer(3);
    let s = InverseSemigroup::new(&odo);
    let bounds = Bounds {
        radius: 4,
        path_len: 3,
    };
    let mut group = c.benchmark_group("estar_unitary_r3");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| black_box(s.is_estar_unitary(bounds, exec).is_violated()))
        });
    }
    group.finish();
}

criterion_group!(benches, purity, estar);
criterion_main!(benches);
