use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qtheta::par::Mode;
use qtheta::recurrences::{q_via_recurrence, RecurrenceKind};
use qtheta::verifier::{verify_inequality_family_with, verify_parity_with, FamilyId, ParityId};
use qtheta::{PochSpec, Series};

const MODES: [(&str, Mode); 2] = [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)];

fn series_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("series_mul");
    for order in [500usize, 2000] {
        let a = Series::inverse_pochhammer(&PochSpec::of_q(1, 1), order);
        let b = Series::pochhammer(&PochSpec::of_neg_q(1, 1), order);
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, order), &order, |bch, _| {
                bch.iter(|| a.mul_with(black_box(&b), mode).unwrap())
            });
        }
    }
    g.finish();
}

fn family_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("family_sweep");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| verify_inequality_family_with(FamilyId::Cor15B, 5, black_box(1000), mode).unwrap())
        });
    }
    g.finish();
}

fn parity_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("parity_sweep");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| verify_parity_with(ParityId::Cor16C, black_box(10_000), mode).unwrap()));
    }
    g.finish();
}

fn recurrence_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("recurrence_table");
    g.sample_size(10);
    for kind in RecurrenceKind::ALL {
        g.bench_with_input(BenchmarkId::new(kind.as_str(), 10_000), &10_000usize, |b, &n| {
            b.iter(|| q_via_recurrence(kind, black_box(n)))
        });
    }
    g.finish();
}

criterion_group!(benches, series_mul, family_sweep, parity_sweep, recurrence_tables);
criterion_main!(benches);
