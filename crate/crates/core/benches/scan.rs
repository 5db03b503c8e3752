use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use frieze_core::analysis::{conjecture_scan, conjecture_scan_sequential, ScanFilters, ScanOptions};

fn scans(c: &mut Criterion) {
    let filters = ScanFilters::default();
    let opts = ScanOptions::default();
    let mut group = c.benchmark_group("conjecture_scan");
    group.sample_size(10);
    for n in [9, 10] {
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| conjecture_scan_sequential(n, &filters, &opts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| conjecture_scan(n, &filters, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
