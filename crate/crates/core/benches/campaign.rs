use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use critnum::crosscheck::{fuzz_campaign_sequential, GenConfig};
use critnum::{crit_embedding, crit_gamma, crit_inequality, LanglandsParam};

fn campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaign");
    group.sample_size(10);
    for trials in [200u64, 1000] {
        let cfg = GenConfig {
            n_range: 1..=6,
            m_range: 1..=6,
            l_bound: 40,
            trials,
            seed: 42,
        };
        group.bench_with_input(BenchmarkId::new("sequential", trials), &cfg, |b, cfg| {
            b.iter(|| fuzz_campaign_sequential(cfg))
        });
        #[cfg(feature = "rayon")]
        group.bench_with_input(BenchmarkId::new("parallel", trials), &cfg, |b, cfg| {
            b.iter(|| critnum::crosscheck::fuzz_campaign_parallel(cfg))
        });
    }
    group.finish();
}

fn engines(c: &mut Criterion) {
    let pi = LanglandsParam::new(1, vec![30, 16, 8, -8, -16, -30], 0).unwrap();
    let sigma = LanglandsParam::new(0, vec![24, 10, 0, -10, -24], 1).unwrap();
    let mut group = c.benchmark_group("engines");
    group.bench_function("gamma", |b| b.iter(|| crit_gamma(&pi, &sigma).unwrap()));
    group.bench_function("inequality", |b| {
        b.iter(|| crit_inequality(&pi, &sigma).unwrap())
    });
    group.bench_function("embedding", |b| {
        b.iter(|| crit_embedding(&pi, &sigma).unwrap())
    });
    group.finish();
}

criterion_group!(benches, campaign, engines);
criterion_main!(benches);
