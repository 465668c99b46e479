//! Criterion benches for the data-parallel scans, tagged by execution mode.
//!
//! Run both modes and compare the reports (criterion keeps one baseline per
//! bench id, and the mode is part of the id):
//!
//! ```text
//! cargo bench -p ballswap                          # parallel (default)
//! cargo bench -p ballswap --no-default-features    # sequential fallback
//! ```

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ballswap::exec;
use ballswap::inequality::{exhaustive_check, random_counterexample_search, SearchConfig};
use ballswap::matching::{hall_coefficient_bounded, BipGraph};
use ballswap::model::WeightMatrix;
use ballswap::oracle::{conjecture_campaign, CampaignConfig};
use ballswap::sample;

fn hall_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("hall_scan");
    for left in [12usize, 16, 20] {
        let mut rng = sample::rng(left as u64);
        let mut m = WeightMatrix::zeros(left, 24);
        for i in 0..left {
            for j in 0..24 {
                use rand::Rng;
                if rng.gen_bool(0.35) {
                    m.set(i, j, 1);
                }
            }
        }
        let g = BipGraph::new(m);
        group.bench_with_input(
            BenchmarkId::new(exec::mode(), format!("left{left}")),
            &g,
            |b, g| b.iter(|| hall_coefficient_bounded(g, 25).unwrap()),
        );
    }
    group.finish();
}

fn inequality_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("inequality_scan");
    group.sample_size(20);
    let mut rng = sample::rng(99);
    let m = sample::random_sparse_matrix(&mut rng, 7, 7, 0.5);
    let rational = ballswap::inequality::rational_matrix(&m);
    group.bench_function(BenchmarkId::new(exec::mode(), "7x7_full"), |b| {
        b.iter(|| exhaustive_check(&rational, None, 100_000_000).unwrap())
    });
    group.finish();
}

fn search_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_campaign");
    group.sample_size(10);
    let config = SearchConfig {
        rows: 5,
        cols: 5,
        zero_density: 0.4,
        trials: 400,
        seed: 17,
        max_t: 7,
        per_trial_budget: 1_000_000,
    };
    group.bench_function(BenchmarkId::new(exec::mode(), "400_trials_5x5"), |b| {
        b.iter(|| random_counterexample_search(&config))
    });
    group.finish();
}

fn verification_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("verification_campaign");
    group.sample_size(10);
    let config = CampaignConfig {
        pairs: vec![(3, 3)],
        enum_budget: 1_000_000,
        brute_force_edges: 12,
        seed: 0,
    };
    group.bench_function(BenchmarkId::new(exec::mode(), "b33_sweep"), |b| {
        b.iter(|| conjecture_campaign(&config).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    hall_scan,
    inequality_scan,
    search_campaign,
    verification_campaign
);
criterion_main!(benches);
