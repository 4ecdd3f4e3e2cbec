mod common;

use common::{adjacency, brute_force_girth};
use latrig_core::girth_builder::{run_trial, SearchReducer, MIN_DEGREE};
use latrig_core::graph::girth_by_edge_removal;
use latrig_core::{build_one, search, AnalyzeOptions, BuildConfig, BuildError, Girth};
use proptest::prelude::*;

fn check_invariants(config: &BuildConfig, seed: u64) {
    let r = build_one(config, seed).unwrap();
    let f = &r.framework;
    let adj = f.adjacency();
    assert!(f.is_empty() || f.degrees().iter().all(|&d| d >= MIN_DEGREE));
    assert!(f
        .squared_bar_lengths()
        .iter()
        .all(|&l| l == config.m as i64));
    assert!(f.bipartition().is_some());
    assert_eq!(girth_by_edge_removal(&adj), r.girth_achieved);
    assert!(
        r.girth_achieved.at_least(config.target_girth),
        "{:?} {}",
        r.girth_achieved,
        config.target_girth
    );
    for j in f.joints() {
        assert!(j
            .coords()
            .iter()
            .all(|&c| (0..config.n as i64).contains(&c)));
    }
}

#[test]
fn invariants_on_small_configs() {
    for (n, m, g) in [(5, 5, 4), (9, 5, 6), (12, 25, 6), (15, 65, 6), (17, 65, 8)] {
        let config = BuildConfig::new(n, m, g);
        for seed in 0..20 {
            check_invariants(&config, seed);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn invariants_hold_for_random_seeds(seed in any::<u64>(), n in 4usize..14, pick in 0usize..4) {
        let (m, g) = [(5, 4), (5, 6), (25, 6), (13, 4)][pick];
        check_invariants(&BuildConfig::new(n, m, g), seed);
    }
}

#[test]
fn small_build_girth_matches_brute_force() {
    for seed in 0..10 {
        let r = build_one(&BuildConfig::new(9, 5, 6), seed).unwrap();
        let edges: Vec<_> = r.framework.bars().iter().map(|b| b.endpoints()).collect();
        let adj = adjacency(r.framework.num_joints(), &edges);
        let brute = brute_force_girth(&adj).map_or(Girth::Infinite, Girth::Finite);
        assert_eq!(brute, r.girth_achieved);
    }
}

#[test]
fn builds_are_deterministic_in_the_seed() {
    let config = BuildConfig::new(23, 65, 8);
    for seed in [0, 1, 99, u64::MAX] {
        assert_eq!(
            build_one(&config, seed).unwrap(),
            build_one(&config, seed).unwrap()
        );
    }
    let a = build_one(&config, 1).unwrap();
    let b = build_one(&config, 2).unwrap();
    assert_ne!(a.framework, b.framework);
}

#[test]
fn rejects_bad_configs() {
    assert!(matches!(
        build_one(&BuildConfig::new(5, 3, 4), 0),
        Err(BuildError::NotSumOfTwoSquares(3))
    ));
    assert!(matches!(
        build_one(&BuildConfig::new(5, 5, 5), 0),
        Err(BuildError::InvalidGirth(5))
    ));
    assert!(matches!(
        build_one(&BuildConfig::new(5, 5, 2), 0),
        Err(BuildError::InvalidGirth(2))
    ));
    assert!(matches!(
        build_one(&BuildConfig::new(0, 5, 4), 0),
        Err(BuildError::EmptyLattice)
    ));
}

#[test]
fn search_finds_the_small_rigid_framework() {
    let config = BuildConfig::new(5, 5, 4).with_seed(7).with_trials(20);
    let out = search(&config, &AnalyzeOptions::default()).unwrap();
    assert!(out.found());
    let best = out.best_rigid.unwrap();
    assert!(best.joints() <= 25);
    assert!(best.bars() >= 40);
    assert_eq!(best.girth_achieved, Girth::Finite(4));
    assert_eq!(out.trials_run, 20);
}

#[test]
fn reducer_is_order_independent_and_monotone() {
    let config = BuildConfig::new(11, 5, 6).with_seed(3);
    let options = AnalyzeOptions::default();
    let results: Vec<_> = (0..12)
        .map(|t| run_trial(&config, t, &options).unwrap())
        .collect();

    let mut forward = SearchReducer::new();
    results.iter().cloned().for_each(|r| forward.push(r));
    let mut backward = SearchReducer::new();
    results.iter().rev().cloned().for_each(|r| backward.push(r));
    let (f, b) = (forward.finish(), backward.finish());
    assert_eq!(f, b);

    let mut halves = SearchReducer::new();
    let mut other = SearchReducer::new();
    for (i, r) in results.iter().cloned().enumerate() {
        if i % 3 == 0 {
            other.push(r)
        } else {
            halves.push(r)
        }
    }
    halves.merge(other);
    assert_eq!(halves.finish(), f);

    // Adding trials never makes the best rigid result larger.
    let mut reducer = SearchReducer::new();
    let mut previous: Option<usize> = None;
    for r in results {
        reducer.push(r);
        let now = reducer.clone().finish().best_rigid.map(|r| r.joints());
        if let (Some(p), Some(n)) = (previous, now) {
            assert!(n <= p);
        }
        assert!(previous.is_none() || now.is_some());
        previous = now;
    }
}
