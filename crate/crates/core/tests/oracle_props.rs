mod common;

use common::{mask_of, random_interval_case, random_sets, random_split_case, Naive};
use csr_core::generate::random_graph;
use csr_core::{
    oracle_connectivity_report, oracle_distance, verify_sequence, Graph, Instance, OracleLimits,
    Representation, Rule, StateSpace,
};
use rand::Rng;

fn limits() -> OracleLimits {
    OracleLimits::default()
}

#[test]
fn distances_match_naive_search() {
    for seed in 0..600 {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=8);
        let c = rng.gen_range(1..=3);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let repr = Representation::Edges(g.clone());
        let (mut s, t, k) = random_sets(&mut rng, &repr, c);
        let rule = [Rule::Tar, Rule::Tj, Rule::Ts][seed as usize % 3];
        if rule != Rule::Tar {
            while s.len() > t.len() {
                let v = s.sorted()[0];
                s.remove(v);
            }
            if s.len() != t.len() {
                continue;
            }
        }
        let out = oracle_distance(&repr, c, &s, &t, k, rule, &limits()).unwrap();
        let expected = Naive::new(&g, c).distance(
            mask_of(&s),
            mask_of(&t),
            rule,
            if rule == Rule::Tar { k } else { 0 },
        );
        assert_eq!(out.distance, expected, "seed {seed} {rule}");
        if let Some(seq) = out.sequence {
            assert_eq!(Some(seq.len()), out.distance);
            let inst = Instance::new(repr, rule, c, k.min(s.len()), s, t).unwrap();
            assert_eq!(verify_sequence(&inst, &seq).unwrap(), Ok(()), "seed {seed}");
        }
    }
}

#[test]
fn state_spaces_are_complete_and_symmetric() {
    for seed in 0..200 {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(0..=8);
        let c = rng.gen_range(1..=2);
        let g = random_graph(&mut rng, n, 0.4);
        let k = rng.gen_range(0..=n.min(4));
        let mut naive = Naive::new(&g, c);
        for rule in [Rule::Tar, Rule::Tj, Rule::Ts] {
            let space = StateSpace::build(&Representation::Edges(g.clone()), c, k, rule, &limits())
                .unwrap();
            let expected = (0..1u64 << n)
                .filter(|&x| {
                    let size = x.count_ones() as usize;
                    (if rule == Rule::Tar {
                        size >= k
                    } else {
                        size == k
                    }) && naive.ok(x)
                })
                .count();
            assert_eq!(space.len(), expected, "seed {seed} {rule}");
            for x in 0..space.len() {
                let mut moves = naive.moves(mask_of(&space.state(x)), rule, k);
                moves.sort_unstable();
                let mut listed: Vec<u64> = space
                    .neighbors(x)
                    .iter()
                    .map(|&y| mask_of(&space.state(y)))
                    .collect();
                listed.sort_unstable();
                assert_eq!(listed, moves, "seed {seed} {rule}");
                for &y in space.neighbors(x) {
                    assert!(space.neighbors(y).contains(&x));
                }
            }
        }
    }
}

#[test]
fn raising_the_threshold_never_shortens() {
    for seed in 0..400 {
        let case = random_interval_case(seed, 10);
        let repr = Representation::Intervals(case.model.clone());
        let top = case.s.len().min(case.t.len());
        let mut last = Some(0);
        for k in 0..=top {
            let d = oracle_distance(&repr, case.c, &case.s, &case.t, k, Rule::Tar, &limits())
                .unwrap()
                .distance;
            let rank = |x: Option<usize>| x.unwrap_or(usize::MAX);
            assert!(rank(d) >= rank(last), "seed {seed} k {k}");
            last = d;
        }
    }
    for seed in 0..400 {
        let case = random_split_case(seed, 10);
        let repr = Representation::Split(case.model.clone());
        let top = case.s.len().min(case.t.len());
        let mut last = Some(0);
        for k in 0..=top {
            let d = oracle_distance(&repr, case.c, &case.s, &case.t, k, Rule::Tar, &limits())
                .unwrap()
                .distance;
            assert!(
                d.unwrap_or(usize::MAX) >= last.unwrap_or(usize::MAX),
                "seed {seed} k {k}"
            );
            last = d;
        }
    }
}

#[test]
fn jumping_is_half_of_addition_removal() {
    let mut checked = 0;
    for seed in 0..2000 {
        let case = random_interval_case(seed, 10);
        if case.s.len() != case.t.len() || case.s.is_empty() {
            continue;
        }
        checked += 1;
        let repr = Representation::Intervals(case.model.clone());
        let k = case.s.len() - 1;
        let tar =
            oracle_distance(&repr, case.c, &case.s, &case.t, k, Rule::Tar, &limits()).unwrap();
        let tj = oracle_distance(&repr, case.c, &case.s, &case.t, 0, Rule::Tj, &limits()).unwrap();
        assert_eq!(tar.distance, tj.distance.map(|d| 2 * d), "seed {seed}");
    }
    assert!(checked >= 300);
}

#[test]
fn connectivity_reports() {
    for seed in 0..100 {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(0..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let repr = Representation::Edges(g.clone());
        let report = oracle_connectivity_report(&repr, 2, 1.min(n), Rule::Tar, &limits()).unwrap();
        let total: usize = report.components.iter().map(|c| c.size).sum();
        assert_eq!(total, report.states);
    }
    let k2 = Representation::Edges(Graph::complete(2));
    let report = oracle_connectivity_report(&k2, 1, 1, Rule::Tar, &limits()).unwrap();
    assert_eq!(report.components.len(), 2);
    let empty = Representation::Edges(Graph::empty(2));
    let report = oracle_connectivity_report(&empty, 1, 0, Rule::Tar, &limits()).unwrap();
    assert_eq!(report.components.len(), 1);
    assert_eq!(report.components[0].size, 4);
}
