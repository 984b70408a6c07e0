mod common;

use common::nonisomorphic_graphs;
use common::reduction_checks::{check_isr_source, check_oct_source, check_spr_source};
use csr_core::reductions::{isr_to_split_csr, spr_to_cocomp_csr};
use csr_core::{oracle_distance, Graph, OracleLimits, Representation, Rule, VertexSet};

#[test]
fn split_reduction_on_all_small_graphs() {
    let mut checks = 0;
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            checks += check_isr_source(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        }
    }
    assert!(checks > 1000);
}

#[test]
fn layered_reduction_on_all_small_graphs() {
    let mut checks = 0;
    for n in 2..=6 {
        for g in nonisomorphic_graphs(n) {
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    for c in 1..=3 {
                        checks += check_spr_source(&g, s, t, c)
                            .unwrap_or_else(|e| panic!("{g:?} s={s} t={t} c={c}: {e}"));
                    }
                }
            }
        }
    }
    assert!(checks > 1000);
}

#[test]
fn join_reduction_on_all_small_graphs() {
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            for c in 2..=3 {
                check_oct_source(&g, c).unwrap_or_else(|e| panic!("{g:?} c={c}: {e}"));
            }
        }
    }
}

#[test]
fn square_example_through_the_oracle() {
    // s=0, a=1, t=2, b=3
    let c4 = Graph::cycle(4);
    let red = spr_to_cocomp_csr(&c4, 0, 2, &[0, 1, 2], &[0, 3, 2], 2).unwrap();
    let repr = Representation::Edges(red.graph.clone());
    let out = oracle_distance(
        &repr,
        2,
        &red.source,
        &red.target,
        0,
        Rule::Ts,
        &OracleLimits::default(),
    )
    .unwrap();
    assert_eq!(out.distance, Some(1));
}

#[test]
fn triangle_example_through_the_oracle() {
    let k3 = Graph::complete(3);
    let one = |v| VertexSet::from_members(3, [v]).unwrap();
    let red = isr_to_split_csr(&k3, &one(0), &one(1)).unwrap();
    let repr = Representation::Split(red.model.clone());
    for rule in [Rule::Ts, Rule::Tj] {
        let out = oracle_distance(
            &repr,
            red.c,
            &red.source,
            &red.target,
            0,
            rule,
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(out.distance, Some(1));
    }
    let out = oracle_distance(
        &repr,
        red.c,
        &red.source,
        &red.target,
        red.k - 1,
        Rule::Tar,
        &OracleLimits::default(),
    )
    .unwrap();
    assert_eq!(out.distance, Some(2));
}
