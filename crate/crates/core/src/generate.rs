//! Seeded random instances.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::{Instance, Representation, Rule};
use crate::interval_model::IntervalModel;
use crate::split_model::SplitModel;

/// Name of the generator's PRNG, recorded in generated files.
pub const RNG_NAME: &str = "chacha8";

const SET_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReprKind {
    Intervals,
    Split,
    Edges,
}

impl FromStr for ReprKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" | "intervals" => Ok(ReprKind::Intervals),
            "split" => Ok(ReprKind::Split),
            "edges" | "graph" => Ok(ReprKind::Edges),
            other => Err(Error::input(format!("unknown representation {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    pub kind: ReprKind,
    pub n: usize,
    pub c: usize,
    pub k: usize,
    pub rule: Rule,
    /// Longest interval, in coordinate units.
    pub width: usize,
    /// Edge probability for split and edge-list graphs.
    pub density: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            kind: ReprKind::Intervals,
            n: 10,
            c: 1,
            k: 0,
            rule: Rule::Tar,
            width: 8,
            density: 0.5,
            seed: 0,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Left endpoints uniform in `[0, n)`, lengths uniform in `[0, width]`.
pub fn random_intervals<R: Rng>(rng: &mut R, n: usize, width: usize) -> Vec<(i64, i64)> {
    (0..n)
        .map(|_| {
            let l = rng.gen_range(0..n.max(1)) as i64;
            (l, l + rng.gen_range(0..=width) as i64)
        })
        .collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple graph")
}

/// Random clique part of uniform size; each clique/independent pair is an
/// edge with probability `p`.
pub fn random_split_model<R: Rng>(rng: &mut R, n: usize, p: f64) -> SplitModel {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let clique_size = rng.gen_range(0..=n);
    let (clique, independent) = vertices.split_at(clique_size);
    let mut edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
        for &w in independent {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    SplitModel::new(Graph::from_edges(n, &edges).expect("simple graph"), clique)
        .expect("valid partition")
}

/// Greedy maximal c-colorable set over a random vertex order.
pub fn greedy_colorable_set<R: Rng>(
    rng: &mut R,
    repr: &Representation,
    c: usize,
) -> Result<VertexSet> {
    let n = repr.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut set = VertexSet::new(n);
    match repr {
        Representation::Intervals(model) => {
            let mut counts = vec![0usize; model.t() + 1];
            for v in order {
                let (l, r) = model.span(v);
                if counts[l..=r].iter().all(|&a| a < c) {
                    counts[l..=r].iter_mut().for_each(|a| *a += 1);
                    set.insert(v);
                }
            }
        }
        _ => {
            for v in order {
                set.insert(v);
                if !repr.is_colorable(&set, c)? {
                    set.remove(v);
                }
            }
        }
    }
    Ok(set)
}

fn shrink_to<R: Rng>(rng: &mut R, set: &mut VertexSet, size: usize) {
    let mut members = set.sorted();
    members.shuffle(rng);
    for v in members.into_iter().take(set.len().saturating_sub(size)) {
        set.remove(v);
    }
}

fn random_representation<R: Rng>(rng: &mut R, params: &GenParams) -> Result<Representation> {
    Ok(match params.kind {
        ReprKind::Intervals => Representation::Intervals(IntervalModel::from_intervals(
            &random_intervals(rng, params.n, params.width),
        )?),
        ReprKind::Split => Representation::Split(random_split_model(rng, params.n, params.density)),
        ReprKind::Edges => Representation::Edges(random_graph(rng, params.n, params.density)),
    })
}

/// A random instance whose two sets are greedy maximal sets shrunk to a
/// random size of at least `k` (a common size under TJ and TS).
pub fn random_instance(params: &GenParams) -> Result<Instance> {
    let mut rng = rng_from_seed(params.seed);
    random_instance_with(&mut rng, params)
}

pub fn random_instance_with<R: Rng>(rng: &mut R, params: &GenParams) -> Result<Instance> {
    if params.c == 0 {
        return Err(Error::input("color budget c must be at least 1"));
    }
    if !(0.0..=1.0).contains(&params.density) {
        return Err(Error::input("density must lie in [0, 1]"));
    }
    let repr = random_representation(rng, params)?;
    for _ in 0..SET_ATTEMPTS {
        let mut source = greedy_colorable_set(rng, &repr, params.c)?;
        let mut target = greedy_colorable_set(rng, &repr, params.c)?;
        let k = params.k;
        if source.len() < k || target.len() < k {
            continue;
        }
        if params.rule == Rule::Tar {
            let a = rng.gen_range(k..=source.len());
            let b = rng.gen_range(k..=target.len());
            shrink_to(rng, &mut source, a);
            shrink_to(rng, &mut target, b);
        } else {
            let size = rng.gen_range(k..=source.len().min(target.len()));
            shrink_to(rng, &mut source, size);
            shrink_to(rng, &mut target, size);
        }
        return Instance::new(repr, params.rule, params.c, k, source, target);
    }
    Err(Error::input(format!(
        "no {}-colorable sets of size {} found after {SET_ATTEMPTS} attempts",
        params.c, params.k
    )))
}
