//! Test-side brute force, kept independent of the library's solvers.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use csr_core::generate::{greedy_colorable_set, random_intervals, random_split_model};
use csr_core::{Graph, IntervalModel, Representation, Rule, SplitModel, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub mod reduction_checks;

pub use csr_core::generate::rng_from_seed as rng;

pub fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

pub fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0u64, |m, v| m | 1 << v)
}

pub fn set_of(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap()
}

/// Plain backtracking: color vertices in index order with the first
/// consistent color, trying every option.
pub fn colorable_bt(adj: &[u64], set: u64, c: usize) -> bool {
    let vertices: Vec<usize> = (0..64).filter(|&v| set >> v & 1 == 1).collect();
    let mut color = vec![usize::MAX; 64];
    fn go(i: usize, vertices: &[usize], adj: &[u64], color: &mut [usize], c: usize) -> bool {
        let Some(&v) = vertices.get(i) else {
            return true;
        };
        for col in 0..c {
            if vertices[..i]
                .iter()
                .any(|&u| adj[v] >> u & 1 == 1 && color[u] == col)
            {
                continue;
            }
            color[v] = col;
            if go(i + 1, vertices, adj, color, c) {
                return true;
            }
        }
        color[v] = usize::MAX;
        false
    }
    go(0, &vertices, adj, &mut color, c)
}

/// Breadth-first search over all vertex subsets, straight from the move
/// definitions.
pub struct Naive {
    pub n: usize,
    pub c: usize,
    pub adj: Vec<u64>,
    memo: HashMap<u64, bool>,
}

impl Naive {
    pub fn new(g: &Graph, c: usize) -> Self {
        Naive {
            n: g.n(),
            c,
            adj: masks(g),
            memo: HashMap::new(),
        }
    }

    pub fn ok(&mut self, set: u64) -> bool {
        if let Some(&b) = self.memo.get(&set) {
            return b;
        }
        let b = colorable_bt(&self.adj, set, self.c);
        self.memo.insert(set, b);
        b
    }

    pub fn moves(&mut self, x: u64, rule: Rule, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let n = self.n;
        match rule {
            Rule::Tar => {
                for v in 0..n {
                    let y = x ^ 1 << v;
                    if y.count_ones() as usize >= k && self.ok(y) {
                        out.push(y);
                    }
                }
            }
            Rule::Tj | Rule::Ts => {
                for u in (0..n).filter(|&u| x >> u & 1 == 1) {
                    for w in (0..n).filter(|&w| x >> w & 1 == 0) {
                        if rule == Rule::Ts && self.adj[u] >> w & 1 == 0 {
                            continue;
                        }
                        let y = x ^ 1 << u | 1 << w;
                        if self.ok(y) {
                            out.push(y);
                        }
                    }
                }
            }
        }
        out
    }

    /// Distances from `s` to every reachable set.
    pub fn distances_from(&mut self, s: u64, rule: Rule, k: usize) -> HashMap<u64, usize> {
        let mut dist = HashMap::from([(s, 0usize)]);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for y in self.moves(x, rule, k) {
                dist.entry(y).or_insert_with(|| {
                    queue.push_back(y);
                    d + 1
                });
            }
        }
        dist
    }

    pub fn distance(&mut self, s: u64, t: u64, rule: Rule, k: usize) -> Option<usize> {
        let mut dist = HashMap::from([(s, 0usize)]);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                return Some(dist[&x]);
            }
            let d = dist[&x];
            for y in self.moves(x, rule, k) {
                dist.entry(y).or_insert_with(|| {
                    queue.push_back(y);
                    d + 1
                });
            }
        }
        None
    }
}

/// Every c-colorable subset of `0..n` of exactly `size` vertices.
pub fn colorable_sets_of_size(adj: &[u64], n: usize, c: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut stack = vec![(0u64, 0usize)];
    while let Some((set, next)) = stack.pop() {
        let have = set.count_ones() as usize;
        if have == size {
            out.push(set);
            continue;
        }
        if have + (n - next) < size {
            continue;
        }
        stack.push((set, next + 1));
        let bigger = set | 1 << next;
        if colorable_bt(adj, bigger, c) {
            stack.push((bigger, next + 1));
        }
    }
    out.sort_unstable();
    out
}

/// One graph per isomorphism class on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for code in 0u32..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .fold(0u32, |m, (_, &(u, v))| m | 1 << index[p[u]][p[v]])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| canon >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::from_edges(n, &edges).unwrap());
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn go(items: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        if from == items.len() {
            out.push(items.clone());
            return;
        }
        for i in from..items.len() {
            items.swap(from, i);
            go(items, from + 1, out);
            items.swap(from, i);
        }
    }
    go(&mut items, 0, &mut out);
    out
}

fn shrink<R: Rng>(rng: &mut R, set: &mut VertexSet, size: usize) {
    let mut members = set.sorted();
    members.shuffle(rng);
    for v in members.into_iter().take(set.len() - size) {
        set.remove(v);
    }
}

/// Two greedy sets shrunk to random sizes, and a threshold they both meet.
/// Keeps maximal sets and the tightest threshold often so that locked
/// cases show up.
pub fn random_sets<R: Rng>(
    rng: &mut R,
    repr: &Representation,
    c: usize,
) -> (VertexSet, VertexSet, usize) {
    let mut s = greedy_colorable_set(rng, repr, c).unwrap();
    let mut t = greedy_colorable_set(rng, repr, c).unwrap();
    let max_k = s.len().min(t.len());
    let k = if rng.gen_bool(0.3) {
        max_k
    } else {
        rng.gen_range(0..=max_k)
    };
    if rng.gen_bool(0.6) {
        let a = rng.gen_range(k..=s.len());
        shrink(rng, &mut s, a);
    }
    if rng.gen_bool(0.6) {
        let b = rng.gen_range(k..=t.len());
        shrink(rng, &mut t, b);
    }
    (s, t, k)
}

pub struct IntervalCase {
    pub model: IntervalModel,
    pub c: usize,
    pub k: usize,
    pub s: VertexSet,
    pub t: VertexSet,
}

pub fn random_interval_case(seed: u64, max_n: usize) -> IntervalCase {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=max_n);
    let c = rng.gen_range(1..=3);
    let width = rng.gen_range(0..=n / 2 + 1);
    let model = IntervalModel::from_intervals(&random_intervals(&mut rng, n, width)).unwrap();
    let repr = Representation::Intervals(model.clone());
    let (s, t, k) = random_sets(&mut rng, &repr, c);
    IntervalCase { model, c, k, s, t }
}

pub struct SplitCase {
    pub model: SplitModel,
    pub c: usize,
    pub k: usize,
    pub s: VertexSet,
    pub t: VertexSet,
}

pub fn random_split_case(seed: u64, max_n: usize) -> SplitCase {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=max_n);
    let c = rng.gen_range(1..=3);
    let p = rng.gen_range(0.2..0.8);
    let model = random_split_model(&mut rng, n, p);
    let repr = Representation::Split(model.clone());
    let (s, t, k) = random_sets(&mut rng, &repr, c);
    SplitCase { model, c, k, s, t }
}
