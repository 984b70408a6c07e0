//! TAR(k) reachability on split graphs for a fixed color budget.
//!
//! For `C ⊆ K` with `|C| <= c`, `T_C` is the largest c-colorable set meeting
//! `K` exactly in `C`: all of `I` when `|C| < c`, and otherwise `I` minus the
//! vertices adjacent to every member of `C`. Any c-colorable `S` is a subset of
//! `T_{S ∩ K}`, so `S` and `S'` are mutually reachable iff `T_{S ∩ K}` and
//! `T_{S' ∩ K}` are. Between the `T` sets, `T_C` and `T_{C+v}` are linked
//! iff `|T_{C+v}| >= k + 1`, which gives a search over at most
//! `Σ_{i<=c} (|K| choose i)` subsets in `O(n^{c+1})` time.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::instance::{ReconSequence, Step};
use crate::split_model::SplitModel;

/// Largest `c` accepted by [`build_meta_graph`] unless overridden.
pub const DEFAULT_COLOR_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSet {
    /// `C`, sorted.
    pub base: Vec<usize>,
    pub members: VertexSet,
}

impl TSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn check_base(model: &SplitModel, base: &[usize], c: usize) -> Result<()> {
    if base.len() > c {
        return Err(Error::input(format!(
            "base of size {} exceeds c = {c}",
            base.len()
        )));
    }
    if let Some(&v) = base
        .iter()
        .find(|&&v| v >= model.n() || !model.in_clique(v))
    {
        return Err(Error::input(format!(
            "vertex {v} is not in the clique part"
        )));
    }
    Ok(())
}

pub fn t_set(model: &SplitModel, base: &VertexSet, c: usize) -> Result<TSet> {
    let base = base.sorted();
    check_base(model, &base, c)?;
    Ok(t_set_unchecked(model, base, c))
}

fn t_set_unchecked(model: &SplitModel, base: Vec<usize>, c: usize) -> TSet {
    let mut members = VertexSet::new(model.n());
    for &v in &base {
        members.insert(v);
    }
    let full = base.len() == c;
    for &u in model.independent_part() {
        if !full || !model.dominated_by(&base, u) {
            members.insert(u);
        }
    }
    TSet { base, members }
}

/// Size of `T_C` without materializing it.
fn t_size(model: &SplitModel, base: &[usize], c: usize, masks: &NeighborMasks) -> usize {
    let independent = model.independent_part().len();
    if base.len() < c {
        base.len() + independent
    } else {
        base.len() + independent - masks.common_independent(base)
    }
}

/// Per clique vertex, its neighbors in `I` as a bitset over I-positions.
struct NeighborMasks {
    independent: usize,
    words: usize,
    masks: Vec<Vec<u64>>,
}

impl NeighborMasks {
    fn new(model: &SplitModel) -> Self {
        let independent = model.independent_part();
        let words = independent.len().div_ceil(64);
        let mut position = vec![usize::MAX; model.n()];
        for (i, &u) in independent.iter().enumerate() {
            position[u] = i;
        }
        let masks = (0..model.n())
            .map(|v| {
                let mut mask = vec![0u64; words];
                if model.in_clique(v) {
                    for &u in model.graph().neighbors(v) {
                        let p = position[u];
                        if p != usize::MAX {
                            mask[p / 64] |= 1 << (p % 64);
                        }
                    }
                }
                mask
            })
            .collect();
        NeighborMasks {
            independent: independent.len(),
            words,
            masks,
        }
    }

    /// `|{u ∈ I : base ⊆ N(u)}|`.
    fn common_independent(&self, base: &[usize]) -> usize {
        let Some((&first, rest)) = base.split_first() else {
            return self.independent;
        };
        (0..self.words)
            .map(|w| {
                rest.iter()
                    .fold(self.masks[first][w], |acc, &v| acc & self.masks[v][w])
                    .count_ones() as usize
            })
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct MetaGraph {
    c: usize,
    k: usize,
    /// Bases `C`, in order of size then lexicographically.
    nodes: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl MetaGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn node(&self, id: usize) -> &[usize] {
        &self.nodes[id]
    }

    /// `|T_C|` of node `id`.
    pub fn t_size(&self, id: usize) -> usize {
        self.sizes[id]
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    /// Node id of a sorted base.
    pub fn find(&self, base: &[usize]) -> Option<usize> {
        self.index.get(base).copied()
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Node path between two bases, by breadth-first search.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut at = to;
                while at != from {
                    at = parent[at];
                    path.push(at);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// [`build_meta_graph_with_cap`] with [`DEFAULT_COLOR_CAP`].
pub fn build_meta_graph(model: &SplitModel, c: usize, k: usize) -> Result<MetaGraph> {
    build_meta_graph_with_cap(model, c, k, DEFAULT_COLOR_CAP)
}

pub fn build_meta_graph_with_cap(
    model: &SplitModel,
    c: usize,
    k: usize,
    cap: usize,
) -> Result<MetaGraph> {
    if c > cap {
        return Err(Error::Resource(format!(
            "c = {c} exceeds the cap of {cap}; the meta-graph costs O(n^(c+1)) time"
        )));
    }
    if c == 0 {
        return Err(Error::input("color budget c must be at least 1"));
    }
    let masks = NeighborMasks::new(model);
    let clique = model.clique_part();

    let mut nodes = Vec::new();
    let mut sizes = Vec::new();
    let mut index = HashMap::new();
    let mut base = Vec::with_capacity(c);
    for size in 0..=c.min(clique.len()) {
        enumerate_subsets(clique, size, 0, &mut base, &mut |subset| {
            let t = t_size(model, subset, c, &masks);
            if t >= k {
                index.insert(subset.to_vec(), nodes.len());
                nodes.push(subset.to_vec());
                sizes.push(t);
            }
        });
    }

    // C is joined to every C - v exactly when |T_C| > k
    let mut adjacency = vec![Vec::new(); nodes.len()];
    let mut smaller = Vec::with_capacity(c);
    for id in 0..nodes.len() {
        if sizes[id] <= k {
            continue;
        }
        for skip in 0..nodes[id].len() {
            smaller.clear();
            smaller.extend(
                nodes[id]
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            if let Some(&other) = index.get(&smaller) {
                adjacency[id].push(other);
                adjacency[other].push(id);
            }
        }
    }
    Ok(MetaGraph {
        c,
        k,
        nodes,
        sizes,
        adjacency,
        index,
    })
}

fn enumerate_subsets(
    pool: &[usize],
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if current.len() == size {
        visit(current);
        return;
    }
    let needed = size - current.len();
    for i in from..=pool.len().saturating_sub(needed) {
        current.push(pool[i]);
        enumerate_subsets(pool, size, i + 1, current, visit);
        current.pop();
    }
}

fn check_sets(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<()> {
    use crate::coloring::PerfectModel;
    let n = model.n();
    if source.universe() != n || target.universe() != n {
        return Err(Error::input("sets are not over the model's vertices"));
    }
    if source.len() < k || target.len() < k {
        return Err(Error::input(format!(
            "threshold violated: |S| = {}, |S'| = {}, k = {k}",
            source.len(),
            target.len()
        )));
    }
    if !model.is_colorable(source, c) {
        return Err(Error::input(format!("S is not {c}-colorable")));
    }
    if !model.is_colorable(target, c) {
        return Err(Error::input(format!("S' is not {c}-colorable")));
    }
    Ok(())
}

fn clique_base(model: &SplitModel, set: &VertexSet) -> Vec<usize> {
    let mut base: Vec<usize> = set.iter().filter(|&v| model.in_clique(v)).collect();
    base.sort_unstable();
    base
}

/// Meta-graph path between the clique parts of `S` and `S'`, if any.
fn meta_path(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
    cap: usize,
) -> Result<Option<(MetaGraph, Vec<usize>)>> {
    let meta = build_meta_graph_with_cap(model, c, k, cap)?;
    let from = meta
        .find(&clique_base(model, source))
        .ok_or_else(|| Error::Internal("T_{S ∩ K} smaller than S".into()))?;
    let to = meta
        .find(&clique_base(model, target))
        .ok_or_else(|| Error::Internal("T_{S' ∩ K} smaller than S'".into()))?;
    Ok(meta.path(from, to).map(|path| (meta, path)))
}

pub fn split_tar_reachable(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<bool> {
    split_tar_reachable_with_cap(model, c, source, target, k, DEFAULT_COLOR_CAP)
}

pub fn split_tar_reachable_with_cap(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
    cap: usize,
) -> Result<bool> {
    check_sets(model, c, source, target, k)?;
    if source == target {
        return Ok(true);
    }
    Ok(meta_path(model, c, source, target, k, cap)?.is_some())
}

/// TJ reachability through TAR at threshold `|S| - 1`.
pub fn split_tj_reachable(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    cap: usize,
) -> Result<bool> {
    if source.len() != target.len() {
        return Err(Error::input("size mismatch: TJ requires |S| = |S'|"));
    }
    if source == target {
        return Ok(true);
    }
    split_tar_reachable_with_cap(model, c, source, target, source.len() - 1, cap)
}

/// Appends steps taking `current` to `goal`: removals then additions, each in
/// index order.
fn morph(current: &mut VertexSet, goal: &VertexSet, steps: &mut Vec<Step>) {
    for v in current.difference(goal) {
        current.remove(v);
        steps.push(Step::Remove(v));
    }
    for v in goal.difference(current) {
        current.insert(v);
        steps.push(Step::Add(v));
    }
}

/// A valid, not necessarily shortest, TAR(k)-sequence from `S` to `S'`.
pub fn split_tar_witness(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<Option<ReconSequence>> {
    split_tar_witness_with_cap(model, c, source, target, k, DEFAULT_COLOR_CAP)
}

pub fn split_tar_witness_with_cap(
    model: &SplitModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
    cap: usize,
) -> Result<Option<ReconSequence>> {
    check_sets(model, c, source, target, k)?;
    if source == target {
        return Ok(Some(ReconSequence::empty(source.clone())));
    }
    let Some((meta, path)) = meta_path(model, c, source, target, k, cap)? else {
        return Ok(None);
    };

    let mut steps = Vec::new();
    let mut current = source.clone();
    // S ⊆ T_{S ∩ K}: only additions
    let first = t_set_unchecked(model, meta.node(path[0]).to_vec(), c);
    morph(&mut current, &first.members, &mut steps);

    for pair in path.windows(2) {
        let (here, next) = (meta.node(pair[0]), meta.node(pair[1]));
        let next_t = t_set_unchecked(model, next.to_vec(), c);
        if next.len() > here.len() {
            // shrink T_C to T_{C+v} - v (a subset of T_C), then add v
            let v = *next
                .iter()
                .find(|v| !here.contains(v))
                .expect("one new vertex");
            let mut without = next_t.members.clone();
            without.remove(v);
            morph(&mut current, &without, &mut steps);
            current.insert(v);
            steps.push(Step::Add(v));
        } else {
            // drop v from T_C, then grow to T_{C-v}
            let v = *here
                .iter()
                .find(|v| !next.contains(v))
                .expect("one dropped vertex");
            current.remove(v);
            steps.push(Step::Remove(v));
            morph(&mut current, &next_t.members, &mut steps);
        }
    }
    // S' ⊆ T_{S' ∩ K}: only removals
    morph(&mut current, target, &mut steps);
    Ok(Some(ReconSequence {
        start: source.clone(),
        steps,
    }))
}
