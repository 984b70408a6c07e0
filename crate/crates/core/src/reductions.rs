//! Instance factories for three hardness reductions:
//! odd cycle transversal to colorable set on a join, independent set
//! reconfiguration to split graphs, and shortest path reconfiguration to
//! co-comparability graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::{Instance, Representation, Rule};
use crate::split_model::SplitModel;

/// `G ⊕ H` where `H` is `n` disjoint cliques of size `c − 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinOutput {
    pub graph: Graph,
    pub c: usize,
    /// Vertices `0..original` are the source graph's.
    pub original: usize,
    /// One entry per padding clique.
    pub padding: Vec<Vec<usize>>,
    /// `G` has an odd cycle transversal of size at most `k` iff the join has
    /// a c-colorable set of at least this size.
    pub target_size: usize,
}

impl JoinOutput {
    pub fn is_padding(&self, v: usize) -> bool {
        v >= self.original
    }
}

pub fn oct_to_colorable_set(g: &Graph, c: usize, k: usize) -> Result<JoinOutput> {
    let n = g.n();
    if c < 2 {
        return Err(Error::input("join reduction needs c >= 2"));
    }
    if k >= n {
        return Err(Error::input(format!(
            "transversal size k = {k} must be below n = {n}"
        )));
    }
    let width = c - 2;
    let total = n + n * width;
    let mut edges = g.edges();
    let mut padding = Vec::with_capacity(if width == 0 { 0 } else { n });
    if width > 0 {
        for block in 0..n {
            let clique: Vec<usize> = (0..width).map(|j| n + block * width + j).collect();
            for (i, &a) in clique.iter().enumerate() {
                for &b in &clique[i + 1..] {
                    edges.push((a, b));
                }
                for v in 0..n {
                    edges.push((v, a));
                }
            }
            padding.push(clique);
        }
    }
    Ok(JoinOutput {
        graph: Graph::from_edges(total, &edges)?,
        c,
        original: n,
        padding,
        target_size: total - k,
    })
}

fn check_independent(g: &Graph, set: &VertexSet, name: &str) -> Result<()> {
    if set.universe() != g.n() {
        return Err(Error::input(format!(
            "{name} is not over the graph's vertices"
        )));
    }
    for u in set.iter() {
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| set.contains(w)) {
            return Err(Error::input(format!(
                "{name} is not independent: edge {}-{}",
                u.min(w),
                u.max(w)
            )));
        }
    }
    Ok(())
}

/// Split graph `H = (V(G), E(G); E)`: source vertices keep their ids, edge
/// `j` of `G` (in sorted order) becomes vertex `n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReductionOutput {
    pub model: SplitModel,
    pub c: usize,
    pub k: usize,
    pub source_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub source: VertexSet,
    pub target: VertexSet,
}

impl SplitReductionOutput {
    /// `V(H) \ I` for an independent set `I` of `G`.
    pub fn phi(&self, independent: &VertexSet) -> VertexSet {
        let total = self.model.n();
        let mut image = VertexSet::full(total);
        for v in independent.iter() {
            image.remove(v);
        }
        image
    }

    /// The independent set mapped to `set`, if `set` contains every edge vertex.
    pub fn phi_inverse(&self, set: &VertexSet) -> Option<VertexSet> {
        let n = self.source_vertices;
        if (n..self.model.n()).any(|e| !set.contains(e)) {
            return None;
        }
        let rest = (0..n).filter(|&v| !set.contains(v));
        Some(VertexSet::from_members(n, rest).expect("in range"))
    }

    /// The reduced instance. Under TAR the threshold is `k − 1`.
    pub fn instance(&self, rule: Rule) -> Result<Instance> {
        let k = if rule == Rule::Tar {
            self.k - 1
        } else {
            self.k
        };
        Instance::new(
            Representation::Split(self.model.clone()),
            rule,
            self.c,
            k,
            self.source.clone(),
            self.target.clone(),
        )
    }
}

pub fn isr_to_split_csr(
    g: &Graph,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<SplitReductionOutput> {
    check_independent(g, source, "I")?;
    check_independent(g, target, "I'")?;
    if source.len() != target.len() {
        return Err(Error::input("I and I' differ in size"));
    }
    let n = g.n();
    let c = n - source.len();
    if c == 0 {
        return Err(Error::input("I covers every vertex, leaving c = 0"));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut h_edges = Vec::with_capacity(n * (n - 1) / 2 + m * n);
    for u in 0..n {
        for v in u + 1..n {
            h_edges.push((u, v));
        }
    }
    for (j, &(a, b)) in edges.iter().enumerate() {
        for v in 0..n {
            if v != a && v != b {
                h_edges.push((v, n + j));
            }
        }
    }
    let clique: Vec<usize> = (0..n).collect();
    let model = SplitModel::new(Graph::from_edges(n + m, &h_edges)?, &clique)?;
    let mut out = SplitReductionOutput {
        model,
        c,
        k: m + c,
        source_vertices: n,
        edges,
        source: VertexSet::new(0),
        target: VertexSet::new(0),
    };
    out.source = out.phi(source);
    out.target = out.phi(target);
    Ok(out)
}

fn bfs(g: &Graph, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Layered co-comparability graph built from the shortest `s`–`t` paths of `G`.
///
/// Layer vertices are numbered first, layer by layer and by source index
/// within a layer; padding cliques `C_0..C_ℓ` follow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocompReductionOutput {
    pub graph: Graph,
    pub c: usize,
    pub k: usize,
    /// `ℓ = dist(s, t)`.
    pub length: usize,
    pub layers: Vec<Vec<usize>>,
    pub padding: Vec<Vec<usize>>,
    /// Source vertex of each layer vertex; `None` for padding.
    pub origin: Vec<Option<usize>>,
    /// Vertex order with no umbrella triple.
    pub order: Vec<usize>,
    pub source: VertexSet,
    pub target: VertexSet,
    image: Vec<Option<usize>>,
}

impl CocompReductionOutput {
    /// Vertex of the reduced graph standing for source vertex `v`.
    pub fn image_of(&self, v: usize) -> Option<usize> {
        self.image.get(v).copied().flatten()
    }

    /// Path vertices plus all padding. Fails if `path` is not on the layers.
    pub fn phi(&self, path: &[usize]) -> Result<VertexSet> {
        let mut set = VertexSet::new(self.graph.n());
        for &v in path {
            let w = self
                .image_of(v)
                .ok_or_else(|| Error::input(format!("vertex {v} lies on no shortest path")))?;
            set.insert(w);
        }
        for clique in &self.padding {
            for &p in clique {
                set.insert(p);
            }
        }
        Ok(set)
    }

    /// The source path encoded by `set`, if it holds all padding and exactly
    /// one vertex per layer.
    pub fn phi_inverse(&self, set: &VertexSet) -> Option<Vec<usize>> {
        if self.padding.iter().flatten().any(|&p| !set.contains(p)) {
            return None;
        }
        let mut path = Vec::with_capacity(self.layers.len());
        for layer in &self.layers {
            let mut hits = layer.iter().filter(|&&v| set.contains(v));
            let v = *hits.next()?;
            if hits.next().is_some() {
                return None;
            }
            path.push(self.origin[v].expect("layer vertex"));
        }
        Some(path)
    }

    /// The reduced instance. Under TAR the threshold is `k − 1`.
    pub fn instance(&self, rule: Rule) -> Result<Instance> {
        let k = if rule == Rule::Tar {
            self.k - 1
        } else {
            self.k
        };
        Instance::new(
            Representation::Edges(self.graph.clone()),
            rule,
            self.c,
            k,
            self.source.clone(),
            self.target.clone(),
        )
    }
}

fn check_path(
    g: &Graph,
    s: usize,
    t: usize,
    length: usize,
    path: &[usize],
    name: &str,
) -> Result<()> {
    if path.first() != Some(&s) || path.last() != Some(&t) {
        return Err(Error::input(format!("{name} does not run from s to t")));
    }
    if path.len() != length + 1 {
        return Err(Error::input(format!(
            "{name} has length {}, shortest is {length}",
            path.len().saturating_sub(1)
        )));
    }
    for w in path.windows(2) {
        if w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1]) {
            return Err(Error::input(format!(
                "{name} uses non-edge {}-{}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

pub fn spr_to_cocomp_csr(
    g: &Graph,
    s: usize,
    t: usize,
    source: &[usize],
    target: &[usize],
    c: usize,
) -> Result<CocompReductionOutput> {
    let n = g.n();
    if s >= n || t >= n {
        return Err(Error::input("s or t outside the graph"));
    }
    if c == 0 {
        return Err(Error::input("color budget c must be at least 1"));
    }
    let from_s = bfs(g, s);
    let from_t = bfs(g, t);
    let length = from_s[t];
    if length == usize::MAX {
        return Err(Error::input("t is unreachable from s"));
    }
    check_path(g, s, t, length, source, "P")?;
    check_path(g, s, t, length, target, "P'")?;

    let mut image = vec![None; n];
    let mut origin = Vec::new();
    let mut layers = vec![Vec::new(); length + 1];
    let mut layer_of = Vec::new();
    for (i, layer) in layers.iter_mut().enumerate() {
        for v in 0..n {
            if from_s[v] == i && from_t[v] == length - i {
                image[v] = Some(origin.len());
                layer.push(origin.len());
                layer_of.push(i);
                origin.push(Some(v));
            }
        }
    }
    let core = origin.len();
    let width = c - 1;
    let padding: Vec<Vec<usize>> = (0..=length)
        .map(|i| (0..width).map(|j| core + i * width + j).collect())
        .collect();
    origin.resize(core + (length + 1) * width, None);

    let mut edges = Vec::new();
    for i in 0..=length {
        let layer = &layers[i];
        for (a, &u) in layer.iter().enumerate() {
            for &v in &layer[a + 1..] {
                edges.push((u, v));
            }
            if i < length {
                for &v in &layers[i + 1] {
                    let (gu, gv) = (origin[u].unwrap(), origin[v].unwrap());
                    if !g.has_edge(gu, gv) {
                        edges.push((u, v));
                    }
                }
            }
        }
        let clique = &padding[i];
        for (a, &p) in clique.iter().enumerate() {
            for &q in &clique[a + 1..] {
                edges.push((p, q));
            }
            for &v in layer.iter().chain(layers.get(i + 1).into_iter().flatten()) {
                edges.push((p, v));
            }
        }
    }
    let graph = Graph::from_edges(origin.len(), &edges)?;
    let order: Vec<usize> = (0..=length)
        .flat_map(|i| padding[i].iter().chain(&layers[i]).copied())
        .collect();

    let mut out = CocompReductionOutput {
        graph,
        c,
        k: (length + 1) * c,
        length,
        layers,
        padding,
        origin,
        order,
        source: VertexSet::new(0),
        target: VertexSet::new(0),
        image,
    };
    out.source = out.phi(source)?;
    out.target = out.phi(target)?;
    Ok(out)
}

/// First triple `u ≺ v ≺ w` (by position) with `{u,w}` an edge and `v`
/// adjacent to neither, or `None` if the order certifies co-comparability.
pub fn check_cocomp_order(g: &Graph, order: &[usize]) -> Result<Option<(usize, usize, usize)>> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::input("order is not a permutation of the vertices"));
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::input("order is not a permutation of the vertices"));
        }
    }
    for i in 0..n {
        let u = order[i];
        for l in i + 2..n {
            let w = order[l];
            if !g.has_edge(u, w) {
                continue;
            }
            for &v in &order[i + 1..l] {
                if !g.has_edge(u, v) && !g.has_edge(v, w) {
                    return Ok(Some((u, v, w)));
                }
            }
        }
    }
    Ok(None)
}
