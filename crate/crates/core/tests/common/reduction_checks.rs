//! Exhaustive certificate checks for the reductions, from first principles.

use std::collections::{BTreeSet, VecDeque};

use csr_core::reductions::{
    check_cocomp_order, isr_to_split_csr, oct_to_colorable_set, spr_to_cocomp_csr,
};
use csr_core::{Graph, Rule};

use super::{colorable_bt, colorable_sets_of_size, mask_of, masks, set_of};

pub type Check = Result<usize, String>;

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

pub fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<u64> {
    let adj = masks(g);
    (0..1u64 << g.n())
        .filter(|&x| x.count_ones() as usize == size)
        .filter(|&x| (0..g.n()).all(|v| x >> v & 1 == 0 || adj[v] & x == 0))
        .collect()
}

pub fn shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let from_s = bfs(g, s);
    let length = from_s[t];
    if length == usize::MAX {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![vec![s]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if path.len() == length + 1 {
            if last == t {
                out.push(path);
            }
            continue;
        }
        for &w in g.neighbors(last) {
            if from_s[w] == path.len() {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Rules whose one-step relation holds between `a` and `b` in the target.
fn target_steps(adj: &[u64], c: usize, a: u64, b: u64) -> [bool; 3] {
    let differ = (a & !b).count_ones() == 1 && (b & !a).count_ones() == 1;
    let (out, inn) = ((a & !b).trailing_zeros(), (b & !a).trailing_zeros());
    let ts = differ && adj[out as usize] >> inn & 1 == 1;
    // remove the vertex of a outside b, then add the vertex of b outside a
    let tar = differ && colorable_bt(adj, a & b, c);
    [ts, differ, tar]
}

fn same_relation(source: bool, target: [bool; 3], context: &str) -> Result<(), String> {
    for (rule, holds) in [Rule::Ts, Rule::Tj, Rule::Tar].into_iter().zip(target) {
        if holds != source {
            return Err(format!(
                "{context}: source step {source} but {rule} step {holds}"
            ));
        }
    }
    Ok(())
}

/// Independent set reconfiguration to split graphs, every token count.
pub fn check_isr_source(g: &Graph) -> Check {
    let n = g.n();
    let m = g.m();
    let mut checks = 0;
    for size in 0..n {
        let sets = independent_sets_of_size(g, size);
        let Some(&first) = sets.first() else { continue };
        let red =
            isr_to_split_csr(g, &set_of(n, first), &set_of(n, first)).map_err(|e| e.to_string())?;
        let c = n - size;
        let h = red.model.graph();
        let adj = masks(h);
        let total = h.n();
        if red.c != c || red.k != m + c || total != n + m {
            return Err(format!("parameters c={} k={} |V(H)|={total}", red.c, red.k));
        }
        let images: Vec<u64> = sets
            .iter()
            .map(|&i| mask_of(&red.phi(&set_of(n, i))))
            .collect();
        for (&i, &img) in sets.iter().zip(&images) {
            if img != ((1u64 << total) - 1) & !i {
                return Err(format!("phi({i:b}) is not the complement"));
            }
            if img.count_ones() as usize != red.k || !colorable_bt(&adj, img, c) {
                return Err(format!(
                    "phi({i:b}) is not a {c}-colorable set of size {}",
                    red.k
                ));
            }
            checks += 1;
        }
        let edge_part = ((1u64 << total) - 1) & !((1u64 << n) - 1);
        let all = colorable_sets_of_size(&adj, total, c, red.k);
        for &x in &all {
            if x & edge_part != edge_part {
                return Err(format!("colorable set {x:b} misses an edge vertex"));
            }
            let rest = ((1u64 << n) - 1) & !x;
            if !independent_sets_of_size(g, size).contains(&rest) {
                return Err(format!("complement of {x:b} is not independent"));
            }
            if red.phi_inverse(&set_of(total, x)).map(|s| mask_of(&s)) != Some(rest) {
                return Err(format!("phi_inverse({x:b}) wrong"));
            }
            checks += 1;
        }
        let image_set: BTreeSet<u64> = images.iter().copied().collect();
        if image_set != all.iter().copied().collect() {
            return Err("phi is not onto the colorable sets of size k".into());
        }
        for (a, &i) in sets.iter().enumerate() {
            for (b, &j) in sets.iter().enumerate() {
                let source = (i ^ j).count_ones() == 2;
                let target = target_steps(&adj, c, images[a], images[b]);
                same_relation(source, target, &format!("I={i:b} I'={j:b}"))?;
                checks += 1;
            }
        }
        for rule in [Rule::Tar, Rule::Tj, Rule::Ts] {
            red.instance(rule).map_err(|e| e.to_string())?;
        }
    }
    Ok(checks)
}

fn umbrella_free(g: &Graph, order: &[usize]) -> bool {
    let len = order.len();
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            (j + 1..len).all(|l| {
                let (u, v, w) = (order[i], order[j], order[l]);
                !g.has_edge(u, w) || g.has_edge(u, v) || g.has_edge(v, w)
            })
        })
    })
}

/// Shortest path reconfiguration to co-comparability graphs for one `(s, t, c)`.
pub fn check_spr_source(g: &Graph, s: usize, t: usize, c: usize) -> Check {
    let paths = shortest_paths(g, s, t);
    let Some(first) = paths.first() else {
        return Ok(0);
    };
    let length = first.len() - 1;
    let red = spr_to_cocomp_csr(g, s, t, first, first, c).map_err(|e| e.to_string())?;
    let h = &red.graph;
    let adj = masks(h);
    let total = h.n();
    let mut checks = 0;
    if red.k != (length + 1) * c || red.length != length {
        return Err(format!("k = {} for length {length}", red.k));
    }
    if check_cocomp_order(h, &red.order)
        .map_err(|e| e.to_string())?
        .is_some()
    {
        return Err("emitted order has an umbrella".into());
    }
    if !umbrella_free(h, &red.order) {
        return Err("emitted order has an umbrella (direct scan)".into());
    }
    let padding: u64 = red.padding.iter().flatten().fold(0, |m, &p| m | 1 << p);
    let images: Vec<u64> = paths
        .iter()
        .map(|p| red.phi(p).map(|x| mask_of(&x)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for (p, &img) in paths.iter().zip(&images) {
        if img.count_ones() as usize != red.k || !colorable_bt(&adj, img, c) {
            return Err(format!(
                "phi({p:?}) is not a {c}-colorable set of size {}",
                red.k
            ));
        }
        checks += 1;
    }
    let from_s = bfs(g, s);
    let all = colorable_sets_of_size(&adj, total, c, red.k);
    for &x in &all {
        if x & padding != padding {
            return Err(format!("colorable set {x:b} misses padding"));
        }
        let mut path: Vec<usize> = (0..total)
            .filter(|&v| x >> v & 1 == 1 && padding >> v & 1 == 0)
            .map(|v| red.origin[v].unwrap())
            .collect();
        path.sort_by_key(|&v| from_s[v]);
        let is_path = path.len() == length + 1
            && path[0] == s
            && path[length] == t
            && path.windows(2).all(|w| g.has_edge(w[0], w[1]));
        if !is_path {
            return Err(format!(
                "colorable set {x:b} is not a shortest path plus padding"
            ));
        }
        if red.phi_inverse(&set_of(total, x)) != Some(path) {
            return Err(format!("phi_inverse({x:b}) wrong"));
        }
        checks += 1;
    }
    let image_set: BTreeSet<u64> = images.iter().copied().collect();
    if image_set != all.iter().copied().collect() {
        return Err("phi is not onto the colorable sets of size k".into());
    }
    for (a, p) in paths.iter().enumerate() {
        for (b, q) in paths.iter().enumerate() {
            let source = p.iter().zip(q).filter(|(x, y)| x != y).count() == 1;
            let target = target_steps(&adj, c, images[a], images[b]);
            same_relation(source, target, &format!("P={p:?} P'={q:?}"))?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn is_bipartite_without(adj: &[u64], n: usize, removed: u64) -> bool {
    colorable_bt(adj, ((1u64 << n) - 1) & !removed, 2)
}

fn min_odd_cycle_transversal(g: &Graph) -> usize {
    let adj = masks(g);
    (0..1u64 << g.n())
        .filter(|&x| is_bipartite_without(&adj, g.n(), x))
        .map(|x| x.count_ones() as usize)
        .min()
        .unwrap()
}

fn largest_colorable(adj: &[u64], n: usize, c: usize) -> usize {
    (0..=n)
        .rev()
        .find(|&size| !colorable_sets_of_size(adj, n, c, size).is_empty())
        .unwrap()
}

fn is_induced_cycle(adj: &[u64], x: u64) -> bool {
    let members: Vec<usize> = (0..64).filter(|&v| x >> v & 1 == 1).collect();
    if members.iter().any(|&v| (adj[v] & x).count_ones() != 2) {
        return false;
    }
    // 2-regular; connected iff the walk from one vertex covers all
    let (mut prev, mut at, mut seen) = (usize::MAX, members[0], 1);
    loop {
        let next = (0..64)
            .find(|&w| adj[at] >> w & x >> w & 1 == 1 && w != prev)
            .unwrap();
        if next == members[0] {
            return seen == members.len();
        }
        prev = at;
        at = next;
        seen += 1;
    }
}

pub fn has_odd_hole(g: &Graph) -> bool {
    let adj = masks(g);
    (0..1u64 << g.n()).any(|x| {
        let size = x.count_ones();
        size >= 5 && size % 2 == 1 && is_induced_cycle(&adj, x)
    })
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Odd cycle transversal to colorable set: the yes/no contract for every
/// `k < n`, and odd-hole-freeness of the join when `G` is perfect.
pub fn check_oct_source(g: &Graph, c: usize) -> Check {
    let n = g.n();
    let oct = min_odd_cycle_transversal(g);
    let mut checks = 0;
    let perfect = !has_odd_hole(g) && !has_odd_hole(&complement(g));
    for k in 0..n {
        let red = oct_to_colorable_set(g, c, k).map_err(|e| e.to_string())?;
        let h = &red.graph;
        if h.n() != n + n * (c - 2) {
            return Err(format!("join has {} vertices", h.n()));
        }
        for p in n..h.n() {
            if (0..n).any(|v| !h.has_edge(p, v)) {
                return Err(format!("padding {p} not joined to G"));
            }
        }
        let best = largest_colorable(&masks(h), h.n(), c);
        if (oct <= k) != (best >= red.target_size) {
            return Err(format!("k={k}: oct {oct}, largest {c}-colorable {best}"));
        }
        checks += 1;
        if k == 0 && perfect {
            if has_odd_hole(h) || has_odd_hole(&complement(h)) {
                return Err("join of perfect graphs has an odd hole or antihole".into());
            }
            checks += 1;
        }
    }
    Ok(checks)
}
