//! c-colorability of vertex sets.
//!
//! Two routes: exhaustive backtracking for arbitrary graphs, and the clique
//! bound for the perfect classes handled here (interval and split graphs),
//! where a set is c-colorable exactly when it contains no clique of size c + 1.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest set `is_colorable_exact` accepts by default.
pub const EXACT_COLORING_LIMIT: usize = 64;

/// Models of perfect graphs that can answer colorability by a clique bound.
pub trait PerfectModel {
    fn vertex_count(&self) -> usize;
    fn is_colorable(&self, set: &VertexSet, c: usize) -> bool;
}

pub fn is_colorable_clique_bound<M: PerfectModel + ?Sized>(
    model: &M,
    set: &VertexSet,
    c: usize,
) -> bool {
    model.is_colorable(set, c)
}

/// Whether `G[set]` has a proper `c`-coloring, by backtracking.
pub fn is_colorable_exact(g: &Graph, set: &VertexSet, c: usize) -> Result<bool> {
    is_colorable_exact_with_limit(g, set, c, EXACT_COLORING_LIMIT)
}

pub fn is_colorable_exact_with_limit(
    g: &Graph,
    set: &VertexSet,
    c: usize,
    limit: usize,
) -> Result<bool> {
    if set.len() > limit {
        return Err(Error::Resource(format!(
            "exact coloring of {} vertices exceeds the limit of {limit}",
            set.len()
        )));
    }
    if set.len() <= c {
        return Ok(true);
    }
    if c == 0 {
        return Ok(false);
    }
    let members = set.sorted();
    if members.len() <= 64 {
        // relabel into 0..|S| so the mask search applies
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<u64> = members
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .fold(0u64, |acc, &w| acc | (1 << local[w]))
            })
            .collect();
        let all = if members.len() == 64 {
            u64::MAX
        } else {
            (1u64 << members.len()) - 1
        };
        return Ok(colorable_mask(&adj, all, c));
    }
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|w| members.binary_search(w).ok())
                .collect()
        })
        .collect();
    let order = degree_order(&adj);
    let mut colors = vec![usize::MAX; members.len()];
    Ok(backtrack_lists(&adj, &order, 0, 0, c, &mut colors))
}

/// Exact colorability of the subgraph induced by `set` on a graph of at most 64
/// vertices, given per-vertex neighborhood masks.
pub fn colorable_mask(adj: &[u64], set: u64, c: usize) -> bool {
    let size = set.count_ones() as usize;
    if size <= c {
        return true;
    }
    if c == 0 {
        return false;
    }
    let mut order: Vec<usize> = Vec::with_capacity(size);
    let mut rest = set;
    while rest != 0 {
        order.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    // high degree first prunes earlier
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & set).count_ones()));
    let mut classes = vec![0u64; c];
    backtrack_masks(adj, &order, 0, 0, &mut classes)
}

fn backtrack_masks(
    adj: &[u64],
    order: &[usize],
    at: usize,
    used: usize,
    classes: &mut [u64],
) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    // a vertex may open at most one new color class
    let limit = (used + 1).min(classes.len());
    for color in 0..limit {
        if classes[color] & adj[v] != 0 {
            continue;
        }
        classes[color] |= 1 << v;
        let next_used = used.max(color + 1);
        if backtrack_masks(adj, order, at + 1, next_used, classes) {
            return true;
        }
        classes[color] &= !(1 << v);
    }
    false
}

fn degree_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    order
}

fn backtrack_lists(
    adj: &[Vec<usize>],
    order: &[usize],
    at: usize,
    used: usize,
    c: usize,
    colors: &mut [usize],
) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    let limit = (used + 1).min(c);
    for color in 0..limit {
        if adj[v].iter().any(|&w| colors[w] == color) {
            continue;
        }
        colors[v] = color;
        if backtrack_lists(adj, order, at + 1, used.max(color + 1), c, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
