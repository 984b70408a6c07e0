//! Split graphs `G = (K, I; E)` and their recognition.

use crate::coloring::PerfectModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitModel {
    graph: Graph,
    in_clique: Vec<bool>,
    clique_part: Vec<usize>,
    independent_part: Vec<usize>,
}

impl SplitModel {
    /// Validates that `clique_part` is a clique and its complement is independent.
    pub fn new(graph: Graph, clique_part: &[usize]) -> Result<Self> {
        let n = graph.n();
        let mut in_clique = vec![false; n];
        for &v in clique_part {
            if v >= n {
                return Err(Error::invariant(format!(
                    "clique vertex {v} outside 0..{n}"
                )));
            }
            if in_clique[v] {
                return Err(Error::invariant(format!("clique vertex {v} listed twice")));
            }
            in_clique[v] = true;
        }
        let mut clique: Vec<usize> = clique_part.to_vec();
        clique.sort_unstable();
        let independent: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();

        for &v in &clique {
            let inside = graph.neighbors(v).iter().filter(|&&w| in_clique[w]).count();
            if inside + 1 != clique.len() {
                return Err(Error::invariant(format!(
                    "clique part is not a clique at vertex {v}"
                )));
            }
        }
        for &v in &independent {
            if let Some(&w) = graph.neighbors(v).iter().find(|&&w| !in_clique[w]) {
                return Err(Error::invariant(format!(
                    "independent part has edge {}-{}",
                    v.min(w),
                    v.max(w)
                )));
            }
        }
        Ok(SplitModel {
            graph,
            in_clique,
            clique_part: clique,
            independent_part: independent,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Sorted members of K.
    pub fn clique_part(&self) -> &[usize] {
        &self.clique_part
    }

    /// Sorted members of I.
    pub fn independent_part(&self) -> &[usize] {
        &self.independent_part
    }

    #[inline]
    pub fn in_clique(&self, v: usize) -> bool {
        self.in_clique[v]
    }

    pub fn clique_set(&self) -> VertexSet {
        VertexSet::from_members(self.n(), self.clique_part.iter().copied())
            .expect("members in range")
    }

    /// Whether every vertex of `base` is a neighbor of `u`.
    pub fn dominated_by(&self, base: &[usize], u: usize) -> bool {
        base.iter().all(|&v| self.graph.has_edge(u, v))
    }
}

impl PerfectModel for SplitModel {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    /// Cliques of a split graph have at most one vertex in I, so `S` is
    /// c-colorable iff `|S ∩ K| <= c` and, when `|S ∩ K| = c`, no member of
    /// `S ∩ I` sees all of `S ∩ K`.
    fn is_colorable(&self, set: &VertexSet, c: usize) -> bool {
        let base: Vec<usize> = set.iter().filter(|&v| self.in_clique[v]).collect();
        if base.len() > c {
            return false;
        }
        if base.len() < c {
            return true;
        }
        !set.iter()
            .filter(|&v| !self.in_clique[v])
            .any(|u| self.dominated_by(&base, u))
    }
}

/// Splits `g` into a clique and an independent set, or returns `None`.
///
/// Uses the degree-sequence test: with degrees sorted descending
/// `d_1 >= ... >= d_n` and `m = max { i : d_i >= i - 1 }`, the graph is split
/// iff `Σ_{i<=m} d_i = m(m - 1) + Σ_{i>m} d_i`, and then the `m` highest-degree
/// vertices form the clique.
pub fn split_partition(g: &Graph) -> Option<SplitModel> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d >= i)
        .count();
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    SplitModel::new(g.clone(), &order[..m]).ok()
}
