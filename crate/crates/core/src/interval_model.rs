//! Clique-path representation of interval graphs.
//!
//! Built from closed integer intervals by a left-to-right sweep. Clique
//! indices are 1-based: vertex `v` lies in `M_i` exactly when
//! `l_v <= i <= r_v`.

use crate::coloring::PerfectModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    endpoints: Vec<(i64, i64)>,
    spans: Vec<(usize, usize)>,
    // M_i occupies clique_members[clique_offsets[i - 1]..clique_offsets[i]]
    clique_offsets: Vec<usize>,
    clique_members: Vec<usize>,
}

impl IntervalModel {
    /// Sweeps the endpoint events and records every maximal clique.
    ///
    /// At equal coordinates starts are processed before ends, so `[1, 1]` and
    /// `[1, 2]` intersect while `[1, 1]` and `[2, 2]` do not. A clique is
    /// emitted at the first end event following at least one start.
    pub fn from_intervals(endpoints: &[(i64, i64)]) -> Result<Self> {
        let n = endpoints.len();
        if let Some((v, &(l, r))) = endpoints.iter().enumerate().find(|(_, &(l, r))| l > r) {
            return Err(Error::invariant(format!(
                "interval of vertex {v} has left end {l} after right end {r}"
            )));
        }

        // (coordinate, kind, vertex) with kind 0 = start, 1 = end
        let mut events: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * n);
        for (v, &(l, r)) in endpoints.iter().enumerate() {
            events.push((l, 0, v));
            events.push((r, 1, v));
        }
        events.sort_unstable();

        let mut spans = vec![(0usize, 0usize); n];
        let mut active: Vec<usize> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        let mut clique_offsets = vec![0usize];
        let mut clique_members = Vec::new();
        let mut pending = false;

        for (_, kind, v) in events {
            if kind == 0 {
                slot[v] = active.len();
                active.push(v);
                spans[v].0 = clique_offsets.len();
                pending = true;
            } else {
                if pending {
                    let from = clique_members.len();
                    clique_members.extend_from_slice(&active);
                    clique_members[from..].sort_unstable();
                    clique_offsets.push(clique_members.len());
                    pending = false;
                }
                spans[v].1 = clique_offsets.len() - 1;
                let at = slot[v];
                active.swap_remove(at);
                if at < active.len() {
                    slot[active[at]] = at;
                }
            }
        }

        Ok(IntervalModel {
            endpoints: endpoints.to_vec(),
            spans,
            clique_offsets,
            clique_members,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.spans.len()
    }

    /// Number of maximal cliques.
    #[inline]
    pub fn t(&self) -> usize {
        self.clique_offsets.len() - 1
    }

    /// `(l_v, r_v)`, 1-based.
    #[inline]
    pub fn span(&self, v: usize) -> (usize, usize) {
        self.spans[v]
    }

    pub fn spans(&self) -> &[(usize, usize)] {
        &self.spans
    }

    /// The original interval of `v`.
    pub fn endpoints(&self) -> &[(i64, i64)] {
        &self.endpoints
    }

    /// Sorted members of `M_i`, 1-based.
    pub fn clique(&self, i: usize) -> &[usize] {
        &self.clique_members[self.clique_offsets[i - 1]..self.clique_offsets[i]]
    }

    pub fn cliques(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (1..=self.t()).map(move |i| self.clique(i))
    }

    /// Σ |M_i|.
    pub fn total_clique_size(&self) -> usize {
        self.clique_members.len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (lu, ru) = self.spans[u];
        let (lv, rv) = self.spans[v];
        u != v && lu <= rv && lv <= ru
    }

    /// Explicit edge list, collected from the cliques. Cost is Σ |M_i|².
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for clique in self.cliques() {
            for (i, &u) in clique.iter().enumerate() {
                edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(self.n(), &edges).expect("clique pairs form a simple graph")
    }

    /// max_i |S ∩ M_i|.
    pub fn max_clique_within(&self, set: &VertexSet) -> usize {
        let mut counts = vec![0i64; self.t() + 2];
        // difference array over clique indices
        for v in set.iter() {
            let (l, r) = self.spans[v];
            counts[l] += 1;
            counts[r + 1] -= 1;
        }
        let mut running = 0i64;
        let mut best = 0;
        for &delta in &counts[1..=self.t()] {
            running += delta;
            best = best.max(running);
        }
        best as usize
    }
}

impl PerfectModel for IntervalModel {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn is_colorable(&self, set: &VertexSet, c: usize) -> bool {
        self.max_clique_within(set) <= c
    }
}
