//! Simple undirected graphs and dense vertex sets over `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invariant(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invariant(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invariant(format!(
                    "parallel edge {}-{}",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph {
            adjacency,
            m: edges.len(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.m);
        for (u, list) in self.adjacency.iter().enumerate() {
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    /// Neighborhood bitmasks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }
}

/// A subset of `0..n` with O(1) membership, insertion and removal.
///
/// Iteration order is unspecified; use [`VertexSet::sorted`] where order matters.
#[derive(Clone)]
pub struct VertexSet {
    position: Vec<usize>,
    members: Vec<usize>,
}

const ABSENT: usize = usize::MAX;

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            position: vec![ABSENT; n],
            members: Vec::new(),
        }
    }

    /// Set over `0..n` with the given members. Duplicates are ignored.
    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = VertexSet::new(n);
        for v in members {
            if v >= n {
                return Err(Error::invariant(format!("vertex {v} outside 0..{n}")));
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn full(n: usize) -> Self {
        let mut set = VertexSet::new(n);
        for v in 0..n {
            set.insert(v);
        }
        set
    }

    /// Size of the ground set.
    #[inline]
    pub fn universe(&self) -> usize {
        self.position.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.position.len() && self.position[v] != ABSENT
    }

    /// Returns `false` if `v` was already present.
    pub fn insert(&mut self, v: usize) -> bool {
        if self.position[v] != ABSENT {
            return false;
        }
        self.position[v] = self.members.len();
        self.members.push(v);
        true
    }

    /// Returns `false` if `v` was absent.
    pub fn remove(&mut self, v: usize) -> bool {
        let at = self.position[v];
        if at == ABSENT {
            return false;
        }
        let last = *self.members.last().expect("nonempty");
        self.members.swap_remove(at);
        if last != v {
            self.position[last] = at;
        }
        self.position[v] = ABSENT;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut members = self.members.clone();
        members.sort_unstable();
        members
    }

    /// Members of `self` not in `other`, ascending.
    pub fn difference(&self, other: &VertexSet) -> Vec<usize> {
        let mut out: Vec<usize> = self.iter().filter(|&v| !other.contains(v)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().filter(|&v| large.contains(v)).count()
    }

    pub fn symmetric_difference_len(&self, other: &VertexSet) -> usize {
        self.len() + other.len() - 2 * self.intersection_len(other)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for v in other.iter() {
            out.insert(v);
        }
        out
    }

    /// Bitmask encoding; only valid for universes of at most 64 vertices.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.universe() <= 64);
        self.iter().fold(0u64, |acc, v| acc | (1 << v))
    }

    pub fn from_mask(n: usize, mask: u64) -> VertexSet {
        let mut set = VertexSet::new(n);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            set.insert(v);
            rest &= rest - 1;
        }
        set
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe() == other.universe()
            && self.len() == other.len()
            && self.iter().all(|v| other.contains(v))
    }
}

impl Eq for VertexSet {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sorted()).finish()
    }
}
