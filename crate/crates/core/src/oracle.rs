//! Brute-force reconfiguration oracle for small instances.
//!
//! States are c-colorable sets encoded as 64-bit masks. Distances come from
//! breadth-first search; connectivity reports enumerate the whole
//! reconfiguration graph.

use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};

use crate::coloring::colorable_mask;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::instance::{ReconSequence, Representation, Rule, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest vertex count accepted (never more than 64).
    pub max_n: usize,
    /// Largest number of states visited before giving up.
    pub max_states: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: 20,
            max_states: 4_000_000,
        }
    }
}

enum Test {
    Cliques(Vec<u64>),
    Split { clique: u64, neighbors: Vec<u64> },
    Exact(RefCell<HashMap<u64, bool>>),
}

/// Colorability and adjacency on masks for one representation.
pub(crate) struct MaskModel {
    n: usize,
    c: usize,
    adjacency: Vec<u64>,
    test: Test,
}

impl MaskModel {
    pub(crate) fn new(repr: &Representation, c: usize, limits: &OracleLimits) -> Result<Self> {
        let n = repr.n();
        if n > limits.max_n.min(64) {
            return Err(Error::Resource(format!(
                "oracle limited to {} vertices, instance has {n}",
                limits.max_n.min(64)
            )));
        }
        let (adjacency, test) = match repr {
            Representation::Edges(g) => (
                g.adjacency_masks(),
                Test::Exact(RefCell::new(HashMap::new())),
            ),
            Representation::Split(model) => {
                let clique = model
                    .clique_part()
                    .iter()
                    .fold(0u64, |acc, &v| acc | 1 << v);
                let neighbors = model.graph().adjacency_masks();
                (neighbors.clone(), Test::Split { clique, neighbors })
            }
            Representation::Intervals(model) => {
                let adjacency = (0..n)
                    .map(|u| {
                        (0..n)
                            .filter(|&v| model.adjacent(u, v))
                            .fold(0u64, |acc, v| acc | 1 << v)
                    })
                    .collect();
                let cliques = model
                    .cliques()
                    .map(|m| m.iter().fold(0u64, |acc, &v| acc | 1 << v))
                    .collect();
                (adjacency, Test::Cliques(cliques))
            }
        };
        Ok(MaskModel {
            n,
            c,
            adjacency,
            test,
        })
    }

    pub(crate) fn colorable(&self, set: u64) -> bool {
        let c = self.c;
        match &self.test {
            Test::Cliques(cliques) => cliques
                .iter()
                .all(|&m| (m & set).count_ones() as usize <= c),
            Test::Split { clique, neighbors } => {
                let base = set & clique;
                let size = base.count_ones() as usize;
                if size != c {
                    return size < c;
                }
                let mut rest = set & !clique;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    if base & !neighbors[u] == 0 {
                        return false;
                    }
                    rest &= rest - 1;
                }
                true
            }
            Test::Exact(memo) => {
                if let Some(&known) = memo.borrow().get(&set) {
                    return known;
                }
                let answer = colorable_mask(&self.adjacency, set, c);
                memo.borrow_mut().insert(set, answer);
                answer
            }
        }
    }

    /// One-step successors of `set` under `rule`.
    fn successors(&self, set: u64, rule: Rule, k: usize, out: &mut Vec<u64>) {
        out.clear();
        let size = set.count_ones() as usize;
        match rule {
            Rule::Tar => {
                for v in 0..self.n {
                    let bit = 1u64 << v;
                    if set & bit != 0 {
                        if size > k {
                            out.push(set ^ bit);
                        }
                    } else if self.colorable(set | bit) {
                        out.push(set | bit);
                    }
                }
            }
            Rule::Tj | Rule::Ts => {
                let mut members = set;
                while members != 0 {
                    let u = members.trailing_zeros() as usize;
                    members &= members - 1;
                    let base = set ^ (1 << u);
                    for w in 0..self.n {
                        let bit = 1u64 << w;
                        if set & bit != 0 {
                            continue;
                        }
                        if rule == Rule::Ts && self.adjacency[u] & bit == 0 {
                            continue;
                        }
                        if self.colorable(base | bit) {
                            out.push(base | bit);
                        }
                    }
                }
            }
        }
    }
}

fn step_between(from: u64, to: u64, rule: Rule) -> Step {
    let added = to & !from;
    let removed = from & !to;
    match rule {
        Rule::Tar if added != 0 => Step::Add(added.trailing_zeros() as usize),
        Rule::Tar => Step::Remove(removed.trailing_zeros() as usize),
        Rule::Tj | Rule::Ts => Step::Swap(
            removed.trailing_zeros() as usize,
            added.trailing_zeros() as usize,
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    /// `None` when unreachable.
    pub distance: Option<usize>,
    pub sequence: Option<ReconSequence>,
}

fn check_sets(
    model: &MaskModel,
    rule: Rule,
    k: usize,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<()> {
    if source.universe() != model.n || target.universe() != model.n {
        return Err(Error::input("sets are not over the instance's vertices"));
    }
    if model.c == 0 {
        return Err(Error::input("color budget c must be at least 1"));
    }
    if !model.colorable(source.to_mask()) || !model.colorable(target.to_mask()) {
        return Err(Error::input(format!(
            "S or S' is not {}-colorable",
            model.c
        )));
    }
    match rule {
        Rule::Tar if source.len() < k || target.len() < k => Err(Error::input(format!(
            "threshold violated: |S| = {}, |S'| = {}, k = {k}",
            source.len(),
            target.len()
        ))),
        Rule::Tj | Rule::Ts if source.len() != target.len() => {
            Err(Error::input("size mismatch: TJ and TS require |S| = |S'|"))
        }
        _ => Ok(()),
    }
}

/// Exact shortest distance and a shortest sequence, by breadth-first search
/// from `S`. `k` is ignored for TJ and TS.
pub fn oracle_distance(
    repr: &Representation,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
    rule: Rule,
    limits: &OracleLimits,
) -> Result<OracleOutcome> {
    let model = MaskModel::new(repr, c, limits)?;
    check_sets(&model, rule, k, source, target)?;
    let (start, goal) = (source.to_mask(), target.to_mask());
    if start == goal {
        return Ok(OracleOutcome {
            distance: Some(0),
            sequence: Some(ReconSequence::empty(source.clone())),
        });
    }

    let mut parent: HashMap<u64, u64> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    let mut next = Vec::new();
    while let Some(x) = queue.pop_front() {
        model.successors(x, rule, k, &mut next);
        for &y in &next {
            if parent.contains_key(&y) {
                continue;
            }
            parent.insert(y, x);
            if y == goal {
                let mut chain = vec![goal];
                let mut at = goal;
                while at != start {
                    at = parent[&at];
                    chain.push(at);
                }
                chain.reverse();
                let steps: Vec<Step> = chain
                    .windows(2)
                    .map(|w| step_between(w[0], w[1], rule))
                    .collect();
                return Ok(OracleOutcome {
                    distance: Some(steps.len()),
                    sequence: Some(ReconSequence {
                        start: source.clone(),
                        steps,
                    }),
                });
            }
            if parent.len() > limits.max_states {
                return Err(Error::Resource(format!(
                    "oracle exceeded {} states",
                    limits.max_states
                )));
            }
            queue.push_back(y);
        }
    }
    Ok(OracleOutcome {
        distance: None,
        sequence: None,
    })
}

/// The reconfiguration graph: all feasible sets and the one-step relation.
///
/// Under TAR the states are the c-colorable sets of size at least `k`; under
/// TJ and TS they are the c-colorable sets of size exactly `k`.
#[derive(Clone, Debug)]
pub struct StateSpace {
    n: usize,
    rule: Rule,
    states: Vec<u64>,
    index: HashMap<u64, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl StateSpace {
    pub fn build(
        repr: &Representation,
        c: usize,
        k: usize,
        rule: Rule,
        limits: &OracleLimits,
    ) -> Result<Self> {
        let model = MaskModel::new(repr, c, limits)?;
        let n = model.n;
        let mut states = Vec::new();
        // colorable sets are closed under subsets, so extension can prune
        let mut stack = vec![(0u64, 0usize)];
        while let Some((set, from)) = stack.pop() {
            let size = set.count_ones() as usize;
            if size + (n - from) < k {
                continue;
            }
            let exact = rule != Rule::Tar;
            if size >= k && (!exact || size == k) {
                states.push(set);
                if states.len() > limits.max_states {
                    return Err(Error::Resource(format!(
                        "state space exceeds {} states",
                        limits.max_states
                    )));
                }
            }
            if exact && size == k {
                continue;
            }
            for v in from..n {
                let next = set | 1 << v;
                if model.colorable(next) {
                    stack.push((next, v + 1));
                }
            }
        }
        states.sort_unstable_by_key(|&s| (s.count_ones(), s.reverse_bits()));
        let index: HashMap<u64, usize> = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut adjacency = Vec::with_capacity(states.len());
        let mut next = Vec::new();
        for &s in &states {
            model.successors(s, rule, k, &mut next);
            let mut ids: Vec<usize> = next.iter().filter_map(|t| index.get(t).copied()).collect();
            ids.sort_unstable();
            adjacency.push(ids);
        }
        Ok(StateSpace {
            n,
            rule,
            states,
            index,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn state(&self, id: usize) -> VertexSet {
        VertexSet::from_mask(self.n, self.states[id])
    }

    pub fn id(&self, set: &VertexSet) -> Option<usize> {
        self.index.get(&set.to_mask()).copied()
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    /// Distances from `from` to every state; `usize::MAX` when unreachable.
    pub fn distances_from(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.states.len()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub size: usize,
    pub diameter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub states: usize,
    /// In order of each component's first state.
    pub components: Vec<ComponentStats>,
}

/// Components of the reconfiguration graph and their diameters.
/// For TJ and TS, `k` is the number of tokens.
pub fn oracle_connectivity_report(
    repr: &Representation,
    c: usize,
    k: usize,
    rule: Rule,
    limits: &OracleLimits,
) -> Result<ConnectivityReport> {
    let space = StateSpace::build(repr, c, k, rule, limits)?;
    let mut component = vec![usize::MAX; space.len()];
    let mut components = Vec::new();
    for root in 0..space.len() {
        if component[root] != usize::MAX {
            continue;
        }
        let dist = space.distances_from(root);
        let members: Vec<usize> = (0..space.len())
            .filter(|&i| dist[i] != usize::MAX)
            .collect();
        for &m in &members {
            component[m] = components.len();
        }
        let diameter = members
            .iter()
            .map(|&m| {
                space
                    .distances_from(m)
                    .into_iter()
                    .filter(|&d| d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0);
        components.push(ComponentStats {
            size: members.len(),
            diameter,
        });
    }
    Ok(ConnectivityReport {
        states: space.len(),
        components,
    })
}
