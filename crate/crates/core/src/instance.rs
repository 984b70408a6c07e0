//! Problem instances, reconfiguration sequences and the sequence verifier.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{is_colorable_exact, PerfectModel};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval_model::IntervalModel;
use crate::split_model::SplitModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Token addition and removal, sizes kept at or above `k`.
    Tar,
    /// Token jumping.
    Tj,
    /// Token sliding.
    Ts,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Tar => "tar",
            Rule::Tj => "tj",
            Rule::Ts => "ts",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tar" => Ok(Rule::Tar),
            "tj" => Ok(Rule::Tj),
            "ts" => Ok(Rule::Ts),
            other => Err(Error::input(format!("unknown rule `{other}`"))),
        }
    }
}

/// The graph of an instance in one of the supported encodings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Edges(Graph),
    Intervals(IntervalModel),
    Split(SplitModel),
}

impl Representation {
    pub fn n(&self) -> usize {
        match self {
            Representation::Edges(g) => g.n(),
            Representation::Intervals(model) => model.n(),
            Representation::Split(model) => model.n(),
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match self {
            Representation::Edges(g) => g.has_edge(u, v),
            Representation::Intervals(model) => model.adjacent(u, v),
            Representation::Split(model) => model.graph().has_edge(u, v),
        }
    }

    /// Clique bound for the perfect classes, exact backtracking otherwise.
    pub fn is_colorable(&self, set: &VertexSet, c: usize) -> Result<bool> {
        match self {
            Representation::Edges(g) => is_colorable_exact(g, set, c),
            Representation::Intervals(model) => Ok(model.is_colorable(set, c)),
            Representation::Split(model) => Ok(model.is_colorable(set, c)),
        }
    }

    /// An explicit graph; interval models are expanded from their cliques.
    pub fn to_graph(&self) -> Graph {
        match self {
            Representation::Edges(g) => g.clone(),
            Representation::Intervals(model) => model.to_graph(),
            Representation::Split(model) => model.graph().clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Representation::Edges(_) => "edges",
            Representation::Intervals(_) => "intervals",
            Representation::Split(_) => "split",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub repr: Representation,
    pub rule: Rule,
    pub c: usize,
    pub k: usize,
    pub source: VertexSet,
    pub target: VertexSet,
}

impl Instance {
    /// Checks every instance invariant before returning.
    pub fn new(
        repr: Representation,
        rule: Rule,
        c: usize,
        k: usize,
        source: VertexSet,
        target: VertexSet,
    ) -> Result<Self> {
        let inst = Instance {
            repr,
            rule,
            c,
            k,
            source,
            target,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn n(&self) -> usize {
        self.repr.n()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.repr.n();
        if self.c == 0 {
            return Err(Error::invariant("color budget c must be at least 1"));
        }
        if self.source.universe() != n || self.target.universe() != n {
            return Err(Error::invariant(
                "sets are not over the instance's vertices",
            ));
        }
        if !self.repr.is_colorable(&self.source, self.c)? {
            return Err(Error::invariant(format!("S is not {}-colorable", self.c)));
        }
        if !self.repr.is_colorable(&self.target, self.c)? {
            return Err(Error::invariant(format!("S2 is not {}-colorable", self.c)));
        }
        if self.source.len() < self.k || self.target.len() < self.k {
            return Err(Error::invariant(format!(
                "threshold violated: |S| = {}, |S2| = {}, k = {}",
                self.source.len(),
                self.target.len(),
                self.k
            )));
        }
        if self.rule != Rule::Tar && self.source.len() != self.target.len() {
            return Err(Error::invariant(format!(
                "size mismatch: {} requires |S| = |S2|",
                self.rule
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Add(usize),
    Remove(usize),
    /// Token moves from the first vertex to the second.
    Swap(usize, usize),
}

impl Step {
    /// The step that undoes this one.
    pub fn inverse(self) -> Step {
        match self {
            Step::Add(v) => Step::Remove(v),
            Step::Remove(v) => Step::Add(v),
            Step::Swap(u, v) => Step::Swap(v, u),
        }
    }

    /// Applies the step, failing if an added vertex is present or a removed one absent.
    pub fn apply(self, set: &mut VertexSet) -> std::result::Result<(), ViolationKind> {
        let n = set.universe();
        let in_range = |v: usize| {
            if v < n {
                Ok(())
            } else {
                Err(ViolationKind::OutOfRange(v))
            }
        };
        match self {
            Step::Add(v) => {
                in_range(v)?;
                if !set.insert(v) {
                    return Err(ViolationKind::AlreadyPresent(v));
                }
            }
            Step::Remove(v) => {
                in_range(v)?;
                if !set.remove(v) {
                    return Err(ViolationKind::NotPresent(v));
                }
            }
            Step::Swap(u, v) => {
                in_range(u)?;
                in_range(v)?;
                if !set.contains(u) {
                    return Err(ViolationKind::NotPresent(u));
                }
                if set.contains(v) {
                    return Err(ViolationKind::AlreadyPresent(v));
                }
                set.remove(u);
                set.insert(v);
            }
        }
        Ok(())
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Add(v) => write!(f, "+{v}"),
            Step::Remove(v) => write!(f, "-{v}"),
            Step::Swap(u, v) => write!(f, "{u}>{v}"),
        }
    }
}

/// A start set plus the difference to each following set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconSequence {
    pub start: VertexSet,
    pub steps: Vec<Step>,
}

impl ReconSequence {
    pub fn empty(start: VertexSet) -> Self {
        ReconSequence {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Set reached after all steps.
    pub fn end(&self) -> std::result::Result<VertexSet, Violation> {
        let mut set = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            step.apply(&mut set)
                .map_err(|kind| Violation { step: i, kind })?;
        }
        Ok(set)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    StartMismatch,
    OutOfRange(usize),
    AlreadyPresent(usize),
    NotPresent(usize),
    WrongRule(Rule),
    BelowThreshold { size: usize, k: usize },
    NotColorable,
    NotAnEdge(usize, usize),
    EndMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::StartMismatch => f.write_str("start set differs from S"),
            ViolationKind::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            ViolationKind::AlreadyPresent(v) => write!(f, "vertex {v} already present"),
            ViolationKind::NotPresent(v) => write!(f, "vertex {v} not present"),
            ViolationKind::WrongRule(rule) => write!(f, "step not allowed under {rule}"),
            ViolationKind::BelowThreshold { size, k } => {
                write!(f, "threshold violated: size {size} < k = {k}")
            }
            ViolationKind::NotColorable => f.write_str("set is not colorable"),
            ViolationKind::NotAnEdge(u, v) => write!(f, "{u}-{v} is not an edge"),
            ViolationKind::EndMismatch => f.write_str("final set differs from S2"),
        }
    }
}

/// Where and why a sequence fails. `step` is the 0-based index of the
/// offending step; start mismatches report 0 and end mismatches report the
/// sequence length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub step: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.kind)
    }
}

/// Colorability of a set under single-vertex updates.
enum Tracker<'a> {
    /// Clique counts per `M_i`; each update costs the vertex's span.
    Interval {
        model: &'a IntervalModel,
        counts: Vec<usize>,
        over: usize,
        c: usize,
    },
    Recheck(&'a Representation, usize),
}

impl<'a> Tracker<'a> {
    fn new(repr: &'a Representation, set: &VertexSet, c: usize) -> Self {
        match repr {
            Representation::Intervals(model) => {
                let mut tracker = Tracker::Interval {
                    model,
                    counts: vec![0; model.t() + 1],
                    over: 0,
                    c,
                };
                for v in set.iter() {
                    tracker.add(v);
                }
                tracker
            }
            other => Tracker::Recheck(other, c),
        }
    }

    fn add(&mut self, v: usize) {
        if let Tracker::Interval {
            model,
            counts,
            over,
            c,
        } = self
        {
            let (l, r) = model.span(v);
            for count in &mut counts[l..=r] {
                *count += 1;
                if *count == *c + 1 {
                    *over += 1;
                }
            }
        }
    }

    fn remove(&mut self, v: usize) {
        if let Tracker::Interval {
            model,
            counts,
            over,
            c,
        } = self
        {
            let (l, r) = model.span(v);
            for count in &mut counts[l..=r] {
                if *count == *c + 1 {
                    *over -= 1;
                }
                *count -= 1;
            }
        }
    }

    fn colorable(&self, set: &VertexSet) -> Result<bool> {
        match self {
            Tracker::Interval { over, .. } => Ok(*over == 0),
            Tracker::Recheck(repr, c) => repr.is_colorable(set, *c),
        }
    }
}

/// Replays `seq` against the instance and reports the first violated rule.
pub fn verify_sequence(
    inst: &Instance,
    seq: &ReconSequence,
) -> Result<std::result::Result<(), Violation>> {
    let fail = |step: usize, kind: ViolationKind| Ok(Err(Violation { step, kind }));
    if seq.start != inst.source {
        return fail(0, ViolationKind::StartMismatch);
    }
    let mut current = seq.start.clone();
    let mut tracker = Tracker::new(&inst.repr, &current, inst.c);
    for (i, &step) in seq.steps.iter().enumerate() {
        match (inst.rule, step) {
            (Rule::Tar, Step::Swap(..)) | (Rule::Tj | Rule::Ts, Step::Add(_) | Step::Remove(_)) => {
                return fail(i, ViolationKind::WrongRule(inst.rule));
            }
            (Rule::Ts, Step::Swap(u, v))
                if u < inst.n() && v < inst.n() && !inst.repr.adjacent(u, v) =>
            {
                return fail(i, ViolationKind::NotAnEdge(u, v));
            }
            _ => {}
        }
        if let Err(kind) = step.apply(&mut current) {
            return fail(i, kind);
        }
        match step {
            Step::Add(v) => tracker.add(v),
            Step::Remove(v) => tracker.remove(v),
            Step::Swap(u, v) => {
                tracker.remove(u);
                tracker.add(v);
            }
        }
        if current.len() < inst.k && inst.rule == Rule::Tar {
            return fail(
                i,
                ViolationKind::BelowThreshold {
                    size: current.len(),
                    k: inst.k,
                },
            );
        }
        if !tracker.colorable(&current)? {
            return fail(i, ViolationKind::NotColorable);
        }
    }
    if current != inst.target {
        return fail(seq.steps.len(), ViolationKind::EndMismatch);
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied()).unwrap()
    }

    fn path_instance(rule: Rule, k: usize) -> Instance {
        let model = IntervalModel::from_intervals(&[(1, 1), (1, 2), (2, 2)]).unwrap();
        Instance::new(
            Representation::Intervals(model),
            rule,
            1,
            k,
            set(3, &[0]),
            set(3, &[2]),
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid_tar_sequence() {
        let inst = path_instance(Rule::Tar, 1);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Add(2), Step::Remove(0)],
        };
        assert_eq!(verify_sequence(&inst, &seq).unwrap(), Ok(()));
    }

    #[test]
    fn reports_threshold_violation() {
        let inst = path_instance(Rule::Tar, 1);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Remove(0), Step::Add(2)],
        };
        let v = verify_sequence(&inst, &seq).unwrap().unwrap_err();
        assert_eq!(v.step, 0);
        assert!(matches!(
            v.kind,
            ViolationKind::BelowThreshold { size: 0, k: 1 }
        ));
    }

    #[test]
    fn reports_colorability_violation() {
        let inst = path_instance(Rule::Tar, 0);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Add(1), Step::Remove(0), Step::Add(2), Step::Remove(1)],
        };
        let v = verify_sequence(&inst, &seq).unwrap().unwrap_err();
        assert_eq!(v.step, 0);
        assert_eq!(v.kind, ViolationKind::NotColorable);
    }

    #[test]
    fn ts_swap_requires_an_edge() {
        let inst = path_instance(Rule::Ts, 1);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Swap(0, 2)],
        };
        let v = verify_sequence(&inst, &seq).unwrap().unwrap_err();
        assert_eq!(v.kind, ViolationKind::NotAnEdge(0, 2));
        let tj = path_instance(Rule::Tj, 1);
        assert_eq!(verify_sequence(&tj, &seq).unwrap(), Ok(()));
    }

    #[test]
    fn rule_mismatch_and_end_mismatch() {
        let inst = path_instance(Rule::Tj, 1);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Add(2)],
        };
        let v = verify_sequence(&inst, &seq).unwrap().unwrap_err();
        assert_eq!(v.kind, ViolationKind::WrongRule(Rule::Tj));

        let tar = path_instance(Rule::Tar, 0);
        let seq = ReconSequence {
            start: set(3, &[0]),
            steps: vec![Step::Remove(0)],
        };
        let v = verify_sequence(&tar, &seq).unwrap().unwrap_err();
        assert_eq!(v.step, 1);
        assert_eq!(v.kind, ViolationKind::EndMismatch);
    }

    #[test]
    fn instance_invariants() {
        let model = IntervalModel::from_intervals(&[(1, 1), (1, 2), (2, 2)]).unwrap();
        let repr = Representation::Intervals(model);
        let err =
            Instance::new(repr.clone(), Rule::Tar, 1, 2, set(3, &[0]), set(3, &[2])).unwrap_err();
        assert!(err.to_string().contains("threshold violated"));
        let err = Instance::new(repr.clone(), Rule::Tar, 1, 0, set(3, &[0, 1]), set(3, &[2]))
            .unwrap_err();
        assert!(err.to_string().contains("not 1-colorable"));
        let err = Instance::new(repr, Rule::Tj, 1, 0, set(3, &[0, 2]), set(3, &[2])).unwrap_err();
        assert!(err.to_string().contains("size mismatch"));
    }
}
