//! Shortest TAR(k) reconfiguration of c-colorable sets in interval graphs.
//!
//! On a clique path the largest clique inside a set `S` is
//! `max_i |S ∩ M_i|`, so adding `v` to `S` keeps it c-colorable iff every
//! clique count on `v`'s span is below `c`. Everything here is built on those
//! counts and runs in time linear in `n + m`.
//!
//! The distance between distinct sets `S` and `S'`:
//!
//! * infinite if either is locked (maximal and of size exactly `k`) in `G`;
//! * `|S Δ S'|` if neither is locked in `G[S ∪ S']`;
//! * `|S Δ S'| + 2` if exactly one is;
//! * if both are, `|S Δ S'| + 2` when some vertex outside `S ∪ S'` can be
//!   added to both, and `|S Δ S'| + 4` otherwise.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::instance::{ReconSequence, Step};
use crate::interval_model::IntervalModel;

/// `a_i = |S ∩ M_i|` for `i = 1..=t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueProfile {
    // index 0 unused so that clique indices stay 1-based
    counts: Vec<usize>,
}

impl CliqueProfile {
    /// `a_1..a_t`.
    pub fn counts(&self) -> &[usize] {
        &self.counts[1..]
    }

    pub fn get(&self, i: usize) -> usize {
        self.counts[i]
    }

    pub fn max(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Whether every count over `span` is below `c`.
    #[inline]
    pub fn admits(&self, (l, r): (usize, usize), c: usize) -> bool {
        self.counts[l..=r].iter().all(|&a| a < c)
    }
}

pub fn profile(model: &IntervalModel, set: &VertexSet) -> CliqueProfile {
    let mut counts = vec![0; model.t() + 1];
    for v in set.iter() {
        let (l, r) = model.span(v);
        for count in &mut counts[l..=r] {
            *count += 1;
        }
    }
    CliqueProfile { counts }
}

/// Smallest `v ∉ S` with `S + v` c-colorable; `None` means `S` is maximal.
pub fn find_addable(model: &IntervalModel, set: &VertexSet, c: usize) -> Option<usize> {
    let prof = profile(model, set);
    (0..model.n()).find(|&v| !set.contains(v) && prof.admits(model.span(v), c))
}

/// Smallest `v ∉ S ∪ S'` that can be added to both sets.
pub fn find_common_addable(
    model: &IntervalModel,
    source: &VertexSet,
    target: &VertexSet,
    c: usize,
) -> Option<usize> {
    let a = profile(model, source);
    let b = profile(model, target);
    (0..model.n()).find(|&v| {
        let span = model.span(v);
        !source.contains(v) && !target.contains(v) && a.admits(span, c) && b.admits(span, c)
    })
}

/// Whether `S` is locked in `G[W]`: `|S| = k` and no `v ∈ W \ S` can be added.
pub fn is_locked_within(
    model: &IntervalModel,
    set: &VertexSet,
    k: usize,
    c: usize,
    within: &VertexSet,
) -> bool {
    if set.len() != k {
        return false;
    }
    let prof = profile(model, set);
    !within
        .iter()
        .any(|v| !set.contains(v) && prof.admits(model.span(v), c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceCase {
    Identical,
    /// Neither set locked in `G[S ∪ S']`.
    Case1,
    /// Exactly one set locked in `G[S ∪ S']`.
    Case2,
    /// Both locked in `G[S ∪ S']`, with a vertex addable to both.
    Case3a,
    /// Both locked in `G[S ∪ S']`, no common addable vertex.
    Case3b,
    LockedInG,
}

impl DistanceCase {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceCase::Identical => "identical",
            DistanceCase::Case1 => "case1",
            DistanceCase::Case2 => "case2",
            DistanceCase::Case3a => "case3a",
            DistanceCase::Case3b => "case3b",
            DistanceCase::LockedInG => "locked-in-G",
        }
    }
}

/// Vertices outside `S ∪ S'` added to break a lock.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// Case 2 with `S` locked: `S + v` is colorable.
    Source(usize),
    /// Case 2 with `S'` locked.
    Target(usize),
    /// Case 3a: `v` can be added to both.
    Common(usize),
    /// Case 3b: `S + source` and `S' + target` are colorable.
    Pair {
        source: usize,
        target: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceVerdict {
    pub case: DistanceCase,
    /// `None` means unreachable.
    pub distance: Option<usize>,
    pub witness: Witness,
}

fn check_preconditions(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<()> {
    let n = model.n();
    if source.universe() != n || target.universe() != n {
        return Err(Error::input("sets are not over the model's vertices"));
    }
    if c == 0 {
        return Err(Error::input("color budget c must be at least 1"));
    }
    if source.len() < k || target.len() < k {
        return Err(Error::input(format!(
            "threshold violated: |S| = {}, |S'| = {}, k = {k}",
            source.len(),
            target.len()
        )));
    }
    if profile(model, source).max() > c {
        return Err(Error::input(format!("S is not {c}-colorable")));
    }
    if profile(model, target).max() > c {
        return Err(Error::input(format!("S' is not {c}-colorable")));
    }
    Ok(())
}

/// Classifies the instance and returns the TAR(k) distance. Linear time.
pub fn tar_distance(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<DistanceVerdict> {
    check_preconditions(model, c, source, target, k)?;
    if source == target {
        return Ok(DistanceVerdict {
            case: DistanceCase::Identical,
            distance: Some(0),
            witness: Witness::None,
        });
    }

    let n = model.n();
    let prof_s = profile(model, source);
    let prof_t = profile(model, target);
    let addable = |prof: &CliqueProfile, set: &VertexSet, v: usize| {
        !set.contains(v) && prof.admits(model.span(v), c)
    };

    let addable_s = (0..n).find(|&v| addable(&prof_s, source, v));
    let addable_t = (0..n).find(|&v| addable(&prof_t, target, v));
    let locked_s = source.len() == k && addable_s.is_none();
    let locked_t = target.len() == k && addable_t.is_none();
    if locked_s || locked_t {
        return Ok(DistanceVerdict {
            case: DistanceCase::LockedInG,
            distance: None,
            witness: Witness::None,
        });
    }

    let diff = source.symmetric_difference_len(target);
    let locked_s_union = source.len() == k && !target.iter().any(|v| addable(&prof_s, source, v));
    let locked_t_union = target.len() == k && !source.iter().any(|v| addable(&prof_t, target, v));

    let (case, distance, witness) = match (locked_s_union, locked_t_union) {
        (false, false) => (DistanceCase::Case1, diff, Witness::None),
        // any vertex addable to a set locked in G[S ∪ S'] lies outside S ∪ S'
        (true, false) => (
            DistanceCase::Case2,
            diff + 2,
            Witness::Source(addable_s.expect("not locked in G")),
        ),
        (false, true) => (
            DistanceCase::Case2,
            diff + 2,
            Witness::Target(addable_t.expect("not locked in G")),
        ),
        (true, true) => {
            let common =
                (0..n).find(|&v| addable(&prof_s, source, v) && addable(&prof_t, target, v));
            match common {
                Some(v) => (DistanceCase::Case3a, diff + 2, Witness::Common(v)),
                None => (
                    DistanceCase::Case3b,
                    diff + 4,
                    Witness::Pair {
                        source: addable_s.expect("not locked in G"),
                        target: addable_t.expect("not locked in G"),
                    },
                ),
            }
        }
    };
    Ok(DistanceVerdict {
        case,
        distance: Some(distance),
        witness,
    })
}

/// The two growing ends of a sequence under construction. Steps on the
/// target side are recorded as applied to `back`; they are inverted and
/// reversed when the sequence is assembled.
struct TwoEnded {
    front: VertexSet,
    back: VertexSet,
    prefix: Vec<Step>,
    suffix: Vec<Step>,
}

impl TwoEnded {
    fn front_step(&mut self, step: Step) {
        step.apply(&mut self.front).expect("valid front step");
        self.prefix.push(step);
    }

    fn back_step(&mut self, step: Step) {
        step.apply(&mut self.back).expect("valid back step");
        self.suffix.push(step);
    }

    fn finish(self, start: VertexSet) -> ReconSequence {
        let mut steps = self.prefix;
        steps.extend(self.suffix.into_iter().rev().map(Step::inverse));
        ReconSequence { start, steps }
    }
}

/// Buckets vertices by key in `1..=t`; ties stay in ascending vertex order.
fn bucket_by(vertices: &[usize], t: usize, key: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut starts = vec![0usize; t + 2];
    for &v in vertices {
        starts[key(v) + 1] += 1;
    }
    for i in 1..starts.len() {
        starts[i] += starts[i - 1];
    }
    let mut out = vec![0; vertices.len()];
    for &v in vertices {
        let slot = &mut starts[key(v)];
        out[*slot] = v;
        *slot += 1;
    }
    out
}

/// A sorted order with a cursor that skips vertices no longer live.
struct Cursor {
    order: Vec<usize>,
    at: usize,
}

impl Cursor {
    fn first(&mut self, live: impl Fn(usize) -> bool) -> Option<usize> {
        while self.at < self.order.len() && !live(self.order[self.at]) {
            self.at += 1;
        }
        self.order.get(self.at).copied()
    }
}

/// Members of `a` not in `b`, ascending, by a scan over all vertices.
fn only_in(a: &VertexSet, b: &VertexSet) -> Vec<usize> {
    (0..a.universe())
        .filter(|&v| a.contains(v) && !b.contains(v))
        .collect()
}

/// Case-1 procedure: neither end is locked in the union of the two ends.
/// Emits exactly `|front Δ back|` steps.
fn close_gap(model: &IntervalModel, c: usize, k: usize, ends: &mut TwoEnded) {
    if ends.front == ends.back {
        return;
    }
    if ends.front.len() == k {
        let prof = profile(model, &ends.front);
        let v = ends
            .back
            .iter()
            .filter(|&v| !ends.front.contains(v))
            .find(|&v| prof.admits(model.span(v), c))
            .expect("front end is not locked in the union");
        ends.front_step(Step::Add(v));
    }
    if ends.back.len() == k && ends.front != ends.back {
        let prof = profile(model, &ends.back);
        let v = ends
            .front
            .iter()
            .filter(|&v| !ends.back.contains(v))
            .find(|&v| prof.admits(model.span(v), c))
            .expect("back end is not locked in the union");
        ends.back_step(Step::Add(v));
    }

    let only_front = only_in(&ends.front, &ends.back);
    let only_back = only_in(&ends.back, &ends.front);
    let t = model.t();
    let left = |v: usize| model.span(v).0;
    let right = |v: usize| model.span(v).1;
    let mut front_by_right = Cursor {
        order: bucket_by(&only_front, t, right),
        at: 0,
    };
    let mut front_by_left = Cursor {
        order: bucket_by(&only_front, t, left),
        at: 0,
    };
    let mut back_by_right = Cursor {
        order: bucket_by(&only_back, t, right),
        at: 0,
    };
    let mut back_by_left = Cursor {
        order: bucket_by(&only_back, t, left),
        at: 0,
    };

    // A vertex leaves front \ back or back \ front at most once and never
    // re-enters, so each cursor only moves forward.
    loop {
        let (front, back) = (&ends.front, &ends.back);
        let in_front_only = |v: usize| front.contains(v) && !back.contains(v);
        let in_back_only = |v: usize| back.contains(v) && !front.contains(v);
        let (Some(v), Some(w)) = (
            front_by_right.first(in_front_only),
            back_by_right.first(in_back_only),
        ) else {
            break;
        };
        if right(w) <= right(v) {
            let u = front_by_left
                .first(in_front_only)
                .expect("front \\ back nonempty");
            ends.front_step(Step::Remove(u));
            ends.front_step(Step::Add(w));
        } else {
            let u = back_by_left
                .first(in_back_only)
                .expect("back \\ front nonempty");
            ends.back_step(Step::Remove(u));
            ends.back_step(Step::Add(v));
        }
    }

    // one end now contains the other
    for v in only_in(&ends.back, &ends.front) {
        ends.front_step(Step::Add(v));
    }
    for v in only_in(&ends.front, &ends.back) {
        ends.front_step(Step::Remove(v));
    }
}

/// A TAR(k)-sequence of length exactly the distance, or `None` if unreachable.
pub fn shortest_tar_sequence(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
) -> Result<Option<ReconSequence>> {
    let verdict = tar_distance(model, c, source, target, k)?;
    Ok(sequence_for_verdict(model, c, source, target, k, &verdict))
}

/// Builds the sequence for an already computed verdict.
pub fn sequence_for_verdict(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
    k: usize,
    verdict: &DistanceVerdict,
) -> Option<ReconSequence> {
    verdict.distance?;
    let mut ends = TwoEnded {
        front: source.clone(),
        back: target.clone(),
        prefix: Vec::new(),
        suffix: Vec::new(),
    };
    match verdict.witness {
        Witness::None => {}
        Witness::Source(v) => ends.front_step(Step::Add(v)),
        Witness::Target(v) => ends.back_step(Step::Add(v)),
        Witness::Common(v) => {
            ends.front_step(Step::Add(v));
            ends.back_step(Step::Add(v));
        }
        Witness::Pair {
            source: u,
            target: v,
        } => {
            ends.front_step(Step::Add(u));
            ends.back_step(Step::Add(v));
        }
    }
    close_gap(model, c, k, &mut ends);
    Some(ends.finish(source.clone()))
}

fn check_tj(source: &VertexSet, target: &VertexSet) -> Result<()> {
    if source.len() != target.len() {
        return Err(Error::input(format!(
            "size mismatch: |S| = {}, |S'| = {}",
            source.len(),
            target.len()
        )));
    }
    Ok(())
}

/// TJ distance, via TAR at threshold `|S| - 1` (which is twice the TJ distance).
pub fn tj_distance(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<Option<usize>> {
    check_tj(source, target)?;
    if source == target {
        return Ok(Some(0));
    }
    let verdict = tar_distance(model, c, source, target, source.len() - 1)?;
    Ok(verdict.distance.map(|d| d / 2))
}

/// A shortest TJ sequence, obtained by pairing the removal and addition
/// steps of the TAR(|S| - 1) construction into swaps.
pub fn shortest_tj_sequence(
    model: &IntervalModel,
    c: usize,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<Option<ReconSequence>> {
    check_tj(source, target)?;
    if source == target {
        return Ok(Some(ReconSequence::empty(source.clone())));
    }
    let Some(tar) = shortest_tar_sequence(model, c, source, target, source.len() - 1)? else {
        return Ok(None);
    };
    let steps = tar
        .steps
        .chunks(2)
        .map(|pair| match pair {
            [Step::Remove(u), Step::Add(w)] => Ok(Step::Swap(*u, *w)),
            other => Err(Error::Internal(format!(
                "TAR steps {other:?} do not pair into a swap"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(ReconSequence {
        start: tar.start,
        steps,
    }))
}
