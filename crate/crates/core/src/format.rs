//! The line-based `csr/1` text formats.
//!
//! Instance files are `key: value` headers, a `body:` section whose layout
//! depends on `repr`, and trailing set lines:
//!
//! ```text
//! format: csr/1
//! rule: tar
//! c: 1
//! k: 1
//! repr: intervals
//! n: 3
//! body:
//! 1 1
//! 1 2
//! 2 2
//! S: 0
//! S2: 2
//! ```
//!
//! Bodies: `intervals` has `n` lines `l r`; `edges` has a line `m` followed by
//! `m` lines `u v`; `split` has a line `K: v ...` and then an `edges` body.
//! `#` starts a comment. Rendering produces the normalized form (fixed key
//! order, sorted sets and edges, no comments).
//!
//! Sequence files have a line `start: v ...` followed by one step per line:
//! `+v`, `-v` or `u>v`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::{Instance, ReconSequence, Representation, Rule, Step};
use crate::interval_model::IntervalModel;
use crate::split_model::SplitModel;

pub const FORMAT_TAG: &str = "csr/1";

/// Non-empty lines with comments removed, tagged with 1-based line numbers.
pub(crate) struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                last_line = i + 1;
                let line = raw.split('#').next().unwrap_or("").trim();
                (!line.is_empty()).then_some((i + 1, line))
            })
            .collect();
        Lines {
            items,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied().ok_or_else(|| {
            Error::syntax(
                self.last_line + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(item)
    }
}

fn split_key(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    Some((key.trim(), value.trim()))
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::syntax(line, format!("invalid {what} `{token}`")))
}

fn parse_list(line: usize, value: &str) -> Result<Vec<usize>> {
    value
        .split_whitespace()
        .map(|tok| parse_num(line, tok, "vertex"))
        .collect()
}

fn parse_set(line: usize, n: usize, value: &str) -> Result<VertexSet> {
    let members = parse_list(line, value)?;
    let mut set = VertexSet::new(n);
    for v in members {
        if v >= n {
            return Err(Error::syntax(line, format!("vertex {v} outside 0..{n}")));
        }
        if !set.insert(v) {
            return Err(Error::syntax(line, format!("vertex {v} listed twice")));
        }
    }
    Ok(set)
}

fn expect_pair<T: std::str::FromStr>(line: usize, text: &str, what: &str) -> Result<(T, T)> {
    let mut tokens = text.split_whitespace();
    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(Error::syntax(line, format!("expected two {what}s")));
    };
    Ok((parse_num(line, a, what)?, parse_num(line, b, what)?))
}

fn parse_edge_body(lines: &mut Lines<'_>, n: usize) -> Result<Graph> {
    let (line, text) = lines.next("edge count")?;
    let m: usize = parse_num(line, text, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next("edge")?;
        let (u, v): (usize, usize) = expect_pair(line, text, "vertex")?;
        if u >= n || v >= n {
            return Err(Error::syntax(line, format!("edge {u} {v} outside 0..{n}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::syntax(line, e.to_string()))
}

/// Header keys, the graph, and trailing `key: value` lines of a csr/1 document.
pub(crate) struct Document {
    pub header: BTreeMap<String, (usize, String)>,
    pub repr: Representation,
    pub trailer: BTreeMap<String, (usize, String)>,
}

impl Document {
    pub(crate) fn header_value<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let (line, value) = self
            .header
            .get(key)
            .ok_or_else(|| Error::syntax(1, format!("missing header `{key}`")))?;
        parse_num(*line, value, key)
    }

    pub(crate) fn trailer_set(&self, key: &str) -> Result<VertexSet> {
        let (line, value) = self
            .trailer
            .get(key)
            .ok_or_else(|| Error::syntax(1, format!("missing `{key}:` line")))?;
        parse_set(*line, self.repr.n(), value)
    }

    pub(crate) fn trailer_list(&self, key: &str) -> Result<Vec<usize>> {
        let (line, value) = self
            .trailer
            .get(key)
            .ok_or_else(|| Error::syntax(1, format!("missing `{key}:` line")))?;
        let list = parse_list(*line, value)?;
        if let Some(v) = list.iter().find(|&&v| v >= self.repr.n()) {
            return Err(Error::syntax(
                *line,
                format!("vertex {v} outside 0..{}", self.repr.n()),
            ));
        }
        Ok(list)
    }

    pub(crate) fn reject_unknown(&self, header: &[&str], trailer: &[&str]) -> Result<()> {
        for (key, (line, _)) in &self.header {
            if !header.contains(&key.as_str()) {
                return Err(Error::syntax(*line, format!("unknown header `{key}`")));
            }
        }
        for (key, (line, _)) in &self.trailer {
            if !trailer.contains(&key.as_str()) {
                return Err(Error::syntax(*line, format!("unknown key `{key}`")));
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_document(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let mut header = BTreeMap::new();
    loop {
        let (line, content) = lines.next("`body:`")?;
        let (key, value) =
            split_key(content).ok_or_else(|| Error::syntax(line, "expected `key: value`"))?;
        if key == "body" {
            if !value.is_empty() {
                return Err(Error::syntax(line, "`body:` takes no value"));
            }
            break;
        }
        if header
            .insert(key.to_string(), (line, value.to_string()))
            .is_some()
        {
            return Err(Error::syntax(line, format!("duplicate header `{key}`")));
        }
    }
    match header.get("format") {
        Some((_, tag)) if tag == FORMAT_TAG => {}
        Some((line, tag)) => {
            return Err(Error::syntax(*line, format!("unsupported format `{tag}`")))
        }
        None => return Err(Error::syntax(1, "missing header `format`")),
    }
    let (n_line, n_text) = header
        .get("n")
        .cloned()
        .ok_or_else(|| Error::syntax(1, "missing header `n`"))?;
    let n: usize = parse_num(n_line, &n_text, "vertex count")?;
    let (repr_line, repr_kind) = header
        .get("repr")
        .cloned()
        .ok_or_else(|| Error::syntax(1, "missing header `repr`"))?;

    let repr = match repr_kind.as_str() {
        "intervals" => {
            let mut endpoints = Vec::with_capacity(n);
            let mut line = repr_line;
            for _ in 0..n {
                let (at, text) = lines.next("interval")?;
                line = at;
                endpoints.push(expect_pair::<i64>(at, text, "endpoint")?);
            }
            let model = IntervalModel::from_intervals(&endpoints)
                .map_err(|e| Error::syntax(line, e.to_string()))?;
            Representation::Intervals(model)
        }
        "edges" => Representation::Edges(parse_edge_body(&mut lines, n)?),
        "split" => {
            let (line, text) = lines.next("`K:` line")?;
            let clique = match split_key(text) {
                Some(("K", value)) => parse_list(line, value)?,
                _ => return Err(Error::syntax(line, "expected `K: v ...`")),
            };
            if let Some(v) = clique.iter().find(|&&v| v >= n) {
                return Err(Error::syntax(line, format!("vertex {v} outside 0..{n}")));
            }
            let graph = parse_edge_body(&mut lines, n)?;
            let model =
                SplitModel::new(graph, &clique).map_err(|e| Error::syntax(line, e.to_string()))?;
            Representation::Split(model)
        }
        other => {
            return Err(Error::syntax(
                repr_line,
                format!("unknown representation `{other}`"),
            ))
        }
    };

    let mut trailer = BTreeMap::new();
    while let Some((line, content)) = lines.peek() {
        lines.pos += 1;
        let (key, value) =
            split_key(content).ok_or_else(|| Error::syntax(line, "expected `key: value`"))?;
        if trailer
            .insert(key.to_string(), (line, value.to_string()))
            .is_some()
        {
            return Err(Error::syntax(line, format!("duplicate key `{key}`")));
        }
    }
    Ok(Document {
        header,
        repr,
        trailer,
    })
}

/// Parses and validates an instance.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc = parse_document(text)?;
    doc.reject_unknown(&["format", "rule", "c", "k", "repr", "n"], &["S", "S2"])?;
    let rule: Rule = {
        let (line, value) = doc
            .header
            .get("rule")
            .ok_or_else(|| Error::syntax(1, "missing header `rule`"))?;
        value
            .parse()
            .map_err(|_| Error::syntax(*line, format!("unknown rule `{value}`")))?
    };
    let c: usize = doc.header_value("c")?;
    let k: usize = doc.header_value("k")?;
    let source = doc.trailer_set("S")?;
    let target = doc.trailer_set("S2")?;
    Instance::new(doc.repr, rule, c, k, source, target)
}

/// Input to a reduction: a graph plus optional parameters, independent sets
/// (`I:`, `I2:`), and paths (`s:`, `t:`, `P:`, `P2:`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionSource {
    pub graph: Graph,
    pub c: Option<usize>,
    pub k: Option<usize>,
    pub independent: Option<(VertexSet, VertexSet)>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub paths: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn parse_reduction_source(text: &str) -> Result<ReductionSource> {
    let doc = parse_document(text)?;
    doc.reject_unknown(
        &["format", "rule", "c", "k", "repr", "n"],
        &["I", "I2", "s", "t", "P", "P2"],
    )?;
    let optional = |key: &str| -> Result<Option<usize>> {
        match doc.header.contains_key(key) {
            true => doc.header_value(key).map(Some),
            false => Ok(None),
        }
    };
    let c = optional("c")?;
    let k = optional("k")?;
    let has = |key: &str| doc.trailer.contains_key(key);
    let independent = match (has("I"), has("I2")) {
        (true, true) => Some((doc.trailer_set("I")?, doc.trailer_set("I2")?)),
        (false, false) => None,
        _ => return Err(Error::syntax(1, "`I:` and `I2:` must appear together")),
    };
    let endpoint = |key: &str| -> Result<Option<usize>> {
        if !has(key) {
            return Ok(None);
        }
        match doc.trailer_list(key)?.as_slice() {
            [v] => Ok(Some(*v)),
            _ => Err(Error::syntax(
                doc.trailer[key].0,
                format!("`{key}:` takes one vertex"),
            )),
        }
    };
    let s = endpoint("s")?;
    let t = endpoint("t")?;
    let paths = match (has("P"), has("P2")) {
        (true, true) => Some((doc.trailer_list("P")?, doc.trailer_list("P2")?)),
        (false, false) => None,
        _ => return Err(Error::syntax(1, "`P:` and `P2:` must appear together")),
    };
    Ok(ReductionSource {
        graph: doc.repr.to_graph(),
        c,
        k,
        independent,
        s,
        t,
        paths,
    })
}

fn push_set(out: &mut String, key: &str, set: &VertexSet) {
    push_list(out, key, &set.sorted());
}

pub(crate) fn push_list(out: &mut String, key: &str, list: &[usize]) {
    out.push_str(key);
    out.push(':');
    for v in list {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
}

fn push_edges(out: &mut String, g: &Graph) {
    writeln!(out, "{}", g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
}

/// Header lines through `body:` plus the body for `repr`.
pub(crate) fn render_graph_section(out: &mut String, repr: &Representation) {
    writeln!(out, "repr: {}", repr.kind()).unwrap();
    writeln!(out, "n: {}", repr.n()).unwrap();
    out.push_str("body:\n");
    match repr {
        Representation::Intervals(model) => {
            for &(l, r) in model.endpoints() {
                writeln!(out, "{l} {r}").unwrap();
            }
        }
        Representation::Edges(g) => push_edges(out, g),
        Representation::Split(model) => {
            push_list(out, "K", model.clique_part());
            push_edges(out, model.graph());
        }
    }
}

pub fn render_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "format: {FORMAT_TAG}").unwrap();
    writeln!(out, "rule: {}", inst.rule).unwrap();
    writeln!(out, "c: {}", inst.c).unwrap();
    writeln!(out, "k: {}", inst.k).unwrap();
    render_graph_section(&mut out, &inst.repr);
    push_set(&mut out, "S", &inst.source);
    push_set(&mut out, "S2", &inst.target);
    out
}

/// Parses a sequence over vertices `0..n`.
pub fn parse_sequence(text: &str, n: usize) -> Result<ReconSequence> {
    let mut lines = Lines::new(text);
    let (line, content) = lines.next("`start:` line")?;
    let start = match split_key(content) {
        Some(("start", value)) => parse_set(line, n, value)?,
        _ => return Err(Error::syntax(line, "expected `start: v ...`")),
    };
    let mut steps = Vec::new();
    while let Some((line, content)) = lines.peek() {
        lines.pos += 1;
        let step = if let Some(rest) = content.strip_prefix('+') {
            Step::Add(parse_num(line, rest.trim(), "vertex")?)
        } else if let Some(rest) = content.strip_prefix('-') {
            Step::Remove(parse_num(line, rest.trim(), "vertex")?)
        } else if let Some((u, v)) = content.split_once('>') {
            Step::Swap(
                parse_num(line, u.trim(), "vertex")?,
                parse_num(line, v.trim(), "vertex")?,
            )
        } else {
            return Err(Error::syntax(
                line,
                format!("unrecognized step `{content}`"),
            ));
        };
        steps.push(step);
    }
    Ok(ReconSequence { start, steps })
}

pub fn render_sequence(seq: &ReconSequence) -> String {
    let mut out = String::new();
    push_set(&mut out, "start", &seq.start);
    for step in &seq.steps {
        writeln!(out, "{step}").unwrap();
    }
    out
}
