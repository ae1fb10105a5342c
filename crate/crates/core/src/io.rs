//! Text, JSON and DIMACS-style file formats.
//!
//! Trees and graphs share one text format:
//!
//! ```text
//! # comment
//! n m
//! id x y        (n lines; coordinates are integers, decimals or p/q)
//! u v [weight]  (m lines; u and v are vertex ids)
//! ```
//!
//! A weight on any edge marks the whole tree as explicitly weighted; edges
//! without one get their Euclidean length. A weight starting with `~` is an
//! approximate double, anything else is exact. The JSON mirror has the same
//! fields: `{"n", "m", "vertices": [{"id", "x", "y"}], "edges": [{"u", "v", "weight"}]}`
//! with coordinates as strings or numbers and exact weights as strings.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{euclidean_distance, Edge, PlanarGraph, Point, WeightedTree};
use crate::length::{format_rational, parse_rational, Backend, Length};
use crate::reductions::OneInThreeSat;

/// Reads a whole file, mapping I/O failures to [`Error::InvalidInput`].
pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

pub fn write_file(path: impl AsRef<Path>, contents: &str) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, contents).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-empty lines with comments stripped, split into positioned tokens.
fn tokenize(src: &str, comment: impl Fn(&str) -> bool) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if comment(line.trim_start()) {
            continue;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (j, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    tokens.push(Token { text: &line[s..j], line: i + 1, column: s + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

fn numeral(t: &Token) -> Result<BigRational> {
    parse_rational(t.text).map_err(|m| Error::parse(t.line, t.column, m))
}

fn count(t: &Token) -> Result<usize> {
    t.text.parse().map_err(|_| Error::parse(t.line, t.column, format!("expected a count, found `{}`", t.text)))
}

fn weight(t: &Token) -> Result<Length> {
    match t.text.strip_prefix('~') {
        Some(rest) => rest
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Length::Approx)
            .ok_or_else(|| Error::parse(t.line, t.column, format!("bad approximate weight `{}`", t.text))),
        None => numeral(t).map(Length::Exact),
    }
}

/// Vertices and edges before tree or graph validation.
struct Raw {
    points: Vec<Point>,
    labels: Option<Vec<String>>,
    edges: Vec<(usize, usize, Option<Length>)>,
}

impl Raw {
    fn into_edges(self, backend: Backend) -> (Vec<Point>, Option<Vec<String>>, Vec<Edge>, bool) {
        let explicit = self.edges.iter().any(|e| e.2.is_some());
        let edges = self
            .edges
            .into_iter()
            .map(|(u, v, w)| {
                let length = w.unwrap_or_else(|| euclidean_distance(&self.points[u], &self.points[v], backend));
                Edge { u, v, length }
            })
            .collect();
        (self.points, self.labels, edges, explicit)
    }
}

/// Labels are dropped when the ids are exactly `0, 1, ..., n-1`.
fn labels_from(ids: Vec<String>) -> Option<Vec<String>> {
    let plain = ids.iter().enumerate().all(|(i, id)| *id == i.to_string());
    (!plain).then_some(ids)
}

fn parse_raw_text(src: &str) -> Result<Raw> {
    let lines = tokenize(src, |_| false);
    let mut it = lines.iter();
    let header = it.next().ok_or_else(|| Error::parse(1, 1, "missing `n m` header"))?;
    if header.len() != 2 {
        let t = header.get(2).unwrap_or(&header[0]);
        return Err(Error::parse(t.line, t.column, "header must be `n m`"));
    }
    let (n, m) = (count(&header[0])?, count(&header[1])?);
    let last_line = lines.last().map_or(1, |l| l[0].line);

    let mut ids = Vec::with_capacity(n);
    let mut index = HashMap::new();
    let mut points = Vec::with_capacity(n);
    for k in 0..n {
        let toks =
            it.next().ok_or_else(|| Error::parse(last_line + 1, 1, format!("expected vertex {} of {n}", k + 1)))?;
        if toks.len() != 3 {
            let t = toks.get(3).unwrap_or(&toks[0]);
            return Err(Error::parse(t.line, t.column, "vertex line must be `id x y`"));
        }
        if index.insert(toks[0].text, k).is_some() {
            return Err(Error::parse(toks[0].line, toks[0].column, format!("duplicate vertex id `{}`", toks[0].text)));
        }
        ids.push(toks[0].text.to_string());
        points.push(Point::new(numeral(&toks[1])?, numeral(&toks[2])?));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for k in 0..m {
        let toks =
            it.next().ok_or_else(|| Error::parse(last_line + 1, 1, format!("expected edge {} of {m}", k + 1)))?;
        if !(2..=3).contains(&toks.len()) {
            let t = toks.get(3).unwrap_or(&toks[0]);
            return Err(Error::parse(t.line, t.column, "edge line must be `u v [weight]`"));
        }
        let end = |t: &Token| {
            index
                .get(t.text)
                .copied()
                .ok_or_else(|| Error::parse(t.line, t.column, format!("unknown vertex `{}`", t.text)))
        };
        let (u, v) = (end(&toks[0])?, end(&toks[1])?);
        if u == v {
            return Err(Error::parse(toks[1].line, toks[1].column, "self-loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(toks[0].line, toks[0].column, "duplicate edge"));
        }
        let w = toks.get(2).map(weight).transpose()?;
        if let Some(l) = &w {
            if l.is_negative() {
                return Err(Error::parse(toks[2].line, toks[2].column, "negative weight"));
            }
        }
        edges.push((u, v, w));
    }
    if let Some(extra) = it.next() {
        return Err(Error::parse(extra[0].line, extra[0].column, format!("trailing content after {m} edges")));
    }
    Ok(Raw { points, labels: labels_from(ids), edges })
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonScalar {
    Text(String),
    Int(i64),
    Float(f64),
}

impl JsonScalar {
    fn text(&self) -> String {
        match self {
            JsonScalar::Text(s) => s.clone(),
            JsonScalar::Int(i) => i.to_string(),
            JsonScalar::Float(f) => f.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: JsonScalar,
    x: JsonScalar,
    y: JsonScalar,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    u: JsonScalar,
    v: JsonScalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Length>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    m: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

fn parse_raw_json(src: &str) -> Result<Raw> {
    let g: JsonGraph = serde_json::from_str(src).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let bad = |what: String| Error::InvalidInput(what);
    if g.vertices.len() != g.n || g.edges.len() != g.m {
        return Err(bad(format!(
            "header says {} vertices and {} edges, found {} and {}",
            g.n,
            g.m,
            g.vertices.len(),
            g.edges.len()
        )));
    }
    let mut index = HashMap::new();
    let mut ids = Vec::with_capacity(g.n);
    let mut points = Vec::with_capacity(g.n);
    for (k, v) in g.vertices.iter().enumerate() {
        let id = v.id.text();
        if index.insert(id.clone(), k).is_some() {
            return Err(bad(format!("duplicate vertex id `{id}`")));
        }
        let coord = |c: &JsonScalar| parse_rational(&c.text()).map_err(|m| bad(format!("vertex `{id}`: {m}")));
        points.push(Point::new(coord(&v.x)?, coord(&v.y)?));
        ids.push(id);
    }
    let mut edges = Vec::with_capacity(g.m);
    for e in g.edges {
        let end =
            |s: &JsonScalar| index.get(&s.text()).copied().ok_or_else(|| bad(format!("unknown vertex `{}`", s.text())));
        edges.push((end(&e.u)?, end(&e.v)?, e.weight));
    }
    Ok(Raw { points, labels: labels_from(ids), edges })
}

fn parse_raw(src: &str) -> Result<Raw> {
    if src.trim_start().starts_with('{') {
        parse_raw_json(src)
    } else {
        parse_raw_text(src)
    }
}

/// Parses a tree in the text format or its JSON mirror.
pub fn parse_tree(src: &str, backend: Backend) -> Result<WeightedTree> {
    let (points, labels, edges, explicit) = parse_raw(src)?.into_edges(backend);
    let t = WeightedTree::from_parts(points, edges, explicit)?;
    match labels {
        Some(l) => t.with_labels(l),
        None => Ok(t),
    }
}

/// Parses an embedded graph in the text format or its JSON mirror.
pub fn parse_graph(src: &str, backend: Backend) -> Result<PlanarGraph> {
    let (points, labels, edges, _) = parse_raw(src)?.into_edges(backend);
    let g = PlanarGraph::from_edges(points, edges)?;
    match labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

fn weight_text(l: &Length) -> String {
    match l {
        Length::Exact(r) => format_rational(r),
        Length::Approx(v) => format!("~{v:?}"),
    }
}

fn write_raw(points: &[Point], label: impl Fn(usize) -> String, edges: &[Edge], weights: bool) -> String {
    let mut s = format!("{} {}\n", points.len(), edges.len());
    for (i, p) in points.iter().enumerate() {
        let _ = writeln!(s, "{} {} {}", label(i), format_rational(&p.x), format_rational(&p.y));
    }
    for e in edges {
        let _ = match weights {
            true => writeln!(s, "{} {} {}", label(e.u), label(e.v), weight_text(&e.length)),
            false => writeln!(s, "{} {}", label(e.u), label(e.v)),
        };
    }
    s
}

/// Text form; weights are written only for explicitly weighted trees.
pub fn write_tree(t: &WeightedTree) -> String {
    write_raw(t.points(), |i| t.label(i), t.edges(), t.explicit_weights())
}

/// Text form with every edge weight written out.
pub fn write_graph(g: &PlanarGraph) -> String {
    write_raw(g.points(), |i| g.label(i), g.edges(), true)
}

fn json_raw(points: &[Point], label: impl Fn(usize) -> String, edges: &[Edge], weights: bool) -> String {
    let g = JsonGraph {
        n: points.len(),
        m: edges.len(),
        vertices: points
            .iter()
            .enumerate()
            .map(|(i, p)| JsonVertex {
                id: JsonScalar::Text(label(i)),
                x: JsonScalar::Text(format_rational(&p.x)),
                y: JsonScalar::Text(format_rational(&p.y)),
            })
            .collect(),
        edges: edges
            .iter()
            .map(|e| JsonEdge {
                u: JsonScalar::Text(label(e.u)),
                v: JsonScalar::Text(label(e.v)),
                weight: weights.then(|| e.length.clone()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&g).expect("plain data serializes")
}

pub fn tree_to_json(t: &WeightedTree) -> String {
    json_raw(t.points(), |i| t.label(i), t.edges(), t.explicit_weights())
}

pub fn graph_to_json(g: &PlanarGraph) -> String {
    json_raw(g.points(), |i| g.label(i), g.edges(), true)
}

/// DIMACS-like CNF: `c` comment lines, a `p cnf n m` header, then one clause
/// per line of exactly three non-zero literals terminated by `0`.
pub fn parse_sat(src: &str) -> Result<OneInThreeSat> {
    let lines = tokenize(src, |l| l.starts_with('c') || l.starts_with('%'));
    let mut it = lines.iter();
    let header = it.next().ok_or_else(|| Error::parse(1, 1, "missing `p cnf n m` header"))?;
    if header.len() != 4 || header[0].text != "p" || header[1].text != "cnf" {
        return Err(Error::parse(header[0].line, header[0].column, "header must be `p cnf n m`"));
    }
    let (n, m) = (count(&header[2])?, count(&header[3])?);
    let mut clauses = Vec::with_capacity(m);
    for toks in it {
        let mut lits = Vec::with_capacity(3);
        let mut closed = false;
        for t in toks {
            if closed {
                return Err(Error::parse(t.line, t.column, "content after the terminating 0"));
            }
            let lit: i64 =
                t.text.parse().map_err(|_| Error::parse(t.line, t.column, format!("bad literal `{}`", t.text)))?;
            if lit == 0 {
                closed = true;
                continue;
            }
            if lit.unsigned_abs() as usize > n {
                return Err(Error::parse(t.line, t.column, format!("literal {lit} outside 1..={n}")));
            }
            lits.push(lit as i32);
        }
        let first = &toks[0];
        if lits.len() != 3 {
            return Err(Error::parse(
                first.line,
                first.column,
                format!("clause has {} literals, expected 3", lits.len()),
            ));
        }
        if !closed {
            let t = toks.last().unwrap_or(first);
            return Err(Error::parse(t.line, t.column + t.text.len(), "clause must end with 0"));
        }
        clauses.push([lits[0], lits[1], lits[2]]);
    }
    if clauses.len() != m {
        let line = lines.last().map_or(1, |l| l[0].line);
        return Err(Error::parse(line, 1, format!("header promises {m} clauses, found {}", clauses.len())));
    }
    OneInThreeSat::new(n, clauses)
}

pub fn write_sat(phi: &OneInThreeSat) -> String {
    let mut s = format!("p cnf {} {}\n", phi.n, phi.m());
    for c in &phi.clauses {
        let _ = writeln!(s, "{} {} {} 0", c[0], c[1], c[2]);
    }
    s
}

/// One `u v` pair per line.
pub fn write_pairs(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// One `u v length` line per insertable edge.
pub fn write_candidates(candidates: &[(usize, usize, Length)]) -> String {
    candidates.iter().map(|(u, v, l)| format!("{u} {v} {}\n", weight_text(l))).collect()
}

/// One decimal integer per line.
pub fn write_integers<T: std::fmt::Display>(values: &[T]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

/// `(tree, vertex)` at each end of a bridge.
pub type BridgeEnds = ((usize, usize), (usize, usize));

/// Graphviz rendering of trees (one cluster each) plus dashed bridges.
/// Positions are pinned to the geometry.
pub fn to_dot(trees: &[&WeightedTree], bridges: &[BridgeEnds]) -> String {
    let mut s = String::from("graph bridges {\n  node [shape=point];\n");
    for (ti, t) in trees.iter().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_{ti} {{");
        for (i, p) in t.points().iter().enumerate() {
            let (x, y) = p.to_f64();
            let _ = writeln!(s, "    t{ti}_{i} [xlabel=\"{}\", pos=\"{x},{y}!\"];", t.label(i));
        }
        for e in t.edges() {
            let _ = writeln!(s, "    t{ti}_{} -- t{ti}_{} [label=\"{}\"];", e.u, e.v, e.length);
        }
        s.push_str("  }\n");
    }
    for ((ta, a), (tb, b)) in bridges {
        let _ = writeln!(s, "  t{ta}_{a} -- t{tb}_{b} [style=dashed, color=red];");
    }
    s.push_str("}\n");
    s
}
