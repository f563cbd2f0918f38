//! Graph serialization (edge list, DOT, JSON) and edge-list/JSON ingestion.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use villarceau::{Coord, DiagGraph, Family, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Edgelist,
    Dot,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Edgelist => "edgelist",
            OutputFormat::Dot => "dot",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub vertices: Vec<[i64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

fn xy(c: Coord) -> String {
    format!("{},{}", c.x, c.y)
}

pub fn edgelist(g: &DiagGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", xy(g.coord(u)), xy(g.coord(v)));
    }
    out
}

fn dot_name(c: Coord) -> String {
    let part = |v: i64| if v < 0 { format!("m{}", -v) } else { v.to_string() };
    format!("v_{}_{}", part(c.x), part(c.y))
}

pub fn dot(g: &DiagGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for &c in g.coords() {
        let _ = writeln!(out, "  {} [label=\"({},{})\"];", dot_name(c), c.x, c.y);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", dot_name(g.coord(u)), dot_name(g.coord(v)));
    }
    out.push_str("}\n");
    out
}

pub fn json(g: &DiagGraph, spec: Option<&GridSpec>) -> String {
    let doc = GraphJson {
        family: spec.map(|s| s.family),
        m: spec.map(|s| s.m),
        n: spec.map(|s| s.n),
        vertices: g.coords().iter().map(|c| [c.x, c.y]).collect(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph json serializes");
    s.push('\n');
    s
}

/// Reads either the JSON document written by `gen --format json` or an edge
/// list (one `x,y x,y` edge per line; a lone `x,y` adds an isolated vertex;
/// blank lines and `#` comments are skipped).
pub fn parse_graph(text: &str) -> Result<DiagGraph, String> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edgelist(text)
    }
}

fn parse_json(text: &str) -> Result<DiagGraph, String> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| format!("invalid graph json: {e}"))?;
    let coords: Vec<Coord> = doc.vertices.iter().map(|&[x, y]| Coord::new(x, y)).collect();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for [u, v] in doc.edges {
        let (a, b) = match (coords.get(u), coords.get(v)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(format!("edge [{u},{v}] refers to a missing vertex")),
        };
        edges.push((a, b));
    }
    DiagGraph::from_coords(coords, edges).map_err(|e| e.to_string())
}

fn parse_edgelist(text: &str) -> Result<DiagGraph, String> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| s.parse::<Coord>().map_err(|e| format!("line {}: {e}", i + 1));
        match fields.as_slice() {
            [a] => vertices.push(parse(a)?),
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                vertices.extend([a, b]);
                edges.push((a, b));
            }
            _ => return Err(format!("line {}: expected \"x1,y1 x2,y2\"", i + 1)),
        }
    }
    if vertices.is_empty() {
        return Err("input graph has no vertices".into());
    }
    DiagGraph::from_coords(vertices, edges).map_err(|e| e.to_string())
}
