//! Sweep rows for `survey` and `conjecture`, and CSV/JSON rendering of all
//! report types. Rows are computed in parallel and emitted in input order.

use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;
use villarceau::claims::{avg_distance_formula, conjecture_set, multiset_text, solve_text, ClaimReport};
use villarceau::graph::{all_pairs, average_distance, degree_multiset, diameter};
use villarceau::resolver::{exact_dimension, is_resolving, LandmarkSet, SolveOptions};
use villarceau::GridSpec;

pub const CLAIM_HEADER: [&str; 7] = ["claim_id", "family", "m", "n", "expected", "computed", "status"];

pub const SURVEY_HEADER: [&str; 11] = [
    "family",
    "m",
    "n",
    "vertices",
    "edges",
    "diameter",
    "degree_multiset",
    "dim",
    "avg_distance_exact",
    "avg_distance_formula",
    "elapsed_ms",
];

pub const CONJECTURE_HEADER: [&str; 7] = ["family", "m", "n", "predicted", "set_resolves", "exact", "status"];

fn write_csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

pub fn claims_csv(reports: &[ClaimReport]) -> String {
    write_csv(
        CLAIM_HEADER,
        reports.iter().map(|r| {
            [
                r.claim_id.clone(),
                r.instance.family.to_string(),
                r.instance.m.to_string(),
                r.instance.n.to_string(),
                r.expected.clone(),
                r.computed.clone(),
                r.status.as_str().to_string(),
            ]
        }),
    )
}

pub fn claims_json(reports: &[ClaimReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub spec: GridSpec,
    pub vertices: usize,
    pub edges: usize,
    pub diameter: usize,
    pub degree_multiset: String,
    pub dim: String,
    pub avg_distance_exact: String,
    pub avg_distance_formula: String,
    pub elapsed_ms: Option<u128>,
}

pub fn survey(specs: &[GridSpec], solve: &SolveOptions, timings: bool) -> Vec<SurveyRow> {
    specs
        .par_iter()
        .map(|spec| {
            let started = std::time::Instant::now();
            let g = spec.build();
            let d = all_pairs(&g).expect("generated graphs are connected");
            let r = exact_dimension(&g, &d, solve);
            let dim = if r.is_exact() {
                solve_text(&r)
            } else {
                format!("{}:{}", r.status.as_str(), solve_text(&r))
            };
            let q = |v: Option<villarceau::Rational>| v.map_or_else(|| "undefined".to_string(), |q| q.to_string());
            SurveyRow {
                spec: *spec,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                diameter: diameter(&d),
                degree_multiset: multiset_text(&degree_multiset(&g)),
                dim,
                avg_distance_exact: q(average_distance(&d).ok()),
                avg_distance_formula: q(avg_distance_formula(spec).ok()),
                elapsed_ms: timings.then(|| started.elapsed().as_millis()),
            }
        })
        .collect()
}

pub fn survey_csv(rows: &[SurveyRow]) -> String {
    write_csv(
        SURVEY_HEADER,
        rows.iter().map(|r| {
            [
                r.spec.family.to_string(),
                r.spec.m.to_string(),
                r.spec.n.to_string(),
                r.vertices.to_string(),
                r.edges.to_string(),
                r.diameter.to_string(),
                r.degree_multiset.clone(),
                r.dim.clone(),
                r.avg_distance_exact.clone(),
                r.avg_distance_formula.clone(),
                r.elapsed_ms.map_or_else(String::new, |ms| ms.to_string()),
            ]
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Agree,
    Disagree,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub spec: GridSpec,
    pub predicted: usize,
    pub set_size: usize,
    pub set_resolves: bool,
    pub exact: Option<usize>,
    pub status: Agreement,
}

pub fn conjecture(specs: &[GridSpec], time_limit: Option<Duration>) -> Vec<ConjectureRow> {
    specs
        .par_iter()
        .map(|spec| {
            let g = spec.build();
            let d = all_pairs(&g).expect("generated graphs are connected");
            let set = conjecture_set(spec).expect("caller passes conjecture-range specs");
            let set_resolves = LandmarkSet::from_coords(&set.landmarks, &g)
                .ok()
                .and_then(|l| is_resolving(&d, l.ids()).ok())
                .is_some_and(|r| r.is_resolving());
            let r = exact_dimension(
                &g,
                &d,
                &SolveOptions {
                    time_limit,
                    ..SolveOptions::default()
                },
            );
            let exact = r.is_exact().then_some(r.dim);
            let status = match exact {
                Some(k) if k == set.predicted_dim => Agreement::Agree,
                Some(_) => Agreement::Disagree,
                None => Agreement::Timeout,
            };
            ConjectureRow {
                spec: *spec,
                predicted: set.predicted_dim,
                set_size: set.landmarks.len(),
                set_resolves,
                exact,
                status,
            }
        })
        .collect()
}

pub fn conjecture_csv(rows: &[ConjectureRow]) -> String {
    write_csv(
        CONJECTURE_HEADER,
        rows.iter().map(|r| {
            [
                r.spec.family.to_string(),
                r.spec.m.to_string(),
                r.spec.n.to_string(),
                r.predicted.to_string(),
                r.set_resolves.to_string(),
                r.exact.map_or_else(String::new, |k| k.to_string()),
                match r.status {
                    Agreement::Agree => "agree",
                    Agreement::Disagree => "disagree",
                    Agreement::Timeout => "timeout",
                }
                .to_string(),
            ]
        }),
    )
}
