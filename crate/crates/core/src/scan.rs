//! Exhaustive classification of all pairs of small graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{GraphTable, Status};
use crate::enumerate::graphs_up_to;
use crate::error::{Error, Result};
use crate::names::describe;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub max_vertices: usize,
    pub graphs: usize,
    pub pairs: usize,
    pub status_counts: BTreeMap<Status, usize>,
    pub rule_counts: BTreeMap<String, usize>,
    /// Open pairs as name pairs, sorted.
    pub open_pairs: Vec<(String, String)>,
    /// Pairs on which the rule tables contradict themselves or say nothing.
    pub violations: Vec<String>,
}

/// Per-pair outcome of a scan, in enumeration order.
#[derive(Debug, Clone)]
pub struct PairOutcome {
    pub left: usize,
    pub right: usize,
    pub result: Result<(Status, String)>,
}

/// Graph table holding every graph with `1..=max_vertices` vertices, and
/// their ids in enumeration order.
pub fn scan_table(max_vertices: usize) -> Result<(GraphTable, Vec<usize>)> {
    let graphs = graphs_up_to(max_vertices)?;
    let mut table = GraphTable::new();
    let ids = graphs.iter().map(|g| table.intern(g)).collect();
    Ok((table, ids))
}

/// Classifies every unordered pair (including equal pairs) of graphs with at
/// most `max_vertices` vertices.
pub fn scan_pairs(max_vertices: usize, jobs: Option<usize>) -> Result<(GraphTable, Vec<usize>, Vec<PairOutcome>)> {
    let (table, ids) = scan_table(max_vertices)?;
    let pairs: Vec<(usize, usize)> = (0..ids.len())
        .flat_map(|i| (i..ids.len()).map(move |j| (i, j)))
        .collect();
    let work = || {
        pairs
            .par_iter()
            .map(|&(i, j)| PairOutcome {
                left: ids[i],
                right: ids[j],
                result: table
                    .classify_ids(ids[i], ids[j])
                    .map(|v| (v.status, v.rule)),
            })
            .collect::<Vec<_>>()
    };
    let outcomes = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::input(format!("cannot start worker threads: {e}")))?
            .install(work),
        None => work(),
    };
    Ok((table, ids, outcomes))
}

pub fn scan(max_vertices: usize, jobs: Option<usize>) -> Result<ScanReport> {
    let (table, ids, outcomes) = scan_pairs(max_vertices, jobs)?;
    let mut report = ScanReport {
        max_vertices,
        graphs: ids.len(),
        pairs: outcomes.len(),
        status_counts: BTreeMap::new(),
        rule_counts: BTreeMap::new(),
        open_pairs: Vec::new(),
        violations: Vec::new(),
    };
    for o in &outcomes {
        let name = |id: usize| describe(table.graph(id));
        match &o.result {
            Ok((status, rule)) => {
                *report.status_counts.entry(*status).or_default() += 1;
                *report.rule_counts.entry(rule.clone()).or_default() += 1;
                if *status == Status::Open {
                    report.open_pairs.push((name(o.left), name(o.right)));
                }
            }
            Err(e) => report
                .violations
                .push(format!("({}, {}): {e}", name(o.left), name(o.right))),
        }
    }
    report.open_pairs.sort();
    report.violations.sort();
    Ok(report)
}
