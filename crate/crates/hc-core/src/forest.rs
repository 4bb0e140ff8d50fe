//! Proof-forest verification and the weight-fair discovery scheduler.

use rayon::prelude::*;

use crate::catalog::Catalog;
use crate::error::Error;
use crate::search::{run_full, PropertySpec, SearchState, Status};

/// One arrow of the proof forest, with optional expected accounting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofEdge {
    pub source: String,
    pub target: String,
    pub expected_count: Option<u64>,
    pub expected_weight: Option<u64>,
}

/// One line of the verification report, serialized as
/// `<source> <target> <count> <weight>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub source: String,
    pub target: String,
    pub added_count: u64,
    pub weight: u64,
}

impl std::fmt::Display for ReportLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.source, self.target, self.added_count, self.weight
        )
    }
}

/// Per-edge verification failure, with the search trace attached.
#[derive(Debug)]
pub struct EdgeFailure {
    pub edge: ProofEdge,
    pub status: Status,
    pub trace: String,
}

#[derive(Debug)]
pub enum EdgeResult {
    Line(ReportLine),
    Failed(EdgeFailure),
}

/// Runs the full search for one forest arrow. Non-Success outcomes (including
/// budget exhaustion when a budget is set) are reported as failures with
/// the trace attached.
pub fn verify_edge(
    catalog: &Catalog,
    edge: &ProofEdge,
    budget: Option<u64>,
) -> Result<EdgeResult, Error> {
    let source = catalog.get(&edge.source)?;
    let target = catalog.get(&edge.target)?;
    let p = PropertySpec::new(vec![target.clone()]);
    let out = run_full(source, &p, budget)?;
    if out.status != Status::Success {
        return Ok(EdgeResult::Failed(EdgeFailure {
            edge: edge.clone(),
            status: out.status,
            trace: out.trace,
        }));
    }
    Ok(EdgeResult::Line(ReportLine {
        source: edge.source.clone(),
        target: edge.target.clone(),
        added_count: out.added_count,
        weight: out.weight,
    }))
}

/// Outcome of a whole-forest verification.
#[derive(Debug)]
pub struct ForestReport {
    /// Report lines (or failures) in input-forest order.
    pub results: Vec<EdgeResult>,
    pub matches: usize,
    pub mismatches: usize,
    pub failures: usize,
}

impl ForestReport {
    pub fn all_ok(&self) -> bool {
        self.mismatches == 0 && self.failures == 0
    }
}

/// Verifies every edge, `parallelism` at a time; results keep input order,
/// so the report is invariant under the degree of parallelism.
pub fn verify_forest(
    catalog: &Catalog,
    forest: &[ProofEdge],
    parallelism: usize,
    budget: Option<u64>,
) -> Result<ForestReport, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Solver(format!("thread pool: {e}")))?;
    let results: Vec<Result<EdgeResult, Error>> = pool.install(|| {
        forest
            .par_iter()
            .map(|e| verify_edge(catalog, e, budget))
            .collect()
    });
    let mut report = ForestReport {
        results: Vec::with_capacity(forest.len()),
        matches: 0,
        mismatches: 0,
        failures: 0,
    };
    for (edge, res) in forest.iter().zip(results) {
        let res = res?;
        match &res {
            EdgeResult::Line(line) => {
                let count_ok = edge.expected_count.is_none_or(|c| c == line.added_count);
                let weight_ok = edge.expected_weight.is_none_or(|w| w == line.weight);
                if count_ok && weight_ok {
                    report.matches += 1;
                } else {
                    report.mismatches += 1;
                }
            }
            EdgeResult::Failed(_) => report.failures += 1,
        }
        report.results.push(res);
    }
    Ok(report)
}

/// Status of one scheduled discovery instance.
#[derive(Debug)]
pub struct InstanceReport {
    pub source: String,
    pub target: String,
    pub status: Status,
    pub added_count: u64,
    pub weight: u64,
    pub trace: String,
}

/// Cooperative fair scheduler: repeatedly steps the unfinished instance
/// with the lowest running weight (ties broken by input order) until every
/// instance succeeds, aborts, or exceeds the ceiling.
pub fn schedule_discovery(
    catalog: &Catalog,
    instances: &[(String, String)],
    ceiling: Option<u64>,
) -> Result<Vec<InstanceReport>, Error> {
    let mut states: Vec<(SearchState, PropertySpec)> = Vec::with_capacity(instances.len());
    for (src, tgt) in instances {
        let h = catalog.get(src)?.clone();
        let p = PropertySpec::new(vec![catalog.get(tgt)?.clone()]);
        states.push((SearchState::new(h, &p, ceiling), p));
    }
    loop {
        let next = states
            .iter()
            .enumerate()
            .filter(|(_, (s, _))| s.status.is_none())
            .min_by_key(|(i, (s, _))| (s.weight, *i))
            .map(|(i, _)| i);
        match next {
            None => break,
            Some(i) => {
                let (state, p) = &mut states[i];
                let p = p.clone();
                state.step(&p)?;
            }
        }
    }
    Ok(states
        .into_iter()
        .zip(instances)
        .map(|((s, _), (src, tgt))| InstanceReport {
            source: src.clone(),
            target: tgt.clone(),
            status: s.status.expect("scheduler runs to completion"),
            added_count: s.added_count,
            weight: s.weight,
            trace: s.trace,
        })
        .collect())
}

/// Convenience: run one named edge directly (the CLI `prove` path).
pub fn prove(
    catalog: &Catalog,
    source: &str,
    target: &str,
    budget: Option<u64>,
) -> Result<(crate::search::SearchOutcome, ReportLine), Error> {
    let h = catalog.get(source)?;
    let t = catalog.get(target)?;
    let p = PropertySpec::new(vec![t.clone()]);
    let out = run_full(h, &p, budget)?;
    let line = ReportLine {
        source: source.to_string(),
        target: target.to_string(),
        added_count: out.added_count,
        weight: out.weight,
    };
    Ok((out, line))
}

/// Pre-flight feasibility for a named pair (Theorem 13 direction).
pub fn core_check(catalog: &Catalog, source: &str, target: &str) -> Result<bool, Error> {
    let h = catalog.get(source)?;
    let t = catalog.get(target)?;
    Ok(crate::constructions::core_feasibility(h, t))
}
