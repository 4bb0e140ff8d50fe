//! File formats: the graph catalog, forest files, expected-report files,
//! and report emission. Default datasets are embedded
//! in the binary.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::forest::{ProofEdge, ReportLine};
use crate::graph::LabeledGraph;

const DEFAULT_CATALOG: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/catalog.txt"));
const DEFAULT_FOREST: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/forest.txt"));
const DEFAULT_EXPECTED: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/expected.txt"));

/// Named graph collection, preserving file order.
#[derive(Clone, Debug)]
pub struct Catalog {
    map: BTreeMap<String, LabeledGraph>,
    order: Vec<String>,
    modes: BTreeMap<String, String>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Result<&LabeledGraph, Error> {
        self.map
            .get(name)
            .ok_or_else(|| Error::UnknownCatalogName(name.to_string()))
    }

    /// Names in file order.
    pub fn names(&self) -> &[String] {
        &self.order
    }

    /// Storage mode of a stanza ("direct" or "complement").
    pub fn mode(&self, name: &str) -> Option<&str> {
        self.modes.get(name).map(|s| s.as_str())
    }

    /// The 63 graphs of the proof forest: the four roots plus H1p..H33p and
    /// I1..I26 (excludes helper stanzas like trees and F_k pieces).
    pub fn proof_graph_names(&self) -> Vec<&str> {
        self.order
            .iter()
            .map(|s| s.as_str())
            .filter(|n| {
                matches!(*n, "W5" | "K23c" | "K7" | "H7")
                    || (n.starts_with('H') && n.ends_with('p'))
                    || (n.starts_with('I') && n[1..].chars().all(|c| c.is_ascii_digit()))
            })
            .collect()
    }
}

fn parse_edge(tok: &str, path: &str, line: usize) -> Result<(u32, u32), Error> {
    let bad = || Error::Parse {
        path: path.to_string(),
        line,
        message: format!("malformed edge {tok:?} (expected A-B)"),
    };
    let (a, b) = tok.split_once('-').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// Parses catalog text; `path` is used only in diagnostics.
pub fn parse_catalog(path: &str, text: &str) -> Result<Catalog, Error> {
    let mut map = BTreeMap::new();
    let mut modes = BTreeMap::new();
    let mut order = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let err = |message: String| Error::Parse {
            path: path.to_string(),
            line: lineno,
            message,
        };
        let name = toks.next().unwrap().to_string();
        let n: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err("missing or bad vertex count".into()))?;
        let mode = toks
            .next()
            .ok_or_else(|| err("missing mode".into()))?
            .to_string();
        if mode != "direct" && mode != "complement" {
            return Err(err(format!("unknown mode {mode:?}")));
        }
        let mut edges = Vec::new();
        for tok in toks {
            edges.push(parse_edge(tok, path, lineno)?);
        }
        let g = LabeledGraph::from_edges(n, &edges).map_err(|e| err(e.to_string()))?;
        let g = if mode == "complement" { g.complement() } else { g };
        if map.insert(name.clone(), g).is_some() {
            return Err(err(format!("duplicate stanza name {name:?}")));
        }
        modes.insert(name.clone(), mode);
        order.push(name);
    }
    Ok(Catalog { map, order, modes })
}

pub fn load_catalog(path: &str) -> Result<Catalog, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })?;
    parse_catalog(path, &text)
}

/// The embedded default graph catalog.
pub fn default_catalog() -> Catalog {
    parse_catalog("<builtin catalog>", DEFAULT_CATALOG).expect("embedded catalog is well-formed")
}

/// Parses a forest file: one `source target` pair per line.
pub fn parse_forest(path: &str, text: &str) -> Result<Vec<ProofEdge>, Error> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                path: path.to_string(),
                line: idx + 1,
                message: format!("expected 2 columns, found {}", toks.len()),
            });
        }
        out.push(ProofEdge {
            source: toks[0].to_string(),
            target: toks[1].to_string(),
            expected_count: None,
            expected_weight: None,
        });
    }
    Ok(out)
}

pub fn load_forest(path: &str) -> Result<Vec<ProofEdge>, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })?;
    parse_forest(path, &text)
}

/// The embedded proof forest, in published order.
pub fn default_forest() -> Vec<ProofEdge> {
    parse_forest("<builtin forest>", DEFAULT_FOREST).expect("embedded forest is well-formed")
}

/// Expected (count, weight) accounting keyed by (source, target) name.
pub type ExpectedMap = BTreeMap<(String, String), (u64, u64)>;

/// Parses an expected-report file of `source target count weight` rows.
pub fn parse_expected(path: &str, text: &str) -> Result<ExpectedMap, Error> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            path: path.to_string(),
            line: idx + 1,
            message,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(err(format!("expected 4 columns, found {}", toks.len())));
        }
        let count: u64 = toks[2]
            .parse()
            .map_err(|_| err(format!("bad count {:?}", toks[2])))?;
        let weight: u64 = toks[3]
            .parse()
            .map_err(|_| err(format!("bad weight {:?}", toks[3])))?;
        out.insert((toks[0].to_string(), toks[1].to_string()), (count, weight));
    }
    Ok(out)
}

pub fn load_expected(path: &str) -> Result<ExpectedMap, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })?;
    parse_expected(path, &text)
}

/// The embedded expected accounting, one row per forest arrow.
pub fn default_expected() -> ExpectedMap {
    parse_expected("<builtin expected>", DEFAULT_EXPECTED)
        .expect("embedded expectations are well-formed")
}

/// Attaches expectations to forest edges by (source, target) name.
pub fn annotate_forest(
    forest: &mut [ProofEdge],
    expected: &ExpectedMap,
) {
    for e in forest {
        if let Some(&(c, w)) = expected.get(&(e.source.clone(), e.target.clone())) {
            e.expected_count = Some(c);
            e.expected_weight = Some(w);
        }
    }
}

/// Serializes report lines, one per row, trailing newline included.
pub fn emit_report(lines: &[ReportLine]) -> String {
    let mut out = String::new();
    for l in lines {
        out.push_str(&l.to_string());
        out.push('\n');
    }
    out
}

/// A stanza in catalog-file syntax for `catalog show`.
pub fn format_stanza(catalog: &Catalog, name: &str) -> Result<String, Error> {
    let g = catalog.get(name)?;
    let mode = catalog.mode(name).unwrap_or("direct");
    let shown = if mode == "complement" {
        g.complement()
    } else {
        g.clone()
    };
    let mut out = format!("{} {} {}", name, g.vertex_count(), mode);
    for e in shown.edges() {
        out.push_str(&format!(" {}-{}", e.lo, e.hi));
    }
    Ok(out)
}
