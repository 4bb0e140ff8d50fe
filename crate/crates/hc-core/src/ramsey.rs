//! Ramsey-dataset classification: stream graph6 records, optionally
//! complement, and tally dominating-edge / two-edge-matching structure.

use std::io::BufRead;

use crate::error::Error;
use crate::graph::MatchClassification;
use crate::graph6::parse_graph6;

/// How often (in records) the progress callback fires.
pub const PROGRESS_INTERVAL: u64 = 10_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationTally {
    pub total: u64,
    pub dominating_edge: u64,
    pub two_edge_matching: u64,
    pub neither: u64,
    /// (line number, message) per unparseable record; not counted in total.
    pub parse_failures: Vec<(usize, String)>,
}

impl ClassificationTally {
    /// The published summary line shape: `<total> / <total> [<dom>, <match>]`.
    pub fn summary(&self) -> String {
        format!(
            "{} / {} [{}, {}]",
            self.total, self.total, self.dominating_edge, self.two_edge_matching
        )
    }
}

/// Streams records from `reader`; memory use is bounded by one graph.
/// `progress` is called every [`PROGRESS_INTERVAL`] records with the running
/// total.
pub fn classify_stream<R: BufRead>(
    reader: R,
    complement_first: bool,
    mut progress: impl FnMut(u64),
) -> Result<ClassificationTally, Error> {
    let mut tally = ClassificationTally::default();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| Error::Io {
            path: format!("<stream line {}>", idx + 1),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(&line) {
            Err(e) => tally.parse_failures.push((idx + 1, e.to_string())),
            Ok(g) => {
                let g = if complement_first { g.complement() } else { g };
                tally.total += 1;
                match g.classify_matching() {
                    MatchClassification::DominatingEdge(_) => tally.dominating_edge += 1,
                    MatchClassification::TwoEdgeMatching(_, _) => tally.two_edge_matching += 1,
                    MatchClassification::Neither => tally.neither += 1,
                }
                if tally.total % PROGRESS_INTERVAL == 0 {
                    progress(tally.total);
                }
            }
        }
    }
    Ok(tally)
}

/// File-path front end for [`classify_stream`].
pub fn classify_dataset(
    path: &str,
    complement_first: bool,
    progress: impl FnMut(u64),
) -> Result<ClassificationTally, Error> {
    let file = std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })?;
    classify_stream(std::io::BufReader::new(file), complement_first, progress)
}
