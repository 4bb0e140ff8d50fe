//! `hc`: command-line surface over the proof-search engine.
//!
//! Report data goes to stdout; diagnostics and progress go to stderr.
//! Exit codes: 0 full success, 1 verification mismatch or search failure,
//! 2 usage or parse errors, 3 search aborted on the unimplemented branch.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hc_core::catalog::{
    annotate_forest, default_catalog, default_expected, default_forest, format_stanza,
    load_catalog, load_expected, load_forest, Catalog,
};
use hc_core::error::Error;
use hc_core::forest::{self, EdgeResult, ProofEdge};
use hc_core::ramsey;
use hc_core::search::Status;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ABORTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hc",
    about = "Proof search over triangle-stable-set-free graph extensions",
    long_about = "Proves statements of the form \"every counterexample with \
independence number 2 contains the target graph\", verifies whole proof \
forests against expected reports, and classifies Ramsey-extremal graphs.\n\n\
Exit codes: 0 success; 1 verification mismatch or search failure; 2 usage or \
parse error; 3 search hit the unimplemented extension branch."
)]
struct Cli {
    /// Catalog file (defaults to the embedded catalog).
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one search and print its report line `SRC DST count weight`.
    Prove {
        source: String,
        target: String,
        /// Abort once the running weight would exceed this bound.
        #[arg(long)]
        budget: Option<u64>,
        /// Write the full search trace to this path.
        #[arg(long)]
        trace: Option<String>,
    },
    /// Re-run every forest edge and diff against an expected report.
    VerifyForest {
        /// Forest file of `SRC DST` lines (defaults to the embedded forest).
        forest: Option<String>,
        /// Expected report of `SRC DST count weight` lines (defaults to the
        /// embedded report).
        #[arg(long)]
        expected: Option<String>,
        /// Worker threads across independent edges.
        #[arg(long, default_value_t = 4)]
        jobs: usize,
    },
    /// Classify a graph6 dataset and print the summary line.
    CheckRamsey {
        file: String,
        /// Complement each record before classifying (the Ramsey dataset
        /// stores the triangle-free complements).
        #[arg(long)]
        complement: bool,
    },
    /// Print whether the 2K2-core pre-check allows a SRC-to-DST search.
    CoreCheck { source: String, target: String },
    /// Inspect the graph catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Fair-schedule a batch of candidate searches under a weight ceiling.
    Discover {
        /// File of `SRC DST` candidate lines.
        candidates: String,
        /// Weight ceiling shared by every instance.
        #[arg(long)]
        ceiling: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List all catalog graph names.
    List,
    /// Print one catalog stanza.
    Show { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let catalog = match &cli.catalog {
        None => default_catalog(),
        Some(path) => match load_catalog(path) {
            Ok(c) => c,
            Err(e) => return usage_error(&e),
        },
    };
    let code = match run(&catalog, cli.command) {
        Ok(code) => code,
        Err(e) => return usage_error(&e),
    };
    ExitCode::from(code)
}

fn usage_error(e: &Error) -> ExitCode {
    eprintln!("hc: {e}");
    ExitCode::from(EXIT_USAGE)
}

fn run(catalog: &Catalog, command: Command) -> Result<u8, Error> {
    match command {
        Command::Prove {
            source,
            target,
            budget,
            trace,
        } => {
            let (out, line) = forest::prove(catalog, &source, &target, budget)?;
            if let Some(path) = trace {
                std::fs::write(&path, &out.trace)
                    .map_err(|source| Error::Io { path, source })?;
            }
            match out.status {
                Status::Success => {
                    println!("{line}");
                    Ok(EXIT_OK)
                }
                Status::AbortedUnimplementedBranch => {
                    eprintln!("hc: {source} {target}: aborted on the unimplemented extension branch");
                    Ok(EXIT_ABORTED)
                }
                status => {
                    eprintln!("hc: {source} {target}: search ended with {status:?}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::VerifyForest {
            forest: forest_path,
            expected,
            jobs,
        } => {
            let mut edges: Vec<ProofEdge> = match forest_path {
                None => default_forest(),
                Some(path) => load_forest(&path)?,
            };
            let expected = match expected {
                None => default_expected(),
                Some(path) => load_expected(&path)?,
            };
            annotate_forest(&mut edges, &expected);
            let report = forest::verify_forest(catalog, &edges, jobs, None)?;
            let mut aborted = false;
            for (edge, res) in edges.iter().zip(&report.results) {
                match res {
                    EdgeResult::Line(line) => {
                        let ok = edge.expected_count.is_none_or(|c| c == line.added_count)
                            && edge.expected_weight.is_none_or(|w| w == line.weight);
                        println!("{line}");
                        if !ok {
                            eprintln!(
                                "hc: mismatch {} {}: got {} {}, expected {} {}",
                                edge.source,
                                edge.target,
                                line.added_count,
                                line.weight,
                                display_opt(edge.expected_count),
                                display_opt(edge.expected_weight),
                            );
                        }
                    }
                    EdgeResult::Failed(f) => {
                        aborted |= f.status == Status::AbortedUnimplementedBranch;
                        eprintln!(
                            "hc: failed {} {}: {:?}",
                            edge.source, edge.target, f.status
                        );
                    }
                }
            }
            eprintln!(
                "hc: {} edges: {} match, {} mismatch, {} failed",
                report.results.len(),
                report.matches,
                report.mismatches,
                report.failures
            );
            if report.all_ok() {
                Ok(EXIT_OK)
            } else if aborted {
                Ok(EXIT_ABORTED)
            } else {
                Ok(EXIT_FAIL)
            }
        }
        Command::CheckRamsey { file, complement } => {
            let tally = ramsey::classify_dataset(&file, complement, |n| {
                eprintln!("hc: {n} records classified");
            })?;
            for (line, msg) in &tally.parse_failures {
                eprintln!("hc: {file}:{line}: {msg}");
            }
            println!("{}", tally.summary());
            Ok(if tally.parse_failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::CoreCheck { source, target } => {
            if forest::core_check(catalog, &source, &target)? {
                println!("feasible");
                Ok(EXIT_OK)
            } else {
                println!("infeasible");
                Ok(EXIT_FAIL)
            }
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for name in catalog.names() {
                        println!("{name}");
                    }
                }
                CatalogAction::Show { name } => println!("{}", format_stanza(catalog, &name)?),
            }
            Ok(EXIT_OK)
        }
        Command::Discover { candidates, ceiling } => {
            let text = std::fs::read_to_string(&candidates).map_err(|source| Error::Io {
                path: candidates.clone(),
                source,
            })?;
            let instances = parse_candidates(&candidates, &text)?;
            let reports = forest::schedule_discovery(catalog, &instances, ceiling)?;
            let mut worst = EXIT_OK;
            for r in &reports {
                println!(
                    "{} {} {:?} {} {}",
                    r.source, r.target, r.status, r.added_count, r.weight
                );
                match r.status {
                    Status::Success => {}
                    Status::AbortedUnimplementedBranch => worst = worst.max(EXIT_ABORTED),
                    _ => worst = worst.max(EXIT_FAIL),
                }
            }
            Ok(worst)
        }
    }
}

fn parse_candidates(path: &str, text: &str) -> Result<Vec<(String, String)>, Error> {
    let mut instances = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(src), Some(tgt), None) => instances.push((src.to_string(), tgt.to_string())),
            _ => {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: idx + 1,
                    message: "expected `SOURCE TARGET`".to_string(),
                })
            }
        }
    }
    Ok(instances)
}

fn display_opt(v: Option<u64>) -> String {
    v.map_or_else(|| "?".to_string(), |v| v.to_string())
}
