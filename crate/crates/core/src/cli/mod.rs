//! Command-line front end: census, analyze, report and verify.

pub mod census;
pub mod checkpoint;
pub mod record;
pub mod summary;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

pub use census::{read_records, run_census, write_records, CensusConfig, CensusOutcome};
pub use record::{CurveModel, CurveRecord, Stratum};
pub use summary::{summarize, Summary};

use crate::error::{Error, Result};
use crate::zeta::{aut_histogram, aut_histograms_markdown, tabulate, AUT_HISTOGRAMS};

pub const EXIT_OK: i32 = 0;
/// I/O, parse and usage errors.
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "g5census", version, about = "Genus-5 curves over F_2: census, zeta data and tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate one stratum and write one record per curve.
    Census {
        #[arg(long)]
        stratum: Stratum,
        /// Genus of the hyperelliptic census.
        #[arg(long, default_value_t = 5)]
        genus: u32,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Work units between checkpoints.
        #[arg(long, default_value_t = 16)]
        checkpoint_every: usize,
        #[arg(long, env = "G5_THREADS")]
        threads: Option<usize>,
        /// Continue from the checkpoint file if it exists.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Classify cusps by searching all of GL_3 (slow cross-check).
        #[arg(long, visible_alias = "paper-faithful-cusp")]
        cusp_by_search: bool,
        /// Stop after this many work units, leaving the checkpoint behind.
        #[arg(long, hide = true)]
        stop_after_units: Option<usize>,
    },
    /// Recompute and check zeta data, add isogeny keys, merge into one file.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "G5_THREADS")]
        threads: Option<usize>,
    },
    /// Newton polygon tables, automorphism histograms and aggregates.
    Report {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Directory for `newton.csv` and `report.md`.
        #[arg(long)]
        out: PathBuf,
        /// Compare with the published tables; exit 2 on any difference.
        #[arg(long)]
        check: bool,
    },
    /// Oracle, orbit-stabilizer and action-law checks, plus audits of the
    /// given record files.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "G5_THREADS")]
        threads: Option<usize>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) | Error::WeilBound(_) | Error::NonIntegral(_) => EXIT_INVARIANT,
        _ => EXIT_ERROR,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Census {
            stratum,
            genus,
            out,
            checkpoint,
            checkpoint_every,
            threads,
            resume,
            cusp_by_search,
            stop_after_units,
        } => {
            let cfg = CensusConfig {
                stratum,
                genus,
                threads,
                checkpoint,
                checkpoint_every,
                resume,
                cusp_by_search,
                stop_after: stop_after_units,
            };
            cmd_census(&cfg, out)
        }
        Command::Analyze { files, out, threads } => census::with_threads(threads, || cmd_analyze(&files, &out))?,
        Command::Report { files, out, check } => cmd_report(&files, &out, check),
        Command::Verify { files, seed, threads } => census::with_threads(threads, || cmd_verify(&files, seed))?,
    }
}

fn cmd_census(cfg: &CensusConfig, out: Option<PathBuf>) -> Result<i32> {
    match run_census(cfg)? {
        CensusOutcome::Complete(records) => {
            match out {
                Some(path) => write_records(&path, &records)?,
                None => {
                    for r in &records {
                        println!("{r}");
                    }
                }
            }
            let mass: num_rational::Ratio<i64> = records.iter().map(|r| num_rational::Ratio::new(1, r.aut as i64)).sum();
            eprintln!("{}: {} curves, mass {mass}", cfg.stratum, records.len());
        }
        CensusOutcome::Interrupted { units_done, units_total } => {
            eprintln!("{}: stopped after {units_done} of {units_total} work units", cfg.stratum);
        }
    }
    Ok(EXIT_OK)
}

fn read_all(files: &[PathBuf]) -> Result<Vec<CurveRecord>> {
    let mut out = Vec::new();
    for f in files {
        out.extend(read_records(f)?);
    }
    Ok(out)
}

/// Recomputes every record from its model, rejecting any disagreement, and
/// fills in the isogeny key.
pub fn analyze_records(records: Vec<CurveRecord>) -> Result<Vec<CurveRecord>> {
    records
        .into_par_iter()
        .map(|r| {
            let mut fresh = CurveRecord::new(r.model.clone(), r.aut)?;
            if fresh.counts != r.counts || fresh.lpoly != r.lpoly || fresh.np != r.np {
                return Err(Error::Invariant(format!("record disagrees with its model: {r}")));
            }
            fresh.key = Some(fresh.counts.isogeny_key());
            Ok(fresh)
        })
        .collect()
}

fn cmd_analyze(files: &[PathBuf], out: &Path) -> Result<i32> {
    let records = analyze_records(read_all(files)?)?;
    write_records(out, &records)?;
    print!("{}", summarize(&records));
    Ok(EXIT_OK)
}

/// Markdown report: tables, histograms, aggregates and moments.
pub fn report_markdown(records: &[CurveRecord]) -> Result<String> {
    let mut s = String::from("# Genus-5 curves over F_2\n\n");
    s.push_str(&tabulate(records).to_markdown());
    s.push_str(&aut_histograms_markdown(records));
    let _ = writeln!(s, "\n### Aggregates\n");
    let _ = write!(s, "{}", summarize(records));
    let _ = writeln!(s, "\n### Moments over the hyperelliptic stratum\n");
    let _ = writeln!(s, "| Partition | Moment |");
    let _ = writeln!(s, "|---|---:|");
    for (l, m) in summary::moments_for(records, Stratum::Hyp)? {
        let _ = writeln!(s, "| {l} | {m} |");
    }
    Ok(s)
}

/// Differences from the published tables and histograms.
pub fn published_mismatches(records: &[CurveRecord]) -> Vec<String> {
    let mut out = tabulate(records).mismatches();
    for st in Stratum::ALL {
        let got: Vec<(u64, u64)> = aut_histogram(records, st).into_iter().collect();
        if got != AUT_HISTOGRAMS[st.index()] {
            out.push(format!("{st} automorphism histogram {got:?}, expected {:?}", AUT_HISTOGRAMS[st.index()]));
        }
    }
    out
}

fn cmd_report(files: &[PathBuf], out: &Path, check: bool) -> Result<i32> {
    let records = read_all(files)?;
    fs::create_dir_all(out)?;
    fs::write(out.join("newton.csv"), tabulate(&records).to_csv())?;
    fs::write(out.join("report.md"), report_markdown(&records)?)?;
    println!("wrote {} and {}", out.join("newton.csv").display(), out.join("report.md").display());
    if check {
        let bad = published_mismatches(&records);
        for m in &bad {
            println!("MISMATCH {m}");
        }
        if !bad.is_empty() {
            return Ok(EXIT_VERIFICATION);
        }
        println!("tables match the published values");
    }
    Ok(EXIT_OK)
}

fn cmd_verify(files: &[PathBuf], seed: u64) -> Result<i32> {
    let mut results = verify::run_structural_checks(seed)?;
    if !files.is_empty() {
        results.extend(verify::check_records(&read_all(files)?));
    }
    for r in &results {
        println!("{r}");
    }
    Ok(if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VERIFICATION })
}
