//! Census runs split into work units, executed batch by batch on a rayon
//! pool with optional checkpoints between batches.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::checkpoint::{CheckpointBody, RunKey};
use super::record::{CurveModel, CurveRecord, Stratum};
use crate::cicensus::{dedup_sigma, sigma_from_units, sigma_unit, sigma_units, QuadricTriple, CI_CLASSES};
use crate::error::{Error, Result};
use crate::grpact::{quadric_orbits, Quadric15, Quintic21};
use crate::hypcensus::{hyp_census_for_q, q_representatives};
use crate::trigcensus::{quintic_representatives, trig_census_of};
use crate::zeta::{ci_point_counts_with, QuadricPoints};

/// Quintic representatives per trigonal work unit.
const TRIG_CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub stratum: Stratum,
    /// Only used for the hyperelliptic stratum.
    pub genus: u32,
    pub threads: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    /// Units per batch; a checkpoint is written after each batch.
    pub checkpoint_every: usize,
    pub resume: bool,
    pub cusp_by_search: bool,
    /// Stop once this many units are done, as if the process were killed.
    pub stop_after: Option<usize>,
}

impl CensusConfig {
    pub fn new(stratum: Stratum) -> Self {
        CensusConfig {
            stratum,
            genus: 5,
            threads: None,
            checkpoint: None,
            checkpoint_every: 16,
            resume: false,
            cusp_by_search: false,
            stop_after: None,
        }
    }
}

#[derive(Debug)]
pub enum CensusOutcome {
    Complete(Vec<CurveRecord>),
    Interrupted { units_done: usize, units_total: usize },
}

enum Plan {
    Hyp(Vec<crate::gf2algebra::UniPolyF2>),
    Trig(Vec<Vec<Quintic21>>),
    Ci(Vec<(usize, Quadric15)>),
}

impl Plan {
    fn new(cfg: &CensusConfig) -> Result<Self> {
        Ok(match cfg.stratum {
            Stratum::Hyp => Plan::Hyp(q_representatives(cfg.genus)?),
            Stratum::Trig => Plan::Trig(quintic_representatives().chunks(TRIG_CHUNK).map(<[_]>::to_vec).collect()),
            Stratum::Ci => Plan::Ci(sigma_units()),
        })
    }

    fn len(&self) -> usize {
        match self {
            Plan::Hyp(v) => v.len(),
            Plan::Trig(v) => v.len(),
            Plan::Ci(v) => v.len(),
        }
    }

    fn run_unit(&self, cfg: &CensusConfig, i: usize) -> Result<Vec<String>> {
        match self {
            Plan::Hyp(qs) => hyp_census_for_q(cfg.genus, &qs[i])?
                .into_iter()
                .map(|c| Ok(CurveRecord::new(CurveModel::Hyp(c.model), c.aut as u64)?.to_string()))
                .collect(),
            Plan::Trig(chunks) => trig_census_of(&chunks[i], cfg.cusp_by_search)?
                .into_iter()
                .map(|c| Ok(CurveRecord::new(CurveModel::Trig { f: c.f, sing: c.sing }, c.aut as u64)?.to_string()))
                .collect(),
            Plan::Ci(units) => {
                let (class, q) = units[i];
                Ok(sigma_unit(class, q)
                    .into_iter()
                    .map(|t| format!("{} {} {}", t.p.to_hex(), t.q.to_hex(), t.r.to_hex()))
                    .collect())
            }
        }
    }

    fn finish(&self, units: Vec<Vec<String>>) -> Result<Vec<CurveRecord>> {
        match self {
            Plan::Hyp(_) | Plan::Trig(_) => units.into_iter().flatten().map(|l| l.parse()).collect(),
            Plan::Ci(plan) => {
                let parts = units
                    .into_iter()
                    .map(|lines| lines.iter().map(|l| parse_triple(l)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let curves = dedup_sigma(&sigma_from_units(plan, parts))?;
                let classes = quadric_orbits();
                let caches = (0..CI_CLASSES)
                    .into_par_iter()
                    .map(|i| QuadricPoints::new(classes.representative(i).0, 5))
                    .collect::<Result<Vec<_>>>()?;
                curves
                    .par_iter()
                    .map(|c| {
                        let counts = ci_point_counts_with(&caches[c.class], &c.triple)?;
                        let model = CurveModel::Ci { triple: c.triple, class: c.class };
                        CurveRecord::with_counts(model, c.aut as u64, counts)
                    })
                    .collect()
            }
        }
    }
}

fn parse_triple(line: &str) -> Result<QuadricTriple> {
    let w: Vec<&str> = line.split_whitespace().collect();
    if w.len() != 3 {
        return Err(Error::Parse(format!("bad triple {line:?}")));
    }
    Ok(QuadricTriple::new(Quadric15::from_hex(w[0])?, Quadric15::from_hex(w[1])?, Quadric15::from_hex(w[2])?))
}

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Invariant(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn run_census(cfg: &CensusConfig) -> Result<CensusOutcome> {
    with_threads(cfg.threads, || run_census_inner(cfg))?
}

fn run_census_inner(cfg: &CensusConfig) -> Result<CensusOutcome> {
    let plan = Plan::new(cfg)?;
    let run = RunKey {
        stratum: cfg.stratum.to_string(),
        genus: if cfg.stratum == Stratum::Hyp { cfg.genus } else { 5 },
        cusp_by_search: cfg.cusp_by_search && cfg.stratum == Stratum::Trig,
        units_total: plan.len(),
    };
    let mut state = match (&cfg.checkpoint, cfg.resume) {
        (Some(path), true) if path.exists() => {
            let body = CheckpointBody::load(path)?;
            if body.run != run {
                return Err(Error::CorruptCheckpoint {
                    path: path.clone(),
                    reason: format!("written for {:?}, resuming {:?}", body.run, run),
                });
            }
            body
        }
        _ => CheckpointBody::new(run),
    };
    let every = cfg.checkpoint_every.max(1);
    let total = plan.len();
    while state.units.len() < total {
        if cfg.stop_after.is_some_and(|s| state.units.len() >= s) {
            return Ok(CensusOutcome::Interrupted { units_done: state.units.len(), units_total: total });
        }
        let start = state.units.len();
        let end = (start + every).min(total);
        let batch = (start..end).into_par_iter().map(|i| plan.run_unit(cfg, i)).collect::<Result<Vec<_>>>()?;
        state.units.extend(batch);
        if let Some(path) = &cfg.checkpoint {
            state.save(path)?;
        }
    }
    Ok(CensusOutcome::Complete(plan.finish(state.units)?))
}

pub fn write_records(path: &Path, records: &[CurveRecord]) -> Result<()> {
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    for r in records {
        writeln!(out, "{r}")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads one record per nonempty line; `#` starts a comment line.
pub fn read_records(path: &Path) -> Result<Vec<CurveRecord>> {
    let file = fs::File::open(path)?;
    let mut out = Vec::new();
    for (n, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(t.parse().map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), n + 1)))?);
    }
    Ok(out)
}
