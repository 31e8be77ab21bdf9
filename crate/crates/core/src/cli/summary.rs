//! Aggregates over a set of annotated records.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_rational::{BigRational, Ratio};

use super::record::{CurveRecord, Stratum};
use crate::error::Result;
use crate::zeta::{bergstrom_moment, IsogenyKey, PartitionSpec};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StratumSummary {
    pub curves: usize,
    pub mass: Ratio<i64>,
    pub pointless: usize,
    pub max_n1: u64,
    pub max_n1_curves: usize,
    pub supersingular: usize,
    /// `|Aut| ↦ count` among supersingular curves.
    pub supersingular_aut: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summary {
    pub strata: [StratumSummary; 3],
    pub distinct_keys: usize,
    pub keys_in_all_strata: usize,
    /// Strata of the curves attaining the overall maximum of `N_1`.
    pub max_n1_strata: Vec<Stratum>,
}

impl Summary {
    pub fn total_curves(&self) -> usize {
        self.strata.iter().map(|s| s.curves).sum()
    }

    pub fn total_mass(&self) -> Ratio<i64> {
        self.strata.iter().map(|s| s.mass).sum()
    }

    pub fn total_pointless(&self) -> usize {
        self.strata.iter().map(|s| s.pointless).sum()
    }

    pub fn max_n1(&self) -> u64 {
        self.strata.iter().map(|s| s.max_n1).max().unwrap_or(0)
    }

    pub fn of(&self, s: Stratum) -> &StratumSummary {
        &self.strata[s.index()]
    }
}

pub fn summarize(records: &[CurveRecord]) -> Summary {
    let mut strata: [StratumSummary; 3] = Default::default();
    let mut keys: HashMap<IsogenyKey, [bool; 3]> = HashMap::new();
    for r in records {
        let i = r.stratum().index();
        let s = &mut strata[i];
        s.curves += 1;
        s.mass += Ratio::new(1, r.aut as i64);
        let n1 = r.counts.0.first().copied().unwrap_or(0);
        if n1 == 0 {
            s.pointless += 1;
        }
        if n1 > s.max_n1 || s.curves == 1 {
            s.max_n1 = n1;
            s.max_n1_curves = 0;
        }
        if n1 == s.max_n1 {
            s.max_n1_curves += 1;
        }
        if r.np.is_supersingular() {
            s.supersingular += 1;
            *s.supersingular_aut.entry(r.aut).or_insert(0) += 1;
        }
        keys.entry(r.counts.isogeny_key()).or_default()[i] = true;
    }
    let top = strata.iter().map(|s| s.max_n1).max().unwrap_or(0);
    let max_n1_strata = records
        .iter()
        .filter(|r| r.counts.0.first() == Some(&top))
        .map(|r| r.stratum())
        .collect::<HashSet<_>>();
    let mut max_n1_strata: Vec<Stratum> = max_n1_strata.into_iter().collect();
    max_n1_strata.sort();
    Summary {
        distinct_keys: keys.len(),
        keys_in_all_strata: keys.values().filter(|v| v.iter().all(|&b| b)).count(),
        strata,
        max_n1_strata,
    }
}

/// Partitions reported for the hyperelliptic stratum.
pub const REPORTED_MOMENTS: [&str; 6] = ["[2]", "[1^2]", "[1^2,2]", "[1^2,3]", "[3,4^2]", "[1,2,5^2]"];

pub fn moments_for(records: &[CurveRecord], stratum: Stratum) -> Result<Vec<(PartitionSpec, BigRational)>> {
    REPORTED_MOMENTS
        .iter()
        .map(|s| {
            let l: PartitionSpec = s.parse()?;
            let m = bergstrom_moment(
                &l,
                records.iter().filter(|r| r.stratum() == stratum).map(|r| (r.aut, &r.counts)),
            )?;
            Ok((l, m))
        })
        .collect()
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "| Stratum | Curves | Mass | N1 = 0 | max N1 | curves at max | supersingular |")?;
        writeln!(f, "|---|---:|---:|---:|---:|---:|---:|")?;
        for st in Stratum::ALL {
            let s = self.of(st);
            writeln!(
                f,
                "| {st} | {} | {} | {} | {} | {} | {} |",
                s.curves, s.mass, s.pointless, s.max_n1, s.max_n1_curves, s.supersingular
            )?;
        }
        writeln!(f)?;
        let masses: Vec<String> = self.strata.iter().map(|s| s.mass.to_string()).collect();
        writeln!(f, "Mass: {} = {}", masses.join(" + "), self.total_mass())?;
        writeln!(f, "Curves: {}", self.total_curves())?;
        writeln!(f, "Distinct isogeny keys: {}", self.distinct_keys)?;
        writeln!(f, "Keys realized in every stratum: {}", self.keys_in_all_strata)?;
        writeln!(f, "Pointless curves: {}", self.total_pointless())?;
        let strata: Vec<String> = self.max_n1_strata.iter().map(|s| s.to_string()).collect();
        writeln!(f, "Largest N1: {} (in {})", self.max_n1(), strata.join(", "))
    }
}
