//! Self-checks: brute-force comparison, orbit–stabilizer audits, action-law
//! samples and zeta audits of records.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::record::CurveRecord;
use crate::error::Result;
use crate::gf2algebra::{moebius_action, MoebiusMap, UniPolyF2};
use crate::grpact::{act, gl_order, quadric_orbits, stabilizers, FormSpace, LinearRep, MatGF2, OrbitTable};
use crate::hypcensus::oracle::brute_force_classes;
use crate::hypcensus::run_hyp_census;

/// Random samples per representation in the action-law check.
pub const ACTION_SAMPLES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// The structured pipeline against brute-force classification in genus `g`.
pub fn check_oracle(g: u32) -> Result<CheckResult> {
    let census = run_hyp_census(g)?;
    let oracle = brute_force_classes(g)?;
    let same = census.len() == oracle.len()
        && census.iter().zip(&oracle).all(|(c, o)| c.model == o.model && c.aut == o.aut);
    let name = format!("genus-{g} brute-force oracle");
    Ok(CheckResult::new(&name, same, format!("{} census classes, {} oracle classes", census.len(), oracle.len())))
}

fn audit_table(name: &str, table: &OrbitTable, stabs: &[Vec<MatGF2>], group: u64, space_size: usize) -> CheckResult {
    let total: usize = table.sizes().iter().sum();
    let bad = table
        .sizes()
        .iter()
        .zip(stabs)
        .filter(|(&size, st)| size as u64 * st.len() as u64 != group)
        .count();
    CheckResult::new(
        name,
        bad == 0 && total == space_size,
        format!("{} orbits covering {total} forms, {bad} with |orbit|·|stab| ≠ {group}", table.num_orbits()),
    )
}

/// `|orbit| · |stabilizer| = |GL_n(F_2)|` for quadric and quintic orbits.
pub fn check_orbit_stabilizer() -> Result<Vec<CheckResult>> {
    let q = quadric_orbits();
    let qstabs = stabilizers(FormSpace::quadrics(), q.table.representatives())?;
    let quintics = OrbitTable::build(FormSpace::quintics(), &[]);
    let tstabs = stabilizers(FormSpace::quintics(), quintics.representatives())?;
    Ok(vec![
        audit_table("quadric orbit-stabilizer", &q.table, &qstabs, gl_order(5), (1 << 15) - 1),
        audit_table("quintic orbit-stabilizer", &quintics, &tstabs, gl_order(3), (1 << 21) - 1),
    ])
}

fn random_gl(rng: &mut ChaCha8Rng, n: usize) -> MatGF2 {
    loop {
        let rows: Vec<u8> = (0..n).map(|_| rng.gen_range(0..1u8 << n)).collect();
        // singular draws are rejected by the constructor
        if let Ok(m) = MatGF2::from_rows(&rows) {
            return m;
        }
    }
}

/// `act(A·B, f) = act(B, act(A, f))` on random samples for quadrics,
/// quintics and binary forms.
pub fn check_action_law(seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (name, space) in [("quadric", FormSpace::quadrics()), ("quintic", FormSpace::quintics())] {
        let n = space.nvars();
        let mut bad = 0;
        for _ in 0..ACTION_SAMPLES {
            let (a, b) = (random_gl(&mut rng, n), random_gl(&mut rng, n));
            let f = rng.gen_range(0..1u32 << space.dim());
            let lhs = act(&LinearRep::of(space, &a.mul(&b)), f);
            let rhs = act(&LinearRep::of(space, &b), act(&LinearRep::of(space, &a), f));
            if lhs != rhs {
                bad += 1;
            }
        }
        out.push(CheckResult::new(
            &format!("{name} action law"),
            bad == 0,
            format!("{bad} of {ACTION_SAMPLES} samples violate it"),
        ));
    }
    let all = MoebiusMap::all(0);
    let mut bad = 0;
    for _ in 0..ACTION_SAMPLES {
        let n = rng.gen_range(1..=12usize);
        let a = all[rng.gen_range(0..all.len())].with_weight(n);
        let b = all[rng.gen_range(0..all.len())].with_weight(n);
        let f = UniPolyF2::from_u64(rng.gen_range(0..1u64 << (n + 1)));
        if moebius_action(&a.compose(&b), &f)? != moebius_action(&b, &moebius_action(&a, &f)?)? {
            bad += 1;
        }
    }
    out.push(CheckResult::new(
        "binary form action law",
        bad == 0,
        format!("{bad} of {ACTION_SAMPLES} samples violate it"),
    ));
    Ok(out)
}

/// Weil bound, L-polynomial round trip, slope symmetry and freshness of
/// every record.
pub fn check_records(records: &[CurveRecord]) -> Vec<CheckResult> {
    let mut weil = Vec::new();
    let mut round_trip = Vec::new();
    let mut symmetric = Vec::new();
    let mut stale = Vec::new();
    for r in records {
        if r.counts.check_weil().is_err() {
            weil.push(r);
        }
        if r.lpoly.point_counts() != r.counts {
            round_trip.push(r);
        }
        if !r.np.is_symmetric() {
            symmetric.push(r);
        }
        if r.verify().is_err() {
            stale.push(r);
        }
    }
    let report = |name: &str, bad: Vec<&CurveRecord>| {
        let mut detail = format!("{} of {} records fail", bad.len(), records.len());
        if let Some(first) = bad.first() {
            detail.push_str(&format!("; first: {first}"));
        }
        CheckResult::new(name, bad.is_empty(), detail)
    };
    vec![
        report("Weil bound audit", weil),
        report("zeta round trip", round_trip),
        report("slope symmetry", symmetric),
        report("record recomputation", stale),
    ]
}

/// Every check that does not need census records.
pub fn run_structural_checks(seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = vec![check_oracle(2)?];
    out.extend(check_orbit_stabilizer()?);
    out.extend(check_action_law(seed)?);
    Ok(out)
}
