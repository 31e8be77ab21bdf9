//! Hyperelliptic curves `y^2 + q(x) y = p(x)` over F_2 up to isomorphism.

pub mod oracle;

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2algebra::{apply_images, moebius_action, MoebiusMap, UniPolyF2};

pub const MIN_GENUS: u32 = 2;
pub const MAX_GENUS: u32 = 5;

fn check_genus(g: u32) -> Result<()> {
    if (MIN_GENUS..=MAX_GENUS).contains(&g) {
        Ok(())
    } else {
        Err(Error::UnsupportedGenus(g))
    }
}

/// `y^2 + q(x) y = p(x)` with `deg q ≤ g+1`, `deg p ≤ 2g+2` and
/// `2g+1 ≤ max(2 deg q, deg p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HypModel {
    pub g: u32,
    pub q: UniPolyF2,
    pub p: UniPolyF2,
}

impl HypModel {
    pub fn new(g: u32, q: UniPolyF2, p: UniPolyF2) -> Result<Self> {
        check_genus(g)?;
        if q.is_zero() {
            return Err(Error::ZeroQ);
        }
        let dq = q.degree().unwrap();
        let dp = p.degree().unwrap_or(0);
        let g2 = 2 * g as usize;
        if dq > g as usize + 1 || dp > g2 + 2 {
            return Err(Error::Parse(format!("degrees ({dq}, {dp}) too large for genus {g}")));
        }
        if (2 * dq).max(dp) < g2 + 1 {
            return Err(Error::Parse(format!("degrees ({dq}, {dp}) too small for genus {g}")));
        }
        Ok(HypModel { g, q, p })
    }

    pub(crate) fn from_words(g: u32, q: u64, p: u64) -> Self {
        HypModel { g, q: UniPolyF2::from_u64(q), p: UniPolyF2::from_u64(p) }
    }
}

impl fmt::Display for HypModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 + ({})y = {}", self.q.pretty(), self.p.pretty())
    }
}

/// An isomorphism `(x, y) ↦ ((ax+b)/(cx+d), (r(x)+y)/(cx+d)^(g+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HypAutomorphism {
    pub a: MoebiusMap,
    pub r: UniPolyF2,
}

/// A census member with the order of its automorphism group over F_2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypCurve {
    pub model: HypModel,
    pub aut: usize,
}

/// Smoothness criterion: `gcd(q, p'^2 + q'^2 p) = 1`, and either
/// `deg q = g+1` or `a_{2g+1}^2 ≠ a_{2g+2} b_g^2`.
pub fn is_smooth_hyp(m: &HypModel) -> Result<bool> {
    if m.q.is_zero() {
        return Err(Error::ZeroQ);
    }
    Ok(smooth_words(m.g, m.q.to_u64(), m.p.to_u64()))
}

fn smooth_words(g: u32, q: u64, p: u64) -> bool {
    let qp = UniPolyF2::from_u64(q);
    let pp = UniPolyF2::from_u64(p);
    let dp = pp.derivative();
    let dq = qp.derivative();
    let h = &dp.square() + &(&dq.square() * &pp);
    if !qp.gcd(&h).is_one() {
        return false;
    }
    let g = g as usize;
    if qp.degree() == Some(g + 1) {
        return true;
    }
    let a_top = pp.coeff(2 * g + 2);
    let a_next = pp.coeff(2 * g + 1);
    let b_g = qp.coeff(g);
    a_next != (a_top && b_g)
}

/// Orbit representatives of nonzero `q` with `deg q ≤ g+1` under `ψ_{g+1}`,
/// each the least word of its orbit, in increasing order.
pub fn q_representatives(g: u32) -> Result<Vec<UniPolyF2>> {
    check_genus(g)?;
    let w = g as usize + 1;
    let maps: Vec<Vec<u64>> = MoebiusMap::all(w).iter().map(|m| m.monomial_images()).collect();
    let size = 1usize << (w + 1);
    let mut seen = vec![false; size];
    let mut reps = Vec::new();
    for q in 1..size as u64 {
        if seen[q as usize] {
            continue;
        }
        reps.push(UniPolyF2::from_u64(q));
        for t in &maps {
            seen[apply_images(t, q) as usize] = true;
        }
    }
    Ok(reps)
}

/// Precomputed action data for one `q`.
struct QContext {
    g: u32,
    q: u64,
    /// `ψ_{2g+2}` tables for `A ∈ Stab(q)`.
    stab: Vec<(MoebiusMap, Vec<u64>)>,
    /// `(r, r^2 + r q)` for all `deg r ≤ g+1`.
    shifts: Vec<(u64, u64)>,
}

impl QContext {
    fn new(g: u32, q: &UniPolyF2) -> Self {
        let w = g as usize + 1;
        let stab = MoebiusMap::all(w)
            .into_iter()
            .filter(|a| moebius_action(a, q).expect("degree bounded") == *q)
            .map(|a| {
                let big = a.with_weight(2 * w);
                (big, big.monomial_images())
            })
            .collect();
        let shifts = (0..1u64 << (w + 1))
            .map(|r| {
                let rp = UniPolyF2::from_u64(r);
                (r, (&rp.square() + &(&rp * q)).to_u64())
            })
            .collect();
        QContext { g, q: q.to_u64(), stab, shifts }
    }

    fn candidates(&self) -> Vec<u64> {
        let g = self.g as usize;
        let top = 1u64 << (2 * g + 3);
        let dq = 63 - self.q.leading_zeros() as usize;
        let low = if dq == g + 1 { 0 } else { 1u64 << (2 * g + 1) };
        (low..top).filter(|&p| smooth_words(self.g, self.q, p)).collect()
    }

    fn aut_order(&self, p: u64) -> usize {
        self.stab
            .iter()
            .map(|(_, t)| {
                let diff = apply_images(t, p) ^ p;
                self.shifts.iter().filter(|&&(_, s)| s == diff).count()
            })
            .sum()
    }

    fn automorphisms(&self, p: u64) -> Vec<HypAutomorphism> {
        let mut out = Vec::new();
        for (a, t) in &self.stab {
            let diff = apply_images(t, p) ^ p;
            for &(r, s) in &self.shifts {
                if s == diff {
                    out.push(HypAutomorphism {
                        a: a.with_weight(self.g as usize + 1),
                        r: UniPolyF2::from_u64(r),
                    });
                }
            }
        }
        out
    }

    /// Least word in the class of `p`.
    fn class_min(&self, p: u64) -> u64 {
        let mut best = u64::MAX;
        for (_, t) in &self.stab {
            let pa = apply_images(t, p);
            for &(_, s) in &self.shifts {
                best = best.min(pa ^ s);
            }
        }
        best
    }
}

/// One representative (the least word) per isomorphism class among
/// `candidates`, which must all be smooth models with this `q`.
pub fn reduce_ps_for_q(g: u32, q: &UniPolyF2, candidates: &[UniPolyF2]) -> Result<Vec<UniPolyF2>> {
    check_genus(g)?;
    let ctx = QContext::new(g, q);
    let words: Vec<u64> = candidates.iter().map(|p| p.to_u64()).collect();
    Ok(reduce_words(&ctx, &words)?.into_iter().map(UniPolyF2::from_u64).collect())
}

fn reduce_words(ctx: &QContext, words: &[u64]) -> Result<Vec<u64>> {
    let size = 1usize << (2 * ctx.g + 3);
    let mut seen = vec![false; size];
    let mut sorted = words.to_vec();
    sorted.sort_unstable();
    let mut reps = Vec::new();
    for &p in &sorted {
        if seen[p as usize] {
            continue;
        }
        reps.push(p);
        for (_, t) in &ctx.stab {
            let pa = apply_images(t, p);
            for &(_, s) in &ctx.shifts {
                let v = (pa ^ s) as usize;
                if v >= size {
                    return Err(Error::Invariant(format!("class member {v:x} out of range")));
                }
                seen[v] = true;
            }
        }
    }
    Ok(reps)
}

/// All `(A, r)` with `A ∈ Stab(q)` and `ψ_{2g+2}(A)(p) = p + r^2 + r q`.
pub fn hyp_automorphisms(m: &HypModel) -> Vec<HypAutomorphism> {
    QContext::new(m.g, &m.q).automorphisms(m.p.to_u64())
}

/// Census restricted to one `q` (a unit of work), ordered by `p`.
pub fn hyp_census_for_q(g: u32, q: &UniPolyF2) -> Result<Vec<HypCurve>> {
    check_genus(g)?;
    let ctx = QContext::new(g, q);
    let cands = ctx.candidates();
    let reps = reduce_words(&ctx, &cands)?;
    Ok(reps
        .into_iter()
        .map(|p| HypCurve { model: HypModel::from_words(g, ctx.q, p), aut: ctx.aut_order(p) })
        .collect())
}

/// Complete list of genus-`g` hyperelliptic curves over F_2, ordered by
/// `(q, p)`.
pub fn run_hyp_census(g: u32) -> Result<Vec<HypCurve>> {
    let qs = q_representatives(g)?;
    let parts: Vec<Vec<HypCurve>> = qs
        .par_iter()
        .map(|q| hyp_census_for_q(g, q))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// The census representative isomorphic to `m`.
pub fn canonical_model(m: &HypModel) -> Result<HypModel> {
    let g = m.g;
    let w = g as usize + 1;
    let qs = q_representatives(g)?;
    for a in MoebiusMap::all(w) {
        let q1 = moebius_action(&a, &m.q)?;
        if qs.contains(&q1) {
            let p1 = moebius_action(&a.with_weight(2 * w), &m.p)?;
            let ctx = QContext::new(g, &q1);
            return Ok(HypModel::from_words(g, q1.to_u64(), ctx.class_min(p1.to_u64())));
        }
    }
    Err(Error::Invariant(format!("no q-representative for {}", m.q)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(exps: &[usize]) -> UniPolyF2 {
        UniPolyF2::from_exponents(exps)
    }

    #[test]
    fn smoothness_examples() {
        let m = HypModel::new(5, UniPolyF2::one(), up(&[11])).unwrap();
        assert!(is_smooth_hyp(&m).unwrap());
        let m = HypModel::new(5, UniPolyF2::x(), up(&[11])).unwrap();
        assert!(!is_smooth_hyp(&m).unwrap());
        let m = HypModel::new(5, UniPolyF2::one(), up(&[11, 10, 8, 7, 6, 5, 4, 3, 2, 1])).unwrap();
        assert!(is_smooth_hyp(&m).unwrap());
        assert!(HypModel::new(5, UniPolyF2::zero(), up(&[11])).is_err());
    }

    #[test]
    fn small_genus_q_counts() {
        // nonzero binary forms of degree 3 up to GL_2(F_2)
        let reps = q_representatives(2).unwrap();
        assert!(reps.iter().all(|q| q.degree().unwrap() <= 3));
        let total: usize = 15;
        let mut covered = 0;
        for q in &reps {
            let orbit: std::collections::HashSet<_> = MoebiusMap::all(3)
                .iter()
                .map(|a| moebius_action(a, q).unwrap())
                .collect();
            covered += orbit.len();
        }
        assert_eq!(covered, total);
    }

    #[test]
    fn automorphisms_contain_involution() {
        let m = HypModel::new(5, UniPolyF2::one(), up(&[11, 10, 8, 7, 6, 5, 4, 3, 2, 1])).unwrap();
        let auts = hyp_automorphisms(&m);
        assert!(auts.iter().any(|a| a.a.is_identity() && a.r == m.q));
        assert_eq!(auts.len() % 2, 0);
    }
}
