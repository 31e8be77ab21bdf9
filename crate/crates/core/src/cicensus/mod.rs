//! Non-hyperelliptic non-trigonal curves as intersections of three quadrics
//! in P^4, up to projective equivalence.

pub mod smooth;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grpact::{act, quadric_orbits, LinearRep, MatGF2, Quadric15};

pub use smooth::{is_smooth_ci, CERTIFICATE_DEGREE};

/// Number of geometrically irreducible quadric classes that can carry a
/// smooth curve.
pub const CI_CLASSES: usize = 4;

/// Three quadrics `(P, Q, R)` cutting out a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricTriple {
    pub p: Quadric15,
    pub q: Quadric15,
    pub r: Quadric15,
}

/// The net `⟨P, Q, R⟩` as its sorted nonzero elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NetKey(pub [u16; 7]);

fn span_key(a: u16, b: u16, c: u16) -> Option<NetKey> {
    let mut v = [a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c];
    v.sort_unstable();
    // rank 3 iff all seven combinations are nonzero and distinct
    if v[0] == 0 || v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(NetKey(v))
}

impl QuadricTriple {
    pub fn new(p: Quadric15, q: Quadric15, r: Quadric15) -> Self {
        QuadricTriple { p, q, r }
    }

    pub fn quadrics(&self) -> [Quadric15; 3] {
        [self.p, self.q, self.r]
    }

    /// `None` if the three quadrics are linearly dependent.
    pub fn net_key(&self) -> Option<NetKey> {
        span_key(self.p.0, self.q.0, self.r.0)
    }

    pub fn act(&self, rep: &LinearRep) -> QuadricTriple {
        let f = |q: Quadric15| Quadric15(act(rep, q.0 as u32) as u16);
        QuadricTriple { p: f(self.p), q: f(self.q), r: f(self.r) }
    }

    /// Largest quadric class (0-based) met by the nonzero span elements.
    pub fn top_class(&self) -> Option<usize> {
        let classes = quadric_orbits();
        let key = self.net_key()?;
        key.0.iter().map(|&w| classes.class_of(Quadric15(w)).expect("nonzero")).max()
    }
}

impl fmt::Display for QuadricTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ; {:?} ; {:?}", self.p, self.q, self.r)
    }
}

/// A census member: `class` is the 0-based class of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiCurve {
    pub triple: QuadricTriple,
    pub class: usize,
    pub aut: usize,
}

/// Candidate triples per quadric class of `P`, in generation order.
#[derive(Clone, Debug, Default)]
pub struct Sigma {
    pub lists: Vec<Vec<QuadricTriple>>,
}

impl Sigma {
    pub fn len(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct ClassData {
    p: u16,
    reps: Vec<LinearRep>,
    /// Words whose class is at most this one.
    potential: Vec<bool>,
}

fn class_data(i: usize) -> &'static ClassData {
    static D: [OnceLock<ClassData>; CI_CLASSES] = [const { OnceLock::new() }; CI_CLASSES];
    D[i].get_or_init(|| build_class_data(i))
}

fn build_class_data(i: usize) -> ClassData {
    let classes = quadric_orbits();
    let p = classes.representative(i).0;
    let reps = classes.stabilizer(i).iter().map(LinearRep::quadric).collect();
    let potential = (0..1u32 << 15)
        .map(|w| w != 0 && classes.class_of(Quadric15(w as u16)).is_some_and(|c| c <= i))
        .collect();
    ClassData { p, reps, potential }
}

/// Second quadrics for `P`: one per `Stab(P)`-orbit of `{Q, Q + P}`.
fn second_quadrics(d: &ClassData) -> Vec<u16> {
    let mut removed = vec![false; 1 << 15];
    let mut out = Vec::new();
    for w in 1..1u32 << 15 {
        if !d.potential[w as usize] || removed[w as usize] {
            continue;
        }
        out.push(w as u16);
        for r in &d.reps {
            let v = act(r, w) as usize;
            removed[v] = true;
            removed[v ^ d.p as usize] = true;
        }
    }
    out
}

/// Third quadrics for `(P, Q)` modulo `Stab(P) ∩ Stab(Q)` and adding
/// multiples of `P` and `Q`, filtered by rank, the net condition and
/// smoothness.
fn third_quadrics(d: &ClassData, q: u16) -> Vec<QuadricTriple> {
    let p = d.p;
    let common: Vec<&LinearRep> = d.reps.iter().filter(|r| act(r, q as u32) == q as u32).collect();
    let mut removed = vec![false; 1 << 15];
    let mut cands = Vec::new();
    for w in 1..1u32 << 15 {
        if !d.potential[w as usize] || removed[w as usize] {
            continue;
        }
        cands.push(w as u16);
        for r in &common {
            let v = act(r, w) as usize;
            for s in [0, p, q, p ^ q] {
                removed[v ^ s as usize] = true;
            }
        }
    }
    cands
        .into_iter()
        .filter_map(|r| {
            let key = span_key(p, q, r)?;
            if !key.0.iter().all(|&w| d.potential[w as usize]) {
                return None;
            }
            let t = QuadricTriple::new(Quadric15(p), Quadric15(q), Quadric15(r));
            is_smooth_ci(t.quadrics()).then_some(t)
        })
        .collect()
}

/// Units of work for building the candidate set: `(class, Q)` in order.
pub fn sigma_units() -> Vec<(usize, Quadric15)> {
    (0..CI_CLASSES)
        .flat_map(|i| second_quadrics(class_data(i)).into_iter().map(move |q| (i, Quadric15(q))))
        .collect()
}

/// Candidate triples `(P_class, Q, R)` for one unit.
pub fn sigma_unit(class: usize, q: Quadric15) -> Vec<QuadricTriple> {
    third_quadrics(class_data(class), q.0)
}

/// Candidate set: for each class representative `P`, triples `(P, Q, R)`
/// whose net avoids higher classes and cuts out a smooth curve.
pub fn build_sigma() -> Result<Sigma> {
    let units = sigma_units();
    let parts: Vec<Vec<QuadricTriple>> = units.par_iter().map(|&(i, q)| sigma_unit(i, q)).collect();
    Ok(sigma_from_units(&units, parts))
}

/// Assembles unit results (in unit order) into per-class lists.
pub fn sigma_from_units(units: &[(usize, Quadric15)], parts: Vec<Vec<QuadricTriple>>) -> Sigma {
    let mut lists = vec![Vec::new(); CI_CLASSES];
    for (&(i, _), part) in units.iter().zip(parts) {
        lists[i].extend(part);
    }
    Sigma { lists }
}

/// Every `M` with `act(M, S) = P_i` for some `S` in the net of `t`, each with
/// the image net.
fn images_into_class(t: &QuadricTriple, class: usize, stab_reps: &[LinearRep]) -> Result<Vec<(MatGF2, NetKey)>> {
    let classes = quadric_orbits();
    let key = t.net_key().ok_or_else(|| Error::Invariant(format!("dependent triple {t}")))?;
    let target = classes.representative(class).0 as u32;
    let stab = classes.stabilizer(class);
    let mut out = Vec::new();
    for &s in &key.0 {
        if classes.class_of(Quadric15(s)) != Some(class) {
            continue;
        }
        let m0 = classes
            .table
            .transporter(s as u32, target)
            .ok_or_else(|| Error::Invariant(format!("no transporter for {s:04x}")))?;
        let moved = t.act(&LinearRep::quadric(&m0));
        for (n, rep) in stab.iter().zip(stab_reps) {
            let img = moved.act(rep);
            let k = img.net_key().expect("invertible maps keep rank");
            out.push((m0.mul(n), k));
        }
    }
    Ok(out)
}

fn stab_reps(class: usize) -> Vec<LinearRep> {
    quadric_orbits().stabilizer(class).iter().map(LinearRep::quadric).collect()
}

/// One triple per isomorphism class, in candidate order, with automorphism
/// group orders.
pub fn dedup_sigma(sigma: &Sigma) -> Result<Vec<CiCurve>> {
    let mut out = Vec::new();
    for (class, list) in sigma.lists.iter().enumerate() {
        let reps = stab_reps(class);
        let mut by_key: HashMap<NetKey, Vec<usize>> = HashMap::new();
        for (i, t) in list.iter().enumerate() {
            let k = t.net_key().ok_or_else(|| Error::Invariant(format!("dependent triple {t}")))?;
            by_key.entry(k).or_default().push(i);
        }
        let mut alive = vec![true; list.len()];
        for (i, t) in list.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let own = t.net_key().expect("checked above");
            let imgs = images_into_class(t, class, &reps)?;
            let mut aut = 0;
            for (_, k) in &imgs {
                if *k == own {
                    aut += 1;
                }
                if let Some(idx) = by_key.get(k) {
                    for &j in idx {
                        alive[j] = false;
                    }
                }
            }
            if aut == 0 {
                return Err(Error::Invariant(format!("identity missing from automorphisms of {t}")));
            }
            out.push(CiCurve { triple: *t, class, aut });
        }
    }
    Ok(out)
}

/// All projective automorphisms of the curve cut out by `t`.
pub fn ci_automorphisms(t: &QuadricTriple) -> Result<Vec<MatGF2>> {
    let class = t
        .top_class()
        .filter(|&c| c < CI_CLASSES)
        .ok_or_else(|| Error::Invariant(format!("net of {t} meets a reducible quadric")))?;
    let own = t.net_key().expect("top_class checked rank");
    Ok(images_into_class(t, class, &stab_reps(class))?
        .into_iter()
        .filter(|(_, k)| *k == own)
        .map(|(m, _)| m)
        .collect())
}

/// Index of the census member isomorphic to `t`, given the census nets.
pub fn find_isomorphic(t: &QuadricTriple, census: &HashMap<NetKey, usize>) -> Result<Option<usize>> {
    let Some(class) = t.top_class().filter(|&c| c < CI_CLASSES) else { return Ok(None) };
    Ok(images_into_class(t, class, &stab_reps(class))?
        .into_iter()
        .find_map(|(_, k)| census.get(&k).copied()))
}

/// Complete list of complete-intersection genus-5 curves over F_2.
pub fn run_ci_census() -> Result<Vec<CiCurve>> {
    dedup_sigma(&build_sigma()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quadric15 {
        Quadric15::parse(s).unwrap()
    }

    #[test]
    fn net_key_detects_dependence() {
        let (a, b) = (q("XY"), q("Z2"));
        assert!(QuadricTriple::new(a, b, Quadric15(a.0 ^ b.0)).net_key().is_none());
        let t = QuadricTriple::new(a, b, q("TU"));
        let u = QuadricTriple::new(Quadric15(a.0 ^ b.0), b, Quadric15(q("TU").0 ^ a.0));
        assert_eq!(t.net_key(), u.net_key());
    }

    #[test]
    fn identity_is_an_automorphism() {
        let t = QuadricTriple::new(
            q("Y2+XZ+YZ"),
            q("XY+XZ+YT+ZT+XU+ZU+U2"),
            q("XY+XZ+YZ+Z2+XT+ZT+T2+YU+ZU"),
        );
        let auts = ci_automorphisms(&t).unwrap();
        assert!(auts.iter().any(|m| m.is_identity()));
    }
}
