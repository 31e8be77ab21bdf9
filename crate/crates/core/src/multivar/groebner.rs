use super::monomial::{Monomial, MonomialOrder};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Polynomial as decreasing order keys.
type Keys = Vec<u64>;

/// Generators of an ideal together with the order they were computed in.
/// `complete` is false when the computation stopped early (degree bound or
/// stopping rule), in which case the basis is only a partial one.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Keys>,
    reduced: bool,
    complete: bool,
}

impl IdealBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.polys
            .iter()
            .map(|p| {
                MultiPoly::from_monomials(self.nvars, p.iter().map(|&k| self.order.monomial(k)).collect())
            })
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| self.order.monomial(p[0])).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let leads = self.leading_monomials();
        let refs: Vec<usize> = (0..self.polys.len()).collect();
        let r = full_reduce(to_keys(f, self.order), &self.polys, &leads, &refs, self.order);
        MultiPoly::from_monomials(self.nvars, r.iter().map(|&k| self.order.monomial(k)).collect())
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

fn to_keys(f: &MultiPoly, order: MonomialOrder) -> Keys {
    let mut k: Keys = f.terms().iter().map(|&m| order.key(m)).collect();
    k.sort_unstable_by(|a, b| b.cmp(a));
    k
}

/// Symmetric difference of `a` and `b·t`, both decreasing.
fn add_shifted(a: &[u64], b: &[u64], delta: u64) -> Keys {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let kb = b[j].wrapping_add(delta);
        if a[i] > kb {
            out.push(a[i]);
            i += 1;
        } else if kb > a[i] {
            out.push(kb);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|k| k.wrapping_add(delta)));
    out
}

fn find_divisor(m: Monomial, leads: &[Monomial], active: &[usize]) -> Option<usize> {
    active.iter().copied().find(|&i| leads[i].divides(&m))
}

/// Reduces until the leading term is irreducible.
fn top_reduce(
    mut p: Keys,
    polys: &[Keys],
    leads: &[Monomial],
    active: &[usize],
    order: MonomialOrder,
) -> Keys {
    while let Some(&k) = p.first() {
        let m = order.monomial(k);
        let Some(i) = find_divisor(m, leads, active) else { break };
        let t = leads[i].quotient_of(&m);
        p = add_shifted(&p, &polys[i], order.delta(t));
    }
    p
}

fn full_reduce(
    p: Keys,
    polys: &[Keys],
    leads: &[Monomial],
    active: &[usize],
    order: MonomialOrder,
) -> Keys {
    let mut rest = p;
    let mut out = Vec::new();
    loop {
        rest = top_reduce(rest, polys, leads, active, order);
        if rest.is_empty() {
            break;
        }
        out.push(rest[0]);
        rest.remove(0);
    }
    out
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Stopping rule evaluated after each new basis element.
pub type StopRule<'a> = &'a dyn Fn(&[Monomial]) -> bool;

struct Engine<'a> {
    order: MonomialOrder,
    polys: Vec<Keys>,
    leads: Vec<Monomial>,
    /// Indices currently in the basis (Gebauer–Möller may retire elements).
    active: Vec<usize>,
    pairs: Vec<Pair>,
    max_degree: Option<u32>,
    stop: Option<StopRule<'a>>,
    truncated: bool,
}

impl<'a> Engine<'a> {
    fn insert(&mut self, h: Keys) {
        let hi = self.polys.len();
        let lh = self.order.monomial(h[0]);
        self.polys.push(h);
        self.leads.push(lh);

        // Gebauer–Möller update
        let mut cand: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: hi, lcm: self.leads[g].lcm(&lh) })
            .collect();
        let mut chosen: Vec<Pair> = Vec::new();
        while let Some(p) = cand.pop() {
            let coprime = self.leads[p.i].is_coprime(&lh);
            if coprime
                || (!cand.iter().any(|q| q.lcm.divides(&p.lcm))
                    && !chosen.iter().any(|q| q.lcm.divides(&p.lcm)))
            {
                chosen.push(p);
            }
        }
        let kept: Vec<Pair> = chosen
            .into_iter()
            .filter(|p| !self.leads[p.i].is_coprime(&lh))
            .collect();
        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && leads[p.i].lcm(&lh) != p.lcm
                && leads[p.j].lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);
        self.active.retain(|&g| !lh.divides(&leads[g]));
        self.active.push(hi);
    }

    fn stop_now(&self) -> bool {
        match self.stop {
            Some(rule) => {
                let leads: Vec<Monomial> = self.active.iter().map(|&i| self.leads[i]).collect();
                rule(&leads)
            }
            None => false,
        }
    }

    /// Returns false if the stopping rule fired.
    fn run(&mut self) -> bool {
        loop {
            if self.pairs.is_empty() {
                return true;
            }
            // normal strategy: least lcm first
            let order = self.order;
            let (idx, _) = self
                .pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| order.key(p.lcm))
                .expect("nonempty");
            let pair = self.pairs.swap_remove(idx);
            if let Some(d) = self.max_degree {
                if pair.lcm.degree() > d {
                    self.truncated = true;
                    continue;
                }
            }
            let ti = self.leads[pair.i].quotient_of(&pair.lcm);
            let tj = self.leads[pair.j].quotient_of(&pair.lcm);
            let a: Keys = self.polys[pair.i].iter().map(|k| k.wrapping_add(order.delta(ti))).collect();
            let s = add_shifted(&a, &self.polys[pair.j], order.delta(tj));
            let r = top_reduce(s, &self.polys, &self.leads, &self.active, order);
            if !r.is_empty() {
                self.insert(r);
                if self.stop_now() {
                    return false;
                }
            }
        }
    }

    fn finish(self, nvars: usize, stopped: bool) -> IdealBasis {
        let order = self.order;
        let mut idx = self.active.clone();
        // minimal basis: keep one element per minimal leading monomial
        idx.sort_by_key(|&i| order.key(self.leads[i]));
        let mut minimal: Vec<usize> = Vec::new();
        for &i in &idx {
            if !minimal.iter().any(|&j| self.leads[j].divides(&self.leads[i])) {
                minimal.push(i);
            }
        }
        let complete = !stopped && !self.truncated;
        let mut polys = Vec::with_capacity(minimal.len());
        for &i in &minimal {
            let others: Vec<usize> = minimal.iter().copied().filter(|&j| j != i).collect();
            let lead = self.polys[i][0];
            let tail = full_reduce(self.polys[i][1..].to_vec(), &self.polys, &self.leads, &others, order);
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(lead);
            p.extend(tail);
            polys.push(p);
        }
        IdealBasis { nvars, order, polys, reduced: complete, complete }
    }
}

fn compute(
    gens: &[MultiPoly],
    order: MonomialOrder,
    max_degree: Option<u32>,
    stop: Option<StopRule<'_>>,
) -> IdealBasis {
    let nvars = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    let mut eng = Engine {
        order,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        max_degree,
        stop,
        truncated: false,
    };
    // inputs in increasing leading monomial order keep early reductions small
    let mut inputs: Vec<Keys> = gens.iter().map(|g| to_keys(g, order)).filter(|k| !k.is_empty()).collect();
    inputs.sort_by_key(|k| k[0]);
    for k in inputs {
        let r = top_reduce(k, &eng.polys, &eng.leads, &eng.active, order);
        if !r.is_empty() {
            eng.insert(r);
            if eng.stop_now() {
                return eng.finish(nvars, true);
            }
        }
    }
    let done = eng.run();
    eng.finish(nvars, !done)
}

/// Reduced Gröbner basis by Buchberger's algorithm (normal selection,
/// Gebauer–Möller pair criteria).
pub fn groebner(gens: &[MultiPoly], order: MonomialOrder) -> IdealBasis {
    compute(gens, order, None, None)
}

/// Buchberger run that skips S-pairs whose lcm exceeds `max_degree`. For
/// homogeneous input the result agrees with the full basis in degrees up to
/// the bound.
pub fn groebner_truncated(gens: &[MultiPoly], order: MonomialOrder, max_degree: u32) -> IdealBasis {
    compute(gens, order, Some(max_degree), None)
}

/// Decides whether a homogeneous ideal defines the empty projective set,
/// given a degree `d` such that emptiness implies `I_d` is everything.
/// Stops as soon as every variable has a pure power among leading terms.
pub fn projectively_empty_up_to(gens: &[MultiPoly], max_degree: u32) -> bool {
    let nvars = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    let all = (1u8 << nvars) - 1;
    let rule = move |leads: &[Monomial]| pure_power_mask(leads) == all;
    let basis = compute(gens, MonomialOrder::DegRevLex, Some(max_degree), Some(&rule));
    pure_power_mask(&basis.leading_monomials()) == all
}

fn pure_power_mask(leads: &[Monomial]) -> u8 {
    leads
        .iter()
        .filter_map(|m| m.pure_power_var())
        .fold(0u8, |acc, v| acc | 1 << v)
}

/// True iff some leading term is a pure power of each variable, i.e. the
/// affine cone is only the origin.
pub fn projective_is_empty(basis: &IdealBasis) -> Result<bool> {
    if basis.polys().iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    if basis.polys.iter().any(|p| p[0] == basis.order.key(Monomial::ONE)) {
        return Ok(true);
    }
    let all = ((1u16 << basis.nvars) - 1) as u8;
    Ok(pure_power_mask(&basis.leading_monomials()) == all)
}

/// Krull dimension of `F_2[x]/I`: the largest set of variables carrying no
/// leading monomial.
pub fn cone_dimension(basis: &IdealBasis) -> usize {
    let supports: Vec<u8> = basis.leading_monomials().iter().map(|m| m.support()).collect();
    let n = basis.nvars;
    (0u16..1 << n)
        .map(|s| s as u8)
        .filter(|&s| supports.iter().all(|&t| t & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(v: &[&str], n: usize) -> Vec<MultiPoly> {
        v.iter().map(|s| MultiPoly::parse(s, n).unwrap()).collect()
    }

    fn strings(b: &IdealBasis) -> Vec<String> {
        let mut v: Vec<String> = b.polys().iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn small_examples() {
        let g = groebner(&polys(&["X+Y", "Y"], 2), MonomialOrder::DegRevLex);
        assert_eq!(strings(&g), vec!["X", "Y"]);
        let g = groebner(&polys(&["X"], 2), MonomialOrder::DegRevLex);
        assert_eq!(strings(&g), vec!["X"]);
        let g = groebner(&polys(&["XY", "X2"], 2), MonomialOrder::DegRevLex);
        assert_eq!(strings(&g), vec!["X2", "XY"]);
    }

    #[test]
    fn emptiness_and_dimension() {
        let all = groebner(&polys(&["X", "Y", "Z", "T", "U"], 5), MonomialOrder::DegRevLex);
        assert!(projective_is_empty(&all).unwrap());
        assert_eq!(cone_dimension(&all), 0);
        let hyper = groebner(&polys(&["X"], 5), MonomialOrder::DegRevLex);
        assert!(!projective_is_empty(&hyper).unwrap());
        assert_eq!(cone_dimension(&hyper), 4);
        let zero = groebner(&[MultiPoly::zero(5)], MonomialOrder::DegRevLex);
        assert_eq!(cone_dimension(&zero), 5);
        let affine = groebner(&polys(&["X+1"], 2), MonomialOrder::DegRevLex);
        assert!(projective_is_empty(&affine).is_err());
    }

    #[test]
    fn lex_elimination() {
        // x^2 + y, y^2 + y: lex basis eliminates x into a univariate in y
        let g = groebner(&polys(&["X2+Y", "Y2+Y"], 2), MonomialOrder::Lex);
        assert!(g.polys().iter().any(|p| p.terms().iter().all(|m| m.exp(0) == 0)));
        assert!(g.contains(&MultiPoly::parse("X4+Y", 2).unwrap()));
    }

    #[test]
    fn twisted_cubic() {
        let gens = polys(&["XZ+Y2", "YT+Z2", "XT+YZ"], 4);
        let g = groebner(&gens, MonomialOrder::DegRevLex);
        assert_eq!(cone_dimension(&g), 2);
        for f in &gens {
            assert!(g.contains(f));
        }
    }
}
