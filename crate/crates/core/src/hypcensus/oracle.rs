//! Brute-force classification used to cross-check the census: every smooth
//! model `(q, p)` is merged with its images under generators of the full
//! isomorphism group.

use super::{check_genus, smooth_words, HypModel};
use crate::error::Result;
use crate::gf2algebra::{apply_images, MoebiusMap, UniPolyF2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleClass {
    /// Lexicographically least `(q, p)` in the class.
    pub model: HypModel,
    pub size: usize,
    pub aut: usize,
}

struct Dsu(Vec<u32>);

impl Dsu {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        // keep the smaller index as root so roots are class minima
        if a < b {
            self.0[b as usize] = a;
        } else if b < a {
            self.0[a as usize] = b;
        }
    }
}

/// All isomorphism classes of smooth genus-`g` models, by class minimum.
pub fn brute_force_classes(g: u32) -> Result<Vec<OracleClass>> {
    check_genus(g)?;
    let gu = g as usize;
    let pbits = 2 * gu + 3;
    let qbits = gu + 2;
    let small: Vec<(MoebiusMap, Vec<u64>, Vec<u64>)> = MoebiusMap::all(gu + 1)
        .into_iter()
        .map(|a| {
            let sq = a.monomial_images();
            let sp = a.with_weight(2 * gu + 2).monomial_images();
            (a, sq, sp)
        })
        .collect();
    let shift = |r: u64, q: u64| {
        let rp = UniPolyF2::from_u64(r);
        (&rp.square() + &(&rp * &UniPolyF2::from_u64(q))).to_u64()
    };
    let valid = |q: u64, p: u64| {
        if q == 0 {
            return false;
        }
        let dq = 63 - q.leading_zeros() as usize;
        let dp = if p == 0 { 0 } else { 63 - p.leading_zeros() as usize };
        (2 * dq).max(dp) > 2 * gu && smooth_words(g, q, p)
    };
    let idx = |q: u64, p: u64| ((q << pbits) | p) as u32;
    let total = 1usize << (qbits + pbits);
    let mut ok = vec![false; total];
    for q in 1..1u64 << qbits {
        for p in 0..1u64 << pbits {
            ok[idx(q, p) as usize] = valid(q, p);
        }
    }
    let mut dsu = Dsu((0..total as u32).collect());
    // PGL_2 is generated by x ↦ x+1 and x ↦ 1/x; shifts by the basis r = x^i
    let gens: Vec<&(MoebiusMap, Vec<u64>, Vec<u64>)> = small
        .iter()
        .filter(|(a, _, _)| {
            *a == MoebiusMap::translation(gu + 1) || *a == MoebiusMap::inversion(gu + 1)
        })
        .collect();
    for q in 1..1u64 << qbits {
        let shifts: Vec<u64> = (0..qbits).map(|i| shift(1 << i, q)).collect();
        for p in 0..1u64 << pbits {
            let i = idx(q, p);
            if !ok[i as usize] {
                continue;
            }
            for (_, sq, sp) in &gens {
                dsu.union(i, idx(apply_images(sq, q), apply_images(sp, p)));
            }
            for &s in &shifts {
                dsu.union(i, idx(q, p ^ s));
            }
        }
    }
    let mut sizes = vec![0usize; total];
    for i in 0..total as u32 {
        if ok[i as usize] {
            let r = dsu.find(i);
            sizes[r as usize] += 1;
        }
    }
    let mut out = Vec::new();
    for (i, &size) in sizes.iter().enumerate() {
        if size == 0 {
            continue;
        }
        let (q, p) = ((i >> pbits) as u64, (i & ((1 << pbits) - 1)) as u64);
        let mut aut = 0;
        for (_, sq, sp) in &small {
            if apply_images(sq, q) != q {
                continue;
            }
            let diff = apply_images(sp, p) ^ p;
            aut += (0..1u64 << qbits).filter(|&r| shift(r, q) == diff).count();
        }
        out.push(OracleClass { model: HypModel::from_words(g, q, p), size, aut });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_stabilizer_holds_in_genus_two() {
        let classes = brute_force_classes(2).unwrap();
        for c in &classes {
            assert_eq!(c.size * c.aut, 6 << 4, "{}", c.model);
        }
    }
}
