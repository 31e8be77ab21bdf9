use std::collections::VecDeque;
use std::sync::OnceLock;

use super::forms::{act, linear_products, FormSpace, LinearRep, Quadric15};
use super::matrix::{enumerate_gl, generators, gl_order, MatGF2};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Partition of the nonzero words of a form space into GL_n(F_2)-orbits,
/// with a breadth-first spanning tree per orbit for transporters.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    space: FormSpace,
    orbit_of: Vec<u32>,
    parent: Vec<u32>,
    parent_gen: Vec<u8>,
    reps: Vec<u32>,
    sizes: Vec<usize>,
    gens: Vec<MatGF2>,
}

impl OrbitTable {
    /// Orbits seeded from `seeds` first, then from the remaining words in
    /// increasing order; each orbit's representative is its seed.
    pub fn build(space: &FormSpace, seeds: &[u32]) -> Self {
        let n = space.nvars();
        let gens = generators(n);
        let reps_g: Vec<LinearRep> = gens.iter().map(|g| LinearRep::of(space, g)).collect();
        let size = 1usize << space.dim();
        let mut orbit_of = vec![NONE; size];
        let mut parent = vec![NONE; size];
        let mut parent_gen = vec![0u8; size];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        let order = seeds.iter().copied().chain(1..size as u32);
        for seed in order {
            if orbit_of[seed as usize] != NONE {
                continue;
            }
            let id = reps.len() as u32;
            orbit_of[seed as usize] = id;
            queue.push_back(seed);
            let mut count = 0;
            while let Some(w) = queue.pop_front() {
                count += 1;
                for (gi, r) in reps_g.iter().enumerate() {
                    let v = act(r, w);
                    if orbit_of[v as usize] == NONE {
                        orbit_of[v as usize] = id;
                        parent[v as usize] = w;
                        parent_gen[v as usize] = gi as u8;
                        queue.push_back(v);
                    }
                }
            }
            reps.push(seed);
            sizes.push(count);
        }
        OrbitTable { space: space.clone(), orbit_of, parent, parent_gen, reps, sizes, gens }
    }

    pub fn space(&self) -> &FormSpace {
        &self.space
    }

    pub fn num_orbits(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn orbit_of(&self, word: u32) -> Option<usize> {
        match self.orbit_of.get(word as usize) {
            Some(&id) if id != NONE => Some(id as usize),
            _ => None,
        }
    }

    pub fn representative(&self, word: u32) -> Option<u32> {
        self.orbit_of(word).map(|id| self.reps[id])
    }

    /// All words in orbit `id`, increasing.
    pub fn members(&self, id: usize) -> Vec<u32> {
        (1..self.orbit_of.len() as u32)
            .filter(|&w| self.orbit_of[w as usize] == id as u32)
            .collect()
    }

    /// `T` with `act(T, rep) = word`, read off the spanning tree.
    pub fn from_representative(&self, word: u32) -> Option<MatGF2> {
        self.orbit_of(word)?;
        let mut path = Vec::new();
        let mut w = word;
        while self.parent[w as usize] != NONE {
            path.push(self.parent_gen[w as usize]);
            w = self.parent[w as usize];
        }
        let mut t = MatGF2::identity(self.space.nvars());
        for &g in path.iter().rev() {
            t = t.mul(&self.gens[g as usize]);
        }
        Some(t)
    }

    /// A matrix `M₀` with `act(M₀, s) = p`, or `None` for different orbits.
    pub fn transporter(&self, s: u32, p: u32) -> Option<MatGF2> {
        if self.orbit_of(s)? != self.orbit_of(p)? {
            return None;
        }
        let ts = self.from_representative(s)?;
        let tp = self.from_representative(p)?;
        let m = ts.inverse().mul(&tp);
        assert_eq!(
            act(&LinearRep::of(&self.space, &m), s),
            p,
            "transporter failed its defining check"
        );
        Some(m)
    }

    /// Every `M` with `act(M, s) = p`: the coset `M₀·Stab(p)`.
    pub fn all_transporters(&self, s: u32, p: u32, stab_p: &[MatGF2]) -> Vec<MatGF2> {
        match self.transporter(s, p) {
            Some(m0) => stab_p.iter().map(|n| m0.mul(n)).collect(),
            None => Vec::new(),
        }
    }
}

/// Stabilizers of several words, from one pass over GL_n(F_2).
pub fn stabilizers(space: &FormSpace, words: &[u32]) -> Result<Vec<Vec<MatGF2>>> {
    let n = space.nvars();
    let mut out = vec![Vec::new(); words.len()];
    let quadric = n == 5 && space.degree() == 2;
    let table = linear_products();
    for m in enumerate_gl(n)? {
        if quadric {
            let rows = m.rows();
            for (k, &w) in words.iter().enumerate() {
                if quadric_image(table, rows, w) == w {
                    out[k].push(m);
                }
            }
        } else {
            let rep = LinearRep::of(space, &m);
            for (k, &w) in words.iter().enumerate() {
                if act(&rep, w) == w {
                    out[k].push(m);
                }
            }
        }
    }
    Ok(out)
}

pub fn stabilizer(space: &FormSpace, word: u32) -> Result<Vec<MatGF2>> {
    Ok(stabilizers(space, &[word])?.pop().expect("one word"))
}

#[inline]
fn quadric_image(table: &[[u16; 32]; 32], rows: &[u8], mut w: u32) -> u32 {
    let mut out = 0u32;
    while w != 0 {
        let b = w.trailing_zeros() as usize;
        let (i, j) = QUADRIC_PAIRS[b];
        out ^= table[rows[i] as usize][rows[j] as usize] as u32;
        w &= w - 1;
    }
    out
}

/// Variable pair of each quadric coordinate bit.
const QUADRIC_PAIRS: [(usize, usize); 15] = {
    let mut t = [(0, 0); 15];
    let mut bit = 15;
    let mut i = 0;
    while i < 5 {
        let mut j = i;
        while j < 5 {
            bit -= 1;
            t[bit] = (i, j);
            j += 1;
        }
        i += 1;
    }
    t
};

/// The seven orbit representatives of nonzero quadrics in five variables,
/// in the fixed labelling P1..P7: four geometrically irreducible classes
/// followed by the square of a line, two rational lines, and a conjugate
/// pair of lines.
pub const QUADRIC_CLASS_FORMS: [&str; 7] = [
    "X2+XZ+YZ+XT+ZT+TU",
    "XY+Y2+Z2+YT+ZT",
    "Y2+YZ+Z2+XT+ZT",
    "Y2+XZ+YZ",
    "Y2",
    "X2+XY",
    "X2+XY+XT+Y2+YZ+YT+Z2+ZT+T2",
];

/// Quadric orbit data with stabilizers of the seven representatives.
pub struct QuadricClasses {
    pub table: OrbitTable,
    pub stabilizers: Vec<Vec<MatGF2>>,
}

impl QuadricClasses {
    pub fn class_of(&self, q: Quadric15) -> Option<usize> {
        self.table.orbit_of(q.0 as u32)
    }

    pub fn representative(&self, class: usize) -> Quadric15 {
        Quadric15(self.table.representatives()[class] as u16)
    }

    pub fn stabilizer(&self, class: usize) -> &[MatGF2] {
        &self.stabilizers[class]
    }
}

/// Orbit table of the 32767 nonzero quadrics, labelled P1..P7 as in
/// [`QUADRIC_CLASS_FORMS`]. Built once.
pub fn quadric_orbits() -> &'static QuadricClasses {
    static C: OnceLock<QuadricClasses> = OnceLock::new();
    C.get_or_init(|| build_quadric_classes().expect("quadric classes"))
}

fn build_quadric_classes() -> Result<QuadricClasses> {
    let space = FormSpace::quadrics();
    let seeds: Vec<u32> = QUADRIC_CLASS_FORMS
        .iter()
        .map(|s| Quadric15::parse(s).map(|q| q.0 as u32))
        .collect::<Result<_>>()?;
    let table = OrbitTable::build(space, &seeds);
    if table.num_orbits() != 7 {
        return Err(Error::Invariant(format!("{} quadric orbits, expected 7", table.num_orbits())));
    }
    let stabilizers = stabilizers(space, &seeds)?;
    for (k, st) in stabilizers.iter().enumerate() {
        if (st.len() * table.sizes()[k]) as u64 != gl_order(5) {
            return Err(Error::Invariant(format!("orbit-stabilizer fails for class {}", k + 1)));
        }
    }
    Ok(QuadricClasses { table, stabilizers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_sextic_stabilizer_matches_moebius() {
        let space = FormSpace::new(2, 6);
        // the constant polynomial 1 is the form Y^6, bit 0
        let st = stabilizer(&space, 1).unwrap();
        assert_eq!(st.len(), 2);
    }

    #[test]
    fn ternary_quintic_orbits_partition() {
        let t = OrbitTable::build(FormSpace::quintics(), &[]);
        assert_eq!(t.sizes().iter().sum::<usize>(), (1 << 21) - 1);
        for (id, &r) in t.representatives().iter().enumerate().step_by(997) {
            let st = stabilizer(FormSpace::quintics(), r).unwrap();
            assert_eq!(st.len() * t.sizes()[id], 168);
            assert_eq!(t.members(id)[0], r, "seedless representatives are minimal");
        }
    }
}
