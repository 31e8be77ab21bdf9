use std::fmt;

use super::poly::UniPolyF2;
use crate::error::{Error, Result};

/// An element of GL_2(F_2) acting on polynomials of formal degree `n` by
/// `f ↦ (cx + d)^n f((ax + b)/(cx + d))`.
///
/// This is a right action: applying `A` and then `B` equals applying the
/// product `A·B`, i.e. `ψ(B)∘ψ(A) = ψ(A·B)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoebiusMap {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub n: usize,
}

impl MoebiusMap {
    pub fn new(a: bool, b: bool, c: bool, d: bool, n: usize) -> Option<Self> {
        ((a & d) ^ (b & c)).then_some(MoebiusMap { a, b, c, d, n })
    }

    pub fn identity(n: usize) -> Self {
        MoebiusMap { a: true, b: false, c: false, d: true, n }
    }

    /// `x ↦ x + 1`.
    pub fn translation(n: usize) -> Self {
        MoebiusMap { a: true, b: true, c: false, d: true, n }
    }

    /// `x ↦ 1/x`.
    pub fn inversion(n: usize) -> Self {
        MoebiusMap { a: false, b: true, c: true, d: false, n }
    }

    /// The six elements of PGL_2(F_2) = GL_2(F_2), in a fixed order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(6);
        for bits in 0u8..16 {
            let f = |i: u8| (bits >> i) & 1 == 1;
            if let Some(m) = Self::new(f(3), f(2), f(1), f(0), n) {
                out.push(m);
            }
        }
        out
    }

    /// Matrix product `self · other` (weights must agree).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        MoebiusMap {
            a: (self.a & other.a) ^ (self.b & other.c),
            b: (self.a & other.b) ^ (self.b & other.d),
            c: (self.c & other.a) ^ (self.d & other.c),
            d: (self.c & other.b) ^ (self.d & other.d),
            n: self.n,
        }
    }

    pub fn inverse(&self) -> Self {
        // det = 1 and -1 = 1
        MoebiusMap { a: self.d, b: self.b, c: self.c, d: self.a, n: self.n }
    }

    pub fn with_weight(&self, n: usize) -> Self {
        MoebiusMap { n, ..*self }
    }

    pub fn is_identity(&self) -> bool {
        self.a && !self.b && !self.c && self.d
    }

    /// Images of `1, x, …, x^n` packed as bit words (requires `n < 64`).
    pub fn monomial_images(&self) -> Vec<u64> {
        assert!(self.n < 64);
        let num = lin(self.a, self.b);
        let den = lin(self.c, self.d);
        (0..=self.n)
            .map(|i| (&num.pow(i as u64) * &den.pow((self.n - i) as u64)).to_u64())
            .collect()
    }
}

fn lin(hi: bool, lo: bool) -> UniPolyF2 {
    UniPolyF2::from_u64(((hi as u64) << 1) | lo as u64)
}

impl fmt::Debug for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {}; {} {}]_{}",
            self.a as u8, self.b as u8, self.c as u8, self.d as u8, self.n
        )
    }
}

/// `ψ_n(A)(f)`.
pub fn moebius_action(m: &MoebiusMap, f: &UniPolyF2) -> Result<UniPolyF2> {
    if let Some(deg) = f.degree() {
        if deg > m.n {
            return Err(Error::WeightExceeded { degree: deg, weight: m.n });
        }
    }
    let num = lin(m.a, m.b);
    let den = lin(m.c, m.d);
    let mut out = UniPolyF2::zero();
    for i in f.exponents() {
        out += &(&num.pow(i as u64) * &den.pow((m.n - i) as u64));
    }
    Ok(out)
}

/// Applies a table from [`MoebiusMap::monomial_images`] to a word.
pub fn apply_images(images: &[u64], mut word: u64) -> u64 {
    let mut out = 0;
    while word != 0 {
        let i = word.trailing_zeros() as usize;
        out ^= images[i];
        word &= word - 1;
    }
    out
}

/// All `A` in PGL_2(F_2) with `ψ_n(A)(f) = f`.
pub fn pgl2_stabilizer(f: &UniPolyF2, n: usize) -> Result<Vec<MoebiusMap>> {
    let mut out = Vec::new();
    for m in MoebiusMap::all(n) {
        if moebius_action(&m, f)? == *f {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = UniPolyF2::from_exponents(&[3, 1, 0]);
        let t = MoebiusMap::translation(6);
        assert_eq!(moebius_action(&t, &f).unwrap(), UniPolyF2::from_exponents(&[3, 2, 0]));
        let inv = MoebiusMap::inversion(6);
        assert_eq!(moebius_action(&inv, &UniPolyF2::x()).unwrap(), UniPolyF2::monomial(5));
        assert_eq!(moebius_action(&MoebiusMap::identity(6), &f).unwrap(), f);
        assert!(moebius_action(&inv, &UniPolyF2::monomial(7)).is_err());
    }

    #[test]
    fn stabilizers() {
        let st = pgl2_stabilizer(&UniPolyF2::one(), 6).unwrap();
        assert_eq!(st.len(), 2);
        assert!(st.iter().all(|m| !m.c));
        let st = pgl2_stabilizer(&UniPolyF2::from_u64(0b110), 6).unwrap();
        assert!(st.contains(&MoebiusMap::translation(6)));
        assert!(st.iter().any(|m| m.is_identity()));
    }

    #[test]
    fn six_elements() {
        assert_eq!(MoebiusMap::all(3).len(), 6);
    }

    #[test]
    fn table_matches_action() {
        for m in MoebiusMap::all(12) {
            let imgs = m.monomial_images();
            for w in [0u64, 1, 0x1fff, 0x0a5b, 0x1001] {
                let direct = moebius_action(&m, &UniPolyF2::from_u64(w)).unwrap();
                assert_eq!(apply_images(&imgs, w), direct.to_u64());
            }
        }
    }
}
