use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::matrix::MatGF2;
use crate::error::{Error, Result};
use crate::multivar::{Monomial, MultiPoly};

/// Homogeneous forms of a fixed degree in `nvars` variables, coordinates
/// indexed by monomials in decreasing lexicographic order. The first
/// monomial sits in the most significant bit of a coefficient word.
#[derive(Clone, Debug)]
pub struct FormSpace {
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
}

impl FormSpace {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut exps = vec![0u8; nvars];
        fill(&mut exps, 0, degree, &mut monomials);
        assert!(monomials.len() <= 32, "form space too large for a word");
        FormSpace { nvars, degree, monomials }
    }

    /// Quadratic forms in `X, Y, Z, T, U` (15 coordinates).
    pub fn quadrics() -> &'static FormSpace {
        static S: OnceLock<FormSpace> = OnceLock::new();
        S.get_or_init(|| FormSpace::new(5, 2))
    }

    /// Ternary quintics (21 coordinates).
    pub fn quintics() -> &'static FormSpace {
        static S: OnceLock<FormSpace> = OnceLock::new();
        S.get_or_init(|| FormSpace::new(3, 5))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Bit position of a monomial.
    pub fn bit_of(&self, m: Monomial) -> Option<usize> {
        self.monomials.iter().position(|&x| x == m).map(|p| self.dim() - 1 - p)
    }

    pub fn monomial_at_bit(&self, bit: usize) -> Monomial {
        self.monomials[self.dim() - 1 - bit]
    }

    pub fn to_poly(&self, word: u32) -> MultiPoly {
        let monos = (0..self.dim())
            .filter(|&b| (word >> b) & 1 == 1)
            .map(|b| self.monomial_at_bit(b))
            .collect();
        MultiPoly::from_monomials(self.nvars, monos)
    }

    pub fn from_poly(&self, f: &MultiPoly) -> Result<u32> {
        let mut w = 0u32;
        for &m in f.terms() {
            let b = self.bit_of(m).ok_or_else(|| {
                Error::Parse(format!("{f} is not a form of degree {} in {} variables", self.degree, self.nvars))
            })?;
            w |= 1 << b;
        }
        Ok(w)
    }
}

fn fill(exps: &mut [u8], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i == exps.len() - 1 {
        exps[i] = left as u8;
        out.push(Monomial::from_exps(exps));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u8;
        fill(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}

/// The matrix of `f ↦ f(M·x)` on a form space, stored as the images of the
/// coordinate bits. Composition follows the substitution: applying `M`
/// then `N` is the representation of `M·N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    images: Vec<u32>,
}

impl LinearRep {
    pub fn of(space: &FormSpace, m: &MatGF2) -> Self {
        if space.nvars == 5 && space.degree == 2 {
            return Self::quadric(m);
        }
        let images = (0..space.dim())
            .map(|b| {
                let f = MultiPoly::from_monomials(space.nvars, vec![space.monomial_at_bit(b)]);
                let g = f.matrix_substitute(m).expect("dimension checked by space");
                space.from_poly(&g).expect("substitution preserves degree")
            })
            .collect();
        LinearRep { images }
    }

    /// Fast path for quadrics in five variables via a product table of
    /// linear forms.
    pub fn quadric(m: &MatGF2) -> Self {
        let table = linear_products();
        let mut images = vec![0u32; 15];
        let mut bit = 15;
        for i in 0..5 {
            for j in i..5 {
                bit -= 1;
                images[bit] = table[m.row(i) as usize][m.row(j) as usize] as u32;
            }
        }
        LinearRep { images }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn identity(space: &FormSpace) -> Self {
        LinearRep { images: (0..space.dim()).map(|b| 1 << b).collect() }
    }

    /// The representation of applying `self` first, then `next`.
    pub fn then(&self, next: &LinearRep) -> LinearRep {
        LinearRep { images: self.images.iter().map(|&w| act(next, w)).collect() }
    }
}

/// Applies a representation to a coefficient word.
pub fn act(rep: &LinearRep, mut word: u32) -> u32 {
    let mut out = 0;
    while word != 0 {
        let b = word.trailing_zeros() as usize;
        out ^= rep.images[b];
        word &= word - 1;
    }
    out
}

/// `table[a][b]` is the quadric word of the product of the linear forms
/// with masks `a` and `b`.
pub(crate) fn linear_products() -> &'static [[u16; 32]; 32] {
    static T: OnceLock<Box<[[u16; 32]; 32]>> = OnceLock::new();
    T.get_or_init(|| {
        let mut bit_of = [[0usize; 5]; 5];
        let mut bit = 15;
        for i in 0..5 {
            for j in i..5 {
                bit -= 1;
                bit_of[i][j] = bit;
                bit_of[j][i] = bit;
            }
        }
        let mut t = Box::new([[0u16; 32]; 32]);
        for a in 0..32usize {
            for b in 0..32usize {
                let mut w = 0u16;
                for i in 0..5 {
                    for j in 0..5 {
                        if (a >> i) & 1 == 1 && (b >> j) & 1 == 1 {
                            if i == j {
                                w ^= 1 << bit_of[i][i];
                            } else {
                                // x_i x_j arises from (i, j); the (j, i) term is counted separately
                                w ^= 1 << bit_of[i][j];
                            }
                        }
                    }
                }
                t[a][b] = w;
            }
        }
        t
    })
}

/// Quadratic form in `X, Y, Z, T, U`, 15-bit coefficient word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Quadric15(pub u16);

impl Quadric15 {
    pub fn to_poly(self) -> MultiPoly {
        FormSpace::quadrics().to_poly(self.0 as u32)
    }

    pub fn from_poly(f: &MultiPoly) -> Result<Self> {
        Ok(Quadric15(FormSpace::quadrics().from_poly(f)? as u16))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_poly(&MultiPoly::parse(s, 5)?)
    }

    pub fn to_hex(self) -> String {
        format!("{:04x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let v = u16::from_str_radix(s, 16).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if v >> 15 != 0 {
            return Err(Error::Parse(format!("{s:?} exceeds 15 bits")));
        }
        Ok(Quadric15(v))
    }
}

impl fmt::Debug for Quadric15 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Display for Quadric15 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl FromStr for Quadric15 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

/// Ternary quintic, 21-bit coefficient word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Quintic21(pub u32);

impl Quintic21 {
    pub fn to_poly(self) -> MultiPoly {
        FormSpace::quintics().to_poly(self.0)
    }

    pub fn from_poly(f: &MultiPoly) -> Result<Self> {
        Ok(Quintic21(FormSpace::quintics().from_poly(f)?))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_poly(&MultiPoly::parse(s, 3)?)
    }

    pub fn to_hex(self) -> String {
        format!("{:06x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let v = u32::from_str_radix(s, 16).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if v >> 21 != 0 {
            return Err(Error::Parse(format!("{s:?} exceeds 21 bits")));
        }
        Ok(Quintic21(v))
    }
}

impl fmt::Debug for Quintic21 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Display for Quintic21 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl FromStr for Quintic21 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpact::enumerate_gl;

    #[test]
    fn coordinate_orders() {
        let q = FormSpace::quadrics();
        assert_eq!(q.dim(), 15);
        assert_eq!(q.to_poly(1 << 14).to_string(), "X2");
        assert_eq!(q.to_poly(1 << 13).to_string(), "XY");
        assert_eq!(q.to_poly(1 << 9).to_string(), "Y2");
        assert_eq!(q.to_poly(1).to_string(), "U2");
        let c = FormSpace::quintics();
        assert_eq!(c.dim(), 21);
        assert_eq!(c.to_poly(1 << 20).to_string(), "X5");
        assert_eq!(c.to_poly(1 << 19).to_string(), "X4Y");
        assert_eq!(c.to_poly(1 << 18).to_string(), "X4Z");
        assert_eq!(c.to_poly(1).to_string(), "Z5");
    }

    #[test]
    fn hex_round_trip() {
        let q = Quadric15::parse("Y2+XZ+YZ").unwrap();
        assert_eq!(Quadric15::from_hex(&q.to_hex()).unwrap(), q);
        assert_eq!(q.to_hex().len(), 4);
        assert!(Quadric15::from_hex("8000").is_err());
        let f = Quintic21(0x1abcde);
        assert_eq!(f.to_hex(), "1abcde");
        assert_eq!(Quintic21::from_hex("1abcde").unwrap(), f);
    }

    #[test]
    fn examples() {
        let space = FormSpace::quadrics();
        let p4 = Quadric15::parse("Y2+XZ+YZ").unwrap().0 as u32;
        let id = LinearRep::of(space, &MatGF2::identity(5));
        assert_eq!(act(&id, p4), p4);
        assert_eq!(act(&id, 0), 0);
        let shear = MatGF2::from_rows(&[0b00001, 0b00010, 0b00101, 0b01000, 0b10000]).unwrap();
        let want = Quadric15::parse("Y2+X2+XZ+XY+YZ").unwrap().0 as u32;
        assert_eq!(act(&LinearRep::of(space, &shear), p4), want);
    }

    #[test]
    fn quadric_fast_path_matches_substitution() {
        let space = FormSpace::quadrics();
        for (k, m) in enumerate_gl(5).unwrap().step_by(99_991).enumerate() {
            let fast = LinearRep::quadric(&m);
            for b in 0..15 {
                let f = MultiPoly::from_monomials(5, vec![space.monomial_at_bit(b)]);
                let g = space.from_poly(&f.matrix_substitute(&m).unwrap()).unwrap();
                assert_eq!(fast.images()[b], g, "matrix {k} bit {b}");
            }
        }
    }
}
