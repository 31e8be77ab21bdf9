use std::fmt;
use std::str::FromStr;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS, VAR_NAMES};
use crate::error::{Error, Result};
use crate::gf2algebra::{FieldCtx, FieldElem};
use crate::grpact::MatGF2;

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

/// Polynomial over F_2 in `nvars ≤ 5` variables: a set of monomials kept
/// sorted in decreasing degrevlex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<Monomial>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomials(nvars, vec![Monomial::ONE])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::from_monomials(nvars, vec![Monomial::var(i)])
    }

    /// Monomials appearing an even number of times cancel.
    pub fn from_monomials(nvars: usize, monos: Vec<Monomial>) -> Self {
        let mut keys: Vec<u64> = monos.into_iter().map(|m| ORDER.key(m)).collect();
        Self::from_keys_unsorted(nvars, &mut keys)
    }

    fn from_keys_unsorted(nvars: usize, keys: &mut [u64]) -> Self {
        keys.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms = Vec::with_capacity(keys.len());
        let mut i = 0;
        while i < keys.len() {
            let mut j = i;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                terms.push(ORDER.monomial(keys[i]));
            }
            i = j;
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn contains(&self, m: Monomial) -> bool {
        let k = ORDER.key(m);
        self.terms.binary_search_by(|t| k.cmp(&ORDER.key(*t))).is_ok()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ka, kb) = (ORDER.key(a[i]), ORDER.key(b[j]));
            if ka > kb {
                out.push(a[i]);
                i += 1;
            } else if kb > ka {
                out.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MultiPoly { nvars: self.nvars.max(other.nvars), terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut keys = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                keys.push(ORDER.key(a.mul(b)));
            }
        }
        Self::from_keys_unsorted(self.nvars.max(other.nvars), &mut keys)
    }

    pub fn mul_monomial(&self, t: Monomial) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|m| m.mul(&t)).collect() }
    }

    pub fn square(&self) -> Self {
        // cross terms cancel in characteristic 2
        let terms = self.terms.iter().map(|m| m.mul(m)).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let dv = Monomial::var(i);
        let monos = self
            .terms
            .iter()
            .filter(|m| m.exp(i) % 2 == 1)
            .map(|m| dv.quotient_of(m))
            .collect();
        Self::from_monomials(self.nvars, monos)
    }

    /// `f(M·x)`: variable `x_i` is replaced by `Σ_j m_ij x_j`.
    pub fn matrix_substitute(&self, m: &MatGF2) -> Result<Self> {
        if m.n() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: m.n() });
        }
        let forms: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| {
                let monos = (0..self.nvars)
                    .filter(|&j| m.get(i, j))
                    .map(Monomial::var)
                    .collect();
                MultiPoly::from_monomials(self.nvars, monos)
            })
            .collect();
        let mut keys = Vec::new();
        for t in &self.terms {
            let mut prod = MultiPoly::one(self.nvars);
            for (i, form) in forms.iter().enumerate() {
                let e = t.exp(i);
                if e > 0 {
                    prod = prod.mul(&form.pow(e as u32));
                }
            }
            keys.extend(prod.terms.iter().map(|&m| ORDER.key(m)));
        }
        Ok(Self::from_keys_unsorted(self.nvars, &mut keys))
    }

    /// Value at a point with coordinates in F_{2^k}.
    pub fn eval(&self, point: &[FieldElem], ctx: &FieldCtx) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for t in &self.terms {
            let mut v = FieldElem::ONE;
            for (i, &x) in point.iter().enumerate().take(self.nvars) {
                let e = t.exp(i);
                if e > 0 {
                    v = ctx.mul(v, ctx.pow(x, e as u64));
                }
            }
            acc = ctx.add(acc, v);
        }
        acc
    }

    /// Value at a point of F_2^n given as a bit mask (bit `i` = coordinate `i`).
    pub fn eval_bits(&self, point: u8) -> bool {
        self.terms
            .iter()
            .filter(|t| t.support() & !point == 0)
            .count()
            % 2
            == 1
    }

    pub fn with_nvars(&self, nvars: usize) -> Self {
        debug_assert!(self.terms.iter().all(|t| t.support() >> nvars == 0));
        MultiPoly { nvars, terms: self.terms.clone() }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}", t.to_string_vars(self.nvars))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl MultiPoly {
    /// Parses forms like `Y2+XZ+YZ` (also `Y^2`, `Y²`) in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut monos = Vec::new();
        for term in s.split('+') {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            if term == "1" {
                monos.push(Monomial::ONE);
                continue;
            }
            let mut exps = [0u8; MAX_VARS];
            let chars: Vec<char> = term.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let var = VAR_NAMES[..nvars]
                    .iter()
                    .position(|&v| v == chars[i].to_ascii_uppercase())
                    .ok_or_else(|| Error::Parse(format!("unknown variable in {term:?}")))?;
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                }
                let mut digits = String::new();
                while i < chars.len() {
                    let c = chars[i];
                    if let Some(d) = c.to_digit(10) {
                        digits.push(char::from_digit(d, 10).unwrap());
                    } else if let Some(d) = superscript_digit(c) {
                        digits.push(char::from_digit(d, 10).unwrap());
                    } else {
                        break;
                    }
                    i += 1;
                }
                let e: u8 = if digits.is_empty() {
                    1
                } else {
                    digits.parse().map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                };
                exps[var] = exps[var]
                    .checked_add(e)
                    .filter(|&e| e < 128)
                    .ok_or_else(|| Error::Parse(format!("exponent too large in {term:?}")))?;
            }
            monos.push(Monomial::from_exps(&exps));
        }
        Ok(Self::from_monomials(nvars, monos))
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴' => Some(4),
        '⁵' => Some(5),
        '⁶' => Some(6),
        '⁷' => Some(7),
        '⁸' => Some(8),
        '⁹' => Some(9),
        _ => None,
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Five-variable parse.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, MAX_VARS)
    }
}

/// The ten 3×3 minors of the Jacobian matrix of three forms in five
/// variables, ordered by column triple `i < j < k`.
pub fn jacobian_minors(q1: &MultiPoly, q2: &MultiPoly, q3: &MultiPoly) -> Vec<MultiPoly> {
    let nvars = MAX_VARS;
    let rows: Vec<Vec<MultiPoly>> = [q1, q2, q3]
        .iter()
        .map(|q| (0..nvars).map(|v| q.derivative(v).with_nvars(nvars)).collect())
        .collect();
    let mut out = Vec::with_capacity(10);
    for i in 0..nvars {
        for j in i + 1..nvars {
            for k in j + 1..nvars {
                let c = [i, j, k];
                let m = |r: usize, s: usize| &rows[r][c[s]];
                let det = m(0, 0)
                    .mul(&m(1, 1).mul(m(2, 2)).add(&m(1, 2).mul(m(2, 1))))
                    .add(&m(0, 1).mul(&m(1, 0).mul(m(2, 2)).add(&m(1, 2).mul(m(2, 0)))))
                    .add(&m(0, 2).mul(&m(1, 0).mul(m(2, 1)).add(&m(1, 1).mul(m(2, 0)))));
                out.push(det);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("YZ+XZ+Y2").to_string(), "Y2+XZ+YZ");
        assert_eq!(p("Y^2+XZ+Y²"), p("XZ"));
        assert_eq!(p("0").to_string(), "0");
        assert!(MultiPoly::parse("W", 5).is_err());
    }

    #[test]
    fn substitution_examples() {
        let q = p("Y2+XZ+YZ");
        assert_eq!(q.matrix_substitute(&MatGF2::identity(5)).unwrap(), q);
        let swap = MatGF2::from_rows(&[0b00010, 0b00001, 0b00100, 0b01000, 0b10000]).unwrap();
        assert_eq!(p("XY").matrix_substitute(&swap).unwrap(), p("XY"));
        let shear = MatGF2::from_rows(&[0b00001, 0b00010, 0b00101, 0b01000, 0b10000]).unwrap();
        assert_eq!(q.matrix_substitute(&shear).unwrap(), p("Y2+X2+XZ+XY+YZ"));
        assert!(q.matrix_substitute(&MatGF2::identity(3)).is_err());
    }

    #[test]
    fn minors_examples() {
        assert!(jacobian_minors(&p("X2"), &p("Y2"), &p("Z2")).iter().all(|m| m.is_zero()));
        assert!(jacobian_minors(&p("XY"), &p("ZT"), &p("U2")).iter().all(|m| m.is_zero()));
        let ms = jacobian_minors(&p("XY"), &p("ZT"), &p("XU+TU"));
        assert_eq!(ms.len(), 10);
        assert!(ms.iter().any(|m| !m.is_zero()));
        assert!(ms.iter().all(|m| m.is_zero() || (m.is_homogeneous() && m.total_degree() == Some(3))));
    }

    #[test]
    fn arithmetic() {
        let a = p("X+Y");
        assert_eq!(a.square(), p("X2+Y2"));
        assert_eq!(a.mul(&a), p("X2+Y2"));
        assert_eq!(a.pow(3), p("X3+X2Y+XY2+Y3"));
        assert_eq!(p("X3Y+XZ2").derivative(0), p("X2Y+Z2"));
        assert!(p("XY+Z").eval_bits(0b011));
        assert!(!p("XY+Z").eval_bits(0b111));
    }
}
