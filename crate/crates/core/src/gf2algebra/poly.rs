use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Polynomial over F_2, packed little-endian: bit `i` of the word vector is
/// the coefficient of `x^i`.
///
/// The word vector never carries trailing zero words, so equality is
/// structural. The zero polynomial has no words and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPolyF2 {
    words: Vec<u64>,
}

impl UniPolyF2 {
    pub fn zero() -> Self {
        UniPolyF2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn x() -> Self {
        Self::from_u64(2)
    }

    pub fn from_u64(bits: u64) -> Self {
        let mut p = UniPolyF2 { words: vec![bits] };
        p.normalize();
        p
    }

    pub fn from_u128(bits: u128) -> Self {
        let mut p = UniPolyF2 {
            words: vec![bits as u64, (bits >> 64) as u64],
        };
        p.normalize();
        p
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = UniPolyF2 { words };
        p.normalize();
        p
    }

    /// `x^e`.
    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(e, true);
        p
    }

    /// Builds a polynomial from the exponents carrying a coefficient 1.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip_coeff(e);
        }
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low 64 coefficients. Panics if the degree is 64 or more.
    pub fn to_u64(&self) -> u64 {
        assert!(self.words.len() <= 1, "polynomial does not fit in 64 bits");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg_i(&self) -> i64 {
        self.degree().map_or(-1, |d| d as i64)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if value {
            if self.words.len() <= i / 64 {
                self.words.resize(i / 64 + 1, 0);
            }
            self.words[i / 64] |= 1 << (i % 64);
        } else if i / 64 < self.words.len() {
            self.words[i / 64] &= !(1 << (i % 64));
            self.normalize();
        }
    }

    pub fn flip_coeff(&mut self, i: usize) {
        let v = self.coeff(i);
        self.set_coeff(i, !v);
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn shl(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (n / 64, n % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs != 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Self::from_words(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.words.iter().enumerate() {
                let (lo, hi) = clmul64(a, b);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        Self::from_words(out)
    }

    pub fn square(&self) -> Self {
        let mut out = vec![0u64; 2 * self.words.len()];
        for (i, &w) in self.words.iter().enumerate() {
            out[2 * i] = spread32(w as u32);
            out[2 * i + 1] = spread32((w >> 32) as u32);
        }
        Self::from_words(out)
    }

    /// Square root of a polynomial with only even exponents.
    pub fn sqrt(&self) -> Option<Self> {
        let mut out = Self::zero();
        for e in self.exponents() {
            if e % 2 == 1 {
                return None;
            }
            out.set_coeff(e / 2, true);
        }
        Some(out)
    }

    /// Formal derivative; in characteristic 2 only odd exponents survive.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for e in self.exponents() {
            if e % 2 == 1 {
                out.set_coeff(e - 1, true);
            }
        }
        out
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quo.set_coeff(shift, true);
            rem += &divisor.shl(shift);
        }
        Ok((quo, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).expect("nonzero divisor").1
    }

    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    /// `x^(2^k) mod modulus` by repeated squaring.
    pub fn frobenius_power_of_x(k: u32, modulus: &Self) -> Self {
        let mut acc = Self::x().rem(modulus);
        for _ in 0..k {
            acc = acc.square().rem(modulus);
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Evaluation at a point of F_2: the parity of the terms at 1, the
    /// constant term at 0.
    pub fn eval_f2(&self, at: bool) -> bool {
        if at {
            self.weight() % 2 == 1
        } else {
            self.coeff(0)
        }
    }

    /// Reversal with respect to a formal degree `n`: `x^n f(1/x)`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut out = Self::zero();
        for e in self.exponents() {
            assert!(e <= n, "reverse degree smaller than polynomial degree");
            out.set_coeff(n - e, true);
        }
        out
    }

    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, w) in self.words.iter().rev().enumerate() {
            if i == 0 {
                s.push_str(&format!("{w:x}"));
            } else {
                s.push_str(&format!("{w:016x}"));
            }
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial hex string".into()));
        }
        let mut words = Vec::new();
        let bytes = s.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = &s[start..end];
            let w = u64::from_str_radix(chunk, 16)
                .map_err(|e| Error::Parse(format!("bad polynomial hex {s:?}: {e}")))?;
            words.push(w);
            end = start;
        }
        Ok(Self::from_words(words))
    }

    /// Human-readable rendering, e.g. `x^3 + x + 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        terms.reverse();
        terms.join(" + ")
    }

    /// Parses sums of `1`, `x` and `x^e`, as written by [`pretty`](Self::pretty).
    pub fn parse_pretty(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for t in s.split('+') {
            let t = t.trim();
            let e = match t {
                "0" => continue,
                "1" => 0,
                "x" => 1,
                _ => t
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad term {t:?} in {s:?}")))?,
            };
            out.flip_coeff(e);
        }
        Ok(out)
    }
}

/// Carry-less 64x64 -> 128 multiplication.
pub(crate) fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut a = a;
    while a != 0 {
        let i = a.trailing_zeros();
        a &= a - 1;
        lo ^= b << i;
        if i != 0 {
            hi ^= b >> (64 - i);
        }
    }
    (lo, hi)
}

/// Interleaves zero bits: bit `i` of `x` lands on bit `2i`.
pub(crate) fn spread32(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl fmt::Debug for UniPolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPolyF2({})", self.pretty())
    }
}

impl fmt::Display for UniPolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for UniPolyF2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for UniPolyF2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for UniPolyF2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&UniPolyF2> for UniPolyF2 {
    fn add_assign(&mut self, rhs: &UniPolyF2) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl Add<&UniPolyF2> for &UniPolyF2 {
    type Output = UniPolyF2;
    fn add(self, rhs: &UniPolyF2) -> UniPolyF2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&UniPolyF2> for &UniPolyF2 {
    type Output = UniPolyF2;
    fn mul(self, rhs: &UniPolyF2) -> UniPolyF2 {
        UniPolyF2::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip_matches_lsb_convention() {
        let p = UniPolyF2::from_exponents(&[3, 1, 0]);
        assert_eq!(p.to_hex(), "b");
        assert_eq!(UniPolyF2::from_hex("b").unwrap(), p);
        let big = UniPolyF2::monomial(70);
        assert_eq!(UniPolyF2::from_hex(&big.to_hex()).unwrap(), big);
        assert_eq!(UniPolyF2::zero().to_hex(), "0");
    }

    #[test]
    fn arithmetic_basics() {
        let a = UniPolyF2::from_u64(0b111); // x^2+x+1
        let b = UniPolyF2::from_u64(0b11); // x+1
        assert_eq!(a.mul(&b), UniPolyF2::from_u64(0b1001)); // x^3+1
        assert_eq!(b.square(), UniPolyF2::from_u64(0b101));
        let (q, r) = UniPolyF2::from_u64(0b1001).div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(a.derivative(), UniPolyF2::one());
        assert_eq!(UniPolyF2::from_u64(0b101).sqrt(), Some(b.clone()));
        assert!(UniPolyF2::from_u64(0b111).sqrt().is_none());
        assert_eq!(UniPolyF2::zero().degree(), None);
    }

    #[test]
    fn wide_multiplication_crosses_word_boundary() {
        let a = UniPolyF2::monomial(63).add(&UniPolyF2::one());
        let sq = a.square();
        assert_eq!(sq, UniPolyF2::monomial(126).add(&UniPolyF2::one()));
        assert_eq!(a.mul(&a), sq);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(UniPolyF2::one().div_rem(&UniPolyF2::zero()).is_err());
    }
}
