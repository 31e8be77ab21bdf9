use std::fmt;

use crate::error::{Error, Result};

/// Invertible n×n matrix over F_2, `n ≤ 5`. Row `i` is a bit mask; bit `j`
/// of row `i` is the entry `m_ij`. As a substitution the matrix sends
/// `x_i ↦ Σ_j m_ij x_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatGF2 {
    n: u8,
    rows: [u8; 5],
}

impl MatGF2 {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 5);
        let mut rows = [0u8; 5];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = 1 << i;
        }
        MatGF2 { n: n as u8, rows }
    }

    /// Builds a matrix from row masks, rejecting singular input.
    pub fn from_rows(rows: &[u8]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > 5 {
            return Err(Error::UnsupportedGroup(n));
        }
        let m = Self::from_rows_unchecked(rows);
        if m.rank() != n {
            return Err(Error::Invariant(format!("singular matrix {m:?}")));
        }
        Ok(m)
    }

    pub(crate) fn from_rows_unchecked(rows: &[u8]) -> Self {
        let mut r = [0u8; 5];
        r[..rows.len()].copy_from_slice(rows);
        MatGF2 { n: rows.len() as u8, rows: r }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows[..self.n as usize]
    }

    pub fn row(&self, i: usize) -> u8 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut rows = [0u8; 5];
        for (i, out) in rows.iter_mut().enumerate().take(self.n()) {
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                *out ^= other.rows[j];
                r &= r - 1;
            }
        }
        MatGF2 { n: self.n, rows }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: u8) -> u8 {
        let mut out = 0;
        for i in 0..self.n() {
            out |= (((self.rows[i] & v).count_ones() & 1) as u8) << i;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        let mut rows = [0u8; 5];
        for (i, out) in rows.iter_mut().enumerate().take(n) {
            for j in 0..n {
                if self.get(j, i) {
                    *out |= 1 << j;
                }
            }
        }
        MatGF2 { n: self.n, rows }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows;
        let n = self.n();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&i| (rows[i] >> col) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            for i in 0..n {
                if i != rank && (rows[i] >> col) & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut a = self.rows;
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let p = (col..n)
                .find(|&i| (a[i] >> col) & 1 == 1)
                .expect("matrix is invertible");
            a.swap(col, p);
            inv.swap(col, p);
            for i in 0..n {
                if i != col && (a[i] >> col) & 1 == 1 {
                    a[i] ^= a[col];
                    inv[i] ^= inv[col];
                }
            }
        }
        MatGF2 { n: self.n, rows: inv }
    }

    /// Compact code: row `i` in bits `5i..5i+5`.
    pub fn code(&self) -> u32 {
        self.rows()
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &r)| acc | (r as u32) << (5 * i))
    }

    pub fn from_code(n: usize, code: u32) -> Self {
        let mut rows = [0u8; 5];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = ((code >> (5 * i)) & 31) as u8;
        }
        MatGF2 { n: n as u8, rows }
    }
}

impl fmt::Debug for MatGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n() {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.n() {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        write!(f, "]")
    }
}

/// `|GL_n(F_2)| = Π_{i<n} (2^n − 2^i)`.
pub fn gl_order(n: usize) -> u64 {
    (0..n).map(|i| (1u64 << n) - (1u64 << i)).product()
}

/// Streams GL_n(F_2) row by row; each row runs through the vectors outside
/// the span of the previous rows in increasing order.
pub struct GlIter {
    n: usize,
    rows: [u8; 5],
    // spans[k] is the bit set of vectors spanned by rows[..k]
    spans: [u32; 6],
    done: bool,
    started: bool,
}

pub fn enumerate_gl(n: usize) -> Result<GlIter> {
    if !matches!(n, 1..=5) {
        return Err(Error::UnsupportedGroup(n));
    }
    Ok(GlIter { n, rows: [0; 5], spans: [1; 6], done: false, started: false })
}

impl GlIter {
    fn extend_span(span: u32, v: u8) -> u32 {
        let mut out = span;
        let mut s = span;
        while s != 0 {
            let w = s.trailing_zeros();
            out |= 1 << (w ^ v as u32);
            s &= s - 1;
        }
        out
    }

    /// Smallest vector `> from` outside `span`, if any.
    fn next_outside(&self, span: u32, from: u32) -> Option<u8> {
        let limit = 1u32 << self.n;
        (from + 1..limit).find(|&v| (span >> v) & 1 == 0).map(|v| v as u8)
    }

    /// Fills rows `k..` with their smallest admissible values.
    fn fill_from(&mut self, k: usize) {
        for i in k..self.n {
            let v = self.next_outside(self.spans[i], 0).expect("space not exhausted");
            self.rows[i] = v;
            self.spans[i + 1] = Self::extend_span(self.spans[i], v);
        }
    }
}

impl Iterator for GlIter {
    type Item = MatGF2;

    fn next(&mut self) -> Option<MatGF2> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
        } else {
            let mut k = self.n;
            loop {
                if k == 0 {
                    self.done = true;
                    return None;
                }
                k -= 1;
                if let Some(v) = self.next_outside(self.spans[k], self.rows[k] as u32) {
                    self.rows[k] = v;
                    self.spans[k + 1] = Self::extend_span(self.spans[k], v);
                    self.fill_from(k + 1);
                    break;
                }
            }
        }
        Some(MatGF2 { n: self.n as u8, rows: self.rows })
    }
}

/// Two generators of GL_n(F_2): the transvection `x_0 ↦ x_0 + x_1` and the
/// cyclic shift `x_i ↦ x_{i+1}`.
pub fn generators(n: usize) -> Vec<MatGF2> {
    let mut t = MatGF2::identity(n);
    t.rows[0] = 0b11;
    let mut c = MatGF2::identity(n);
    for i in 0..n {
        c.rows[i] = 1 << ((i + 1) % n);
    }
    vec![t, c]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_groups_have_expected_order() {
        assert_eq!(enumerate_gl(2).unwrap().count(), 6);
        assert_eq!(enumerate_gl(3).unwrap().count(), 168);
        assert_eq!(gl_order(5), 9_999_360);
        assert!(enumerate_gl(6).is_err());
        let all: HashSet<_> = enumerate_gl(3).unwrap().collect();
        assert_eq!(all.len(), 168);
        assert!(all.iter().all(|m| m.rank() == 3));
    }

    #[test]
    fn enumeration_starts_at_identity_and_is_increasing() {
        let v: Vec<_> = enumerate_gl(3).unwrap().collect();
        assert!(v[0].is_identity());
        let codes: Vec<_> = v.iter().map(|m| m.rows().to_vec()).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn inverse_and_products() {
        for m in enumerate_gl(3).unwrap() {
            assert!(m.mul(&m.inverse()).is_identity());
            assert_eq!(MatGF2::from_code(3, m.code()), m);
        }
    }

    #[test]
    fn generators_generate_gl3() {
        let gens = generators(3);
        let mut seen = HashSet::from([MatGF2::identity(3)]);
        let mut frontier = vec![MatGF2::identity(3)];
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let p = m.mul(g);
                if seen.insert(p) {
                    frontier.push(p);
                }
            }
        }
        assert_eq!(seen.len(), 168);
    }
}
