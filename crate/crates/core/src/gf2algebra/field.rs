use std::sync::OnceLock;

use super::poly::UniPolyF2;
use crate::error::{Error, Result};

pub const MAX_EXTENSION_DEGREE: u32 = 20;
const TABLE_LIMIT: u32 = 16;

/// Element of some F_{2^k}: the bit pattern of its residue polynomial in the
/// generator `t` of the owning [`FieldCtx`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// F_{2^k} = F_2[t]/(modulus) with a canonical modulus.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    k: u32,
    modulus: u32,
    trace_mask: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Builds F_{2^k}. The modulus is the irreducible polynomial of least
/// weight, ties broken by the least integer encoding.
pub fn make_field(k: u32) -> Result<FieldCtx> {
    if !(1..=MAX_EXTENSION_DEGREE).contains(&k) {
        return Err(Error::DegreeOutOfRange(k));
    }
    let modulus = canonical_modulus(k);
    Ok(FieldCtx::with_modulus(k, modulus))
}

/// Shared, lazily built context for F_{2^k}.
pub fn field(k: u32) -> &'static FieldCtx {
    static FIELDS: [OnceLock<FieldCtx>; MAX_EXTENSION_DEGREE as usize] =
        [const { OnceLock::new() }; MAX_EXTENSION_DEGREE as usize];
    assert!((1..=MAX_EXTENSION_DEGREE).contains(&k), "extension degree {k} out of range");
    FIELDS[(k - 1) as usize].get_or_init(|| make_field(k).expect("degree checked"))
}

fn canonical_modulus(k: u32) -> u32 {
    if k == 1 {
        return 0b11;
    }
    let top = 1u32 << k;
    for weight in (3..=k + 1).step_by(2) {
        // odd weight is necessary: an even number of terms vanishes at x = 1
        for low in 0..top {
            let cand = top | low;
            if cand & 1 == 0 || cand.count_ones() != weight {
                continue;
            }
            if is_irreducible(&UniPolyF2::from_u64(cand as u64)) {
                return cand;
            }
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &UniPolyF2) -> bool {
    let Some(k) = f.degree() else { return false };
    if k == 0 {
        return false;
    }
    let x = UniPolyF2::x();
    let full = UniPolyF2::frobenius_power_of_x(k as u32, f);
    if full != x.rem(f) {
        return false;
    }
    for r in prime_divisors(k as u32) {
        let h = &UniPolyF2::frobenius_power_of_x(k as u32 / r, f) + &x;
        if !h.gcd(f).is_one() {
            return false;
        }
    }
    true
}

pub(crate) fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    fn with_modulus(k: u32, modulus: u32) -> Self {
        let mut ctx = FieldCtx {
            k,
            modulus,
            trace_mask: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        if k <= TABLE_LIMIT {
            ctx.build_tables();
        }
        let mut mask = 0;
        for i in 0..k {
            if ctx.trace_slow(FieldElem(1 << i)) {
                mask |= 1 << i;
            }
        }
        ctx.trace_mask = mask;
        ctx
    }

    fn build_tables(&mut self) {
        let order = (1u32 << self.k) - 1;
        // find a primitive element by brute force over small candidates
        let factors = prime_divisors(order);
        let g = (2..=order.max(2))
            .map(FieldElem)
            .chain(std::iter::once(FieldElem(1)))
            .find(|&g| {
                if order == 1 {
                    return g == FieldElem(1);
                }
                factors
                    .iter()
                    .all(|&p| self.pow_slow(g, (order / p) as u64) != FieldElem::ONE)
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; (order + 1) as usize];
        let mut acc = FieldElem::ONE;
        for i in 0..order {
            exp[i as usize] = acc.0;
            log[acc.0 as usize] = i;
            acc = self.mul_slow(acc, g);
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Modulus including the leading `t^k` bit.
    pub fn modulus_bits(&self) -> u32 {
        self.modulus
    }

    pub fn modulus(&self) -> UniPolyF2 {
        UniPolyF2::from_u64(self.modulus as u64)
    }

    pub fn size(&self) -> u64 {
        1u64 << self.k
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..(1u32 << self.k)).map(FieldElem)
    }

    /// The class of `t` (a root of the modulus).
    pub fn generator(&self) -> FieldElem {
        if self.k == 1 {
            FieldElem::ONE
        } else {
            FieldElem(2)
        }
    }

    pub fn from_poly(&self, p: &UniPolyF2) -> FieldElem {
        let r = p.rem(&self.modulus());
        FieldElem(r.words().first().copied().unwrap_or(0) as u32)
    }

    pub fn from_bit(&self, b: bool) -> FieldElem {
        FieldElem(b as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if !self.log.is_empty() {
            let s = self.log[a.0 as usize] + self.log[b.0 as usize];
            FieldElem(self.exp[s as usize])
        } else {
            self.mul_slow(a, b)
        }
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut acc: u64 = 0;
        let mut x = a.0 as u64;
        let mut y = b.0;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let m = self.modulus as u64;
        for bit in (self.k..2 * self.k).rev() {
            if (acc >> bit) & 1 == 1 {
                acc ^= m << (bit - self.k);
            }
        }
        FieldElem(acc as u32)
    }

    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    fn pow_slow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if !self.log.is_empty() {
            if e == 0 {
                return FieldElem::ONE;
            }
            if a.0 == 0 {
                return FieldElem::ZERO;
            }
            let order = (1u64 << self.k) - 1;
            let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
            return FieldElem(self.exp[l as usize]);
        }
        self.pow_slow(a, e)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        Some(self.pow(a, (1u64 << self.k) - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// The unique square root (Frobenius is bijective).
    pub fn sqrt(&self, a: FieldElem) -> FieldElem {
        let mut r = a;
        for _ in 1..self.k {
            r = self.square(r);
        }
        r
    }

    /// Frobenius `a ↦ a^(2^j)`.
    pub fn frobenius(&self, a: FieldElem, j: u32) -> FieldElem {
        let mut r = a;
        for _ in 0..j % self.k {
            r = self.square(r);
        }
        r
    }

    fn trace_slow(&self, a: FieldElem) -> bool {
        let mut acc = a;
        let mut cur = a;
        for _ in 1..self.k {
            cur = self.square(cur);
            acc = self.add(acc, cur);
        }
        debug_assert!(acc.0 <= 1, "trace must land in F_2");
        acc.0 == 1
    }

    /// Absolute trace to F_2.
    #[inline]
    pub fn trace(&self, a: FieldElem) -> bool {
        (a.0 & self.trace_mask).count_ones() % 2 == 1
    }

    /// Degree over F_2 of the subfield generated by `a`.
    pub fn element_degree(&self, a: FieldElem) -> u32 {
        let mut cur = a;
        for d in 1..=self.k {
            cur = self.square(cur);
            if cur == a {
                return d;
            }
        }
        self.k
    }
}

/// Number of `y` in the field with `y^2 + b y = c`.
pub fn artin_schreier_count(b: FieldElem, c: FieldElem, ctx: &FieldCtx) -> u32 {
    if b.is_zero() {
        return 1;
    }
    let b2 = ctx.square(b);
    let z = ctx.div(c, b2).expect("b nonzero");
    if ctx.trace(z) {
        0
    } else {
        2
    }
}

/// All solutions `y` of `y^2 + b y = c`, ascending by bit pattern.
pub fn artin_schreier_solve(b: FieldElem, c: FieldElem, ctx: &FieldCtx) -> Vec<FieldElem> {
    if b.is_zero() {
        return vec![ctx.sqrt(c)];
    }
    let b2 = ctx.square(b);
    let w = ctx.div(c, b2).expect("b nonzero");
    if ctx.trace(w) {
        return Vec::new();
    }
    // z ↦ z^2 + z is F_2-linear with kernel {0, 1}; solve the k×k system
    let k = ctx.degree() as usize;
    let cols: Vec<u32> = (0..k)
        .map(|i| {
            let e = FieldElem(1 << i);
            ctx.add(ctx.square(e), e).0
        })
        .collect();
    let z = solve_gf2_system(&cols, w.0, k).expect("trace zero guarantees a solution");
    let z0 = FieldElem(z);
    let z1 = ctx.add(z0, FieldElem::ONE);
    let mut out = vec![ctx.mul(b, z0), ctx.mul(b, z1)];
    out.sort();
    out
}

/// Solves `Σ x_i cols[i] = rhs` over F_2 for an n-dimensional column space;
/// returns the solution with free variables set to zero.
pub(crate) fn solve_gf2_system(cols: &[u32], rhs: u32, n: usize) -> Option<u32> {
    // rows of the augmented matrix: bit j = coefficient of x_j, bit 31 = rhs
    let mut rows: Vec<u64> = (0..n)
        .map(|r| {
            let mut row = 0u64;
            for (j, c) in cols.iter().enumerate() {
                if (c >> r) & 1 == 1 {
                    row |= 1 << j;
                }
            }
            if (rhs >> r) & 1 == 1 {
                row |= 1 << 40;
            }
            row
        })
        .collect();
    let m = cols.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| (r >> 40) & 1 == 1) {
        return None;
    }
    let mut x = 0u32;
    for (i, &col) in pivots.iter().enumerate() {
        if (rows[i] >> 40) & 1 == 1 {
            x |= 1 << col;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields_have_expected_moduli() {
        assert_eq!(make_field(1).unwrap().size(), 2);
        assert_eq!(make_field(2).unwrap().modulus_bits(), 0b111);
        assert_eq!(make_field(5).unwrap().modulus_bits(), 0b100101);
        assert!(make_field(0).is_err());
        assert!(make_field(21).is_err());
    }

    #[test]
    fn multiplicative_order_divides_group_order() {
        let f = make_field(5).unwrap();
        for e in f.elements().skip(1) {
            assert_eq!(f.pow(e, 31), FieldElem::ONE);
        }
        let big = make_field(18).unwrap();
        let e = FieldElem(0x2_abcd);
        assert_eq!(big.pow(e, (1 << 18) - 1), FieldElem::ONE);
        assert_eq!(big.mul(e, big.inv(e).unwrap()), FieldElem::ONE);
    }

    #[test]
    fn trace_examples() {
        let f2 = make_field(1).unwrap();
        assert!(f2.trace(FieldElem::ONE));
        assert!(!f2.trace(FieldElem::ZERO));
        let f4 = make_field(2).unwrap();
        // enumerate all four elements
        assert_eq!(f4.elements().filter(|&e| f4.trace(e)).count(), 2);
        assert!(!f4.trace(FieldElem::ZERO));
    }

    #[test]
    fn artin_schreier_examples() {
        let f2 = make_field(1).unwrap();
        assert_eq!(artin_schreier_count(FieldElem::ZERO, FieldElem::ONE, &f2), 1);
        assert_eq!(artin_schreier_count(FieldElem::ONE, FieldElem::ONE, &f2), 0);
        let f4 = make_field(2).unwrap();
        assert_eq!(artin_schreier_count(FieldElem::ONE, FieldElem::ZERO, &f4), 2);
        assert_eq!(
            artin_schreier_solve(FieldElem::ONE, FieldElem::ZERO, &f4),
            vec![FieldElem(0), FieldElem(1)]
        );
    }

    #[test]
    fn artin_schreier_solutions_are_solutions() {
        for k in [3, 4, 7] {
            let f = make_field(k).unwrap();
            for b in f.elements().step_by(3) {
                for c in f.elements().step_by(5) {
                    let sols = artin_schreier_solve(b, c, &f);
                    assert_eq!(sols.len() as u32, artin_schreier_count(b, c, &f));
                    for y in sols {
                        assert_eq!(f.add(f.square(y), f.mul(b, y)), c);
                    }
                }
            }
        }
    }

    #[test]
    fn fibres_partition_the_field() {
        for k in 1..=12 {
            let f = field(k);
            for b in [FieldElem::ZERO, FieldElem::ONE, FieldElem((1 << k) - 1)] {
                let total: u64 = f.elements().map(|c| artin_schreier_count(b, c, f) as u64).sum();
                assert_eq!(total, f.size(), "k={k} b={b:?}");
            }
        }
    }

    #[test]
    fn sqrt_inverts_square() {
        let f = make_field(9).unwrap();
        for e in f.elements().step_by(7) {
            assert_eq!(f.sqrt(f.square(e)), e);
        }
    }
}
