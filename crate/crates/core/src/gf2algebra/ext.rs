use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::field::{field, FieldCtx, FieldElem};
use super::poly::UniPolyF2;
use crate::error::{Error, Result};

/// Polynomial with coefficients in some F_{2^k}, ascending coefficients,
/// no trailing zeros. The field context is passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPolyExt {
    coeffs: Vec<FieldElem>,
}

impl UniPolyExt {
    pub fn zero() -> Self {
        UniPolyExt { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<FieldElem>) -> Self {
        let mut p = UniPolyExt { coeffs };
        p.normalize();
        p
    }

    pub fn from_f2(p: &UniPolyF2) -> Self {
        let len = p.degree().map_or(0, |d| d + 1);
        Self::from_coeffs((0..len).map(|i| FieldElem(p.coeff(i) as u32)).collect())
    }

    /// `x + c`.
    pub fn linear(c: FieldElem) -> Self {
        Self::from_coeffs(vec![c, FieldElem::ONE])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| FieldElem(self.coeff(i).0 ^ other.coeff(i).0)).collect())
    }

    pub fn mul(&self, other: &Self, ctx: &FieldCtx) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: FieldElem, ctx: &FieldCtx) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn div_rem(&self, divisor: &Self, ctx: &FieldCtx) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = ctx.inv(divisor.coeffs[dd]).expect("normalized");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![FieldElem::ZERO; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = ctx.mul(rem[top], lead_inv);
            if !c.is_zero() {
                let shift = top - dd;
                quo[shift] = c;
                for (i, &d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = ctx.add(rem[shift + i], ctx.mul(c, d));
                }
            }
            rem.pop();
        }
        Ok((Self::from_coeffs(quo), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self, ctx: &FieldCtx) -> Self {
        self.div_rem(divisor, ctx).expect("nonzero divisor").1
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(&lead) => self.scale(ctx.inv(lead).expect("nonzero"), ctx),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, ctx: &FieldCtx) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, ctx);
            a = b;
            b = r;
        }
        a.monic(ctx)
    }

    pub fn eval(&self, x: FieldElem, ctx: &FieldCtx) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }
}

/// All roots of `f` in F_{2^k}, sorted by bit pattern. Roots are found
/// from `gcd(f, x^(2^k) + x)` and split by trace maps `Tr(β x)` with `β`
/// running through the power basis, so the result is deterministic.
pub fn roots_in_extension(f: &UniPolyF2, k: u32) -> Result<Vec<FieldElem>> {
    if f.is_zero() {
        return Err(Error::FactorZero);
    }
    let ctx = field(k);
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let xq = UniPolyF2::frobenius_power_of_x(k, f);
    let g = (&xq + &UniPolyF2::x()).gcd(f);
    let mut roots = Vec::new();
    split_linear(&UniPolyExt::from_f2(&g), ctx, &mut roots);
    roots.sort();
    Ok(roots)
}

/// Roots in F_{2^k} of a polynomial already defined over that field.
pub fn roots_of_ext(f: &UniPolyExt, ctx: &FieldCtx) -> Vec<FieldElem> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let k = ctx.degree();
    // x^(2^k) mod f
    let mut acc = UniPolyExt::linear(FieldElem::ZERO).rem(f, ctx);
    for _ in 0..k {
        acc = acc.mul(&acc, ctx).rem(f, ctx);
    }
    let g = acc.add(&UniPolyExt::linear(FieldElem::ZERO)).gcd(f, ctx);
    let mut roots = Vec::new();
    split_linear(&g, ctx, &mut roots);
    roots.sort();
    roots
}

/// Splits a monic squarefree product of distinct linear factors.
fn split_linear(g: &UniPolyExt, ctx: &FieldCtx, out: &mut Vec<FieldElem>) {
    let g = g.monic(ctx);
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(g.coeff(0));
            return;
        }
        _ => {}
    }
    let k = ctx.degree();
    let x = UniPolyExt::linear(FieldElem::ZERO);
    for j in 0..k {
        let beta = FieldElem(1 << j);
        let bx = x.scale(beta, ctx).rem(&g, ctx);
        let mut term = bx.clone();
        let mut tr = bx;
        for _ in 1..k {
            term = term.mul(&term, ctx).rem(&g, ctx);
            tr = tr.add(&term);
        }
        let h = g.gcd(&tr, ctx);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < g.degree().unwrap() {
            let other = g.div_rem(&h, ctx).expect("nonzero").0;
            split_linear(&h, ctx, out);
            split_linear(&other, ctx, out);
            return;
        }
    }
    unreachable!("trace forms over a basis separate distinct roots");
}

type EmbeddingCache = Mutex<HashMap<(u32, u32), Vec<FieldElem>>>;

/// Images of the power basis `1, t, …, t^(a-1)` of F_{2^a} inside F_{2^b}
/// (`a | b`), sending `t` to the least root of the F_{2^a} modulus.
/// Computed once per pair.
pub fn embedding(a: u32, b: u32) -> Vec<FieldElem> {
    assert!(b.is_multiple_of(a), "F_2^{a} does not embed in F_2^{b}");
    static CACHE: OnceLock<EmbeddingCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&(a, b)) {
        return v.clone();
    }
    let small = field(a);
    let big = field(b);
    let gamma = if a == 1 {
        FieldElem::ONE
    } else {
        roots_in_extension(&small.modulus(), b).expect("nonzero modulus")[0]
    };
    let mut basis = Vec::with_capacity(a as usize);
    let mut acc = FieldElem::ONE;
    for _ in 0..a {
        basis.push(acc);
        acc = big.mul(acc, gamma);
    }
    cache.lock().expect("cache lock").insert((a, b), basis.clone());
    basis
}

/// Applies a basis image table from [`embedding`].
pub fn embed(e: FieldElem, basis: &[FieldElem]) -> FieldElem {
    let mut acc = 0u32;
    for (i, img) in basis.iter().enumerate() {
        if (e.0 >> i) & 1 == 1 {
            acc ^= img.0;
        }
    }
    FieldElem(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_examples() {
        let f = UniPolyF2::from_u64(0b111);
        assert!(roots_in_extension(&f, 1).unwrap().is_empty());
        assert_eq!(roots_in_extension(&f, 2).unwrap().len(), 2);
        // x^5 + x^3 + 1 is irreducible, so it splits completely in F_32
        let q = UniPolyF2::from_exponents(&[5, 3, 0]);
        let roots = roots_in_extension(&q, 5).unwrap();
        assert_eq!(roots.len(), 5);
        let ctx = field(5);
        for r in roots {
            assert!(UniPolyExt::from_f2(&q).eval(r, ctx).is_zero());
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let basis = embedding(3, 6);
        let (s, b) = (field(3), field(6));
        for x in s.elements() {
            for y in s.elements() {
                let lhs = embed(s.mul(x, y), &basis);
                let rhs = b.mul(embed(x, &basis), embed(y, &basis));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn roots_persist_in_larger_fields() {
        let f = UniPolyF2::from_exponents(&[6, 4, 3, 1, 0]);
        for k in 1..=4u32 {
            for m in 1..=3u32 {
                let small = roots_in_extension(&f, k).unwrap();
                let big = roots_in_extension(&f, k * m).unwrap();
                let basis = embedding(k, k * m);
                for r in small {
                    assert!(big.contains(&embed(r, &basis)));
                }
            }
        }
    }

    #[test]
    fn ext_gcd_is_monic() {
        let ctx = field(4);
        let a = UniPolyExt::linear(FieldElem(3)).mul(&UniPolyExt::linear(FieldElem(5)), ctx);
        let b = UniPolyExt::linear(FieldElem(3)).scale(FieldElem(7), ctx);
        assert_eq!(a.gcd(&b, ctx), UniPolyExt::linear(FieldElem(3)));
    }
}
