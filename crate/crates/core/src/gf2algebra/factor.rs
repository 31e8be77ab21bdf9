use super::poly::UniPolyF2;
use crate::error::{Error, Result};

/// Irreducible factorization over F_2, sorted by factor (degree first).
/// Squarefree decomposition, then distinct-degree, then equal-degree
/// splitting with trace maps over a fixed sequence of test polynomials.
pub fn factorize(f: &UniPolyF2) -> Result<Vec<(UniPolyF2, u32)>> {
    if f.is_zero() {
        return Err(Error::FactorZero);
    }
    let mut out: Vec<(UniPolyF2, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for (g, d) in distinct_degree(&part) {
            let mut pieces = Vec::new();
            equal_degree(&g, d, &mut pieces);
            out.extend(pieces.into_iter().map(|p| (p, mult)));
        }
    }
    out.sort();
    let mut merged: Vec<(UniPolyF2, u32)> = Vec::with_capacity(out.len());
    for (p, m) in out {
        match merged.last_mut() {
            Some((q, n)) if *q == p => *n += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(merged)
}

/// Squarefree parts `(g_i, i)` with `f = Π g_i^i`; the `g_i` are pairwise coprime.
pub fn squarefree_decomposition(f: &UniPolyF2) -> Vec<(UniPolyF2, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        let root = f.sqrt().expect("zero derivative means a square");
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, 2 * m));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        let root = c.sqrt().expect("remaining cofactor is a square");
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, 2 * m));
        }
    }
    out
}

/// Splits a squarefree polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &UniPolyF2) -> Vec<(UniPolyF2, usize)> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = UniPolyF2::x();
    let mut h = x.rem(&g);
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.square().rem(&g);
        let fac = (&h + &x).gcd(&g);
        if !fac.is_one() {
            g = g.div_exact(&fac);
            h = h.rem(&g);
            out.push((fac, d));
        }
        d += 1;
    }
    if let Some(deg) = g.degree().filter(|&deg| deg > 0) {
        out.push((g, deg));
    }
    out
}

fn equal_degree(f: &UniPolyF2, d: usize, out: &mut Vec<UniPolyF2>) {
    let n = f.degree().expect("nonzero");
    if n == d {
        out.push(f.clone());
        return;
    }
    // Tr(a) mod each factor lies in F_2; some a separates any two factors.
    let mut a_bits: u64 = 2;
    loop {
        let a = UniPolyF2::from_u64(a_bits).rem(f);
        let mut term = a.clone();
        let mut tr = a;
        for _ in 1..d {
            term = term.square().rem(f);
            tr += &term;
        }
        let h = tr.gcd(f);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = f.div_exact(&h);
            equal_degree(&h, d, out);
            equal_degree(&other, d, out);
            return;
        }
        a_bits += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2algebra::is_irreducible;

    fn p(bits: u64) -> UniPolyF2 {
        UniPolyF2::from_u64(bits)
    }

    #[test]
    fn small_examples() {
        assert_eq!(factorize(&p(0b110)).unwrap(), vec![(p(0b10), 1), (p(0b11), 1)]);
        assert_eq!(factorize(&p(0b111)).unwrap(), vec![(p(0b111), 1)]);
        let f = UniPolyF2::from_exponents(&[6, 3, 0]);
        assert_eq!(factorize(&f).unwrap(), vec![(f.clone(), 1)]);
        assert!(factorize(&UniPolyF2::zero()).is_err());
        assert!(factorize(&UniPolyF2::one()).unwrap().is_empty());
    }

    #[test]
    fn repeated_factors() {
        // x^4 (x+1)^3 (x^2+x+1)^2
        let f = &(&p(0b10).pow(4) * &p(0b11).pow(3)) * &p(0b111).pow(2);
        assert_eq!(
            factorize(&f).unwrap(),
            vec![(p(0b10), 4), (p(0b11), 3), (p(0b111), 2)]
        );
    }

    #[test]
    fn all_factors_irreducible_up_to_degree_12() {
        for bits in 2u64..(1 << 12) {
            let f = p(bits);
            let fac = factorize(&f).unwrap();
            let mut prod = UniPolyF2::one();
            for (g, m) in &fac {
                assert!(is_irreducible(g));
                prod = &prod * &g.pow(*m as u64);
            }
            assert_eq!(prod, f);
        }
    }
}
