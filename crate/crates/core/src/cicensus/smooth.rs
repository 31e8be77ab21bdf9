//! Smoothness of the intersection of three quadrics in P^4.

use std::sync::OnceLock;

use crate::gf2algebra::{field, FieldCtx, FieldElem};
use crate::grpact::{FormSpace, Quadric15};
use crate::multivar::{
    cone_dimension, groebner, jacobian_minors, projectively_empty_up_to, MonomialOrder, MultiPoly,
};

/// Degree at which an empty singular locus is certified. Three quadrics and
/// two general minors form a regular sequence of degrees (2, 2, 2, 3, 3)
/// when the locus is empty, and its quotient vanishes from degree 8 on.
pub const CERTIFICATE_DEGREE: u32 = 8;

/// Variable pair `(i, j)` with `i ≤ j` of each quadric coordinate bit.
pub(crate) fn quadric_pairs() -> &'static [(usize, usize); 15] {
    static T: OnceLock<[(usize, usize); 15]> = OnceLock::new();
    T.get_or_init(|| {
        let space = FormSpace::quadrics();
        let mut t = [(0, 0); 15];
        for (b, slot) in t.iter_mut().enumerate() {
            let e = space.monomial_at_bit(b).exps();
            let vars: Vec<usize> = (0..5).flat_map(|v| std::iter::repeat_n(v, e[v] as usize)).collect();
            *slot = (vars[0], vars[1]);
        }
        t
    })
}

/// Partial derivatives of a quadric as linear forms (bit `j` = coefficient
/// of `x_j`).
pub(crate) fn gradient(w: u16) -> [u8; 5] {
    let mut g = [0u8; 5];
    for (b, &(i, j)) in quadric_pairs().iter().enumerate() {
        if (w >> b) & 1 == 1 && i != j {
            g[i] ^= 1 << j;
            g[j] ^= 1 << i;
        }
    }
    g
}

/// Bit `b` set iff the monomial at bit `b` is nonzero at the F_2-point `v`.
fn monomial_support_mask(v: u8) -> u16 {
    let mut m = 0u16;
    for (b, &(i, j)) in quadric_pairs().iter().enumerate() {
        if (v >> i) & 1 == 1 && (v >> j) & 1 == 1 {
            m |= 1 << b;
        }
    }
    m
}

fn rank3(rows: &mut [[FieldElem; 5]; 3], ctx: &FieldCtx) -> usize {
    let mut rank = 0;
    for col in 0..5 {
        let Some(piv) = (rank..3).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, piv);
        let inv = ctx.inv(rows[rank][col]).expect("nonzero pivot");
        for r in 0..3 {
            if r != rank && !rows[r][col].is_zero() {
                let f = ctx.mul(rows[r][col], inv);
                for c in 0..5 {
                    let t = ctx.mul(f, rows[rank][c]);
                    rows[r][c] = ctx.add(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == 3 {
            break;
        }
    }
    rank
}

/// Normalized representatives of P^4(F_{2^k}).
pub fn projective_points(k: u32) -> Vec<[FieldElem; 5]> {
    let q = 1u32 << k;
    let mut out = Vec::new();
    for lead in 0..5 {
        let free = 4 - lead;
        let total = (q as u64).pow(free as u32);
        for idx in 0..total {
            let mut p = [FieldElem::ZERO; 5];
            p[lead] = FieldElem::ONE;
            let mut rest = idx;
            for c in p.iter_mut().skip(lead + 1) {
                *c = FieldElem((rest % q as u64) as u32);
                rest /= q as u64;
            }
            out.push(p);
        }
    }
    out
}

fn eval_quadric(w: u16, p: &[FieldElem; 5], ctx: &FieldCtx) -> FieldElem {
    let mut acc = FieldElem::ZERO;
    for (b, &(i, j)) in quadric_pairs().iter().enumerate() {
        if (w >> b) & 1 == 1 {
            acc = ctx.add(acc, ctx.mul(p[i], p[j]));
        }
    }
    acc
}

fn eval_linear(mask: u8, p: &[FieldElem; 5]) -> FieldElem {
    let mut acc = 0;
    for (j, x) in p.iter().enumerate() {
        if (mask >> j) & 1 == 1 {
            acc ^= x.0;
        }
    }
    FieldElem(acc)
}

/// A singular point of `Z(q1, q2, q3)` defined over F_2.
pub fn has_rational_singular_point(qs: [Quadric15; 3]) -> bool {
    let grads: Vec<[u8; 5]> = qs.iter().map(|q| gradient(q.0)).collect();
    (1u8..32).any(|v| {
        let m = monomial_support_mask(v);
        if qs.iter().any(|q| (q.0 & m).count_ones() % 2 == 1) {
            return false;
        }
        // rows of the Jacobian at v as 5-bit masks, bit k = ∂_k
        let mut rows: Vec<u8> = grads
            .iter()
            .map(|g| (0..5).fold(0u8, |acc, k| acc | ((((g[k] & v).count_ones() & 1) as u8) << k)))
            .collect();
        gf2_rank(&mut rows) < 3
    })
}

fn gf2_rank(rows: &mut [u8]) -> usize {
    let mut rank = 0;
    for bit in 0..8 {
        let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> bit) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// A singular point of `Z(q1, q2, q3)` defined over F_{2^k}.
pub fn has_singular_point_over(qs: [Quadric15; 3], k: u32) -> bool {
    let ctx = field(k);
    let grads: Vec<[u8; 5]> = qs.iter().map(|q| gradient(q.0)).collect();
    projective_points(k).iter().any(|p| {
        if qs.iter().any(|q| !eval_quadric(q.0, p, ctx).is_zero()) {
            return false;
        }
        let mut rows = [[FieldElem::ZERO; 5]; 3];
        for (r, g) in grads.iter().enumerate() {
            for c in 0..5 {
                rows[r][c] = eval_linear(g[c], p);
            }
        }
        rank3(&mut rows, ctx) < 3
    })
}

/// Certificate that `Z(q1, q2, q3)` is a smooth curve over the algebraic
/// closure: no singular point over F_2 or F_4, empty singular scheme, and a
/// one-dimensional projective locus.
pub fn is_smooth_ci(qs: [Quadric15; 3]) -> bool {
    if has_rational_singular_point(qs) || has_singular_point_over(qs, 2) {
        return false;
    }
    let polys: Vec<MultiPoly> = qs.iter().map(|q| q.to_poly()).collect();
    let mut gens = polys.clone();
    gens.extend(jacobian_minors(&polys[0], &polys[1], &polys[2]));
    if !projectively_empty_up_to(&gens, CERTIFICATE_DEGREE) {
        return false;
    }
    cone_dimension(&groebner(&polys, MonomialOrder::DegRevLex)) == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quadric15 {
        Quadric15::parse(s).unwrap()
    }

    #[test]
    fn gradient_of_product() {
        // ∂(XY)/∂X = Y, ∂(XY)/∂Y = X
        let g = gradient(q("XY").0);
        assert_eq!(g, [0b10, 0b01, 0, 0, 0]);
        assert_eq!(gradient(q("Z2").0), [0; 5]);
    }

    #[test]
    fn point_counts_of_projective_space() {
        assert_eq!(projective_points(1).len(), 31);
        assert_eq!(projective_points(2).len(), 341);
    }

    #[test]
    fn known_smooth_curve() {
        let t = [
            q("Y2+XZ+YZ"),
            q("XY+XZ+YT+ZT+XU+ZU+U2"),
            q("XY+XZ+YZ+Z2+XT+ZT+T2+YU+ZU"),
        ];
        assert!(is_smooth_ci(t));
        // a cone over a curve is singular at its vertex
        let cone = [q("XY+Z2"), q("XZ+T2"), q("YT+Z2+XT")];
        assert!(!is_smooth_ci(cone));
    }
}
