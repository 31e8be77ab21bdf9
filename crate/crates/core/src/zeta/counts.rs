//! Point counts over F_{2^n} for the three kinds of models.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cicensus::smooth::{projective_points, quadric_pairs};
use crate::cicensus::QuadricTriple;
use crate::error::{Error, Result};
use crate::gf2algebra::{artin_schreier_count, field, FieldCtx, FieldElem, UniPolyF2};
use crate::grpact::{FormSpace, Quintic21};
use crate::hypcensus::HypModel;
use crate::trigcensus::SingularityType;

use super::lpoly::PointCounts;

/// Largest extension degree the counters accept.
pub const MAX_COUNT_DEGREE: u32 = 8;

fn check_degree(n: u32) -> Result<()> {
    if (1..=MAX_COUNT_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange(n))
    }
}

fn eval_f2_poly(f: &UniPolyF2, x: FieldElem, ctx: &FieldCtx) -> FieldElem {
    let Some(d) = f.degree() else { return FieldElem::ZERO };
    let mut acc = FieldElem::ZERO;
    for i in (0..=d).rev() {
        acc = ctx.mul(acc, x);
        if f.coeff(i) {
            acc = ctx.add(acc, FieldElem::ONE);
        }
    }
    acc
}

/// `#C(F_{2^n})` for `y^2 + q y = p`: the affine fibres plus the points over
/// `x = ∞`, read from the chart `(1/x, y/x^{g+1})`.
pub fn count_points_hyp(m: &HypModel, n: u32) -> Result<u64> {
    check_degree(n)?;
    let ctx = field(n);
    let g = m.g as usize;
    let affine: u64 = ctx
        .elements()
        .map(|x| {
            let b = eval_f2_poly(&m.q, x, ctx);
            let c = eval_f2_poly(&m.p, x, ctx);
            artin_schreier_count(b, c, ctx) as u64
        })
        .sum();
    let b = ctx.from_bit(m.q.coeff(g + 1));
    let c = ctx.from_bit(m.p.coeff(2 * g + 2));
    Ok(affine + artin_schreier_count(b, c, ctx) as u64)
}

/// `N_1..N_g` of a hyperelliptic model.
pub fn hyp_point_counts(m: &HypModel) -> Result<PointCounts> {
    (1..=m.g).map(|n| count_points_hyp(m, n)).collect::<Result<_>>().map(PointCounts)
}

/// Points of P^2(F_{2^n}) on the quintic.
pub fn count_plane_quintic(f: Quintic21, n: u32) -> Result<u64> {
    check_degree(n)?;
    let ctx = field(n);
    let space = FormSpace::quintics();
    let monos: Vec<[u8; 3]> = (0..space.dim())
        .filter(|&b| (f.0 >> b) & 1 == 1)
        .map(|b| {
            let e = space.monomial_at_bit(b).exps();
            [e[0], e[1], e[2]]
        })
        .collect();
    let q = 1u32 << n;
    let mut count = 0;
    let mut check = |p: [FieldElem; 3]| {
        let pows: Vec<[FieldElem; 6]> = p
            .iter()
            .map(|&x| {
                let mut t = [FieldElem::ONE; 6];
                for i in 1..6 {
                    t[i] = ctx.mul(t[i - 1], x);
                }
                t
            })
            .collect();
        let mut acc = FieldElem::ZERO;
        for e in &monos {
            let v = ctx.mul(ctx.mul(pows[0][e[0] as usize], pows[1][e[1] as usize]), pows[2][e[2] as usize]);
            acc = ctx.add(acc, v);
        }
        if acc.is_zero() {
            count += 1;
        }
    };
    check([FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO]);
    for y in 0..q {
        check([FieldElem(y), FieldElem::ONE, FieldElem::ZERO]);
    }
    for x in 0..q {
        for y in 0..q {
            check([FieldElem(x), FieldElem(y), FieldElem::ONE]);
        }
    }
    Ok(count)
}

/// `#C(F_{2^n})` of the normalization of a quintic with one rational node or
/// cusp.
pub fn count_points_trig(f: Quintic21, sing: SingularityType, n: u32) -> Result<u64> {
    let plane = count_plane_quintic(f, n)?;
    Ok(plane - 1 + sing.points_above(n))
}

pub fn trig_point_counts(f: Quintic21, sing: SingularityType) -> Result<PointCounts> {
    (1..=5).map(|n| count_points_trig(f, sing, n)).collect::<Result<_>>().map(PointCounts)
}

/// Points of `Z(P)` in P^4 over F_2, …, F_{2^5}, stored bitsliced: for each
/// point and each bit of the field elements, the 15-bit mask of quadric
/// monomials whose value has that bit set. A quadric vanishes at the point
/// iff every mask meets it in an even number of bits.
#[derive(Clone, Debug)]
pub struct QuadricPoints {
    p: u16,
    masks: Vec<Vec<u16>>,
}

impl QuadricPoints {
    pub fn new(p: u16, max_n: u32) -> Result<Self> {
        check_degree(max_n)?;
        let pairs = quadric_pairs();
        let mut masks = Vec::with_capacity(max_n as usize);
        for n in 1..=max_n {
            let ctx = field(n);
            let mut out = Vec::new();
            for pt in projective_points(n) {
                let mut m = vec![0u16; n as usize];
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    let v = ctx.mul(pt[i], pt[j]).0;
                    for (bit, mb) in m.iter_mut().enumerate() {
                        *mb |= (((v >> bit) & 1) as u16) << b;
                    }
                }
                if vanishes(&m, p) {
                    out.extend_from_slice(&m);
                }
            }
            masks.push(out);
        }
        Ok(QuadricPoints { p, masks })
    }

    pub fn quadric(&self) -> u16 {
        self.p
    }

    /// Number of points of `Z(P, Q, R)` over F_{2^n}.
    pub fn count(&self, q: u16, r: u16, n: u32) -> Result<u64> {
        let list = self.masks.get(n as usize - 1).ok_or(Error::DegreeOutOfRange(n))?;
        Ok(list
            .chunks_exact(n as usize)
            .filter(|m| vanishes(m, q) && vanishes(m, r))
            .count() as u64)
    }
}

#[inline]
fn vanishes(masks: &[u16], w: u16) -> bool {
    masks.iter().all(|&m| (m & w).count_ones().is_multiple_of(2))
}

/// `#Z(P, Q, R)(F_{2^n})` by a scan of P^4.
pub fn count_points_ci(t: &QuadricTriple, n: u32) -> Result<u64> {
    check_degree(n)?;
    let ctx = field(n);
    let pairs = quadric_pairs();
    let ws = t.quadrics().map(|q| q.0);
    Ok(projective_points(n)
        .iter()
        .filter(|pt| {
            ws.iter().all(|&w| {
                let mut acc = 0u32;
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if (w >> b) & 1 == 1 {
                        acc ^= ctx.mul(pt[i], pt[j]).0;
                    }
                }
                acc == 0
            })
        })
        .count() as u64)
}

/// `N_1..N_5` using points of `Z(P)` computed once.
pub fn ci_point_counts_with(pts: &QuadricPoints, t: &QuadricTriple) -> Result<PointCounts> {
    if pts.quadric() != t.p.0 {
        return Err(Error::Invariant(format!("point cache for {:04x} used with {}", pts.quadric(), t)));
    }
    (1..=5).map(|n| pts.count(t.q.0, t.r.0, n)).collect::<Result<_>>().map(PointCounts)
}

/// Point caches by first quadric; census records only use a handful.
fn cached_points(p: u16) -> Result<Arc<QuadricPoints>> {
    const MAX_CACHED: usize = 64;
    static CACHE: OnceLock<Mutex<HashMap<u16, Arc<QuadricPoints>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(pts) = cache.lock().expect("cache lock").get(&p) {
        return Ok(Arc::clone(pts));
    }
    let pts = Arc::new(QuadricPoints::new(p, 5)?);
    let mut map = cache.lock().expect("cache lock");
    if map.len() >= MAX_CACHED {
        map.clear();
    }
    Ok(Arc::clone(map.entry(p).or_insert(pts)))
}

pub fn ci_point_counts(t: &QuadricTriple) -> Result<PointCounts> {
    let pts = cached_points(t.p.0)?;
    ci_point_counts_with(&pts, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpact::Quadric15;

    #[test]
    fn hyperelliptic_examples() {
        let p = UniPolyF2::from_exponents(&[11, 10, 8, 7, 6, 5, 4, 3, 2, 1]);
        let m = HypModel::new(5, UniPolyF2::one(), p).unwrap();
        assert_eq!(hyp_point_counts(&m).unwrap().0, vec![5, 9, 11, 33, 25]);
        let m = HypModel::new(5, UniPolyF2::one(), UniPolyF2::from_exponents(&[11])).unwrap();
        assert_eq!(count_points_hyp(&m, 1).unwrap(), 3);
    }

    #[test]
    fn trigonal_example() {
        let f = Quintic21::parse("X4Y+X3Y2+XY4+X3YZ+X2Y2Z+XY3Z+X3Z2+X2YZ2+Y3Z2+XYZ3+Y2Z3").unwrap();
        let (_, sing) = crate::trigcensus::unique_singularity(&f.to_poly(), false).unwrap();
        assert_eq!(trig_point_counts(f, sing).unwrap().0, vec![5, 9, 11, 33, 25]);
    }

    #[test]
    fn complete_intersection_examples() {
        let q = |s| Quadric15::parse(s).unwrap();
        let t = QuadricTriple::new(
            q("Y2+YZ+Z2+XT+ZT"),
            q("XT+XU+YU+ZU"),
            q("X2+XY+Y2+XZ+YZ+XU+YU+ZU+TU+U2"),
        );
        assert_eq!(ci_point_counts(&t).unwrap().0, vec![5, 9, 11, 33, 25]);
        for n in 1..=3 {
            assert_eq!(count_points_ci(&t, n).unwrap(), ci_point_counts(&t).unwrap().0[n as usize - 1]);
        }
        let t = QuadricTriple::new(
            q("Y2+XZ+YZ"),
            q("XY+XZ+YT+ZT+XU+ZU+U2"),
            q("XY+XZ+YZ+Z2+XT+ZT+T2+YU+ZU"),
        );
        assert_eq!(count_points_ci(&t, 1).unwrap(), 9);
    }
}
