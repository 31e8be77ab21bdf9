//! Trigonal curves as plane quintics with a single node or cusp, up to
//! projective equivalence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grpact::{enumerate_gl, stabilizers, FormSpace, MatGF2, OrbitTable, Quintic21};
use crate::multivar::{groebner, Monomial, MonomialOrder, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    /// Ordinary double point with both tangents rational.
    SplitNode,
    /// Ordinary double point with conjugate tangents over F_4.
    NonSplitNode,
    /// Ordinary cusp.
    Cusp,
}

impl SingularityType {
    pub fn code(self) -> &'static str {
        match self {
            SingularityType::SplitNode => "SN",
            SingularityType::NonSplitNode => "NN",
            SingularityType::Cusp => "CU",
        }
    }

    /// Points of the normalization over F_{2^n} above the singular point.
    pub fn points_above(self, n: u32) -> u64 {
        match self {
            SingularityType::SplitNode => 2,
            SingularityType::NonSplitNode => {
                if n.is_multiple_of(2) {
                    2
                } else {
                    0
                }
            }
            SingularityType::Cusp => 1,
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for SingularityType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SN" => Ok(SingularityType::SplitNode),
            "NN" => Ok(SingularityType::NonSplitNode),
            "CU" => Ok(SingularityType::Cusp),
            _ => Err(Error::Parse(format!("unknown singularity code {s:?}"))),
        }
    }
}

/// A quintic with its rational singular point (bit `i` = coordinate `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigCurve {
    pub f: Quintic21,
    pub point: u8,
    pub sing: SingularityType,
    pub aut: usize,
}

fn partials(f: &MultiPoly) -> [MultiPoly; 3] {
    [f.derivative(0), f.derivative(1), f.derivative(2)]
}

/// Rational points of P^2 where all partials vanish.
pub fn rational_singular_points(f: &MultiPoly) -> Vec<u8> {
    let d = partials(f);
    (1u8..8)
        .filter(|&pt| !f.eval_bits(pt) && d.iter().all(|g| !g.eval_bits(pt)))
        .collect()
}

/// Sets variable `i` to 1.
fn dehomogenize(f: &MultiPoly, i: usize) -> MultiPoly {
    let monos = f
        .terms()
        .iter()
        .map(|m| {
            let mut e = m.exps();
            e[i] = 0;
            Monomial::from_exps(&e[..f.nvars()])
        })
        .collect();
    MultiPoly::from_monomials(f.nvars(), monos)
}

/// Some `M` with `M·e_Z = point`, so that `f(M·x)` is singular at `(0:0:1)`.
fn move_to_origin(point: u8) -> MatGF2 {
    enumerate_gl(3)
        .expect("n = 3")
        .find(|m| m.apply(0b100) == point)
        .expect("GL_3 is transitive on nonzero vectors")
}

/// Coefficients of the quadratic and cubic parts at `(0:0:1)`, indexed by
/// the exponent of `X`.
fn local_parts(g: &MultiPoly) -> ([bool; 3], [bool; 4]) {
    let mut q2 = [false; 3];
    let mut c3 = [false; 4];
    for m in g.terms() {
        let (a, b) = (m.exp(0) as usize, m.exp(1) as usize);
        match a + b {
            2 => q2[a] ^= true,
            3 => c3[a] ^= true,
            _ => {}
        }
    }
    (q2, c3)
}

/// Type of the singularity of `f` at a rational point, or `None` if it is
/// not a node or an ordinary cusp.
pub fn classify_singularity(f: &MultiPoly, point: u8) -> Option<SingularityType> {
    let g = f.matrix_substitute(&move_to_origin(point)).ok()?;
    let (q2, c3) = local_parts(&g);
    // q2 = αx² + βxy + γy² in local coordinates x = X/Z, y = Y/Z
    let (alpha, beta, gamma) = (q2[2], q2[1], q2[0]);
    if beta {
        return Some(if alpha && gamma {
            SingularityType::NonSplitNode
        } else {
            SingularityType::SplitNode
        });
    }
    if !alpha && !gamma {
        return None;
    }
    // q2 = (αx + γy)^2; the cubic part must not vanish on the tangent direction
    let v: (bool, bool) = match (alpha, gamma) {
        (true, false) => (false, true),
        (false, true) => (true, false),
        _ => (true, true),
    };
    let cubic_at_v = (0..4).filter(|&a| c3[a] && (a == 0 || v.0) && (a == 3 || v.1)).count() % 2 == 1;
    cubic_at_v.then_some(SingularityType::Cusp)
}

/// Same classification by searching GL_3(F_2) for a normal form of the
/// quadratic part at `(0:0:1)`, reading the cusp off the `X^3 Z^2`
/// coefficient.
pub fn classify_singularity_by_search(f: &MultiPoly, point: u8) -> Option<SingularityType> {
    let x3z2 = Monomial::from_exps(&[3, 0, 2]);
    for m in enumerate_gl(3).expect("n = 3") {
        if m.apply(0b100) != point {
            continue;
        }
        let g = f.matrix_substitute(&m).ok()?;
        match local_parts(&g).0 {
            [false, true, false] => return Some(SingularityType::SplitNode),
            [true, true, true] => return Some(SingularityType::NonSplitNode),
            // q2 = y^2
            [true, false, false] => {
                return g.contains(x3z2).then_some(SingularityType::Cusp);
            }
            [false, false, false] => return None,
            _ => {}
        }
    }
    None
}

/// True iff `(0:0:1)`-free part of the singular locus is empty after moving
/// `point` to `(0:0:1)`.
fn no_other_singularities(f: &MultiPoly, point: u8) -> bool {
    let g = f.matrix_substitute(&move_to_origin(point)).expect("3 variables");
    let mut gens: Vec<MultiPoly> = partials(&g).into_iter().collect();
    gens.push(g);
    let one = MultiPoly::one(3);
    [0, 1].iter().all(|&i| {
        let affine: Vec<MultiPoly> = gens.iter().map(|h| dehomogenize(h, i)).collect();
        groebner(&affine, MonomialOrder::DegRevLex).contains(&one)
    })
}

/// If `f` has exactly one singular point over the algebraic closure and it
/// is a node or cusp, returns that point and its type.
pub fn unique_singularity(f: &MultiPoly, cusp_by_search: bool) -> Option<(u8, SingularityType)> {
    let pts = rational_singular_points(f);
    if pts.len() != 1 {
        return None;
    }
    let pt = pts[0];
    let sing = if cusp_by_search {
        classify_singularity_by_search(f, pt)?
    } else {
        classify_singularity(f, pt)?
    };
    no_other_singularities(f, pt).then_some((pt, sing))
}

/// Checks one quintic and returns it as a census member.
pub fn trig_curve(f: Quintic21, cusp_by_search: bool) -> Result<Option<TrigCurve>> {
    let poly = f.to_poly();
    let Some((point, sing)) = unique_singularity(&poly, cusp_by_search) else {
        return Ok(None);
    };
    let aut = trig_automorphisms(f)?.len();
    Ok(Some(TrigCurve { f, point, sing, aut }))
}

/// Projective automorphisms of the quintic.
pub fn trig_automorphisms(f: Quintic21) -> Result<Vec<MatGF2>> {
    crate::grpact::stabilizer(FormSpace::quintics(), f.0)
}

/// Orbit representatives of ternary quintics (least word per orbit).
pub fn quintic_representatives() -> Vec<Quintic21> {
    let table = OrbitTable::build(FormSpace::quintics(), &[]);
    table.representatives().iter().map(|&w| Quintic21(w)).collect()
}

/// Census from a list of representatives, ordered as given.
pub fn trig_census_of(reps: &[Quintic21], cusp_by_search: bool) -> Result<Vec<TrigCurve>> {
    let found: Vec<(Quintic21, u8, SingularityType)> = reps
        .iter()
        .filter_map(|&f| unique_singularity(&f.to_poly(), cusp_by_search).map(|(p, s)| (f, p, s)))
        .collect();
    let words: Vec<u32> = found.iter().map(|(f, _, _)| f.0).collect();
    let stabs = stabilizers(FormSpace::quintics(), &words)?;
    Ok(found
        .into_iter()
        .zip(stabs)
        .map(|((f, point, sing), st)| TrigCurve { f, point, sing, aut: st.len() })
        .collect())
}

/// Complete list of trigonal genus-5 curves over F_2, by quintic word.
pub fn run_trig_census(cusp_by_search: bool) -> Result<Vec<TrigCurve>> {
    trig_census_of(&quintic_representatives(), cusp_by_search)
}

/// The census representative projectively equivalent to `f`.
pub fn canonical_quintic(f: Quintic21) -> Quintic21 {
    let space = FormSpace::quintics();
    enumerate_gl(3)
        .expect("n = 3")
        .map(|m| crate::grpact::act(&crate::grpact::LinearRep::of(space, &m), f.0))
        .min()
        .map(Quintic21)
        .expect("GL_3 is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quintic(s: &str) -> MultiPoly {
        MultiPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn singularity_types() {
        // local equations at (0:0:1): xy, x²+xy+y², y²+x³, y² + y³
        let cases = [
            ("XYZ3+X5+Y5", Some(SingularityType::SplitNode)),
            ("X2Z3+XYZ3+Y2Z3+X5+Y5", Some(SingularityType::NonSplitNode)),
            ("Y2Z3+X3Z2+X5+Y5", Some(SingularityType::Cusp)),
            ("Y2Z3+Y3Z2+X5", None),
            ("X3Z2+Y5", None),
        ];
        for (s, want) in cases {
            let f = quintic(s);
            assert_eq!(classify_singularity(&f, 0b100), want, "{s}");
            assert_eq!(classify_singularity_by_search(&f, 0b100), want, "{s}");
        }
    }

    #[test]
    fn example_quintic_is_trigonal() {
        let f = Quintic21::parse("X4Y+X3Y2+XY4+X3YZ+X2Y2Z+XY3Z+X3Z2+X2YZ2+Y3Z2+XYZ3+Y2Z3").unwrap();
        let c = trig_curve(f, false).unwrap().expect("one node or cusp");
        assert_eq!(c.point, 0b100);
    }
}
