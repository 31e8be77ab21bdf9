//! One census line per curve.

use std::fmt;
use std::str::FromStr;

use crate::cicensus::QuadricTriple;
use crate::error::{Error, Result};
use crate::gf2algebra::UniPolyF2;
use crate::grpact::{Quadric15, Quintic21};
use crate::hypcensus::HypModel;
use crate::trigcensus::SingularityType;
use crate::zeta::{
    ci_point_counts, hyp_point_counts, lpoly_from_counts, newton_polygon, trig_point_counts, IsogenyKey,
    LPoly, NewtonPolygon, PointCounts,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    Hyp,
    Trig,
    Ci,
}

impl Stratum {
    pub const ALL: [Stratum; 3] = [Stratum::Hyp, Stratum::Trig, Stratum::Ci];

    pub fn tag(self) -> &'static str {
        match self {
            Stratum::Hyp => "HYP",
            Stratum::Trig => "TRI",
            Stratum::Ci => "CI",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hyp" => Ok(Stratum::Hyp),
            "trig" | "tri" => Ok(Stratum::Trig),
            "ci" => Ok(Stratum::Ci),
            _ => Err(Error::Parse(format!("unknown stratum {s:?}"))),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stratum::Hyp => "hyp",
            Stratum::Trig => "trig",
            Stratum::Ci => "ci",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveModel {
    Hyp(HypModel),
    Trig { f: Quintic21, sing: SingularityType },
    /// `class` is 0-based.
    Ci { triple: QuadricTriple, class: usize },
}

impl CurveModel {
    pub fn stratum(&self) -> Stratum {
        match self {
            CurveModel::Hyp(_) => Stratum::Hyp,
            CurveModel::Trig { .. } => Stratum::Trig,
            CurveModel::Ci { .. } => Stratum::Ci,
        }
    }

    pub fn point_counts(&self) -> Result<PointCounts> {
        match self {
            CurveModel::Hyp(m) => hyp_point_counts(m),
            CurveModel::Trig { f, sing } => trig_point_counts(*f, *sing),
            CurveModel::Ci { triple, .. } => ci_point_counts(triple),
        }
    }
}

/// A classified curve with its zeta data. `key` is filled in by analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub model: CurveModel,
    pub aut: u64,
    pub counts: PointCounts,
    pub lpoly: LPoly,
    pub np: NewtonPolygon,
    pub key: Option<IsogenyKey>,
}

impl CurveRecord {
    pub fn with_counts(model: CurveModel, aut: u64, counts: PointCounts) -> Result<Self> {
        counts.check_weil()?;
        let lpoly = lpoly_from_counts(&counts)?;
        let np = newton_polygon(&lpoly);
        Ok(CurveRecord { model, aut, counts, lpoly, np, key: None })
    }

    pub fn new(model: CurveModel, aut: u64) -> Result<Self> {
        let counts = model.point_counts()?;
        Self::with_counts(model, aut, counts)
    }

    pub fn stratum(&self) -> Stratum {
        self.model.stratum()
    }

    /// Recomputes the zeta data from the model and checks it against the
    /// stored fields.
    pub fn verify(&self) -> Result<()> {
        let fresh = Self::new(self.model.clone(), self.aut)?;
        if fresh.counts != self.counts || fresh.lpoly != self.lpoly || fresh.np != self.np {
            return Err(Error::Invariant(format!("stale zeta data in record: {self}")));
        }
        if self.lpoly.point_counts() != self.counts {
            return Err(Error::Invariant(format!("L-polynomial does not reproduce counts: {self}")));
        }
        if !self.np.is_symmetric() {
            return Err(Error::Invariant(format!("asymmetric Newton polygon: {self}")));
        }
        if let Some(k) = &self.key {
            if *k != self.counts.isogeny_key() {
                return Err(Error::Invariant(format!("wrong isogeny key: {self}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CurveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.model {
            CurveModel::Hyp(m) => write!(f, "HYP g={} q={} p={}", m.g, m.q.to_hex(), m.p.to_hex())?,
            CurveModel::Trig { f: q, sing } => write!(f, "TRI f={} sing={}", q.to_hex(), sing)?,
            CurveModel::Ci { triple, class } => write!(
                f,
                "CI P={} Q={} R={} class=P{}",
                triple.p.to_hex(),
                triple.q.to_hex(),
                triple.r.to_hex(),
                class + 1
            )?,
        }
        write!(f, " aut={} N={} L={} NP={}", self.aut, self.counts, self.lpoly, self.np)?;
        if let Some(k) = &self.key {
            write!(f, " key={k}")?;
        }
        Ok(())
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| t.parse::<T>().map_err(|_| Error::Parse(format!("bad list entry {t:?} in {s:?}"))))
        .collect()
}

impl FromStr for CurveRecord {
    type Err = Error;
    fn from_str(line: &str) -> Result<Self> {
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().ok_or_else(|| Error::Parse("empty record".into()))?;
        let mut fields = std::collections::HashMap::new();
        for t in tokens {
            let (k, v) = t.split_once('=').ok_or_else(|| Error::Parse(format!("bad field {t:?}")))?;
            fields.insert(k, v);
        }
        let get = |k: &str| {
            fields.get(k).copied().ok_or_else(|| Error::Parse(format!("missing {k}= in {line:?}")))
        };
        let model = match tag {
            "HYP" => {
                let g: u32 = get("g")?.parse().map_err(|_| Error::Parse(format!("bad genus in {line:?}")))?;
                CurveModel::Hyp(HypModel::new(g, UniPolyF2::from_hex(get("q")?)?, UniPolyF2::from_hex(get("p")?)?)?)
            }
            "TRI" => CurveModel::Trig { f: Quintic21::from_hex(get("f")?)?, sing: get("sing")?.parse()? },
            "CI" => {
                let class = get("class")?
                    .strip_prefix('P')
                    .and_then(|c| c.parse::<usize>().ok())
                    .filter(|c| (1..=4).contains(c))
                    .ok_or_else(|| Error::Parse(format!("bad class in {line:?}")))?;
                let triple = QuadricTriple::new(
                    Quadric15::from_hex(get("P")?)?,
                    Quadric15::from_hex(get("Q")?)?,
                    Quadric15::from_hex(get("R")?)?,
                );
                CurveModel::Ci { triple, class: class - 1 }
            }
            _ => return Err(Error::Parse(format!("unknown record tag {tag:?}"))),
        };
        let aut: u64 = get("aut")?.parse().map_err(|_| Error::Parse(format!("bad aut in {line:?}")))?;
        let counts = PointCounts(parse_list(get("N")?)?);
        let mut coeffs = vec![1i64];
        let half: Vec<i64> = parse_list(get("L")?)?;
        let g = half.len();
        coeffs.extend_from_slice(&half);
        for i in (0..g).rev() {
            coeffs.push(coeffs[i] << (g - i));
        }
        let lpoly = LPoly::from_coeffs(coeffs)?;
        let np: NewtonPolygon = get("NP")?.parse()?;
        let key = match fields.get("key") {
            Some(k) => Some(IsogenyKey(parse_list(k)?)),
            None => None,
        };
        Ok(CurveRecord { model, aut, counts, lpoly, np, key })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_all_kinds() {
        let hyp = CurveModel::Hyp(
            HypModel::new(5, UniPolyF2::one(), UniPolyF2::from_exponents(&[11, 10, 8, 7, 6, 5, 4, 3, 2, 1])).unwrap(),
        );
        let f = Quintic21::parse("X4Y+X3Y2+XY4+X3YZ+X2Y2Z+XY3Z+X3Z2+X2YZ2+Y3Z2+XYZ3+Y2Z3").unwrap();
        let trig = CurveModel::Trig { f, sing: SingularityType::SplitNode };
        let q = |s| Quadric15::parse(s).unwrap();
        let ci = CurveModel::Ci {
            triple: QuadricTriple::new(q("Y2+YZ+Z2+XT+ZT"), q("XT+XU+YU+ZU"), q("X2+XY+Y2+XZ+YZ+XU+YU+ZU+TU+U2")),
            class: 2,
        };
        for m in [hyp, trig, ci] {
            let mut r = CurveRecord::new(m, 2).unwrap();
            assert_eq!(r.counts.0, vec![5, 9, 11, 33, 25]);
            let line = r.to_string();
            assert_eq!(line.parse::<CurveRecord>().unwrap(), r, "{line}");
            r.key = Some(r.counts.isogeny_key());
            assert_eq!(r.to_string().parse::<CurveRecord>().unwrap(), r);
            r.verify().unwrap();
        }
    }

    #[test]
    fn hyp_line_format() {
        let m = HypModel::new(5, UniPolyF2::one(), UniPolyF2::from_exponents(&[11, 10, 8, 7, 6, 5, 4, 3, 2, 1])).unwrap();
        let r = CurveRecord::new(CurveModel::Hyp(m), 2).unwrap();
        assert_eq!(
            r.to_string(),
            "HYP g=5 q=1 p=dfe aut=2 N=5,9,11,33,25 L=2,4,6,12,16 NP=1/3,1/3,1/3,1/2,1/2,1/2,1/2,2/3,2/3,2/3"
        );
        assert!("HYP g=5 q=1 aut=2".parse::<CurveRecord>().is_err());
    }
}
