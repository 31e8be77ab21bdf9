use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::lpoly::LPoly;
use crate::error::{Error, Result};

/// Slopes of the 2-adic Newton polygon, one per unit of horizontal length,
/// in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonPolygon(pub Vec<Ratio<i64>>);

impl NewtonPolygon {
    pub fn slopes(&self) -> &[Ratio<i64>] {
        &self.0
    }

    pub fn is_ordinary(&self) -> bool {
        self.0.iter().all(|s| *s.numer() == 0 || s == &Ratio::from_integer(1))
    }

    pub fn is_supersingular(&self) -> bool {
        self.0.iter().all(|s| *s == Ratio::new(1, 2))
    }

    /// `λ ↦ 1 − λ` maps the multiset to itself.
    pub fn is_symmetric(&self) -> bool {
        let mut dual: Vec<_> = self.0.iter().map(|s| Ratio::from_integer(1) - s).collect();
        dual.sort();
        dual == self.0
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for NewtonPolygon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut slopes = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.split_once('/') {
                    Some((a, b)) => {
                        let a: i64 = a.parse().map_err(|_| Error::Parse(format!("slope {t:?}")))?;
                        let b: i64 = b.parse().map_err(|_| Error::Parse(format!("slope {t:?}")))?;
                        if b == 0 {
                            return Err(Error::Parse(format!("slope {t:?}")));
                        }
                        Ok(Ratio::new(a, b))
                    }
                    None => t
                        .parse::<i64>()
                        .map(Ratio::from_integer)
                        .map_err(|_| Error::Parse(format!("slope {t:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        slopes.sort();
        Ok(NewtonPolygon(slopes))
    }
}

fn v2(x: i64) -> u32 {
    x.trailing_zeros()
}

/// Lower convex hull of `(i, v_2(c_i))` over the nonzero coefficients.
pub fn newton_polygon(l: &LPoly) -> NewtonPolygon {
    let pts: Vec<(i64, i64)> = l
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i as i64, v2(c) as i64))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the segment a–p
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut slopes = Vec::new();
    for w in hull.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        for _ in 0..dx {
            slopes.push(Ratio::new(dy, dx));
        }
    }
    NewtonPolygon(slopes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(c: &[i64]) -> String {
        newton_polygon(&LPoly::from_coeffs(c.to_vec()).unwrap()).to_string()
    }

    #[test]
    fn examples() {
        let mut ss = vec![0i64; 11];
        ss[0] = 1;
        ss[10] = 32;
        assert_eq!(np(&ss), "1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2");
        assert_eq!(
            np(&[1, 2, 4, 6, 12, 16, 24, 24, 32, 32, 32]),
            "1/3,1/3,1/3,1/2,1/2,1/2,1/2,2/3,2/3,2/3"
        );
        let ord = [1, 3, 1, 5, 2, 7, 64, 40, 16, 96, 32];
        assert_eq!(np(&ord), "0,0,0,0,0,1,1,1,1,1");
    }

    #[test]
    fn parse_round_trip() {
        let p: NewtonPolygon = "0,1/3,1/3,1/3,1/2,1/2,2/3,2/3,2/3,1".parse().unwrap();
        assert!(p.is_symmetric());
        assert_eq!(p.to_string(), "0,1/3,1/3,1/3,1/2,1/2,2/3,2/3,2/3,1");
    }
}
