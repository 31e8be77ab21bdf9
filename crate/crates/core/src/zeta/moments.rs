use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lpoly::PointCounts;
use crate::error::{Error, Result};

/// A partition `[1^{λ_1}, 2^{λ_2}, …]` given by its multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    /// `mult[i]` is the multiplicity of the part `i + 1`.
    pub mult: Vec<u32>,
}

impl PartitionSpec {
    pub fn from_parts(parts: &[usize]) -> Self {
        let len = parts.iter().copied().max().unwrap_or(0);
        let mut mult = vec![0; len];
        for &p in parts {
            if p > 0 {
                mult[p - 1] += 1;
            }
        }
        PartitionSpec { mult }
    }

    pub fn weight(&self) -> usize {
        self.mult.iter().enumerate().map(|(i, &m)| (i + 1) * m as usize).sum()
    }

    /// Largest part.
    pub fn length(&self) -> usize {
        self.mult.iter().rposition(|&m| m > 0).map_or(0, |i| i + 1)
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|p| p as u32)
}

/// Accepts `[1^2,2]`, `1²,2` and `1^2 2`.
impl FromStr for PartitionSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad partition {s:?}"));
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (base, exp) = if let Some((b, e)) = tok.split_once('^') {
                (b.to_string(), e.parse::<u32>().map_err(|_| bad())?)
            } else {
                let split = tok.find(|c| superscript_digit(c).is_some()).unwrap_or(tok.len());
                let exp = if split == tok.len() {
                    1
                } else {
                    tok[split..].chars().try_fold(0u32, |acc, c| superscript_digit(c).map(|d| acc * 10 + d)).ok_or_else(bad)?
                };
                (tok[..split].to_string(), exp)
            };
            let part: usize = base.parse().map_err(|_| bad())?;
            if part == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(part, exp as usize));
        }
        Ok(Self::from_parts(&parts))
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (i, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{}", i + 1)?;
            } else {
                write!(f, "{}^{}", i + 1, m)?;
            }
        }
        write!(f, "]")
    }
}

/// `Σ_C (1/|Aut C|) Π_i a_i(C)^{λ_i}` with `a_i = 2^i + 1 − N_i`.
pub fn bergstrom_moment<'a>(
    lambda: &PartitionSpec,
    curves: impl IntoIterator<Item = (u64, &'a PointCounts)>,
) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (aut, counts) in curves {
        if lambda.length() > counts.genus() {
            return Err(Error::PartitionTooLong(lambda.length(), counts.genus()));
        }
        let a = counts.frobenius_traces();
        let mut prod = BigInt::one();
        for (i, &m) in lambda.mult.iter().enumerate() {
            prod *= BigInt::from(a[i]).pow(m);
        }
        total += BigRational::new(prod, BigInt::from(aut));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a: PartitionSpec = "[1^2,2]".parse().unwrap();
        let b: PartitionSpec = "1²,2".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mult, vec![2, 1]);
        assert_eq!(a.weight(), 4);
        assert_eq!(a.to_string(), "[1^2,2]");
        let c: PartitionSpec = "[1,2,5²]".parse().unwrap();
        assert_eq!(c.weight(), 13);
        assert_eq!(c.length(), 5);
        assert!("[0]".parse::<PartitionSpec>().is_err());
    }

    #[test]
    fn too_long_is_rejected() {
        let c = PointCounts(vec![3, 5]);
        let l: PartitionSpec = "[3]".parse().unwrap();
        assert!(matches!(bergstrom_moment(&l, [(2, &c)]), Err(Error::PartitionTooLong(3, 2))));
    }

    #[test]
    fn weights_by_automorphisms() {
        let c = PointCounts(vec![1, 5]); // a_1 = 2
        let l: PartitionSpec = "[1^2]".parse().unwrap();
        let m = bergstrom_moment(&l, [(2, &c), (4, &c)]).unwrap();
        assert_eq!(m, BigRational::from_integer(3.into()));
    }
}
