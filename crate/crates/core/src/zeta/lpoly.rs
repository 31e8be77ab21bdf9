use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Point counts `N_1..N_g` over `F_2, F_4, …, F_{2^g}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointCounts(pub Vec<u64>);

impl PointCounts {
    pub fn genus(&self) -> usize {
        self.0.len()
    }

    /// `s_i = 2^i + 1 − N_i`, the power sums of the Frobenius eigenvalues.
    pub fn frobenius_traces(&self) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &n)| (1i64 << (i + 1)) + 1 - n as i64)
            .collect()
    }

    /// Weil bound `(2^i + 1 − N_i)^2 ≤ 4g^2 2^i` for every `i`.
    pub fn check_weil(&self) -> Result<()> {
        let g = self.genus() as i128;
        for (i, s) in self.frobenius_traces().into_iter().enumerate() {
            let s = s as i128;
            if s * s > 4 * g * g * (1i128 << (i + 1)) {
                return Err(Error::WeilBound(format!("N_{} = {} in {:?}", i + 1, self.0[i], self.0)));
            }
        }
        Ok(())
    }

    /// The isogeny key `(s_1, …, s_g)`.
    pub fn isogeny_key(&self) -> IsogenyKey {
        IsogenyKey(self.frobenius_traces())
    }
}

impl fmt::Display for PointCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// Counting invariant of a Jacobian's isogeny class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsogenyKey(pub Vec<i64>);

impl fmt::Display for IsogenyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub fn isogeny_key(c: &PointCounts) -> IsogenyKey {
    c.isogeny_key()
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, v: &[T]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// `L(T) = Σ c_i T^i` of degree `2g` over F_2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LPoly {
    coeffs: Vec<i64>,
}

impl LPoly {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn genus(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    /// `c_1..c_g`, which determine the rest by the functional equation.
    pub fn first_half(&self) -> &[i64] {
        &self.coeffs[1..=self.genus()]
    }

    /// Recovers `N_1..N_g` from the coefficients (inverse Newton identities).
    pub fn point_counts(&self) -> PointCounts {
        let g = self.genus();
        let c: Vec<BigInt> = self.coeffs.iter().map(|&x| BigInt::from(x)).collect();
        // s_k = −k c_k − Σ_{i=1}^{k−1} s_i c_{k−i}
        let mut s: Vec<BigInt> = Vec::with_capacity(g);
        for k in 1..=g {
            let mut acc = -BigInt::from(k) * &c[k];
            for i in 1..k {
                acc -= &s[i - 1] * &c[k - i];
            }
            s.push(acc);
        }
        PointCounts(
            s.iter()
                .enumerate()
                .map(|(i, si)| {
                    let n = BigInt::from((1i64 << (i + 1)) + 1) - si;
                    n.to_u64().expect("nonnegative count")
                })
                .collect(),
        )
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) || coeffs.first() != Some(&1) {
            return Err(Error::Parse(format!("not an L-polynomial: {coeffs:?}")));
        }
        Ok(LPoly { coeffs })
    }
}

impl fmt::Display for LPoly {
    /// Writes `c_1..c_g`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.first_half())
    }
}

/// Newton's identities `k c_k = −Σ_{i=1}^k s_i c_{k−i}` for `k ≤ g`, then
/// `c_{2g−i} = 2^{g−i} c_i`.
pub fn lpoly_from_counts(counts: &PointCounts) -> Result<LPoly> {
    let g = counts.genus();
    let s: Vec<BigInt> = counts.frobenius_traces().into_iter().map(BigInt::from).collect();
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=g {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            acc -= &s[i - 1] * &c[k - i];
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NonIntegral(k));
        }
        c.push(q);
    }
    for i in (0..g).rev() {
        let v = &c[i] * (BigInt::one() << (g - i));
        c.push(v);
    }
    let coeffs = c
        .iter()
        .enumerate()
        .map(|(i, x)| x.to_i64().ok_or(Error::NonIntegral(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LPoly { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_traces_give_supersingular_shape() {
        let counts = PointCounts((1..=5).map(|i| (1u64 << i) + 1).collect());
        let l = lpoly_from_counts(&counts).unwrap();
        let mut want = [0i64; 11];
        want[0] = 1;
        want[10] = 32;
        assert_eq!(l.coeffs(), &want[..]);
    }

    #[test]
    fn worked_example() {
        let counts = PointCounts(vec![5, 9, 11, 33, 25]);
        assert_eq!(counts.frobenius_traces(), vec![-2, -4, -2, -16, 8]);
        let l = lpoly_from_counts(&counts).unwrap();
        assert_eq!(l.coeffs(), &[1, 2, 4, 6, 12, 16, 24, 24, 32, 32, 32]);
        assert_eq!(l.point_counts(), counts);
    }

    #[test]
    fn non_integral_is_rejected() {
        // s_1 = 1, s_2 = 0 gives 2 c_2 = -1
        let counts = PointCounts(vec![2, 5]);
        assert!(matches!(lpoly_from_counts(&counts), Err(Error::NonIntegral(2))));
    }

    #[test]
    fn weil_bound() {
        assert!(PointCounts(vec![5, 9, 11, 33, 25]).check_weil().is_ok());
        assert!(PointCounts(vec![20, 9, 11, 33, 25]).check_weil().is_err());
    }
}
