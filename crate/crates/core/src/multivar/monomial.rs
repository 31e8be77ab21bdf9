use std::cmp::Ordering;

pub const MAX_VARS: usize = 5;
pub const VAR_NAMES: [char; MAX_VARS] = ['X', 'Y', 'Z', 'T', 'U'];

const EXP_MASK: u64 = 0xFF_FFFF_FFFF;
const HIGH_BITS: u64 = 0x80_8080_8080;

/// Monomial in up to five variables: byte `i` holds the exponent of
/// variable `i` (`i < 5`) and byte 5 the total degree. Exponents stay below 128.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub(crate) u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exps(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut w = 0u64;
        let mut deg = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 128, "exponent too large");
            w |= (e as u64) << (8 * i);
            deg += e as u64;
        }
        Monomial(w | deg << 40)
    }

    pub fn var(i: usize) -> Self {
        Monomial(1 << (8 * i) | 1 << 40)
    }

    pub fn exp(&self, i: usize) -> u8 {
        (self.0 >> (8 * i)) as u8
    }

    pub fn exps(&self) -> [u8; MAX_VARS] {
        std::array::from_fn(|i| self.exp(i))
    }

    pub fn degree(&self) -> u32 {
        (self.0 >> 40) as u32
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support(&self) -> u8 {
        (0..MAX_VARS).fold(0, |acc, i| acc | ((self.exp(i) != 0) as u8) << i)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0 + other.0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        let a = self.0 & EXP_MASK;
        let b = other.0 & EXP_MASK;
        ((b | HIGH_BITS) - a) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Monomial(other.0 - self.0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: [u8; MAX_VARS] = std::array::from_fn(|i| self.exp(i).max(other.exp(i)));
        Self::from_exps(&exps)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.support() & other.support() == 0
    }

    /// If this is a pure power `x_i^e` with `e > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let s = self.support();
        (s.count_ones() == 1).then(|| s.trailing_zeros() as usize)
    }

    pub fn to_string_vars(&self, nvars: usize) -> String {
        let mut s = String::new();
        for i in 0..nvars {
            match self.exp(i) {
                0 => {}
                1 => s.push(VAR_NAMES[i]),
                e => {
                    s.push(VAR_NAMES[i]);
                    s.push_str(&e.to_string());
                }
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Degree first, then reverse lexicographic with `X > Y > Z > T > U`.
    #[default]
    DegRevLex,
    /// Pure lexicographic with `X > Y > Z > T > U`.
    Lex,
}

impl MonomialOrder {
    /// Order-preserving integer key; `key(m·t) = key(m) + delta(t)` (wrapping).
    pub fn key(self, m: Monomial) -> u64 {
        match self {
            MonomialOrder::DegRevLex => m.0 ^ EXP_MASK,
            MonomialOrder::Lex => {
                (0..MAX_VARS).fold(0u64, |acc, i| acc | (m.exp(i) as u64) << (8 * (4 - i)))
            }
        }
    }

    pub fn monomial(self, key: u64) -> Monomial {
        match self {
            MonomialOrder::DegRevLex => Monomial(key ^ EXP_MASK),
            MonomialOrder::Lex => {
                let exps: [u8; MAX_VARS] = std::array::from_fn(|i| (key >> (8 * (4 - i))) as u8);
                Monomial::from_exps(&exps)
            }
        }
    }

    pub fn delta(self, t: Monomial) -> u64 {
        match self {
            MonomialOrder::DegRevLex => (t.0 & !EXP_MASK).wrapping_sub(t.0 & EXP_MASK),
            MonomialOrder::Lex => self.key(t),
        }
    }

    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        let y2 = Monomial::from_exps(&[0, 2, 0]);
        let xz = Monomial::from_exps(&[1, 0, 1]);
        let yz = Monomial::from_exps(&[0, 1, 1]);
        let x3 = Monomial::from_exps(&[3]);
        assert_eq!(o.cmp(y2, xz), Ordering::Greater);
        assert_eq!(o.cmp(xz, yz), Ordering::Greater);
        assert_eq!(o.cmp(x3, y2), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(xz, y2), Ordering::Greater);
    }

    #[test]
    fn keys_are_multiplicative() {
        let ms = [
            Monomial::from_exps(&[1, 2, 0, 3, 1]),
            Monomial::from_exps(&[0, 0, 4]),
            Monomial::ONE,
            Monomial::from_exps(&[2, 1, 1, 0, 7]),
        ];
        for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            for a in ms {
                assert_eq!(o.monomial(o.key(a)), a);
                for t in ms {
                    assert_eq!(o.key(a.mul(&t)), o.key(a).wrapping_add(o.delta(t)));
                }
            }
        }
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(&[1, 2, 0, 0, 1]);
        let b = Monomial::from_exps(&[2, 2, 1, 0, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exps(&[1, 0, 1]));
        assert_eq!(a.lcm(&Monomial::from_exps(&[0, 3])), Monomial::from_exps(&[1, 3, 0, 0, 1]));
        assert_eq!(Monomial::from_exps(&[0, 0, 5]).pure_power_var(), Some(2));
        assert_eq!(a.to_string_vars(5), "XY2U");
    }
}
