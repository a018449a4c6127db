//! Dirichlet characters realised as Kronecker symbols.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exact_arith::gcd_u64;

/// `(2/b)` for odd `b`, indexed by `b mod 8`.
const TWO_TABLE: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

/// The Kronecker symbol `(d/n)`, extending the Jacobi symbol to every
/// integer `n` (including even, negative and zero `n`).
pub fn kronecker_symbol(d: i64, n: i64) -> i32 {
    let mut a = d as i128;
    let mut b = n as i128;
    if b == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k = if v % 2 == 0 {
        1
    } else {
        TWO_TABLE[(a & 7) as usize]
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    // b is now odd and positive
    loop {
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= TWO_TABLE[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

/// The characters that occur in the weight-2, level-48 constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirichletCharacter {
    /// Conductor one; equal to 1 on every positive integer.
    Trivial,
    /// Principal character modulo `N`.
    Principal(u64),
    /// `n ↦ (d/n)` for a fundamental discriminant `d`.
    Kronecker(i64),
}

impl DirichletCharacter {
    pub const ONE: Self = Self::Trivial;
    pub const CHI_0: Self = Self::Principal(48);
    pub const CHI_8: Self = Self::Kronecker(8);
    pub const CHI_12: Self = Self::Kronecker(12);
    pub const CHI_24: Self = Self::Kronecker(24);
    pub const CHI_M3: Self = Self::Kronecker(-3);
    pub const CHI_M4: Self = Self::Kronecker(-4);
    pub const CHI_M8: Self = Self::Kronecker(-8);

    /// Every character the command line can name.
    pub const ALL: [Self; 8] = [
        Self::ONE,
        Self::CHI_0,
        Self::CHI_8,
        Self::CHI_12,
        Self::CHI_24,
        Self::CHI_M3,
        Self::CHI_M4,
        Self::CHI_M8,
    ];

    pub fn conductor(&self) -> u64 {
        match *self {
            Self::Trivial => 1,
            Self::Principal(n) => n,
            Self::Kronecker(d) => d.unsigned_abs(),
        }
    }

    /// `χ(n)`. Negative `n` are allowed so that `χ(-1)` reads the parity.
    pub fn eval(&self, n: i64) -> i32 {
        match *self {
            Self::Trivial => 1,
            Self::Principal(m) => {
                if gcd_u64(n.unsigned_abs(), m) == 1 {
                    1
                } else {
                    0
                }
            }
            Self::Kronecker(d) => kronecker_symbol(d, n),
        }
    }

    /// `χ(-1)`.
    pub fn parity(&self) -> i32 {
        self.eval(-1)
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Self::Trivial)
    }

    pub fn name(&self) -> String {
        match *self {
            Self::Trivial => "1".to_string(),
            Self::Principal(48) => "chi0".to_string(),
            Self::Principal(n) => format!("chi0_{n}"),
            Self::Kronecker(d) => format!("chi{d}"),
        }
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for DirichletCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Self::ALL
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownName(format!("character `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const USED: [DirichletCharacter; 7] = [
        DirichletCharacter::ONE,
        DirichletCharacter::CHI_8,
        DirichletCharacter::CHI_12,
        DirichletCharacter::CHI_24,
        DirichletCharacter::CHI_M3,
        DirichletCharacter::CHI_M4,
        DirichletCharacter::CHI_M8,
    ];

    fn is_prime(p: i64) -> bool {
        p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
    }

    fn pow_mod(mut b: i64, mut e: i64, m: i64) -> i64 {
        let mut acc = 1;
        b = b.rem_euclid(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    }

    /// Legendre symbol by Euler's criterion.
    fn legendre(a: i64, p: i64) -> i32 {
        match pow_mod(a, (p - 1) / 2, p) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    #[test]
    fn examples() {
        assert_eq!(kronecker_symbol(8, 3), -1);
        assert_eq!(kronecker_symbol(12, 5), -1);
        assert_eq!(kronecker_symbol(-4, 1), 1);
        assert_eq!(DirichletCharacter::ONE.eval(17), 1);
        assert_eq!(DirichletCharacter::CHI_8.eval(2), 0);
        assert_eq!(DirichletCharacter::CHI_M4.eval(3), -1);
    }

    #[test]
    fn agrees_with_euler_criterion_at_odd_primes() {
        for p in (3..400).filter(|&p| is_prime(p)) {
            for d in [-8, -4, -3, 8, 12, 24, 5, -7, 13] {
                assert_eq!(kronecker_symbol(d, p), legendre(d, p), "({d}/{p})");
            }
        }
    }

    #[test]
    fn symbol_at_two_and_minus_one() {
        // (d/2) depends on d mod 8 for odd d
        assert_eq!(kronecker_symbol(1, 2), 1);
        assert_eq!(kronecker_symbol(-3, 2), -1);
        assert_eq!(kronecker_symbol(-7, 2), 1);
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        assert_eq!(kronecker_symbol(-3, -1), -1);
        assert_eq!(kronecker_symbol(12, -1), 1);
        assert_eq!(kronecker_symbol(3, 0), 0);
        assert_eq!(kronecker_symbol(-1, 0), 1);
    }

    #[test]
    fn chi_minus_four_pattern() {
        let chi = DirichletCharacter::CHI_M4;
        let values: Vec<i32> = (1..=8).map(|n| chi.eval(n)).collect();
        assert_eq!(values, vec![1, 0, -1, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn conductor_eight_pattern() {
        let chi = DirichletCharacter::CHI_8;
        let values: Vec<i32> = (1..=8).map(|n| chi.eval(n)).collect();
        assert_eq!(values, vec![1, 0, -1, 0, -1, 0, 1, 0]);
    }

    #[test]
    fn periodicity() {
        for chi in USED {
            let m = chi.conductor() as i64;
            for n in 1..=1000 {
                assert_eq!(chi.eval(n), chi.eval(n + m), "{chi} at {n}");
            }
        }
    }

    #[test]
    fn complete_multiplicativity() {
        for chi in USED.into_iter().chain([DirichletCharacter::CHI_0]) {
            for m in 1..=200 {
                for n in 1..=200 {
                    assert_eq!(chi.eval(m * n), chi.eval(m) * chi.eval(n));
                }
            }
        }
    }

    #[test]
    fn vanishes_exactly_on_shared_factors() {
        for chi in USED.into_iter().skip(1) {
            let m = chi.conductor();
            for n in 1..=500i64 {
                let shared = gcd_u64(n as u64, m) > 1;
                assert_eq!(chi.eval(n) == 0, shared, "{chi} at {n}");
            }
        }
        assert_eq!(DirichletCharacter::CHI_0.eval(9), 0);
        assert_eq!(DirichletCharacter::CHI_0.eval(25), 1);
    }

    #[test]
    fn parity_table() {
        use DirichletCharacter as D;
        for chi in [D::CHI_M3, D::CHI_M4, D::CHI_M8] {
            assert_eq!(chi.parity(), -1);
            assert_eq!(chi.eval(chi.conductor() as i64 - 1), -1);
        }
        for chi in [D::CHI_8, D::CHI_12, D::CHI_24] {
            assert_eq!(chi.parity(), 1);
            assert_eq!(chi.eval(chi.conductor() as i64 - 1), 1);
        }
        assert_eq!(D::ONE.parity(), 1);
    }

    #[test]
    fn names_round_trip() {
        for chi in DirichletCharacter::ALL {
            assert_eq!(chi.name().parse::<DirichletCharacter>().unwrap(), chi);
        }
        assert!("chi5".parse::<DirichletCharacter>().is_err());
    }

    proptest! {
        #[test]
        fn kronecker_multiplicative_in_n(d in prop::sample::select(vec![-8i64, -4, -3, 8, 12, 24]),
                                         m in -300i64..300, n in -300i64..300) {
            prop_assert_eq!(kronecker_symbol(d, m * n), kronecker_symbol(d, m) * kronecker_symbol(d, n));
        }
    }
}
