//! Eisenstein series `E_{k,χ,ψ}`, the quasimodular `E_2`, and the
//! holomorphic combinations `φ_{a,b}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::exact_arith::{bernoulli_generalized, divisor_sigma_int, divisors, rat, ratio, Rational};
use crate::qseries::QSeries;

/// `σ_{k-1,χ,ψ}(n) = Σ_{d | n} ψ(d) χ(n/d) d^{k-1}`.
pub fn twisted_sigma(
    weight: u32,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    n: u64,
) -> Rational {
    Rational::from_integer(twisted_sigma_int(weight, chi, psi, n))
}

pub(crate) fn twisted_sigma_int(
    weight: u32,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    n: u64,
) -> BigInt {
    assert!(n >= 1, "twisted divisor sums start at n = 1");
    let mut acc = BigInt::zero();
    for d in divisors(n) {
        let s = psi.eval(d as i64) * chi.eval((n / d) as i64);
        if s != 0 {
            acc += BigInt::from(s) * BigInt::from(d).pow(weight - 1);
        }
    }
    acc
}

/// `E_{k,χ,ψ}(dz)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinSpec {
    pub weight: u32,
    pub chi: DirichletCharacter,
    pub psi: DirichletCharacter,
    pub dilation: u32,
}

impl EisensteinSpec {
    /// Validates `χ(-1) ψ(-1) = (-1)^k` and `NM > 1`.
    pub fn new(
        weight: u32,
        chi: DirichletCharacter,
        psi: DirichletCharacter,
        dilation: u32,
    ) -> Result<Self> {
        let sign = if weight % 2 == 0 { 1 } else { -1 };
        let level = chi.conductor() * psi.conductor();
        if weight < 1 || dilation < 1 || chi.parity() * psi.parity() != sign || level == 1 {
            return Err(Error::ParityViolation {
                chi: chi.name(),
                psi: psi.name(),
                weight,
            });
        }
        Ok(Self {
            weight,
            chi,
            psi,
            dilation,
        })
    }

    pub fn weight_two(chi: DirichletCharacter, psi: DirichletCharacter, dilation: u32) -> Result<Self> {
        Self::new(2, chi, psi, dilation)
    }

    /// `0` when `N > 1`, otherwise `-B_{k,ψ} / 2k`.
    pub fn constant_term(&self) -> Rational {
        if self.chi.conductor() > 1 {
            Rational::zero()
        } else {
            -bernoulli_generalized(self.weight as usize, &self.psi) / rat(2 * self.weight as i64)
        }
    }
}

impl fmt::Display for EisensteinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weight == 2 {
            write!(f, "E2({}, {}, {})", self.chi, self.psi, self.dilation)
        } else {
            write!(f, "E{}({}, {}, {})", self.weight, self.chi, self.psi, self.dilation)
        }
    }
}

impl FromStr for EisensteinSpec {
    type Err = Error;

    /// Parses `E2(chi, psi, d)`; the dilation may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("E2(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected E2(chi, psi, d), got `{s}`")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        let (chi, psi, d) = match parts.as_slice() {
            [chi, psi] => (*chi, *psi, "1"),
            [chi, psi, d] => (*chi, *psi, *d),
            _ => return Err(Error::Parse(format!("expected E2(chi, psi, d), got `{s}`"))),
        };
        let d: u32 = d
            .parse()
            .ok()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Parse(format!("bad dilation `{d}`")))?;
        Self::weight_two(chi.parse()?, psi.parse()?, d)
    }
}

/// `c_0 + Σ σ_{k-1,χ,ψ}(n) q^n`, dilated by `spec.dilation`.
pub fn eisenstein_series(spec: &EisensteinSpec, precision: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(precision);
    if precision > 0 {
        coeffs.push(spec.constant_term());
    }
    for n in 1..precision as u64 {
        coeffs.push(twisted_sigma(spec.weight, &spec.chi, &spec.psi, n));
    }
    QSeries::from_coeffs(coeffs).dilate(spec.dilation as usize)
}

/// `E_2 = 1 - 24 Σ σ(n) q^n`.
pub fn e2_series(precision: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(precision);
    if precision > 0 {
        coeffs.push(rat(1));
    }
    for n in 1..precision as i64 {
        coeffs.push(Rational::from_integer(divisor_sigma_int(1, n) * -24));
    }
    QSeries::from_coeffs(coeffs)
}

fn check_pair(a: u64, b: u64) -> Result<()> {
    if a == 0 || b <= a || b % a != 0 {
        return Err(Error::BadDivisorPair { a, b });
    }
    Ok(())
}

/// `φ_{a,b} = (b E_2(bz) - a E_2(az)) / (b - a)`, built from `E_2`.
pub fn phi_ab(a: u64, b: u64, precision: usize) -> Result<QSeries> {
    check_pair(a, b)?;
    let e2 = e2_series(precision);
    let big = e2.dilate(b as usize).scale(&rat(b as i64));
    let small = e2.dilate(a as usize).scale(&rat(a as i64));
    Ok((&big - &small).scale(&ratio(1, (b - a) as i64)))
}

/// `φ_{a,b}` from its Fourier form
/// `1 + 24a/(b-a) Σ σ(n/a) q^n - 24b/(b-a) Σ σ(n/b) q^n`.
pub fn phi_ab_fourier(a: u64, b: u64, precision: usize) -> Result<QSeries> {
    check_pair(a, b)?;
    let gap = (b - a) as i64;
    let lo = ratio(24 * a as i64, gap);
    let hi = ratio(24 * b as i64, gap);
    let mut coeffs = Vec::with_capacity(precision);
    if precision > 0 {
        coeffs.push(rat(1));
    }
    for n in 1..precision as u64 {
        let mut c = Rational::zero();
        if n % a == 0 {
            c += &lo * Rational::from_integer(divisor_sigma_int(1, (n / a) as i64));
        }
        if n % b == 0 {
            c -= &hi * Rational::from_integer(divisor_sigma_int(1, (n / b) as i64));
        }
        coeffs.push(c);
    }
    Ok(QSeries::from_coeffs(coeffs))
}

/// Parses `phi(a,b)`.
pub fn parse_phi(s: &str) -> Result<(u64, u64)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("phi(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected phi(a,b), got `{s}`")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected phi(a,b), got `{s}`")))?;
    let a = a.parse().map_err(|_| Error::Parse(format!("bad divisor `{a}`")))?;
    let b = b.parse().map_err(|_| Error::Parse(format!("bad divisor `{b}`")))?;
    check_pair(a, b)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::divisor_sigma;
    use DirichletCharacter as D;

    /// Character pairs of the weight-2 Eisenstein series in the bases.
    const PAIRS: [(D, D); 9] = [
        (D::CHI_M4, D::CHI_M4),
        (D::ONE, D::CHI_8),
        (D::CHI_8, D::ONE),
        (D::ONE, D::CHI_12),
        (D::CHI_12, D::ONE),
        (D::CHI_M4, D::CHI_M3),
        (D::CHI_M3, D::CHI_M4),
        (D::ONE, D::CHI_24),
        (D::CHI_24, D::ONE),
    ];
    const MORE_PAIRS: [(D, D); 2] = [(D::CHI_M3, D::CHI_M8), (D::CHI_M8, D::CHI_M3)];

    #[test]
    fn twisted_sigma_examples() {
        assert_eq!(twisted_sigma(2, &D::ONE, &D::CHI_8, 7), rat(8));
        assert_eq!(twisted_sigma(2, &D::CHI_8, &D::ONE, 2), rat(2));
        for (chi, psi) in PAIRS.iter().chain(&MORE_PAIRS) {
            assert_eq!(twisted_sigma(2, chi, psi, 1), rat(1));
        }
        // trivial characters recover σ
        assert_eq!(twisted_sigma(2, &D::ONE, &D::ONE, 12), divisor_sigma(1, 12));
    }

    #[test]
    fn twisted_sigma_is_multiplicative() {
        for (chi, psi) in PAIRS.iter().chain(&MORE_PAIRS) {
            for m in 1..=100u64 {
                for n in 1..=100u64 {
                    if num_integer::gcd(m, n) == 1 {
                        assert_eq!(
                            twisted_sigma(2, chi, psi, m * n),
                            twisted_sigma(2, chi, psi, m) * twisted_sigma(2, chi, psi, n),
                            "{chi},{psi} at {m}*{n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn constant_terms() {
        let e = EisensteinSpec::weight_two(D::ONE, D::CHI_8, 1).unwrap();
        assert_eq!(eisenstein_series(&e, 10).coeff(0), &ratio(-1, 2));
        let e = EisensteinSpec::weight_two(D::CHI_8, D::ONE, 1).unwrap();
        assert_eq!(eisenstein_series(&e, 10).coeff(0), &rat(0));
        let e = EisensteinSpec::weight_two(D::CHI_M4, D::CHI_M4, 1).unwrap();
        assert_eq!(eisenstein_series(&e, 10).coeff(1), &rat(1));
        assert_eq!(eisenstein_series(&e, 10).coeff(0), &rat(0));
        for (chi, psi) in PAIRS.iter().chain(&MORE_PAIRS) {
            if !chi.is_trivial() && !psi.is_trivial() {
                let e = EisensteinSpec::weight_two(*chi, *psi, 1).unwrap();
                assert_eq!(e.constant_term(), rat(0));
            }
        }
    }

    #[test]
    fn rejects_parity_violations() {
        assert!(EisensteinSpec::weight_two(D::ONE, D::CHI_M4, 1).is_err());
        assert!(EisensteinSpec::weight_two(D::CHI_8, D::CHI_M3, 1).is_err());
        assert!(EisensteinSpec::weight_two(D::ONE, D::ONE, 1).is_err());
    }

    #[test]
    fn dilation_applies() {
        let e = EisensteinSpec::weight_two(D::CHI_8, D::ONE, 3).unwrap();
        let s = eisenstein_series(&e, 12);
        assert_eq!(s.coeff(3), &rat(1));
        assert_eq!(s.coeff(1), &rat(0));
        assert_eq!(s.coeff(6), &twisted_sigma(2, &D::CHI_8, &D::ONE, 2));
    }

    #[test]
    fn e2_examples() {
        let e2 = e2_series(10);
        assert_eq!(e2.coeff(0), &rat(1));
        assert_eq!(e2.coeff(1), &rat(-24));
        assert_eq!(e2.coeff(4), &rat(-168));
    }

    #[test]
    fn phi_examples() {
        let p = phi_ab(1, 2, 10).unwrap();
        assert_eq!(p.coeff(0), &rat(1));
        assert_eq!(p.coeff(1), &rat(24));
        assert_eq!(phi_ab(1, 4, 10).unwrap().coeff(1), &rat(8));
        assert!(phi_ab(2, 3, 10).is_err());
        assert!(phi_ab(2, 2, 10).is_err());
        assert!(phi_ab_fourier(4, 2, 10).is_err());
    }

    #[test]
    fn phi_routes_agree() {
        for b in [2u64, 3, 4, 6, 8, 12, 16, 24, 48] {
            assert_eq!(
                phi_ab(1, b, 200).unwrap(),
                phi_ab_fourier(1, b, 200).unwrap(),
                "phi(1,{b})"
            );
        }
        assert_eq!(phi_ab(2, 6, 100).unwrap(), phi_ab_fourier(2, 6, 100).unwrap());
    }

    #[test]
    fn parse_names() {
        let e: EisensteinSpec = "E2(chi-4, chi-3, 2)".parse().unwrap();
        assert_eq!(e, EisensteinSpec::weight_two(D::CHI_M4, D::CHI_M3, 2).unwrap());
        assert_eq!(e.to_string(), "E2(chi-4, chi-3, 2)");
        assert!("E2(1, chi-4, 1)".parse::<EisensteinSpec>().is_err());
        assert_eq!(parse_phi("phi(1, 12)").unwrap(), (1, 12));
        assert!(parse_phi("phi(3,4)").is_err());
    }
}
