//! Exact integers and rationals, divisor sums and Bernoulli numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::DirichletCharacter;

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (an optional sign on `p` only).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
    }
}

/// `true` when `r` is an integer that is at least zero.
pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// `σ_r(n) = Σ_{d | n} d^r`, and zero for `n ≤ 0`.
pub fn divisor_sigma(r: u32, n: i64) -> Rational {
    Rational::from_integer(divisor_sigma_int(r, n))
}

pub(crate) fn divisor_sigma_int(r: u32, n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    divisors(n as u64)
        .into_iter()
        .map(|d| BigInt::from(d).pow(r))
        .sum()
}

/// `σ_r(n / a)`, which vanishes unless `a` divides `n`.
pub fn divisor_sigma_quotient(r: u32, n: i64, a: i64) -> Rational {
    assert!(a >= 1, "divisor must be positive");
    if n.rem_euclid(a) != 0 {
        return Rational::zero();
    }
    divisor_sigma(r, n / a)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_k` with the `x / (e^x - 1)` convention
/// (so `B_1 = -1/2`), from `Σ_{j<m} C(m+1, j) B_j = -(m+1) B_m`.
pub fn bernoulli_table(k: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(k + 1);
    table.push(Rational::one());
    for m in 1..=k {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u64 + 1, j as u64)) * b;
        }
        table.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    table
}

pub fn bernoulli(k: usize) -> Rational {
    bernoulli_table(k).pop().expect("table is never empty")
}

/// The Bernoulli polynomial `B_k(x) = Σ_j C(k, j) B_j x^{k-j}`.
pub fn bernoulli_polynomial(k: usize, x: &Rational) -> Rational {
    let table = bernoulli_table(k);
    let mut acc = Rational::zero();
    for (j, b) in table.iter().enumerate() {
        let power = num_traits::pow(x.clone(), k - j);
        acc += Rational::from_integer(binomial(k as u64, j as u64)) * b * power;
    }
    acc
}

/// Generalized Bernoulli number `B_{k,ψ} = M^{k-1} Σ_{a=1}^{M} ψ(a) B_k(a/M)`
/// where `M` is the conductor of `ψ`.
///
/// For the trivial character of conductor one this is `B_k` except at
/// `k = 1`, where the generating function gives `+1/2`.
pub fn bernoulli_generalized(k: usize, psi: &DirichletCharacter) -> Rational {
    assert!(k >= 1, "generalized Bernoulli numbers are indexed from 1");
    let m = psi.conductor() as i64;
    let mut acc = Rational::zero();
    for a in 1..=m {
        let v = psi.eval(a);
        if v == 0 {
            continue;
        }
        acc += rat(v as i64) * bernoulli_polynomial(k, &ratio(a, m));
    }
    acc * num_traits::pow(rat(m), k - 1)
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
