//! Truncated power series in `q` with rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, Rational};

pub const DEFAULT_PRECISION: usize = 200;

/// `Σ_{n < P} a_n q^n`, where `P` is the precision: every coefficient
/// at index `≥ P` is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); precision],
        }
    }

    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], precision: usize) -> Self {
        let mut s = Self::zero(precision);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = Rational::from_integer(v.into());
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^n`; panics past the precision.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [Rational] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision());
        Self {
            coeffs: self.coeffs[..p].to_vec(),
        }
    }

    /// Multiplies by `q^k`, keeping the precision.
    pub fn shift(&self, k: usize) -> Self {
        let p = self.precision();
        let mut out = Self::zero(p);
        for n in k..p {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(dz)`: the coefficient at `n` is `a_{n/d}` when `d | n`, else zero.
    pub fn dilate(&self, d: usize) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        let p = self.precision();
        let mut out = Self::zero(p);
        for (m, c) in self.coeffs.iter().enumerate() {
            let n = m * d;
            if n >= p {
                break;
            }
            out.coeffs[n] = c.clone();
        }
        out
    }

    /// Keeps the coefficients at indices `≡ r (mod m)` and zeroes the rest.
    pub fn restrict_residue(&self, m: usize, r: usize) -> Self {
        assert!(m >= 1 && r < m, "residue {r} out of range for modulus {m}");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % m == r { c.clone() } else { Rational::zero() })
                .collect(),
        }
    }

    /// The series `g` with `f · g = 1` through the precision.
    pub fn invert_unit(&self) -> Result<Self> {
        let p = self.precision();
        if p == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out = Self::zero(p);
        out.coeffs[0] = inv0.clone();
        for n in 1..p {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies in place by `(1 - q^m)`.
    pub(crate) fn mul_one_minus_q_pow(&mut self, m: usize) {
        assert!(m >= 1);
        for n in (m..self.precision()).rev() {
            let prev = self.coeffs[n - m].clone();
            if !prev.is_zero() {
                self.coeffs[n] -= prev;
            }
        }
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            precision: self.precision(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }
}

/// Wire form of a series: rationals rendered as strings.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SeriesJson {
    pub precision: usize,
    pub coeffs: Vec<String>,
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    /// Cauchy product truncated to the smaller precision.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let p = self.precision().min(rhs.precision());
        let mut out = QSeries::zero(p);
        for (i, a) in self.coeffs[..p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..p - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;

            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
