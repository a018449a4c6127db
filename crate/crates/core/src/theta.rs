//! Theta series of the three quaternary families and their spaces.
//!
//! * `Q1`: `a1 x1² + a2 x2² + a3 x3² + a4 x4²`
//! * `Q2`: `b1 (x1² + x1 x2 + x2²) + b2 (x3² + x3 x4 + x4²)`
//! * `Q3`: `a1 x1² + a2 x2² + b1 (x3² + x3 x4 + x4²)`
//!
//! The generating functions are built from `Θ = Σ q^{n²}` and the
//! hexagonal series `F = Σ q^{m² + mn + n²}`, both by index enumeration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::exact_arith::gcd_u64;
use crate::qseries::QSeries;

/// One of the four spaces `M_2(48, χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Space {
    #[serde(rename = "chi0")]
    Chi0,
    #[serde(rename = "chi8")]
    Chi8,
    #[serde(rename = "chi12")]
    Chi12,
    #[serde(rename = "chi24")]
    Chi24,
}

impl Space {
    pub const ALL: [Space; 4] = [Space::Chi0, Space::Chi8, Space::Chi12, Space::Chi24];

    pub fn dimension(self) -> usize {
        match self {
            Space::Chi0 | Space::Chi12 => 14,
            Space::Chi8 | Space::Chi24 => 12,
        }
    }

    pub fn character(self) -> DirichletCharacter {
        match self {
            Space::Chi0 => DirichletCharacter::CHI_0,
            Space::Chi8 => DirichletCharacter::CHI_8,
            Space::Chi12 => DirichletCharacter::CHI_12,
            Space::Chi24 => DirichletCharacter::CHI_24,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::Chi0 => "chi0",
            Space::Chi8 => "chi8",
            Space::Chi12 => "chi12",
            Space::Chi24 => "chi24",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name() == s.trim())
            .ok_or_else(|| Error::UnknownName(format!("space `{s}`")))
    }
}

/// Coefficient tuple of a quaternary form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadForm {
    Q1([u32; 4]),
    Q2([u32; 2]),
    Q3([u32; 3]),
}

impl QuadForm {
    pub fn family(&self) -> &'static str {
        match self {
            QuadForm::Q1(_) => "q1",
            QuadForm::Q2(_) => "q2",
            QuadForm::Q3(_) => "q3",
        }
    }

    pub fn coefficients(&self) -> Vec<u32> {
        match self {
            QuadForm::Q1(a) => a.to_vec(),
            QuadForm::Q2(b) => b.to_vec(),
            QuadForm::Q3(c) => c.to_vec(),
        }
    }

    /// The form with every coefficient multiplied by `k`.
    pub fn scaled(&self, k: u32) -> QuadForm {
        match *self {
            QuadForm::Q1(a) => QuadForm::Q1(a.map(|x| x * k)),
            QuadForm::Q2(b) => QuadForm::Q2(b.map(|x| x * k)),
            QuadForm::Q3(c) => QuadForm::Q3(c.map(|x| x * k)),
        }
    }

    fn shape_check(&self) -> Result<()> {
        let bad = || Error::UnknownForm(self.to_string());
        let gcd = |xs: &[u32]| xs.iter().fold(0u64, |g, &x| gcd_u64(g, x as u64));
        match self {
            QuadForm::Q1(a) => {
                if a.windows(2).any(|w| w[0] > w[1]) || gcd(a) != 1 {
                    return Err(bad());
                }
            }
            QuadForm::Q2(b) => {
                if b[0] >= b[1] || gcd(b) != 1 {
                    return Err(bad());
                }
            }
            QuadForm::Q3(c) => {
                if c[0] > c[1] || gcd(c) != 1 {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients().iter().map(u32::to_string).collect();
        write!(f, "{}:{}", self.family(), coeffs.join(","))
    }
}

impl FromStr for QuadForm {
    type Err = Error;

    /// `q1:1,1,1,4`, `q2:1,8` or `q3:1,3,16`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("form `{s}` (expected e.g. q1:1,1,1,4)"));
        let (family, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<u32> = rest
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if nums.contains(&0) {
            return Err(bad());
        }
        match (family.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("q1", &[a, b, c, d]) => Ok(QuadForm::Q1([a, b, c, d])),
            ("q2", &[a, b]) => Ok(QuadForm::Q2([a, b])),
            ("q3", &[a, b, c]) => Ok(QuadForm::Q3([a, b, c])),
            _ => Err(bad()),
        }
    }
}

/// A catalogued form together with the space its theta series lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormSpec {
    pub form: QuadForm,
    pub space: Space,
}

impl FormSpec {
    /// Looks the form up in the catalogue.
    pub fn new(form: QuadForm) -> Result<Self> {
        form.shape_check()?;
        let space = classify_character(&form)?;
        Ok(Self { form, space })
    }
}

impl FromStr for FormSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormSpec::new(s.parse()?)
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

const Q1_CHI0: &[[u32; 4]] = &[
    [1, 1, 1, 4], [1, 1, 4, 4], [1, 1, 3, 12], [1, 1, 12, 12], [1, 2, 2, 4], [1, 2, 6, 12],
    [1, 3, 3, 4], [1, 3, 4, 12], [1, 4, 4, 4], [1, 4, 6, 6], [1, 4, 12, 12],
    [2, 2, 3, 12], [2, 3, 4, 6], [3, 3, 4, 4], [3, 4, 4, 12],
];
const Q1_CHI8: &[[u32; 4]] = &[
    [1, 1, 2, 4], [1, 1, 6, 12], [1, 2, 4, 4], [1, 2, 3, 12], [1, 2, 12, 12],
    [1, 3, 4, 6], [1, 4, 6, 12], [2, 3, 3, 4], [2, 3, 4, 12], [3, 4, 4, 6],
];
const Q1_CHI12: &[[u32; 4]] = &[
    [1, 1, 1, 12], [1, 1, 3, 4], [1, 1, 4, 12], [1, 2, 2, 12], [1, 2, 4, 6], [1, 3, 3, 12],
    [1, 3, 4, 4], [1, 3, 12, 12], [1, 4, 4, 12], [1, 6, 6, 12], [1, 12, 12, 12], [2, 2, 3, 4],
    [2, 3, 6, 12], [3, 3, 3, 4], [3, 3, 4, 12], [3, 4, 4, 4], [3, 4, 6, 6], [3, 4, 12, 12],
];
const Q1_CHI24: &[[u32; 4]] = &[
    [1, 1, 2, 12], [1, 1, 4, 6], [1, 2, 3, 4], [1, 2, 4, 12], [1, 3, 6, 12], [1, 4, 4, 6],
    [1, 6, 12, 12], [2, 3, 3, 12], [2, 3, 4, 4], [2, 3, 12, 12], [3, 3, 4, 6], [3, 4, 6, 12],
];
const Q2_CHI0: &[[u32; 2]] = &[[1, 2], [1, 4], [1, 8], [1, 16]];
const Q3_CHI0: &[[u32; 3]] = &[
    [1, 3, 1], [1, 3, 2], [1, 3, 4], [1, 3, 8], [1, 3, 16], [1, 12, 1], [1, 12, 2], [1, 12, 4],
    [1, 12, 8], [1, 12, 16], [2, 6, 1], [3, 4, 1], [3, 4, 2], [3, 4, 4], [3, 4, 8], [3, 4, 16],
    [4, 12, 1],
];
const Q3_CHI8: &[[u32; 3]] = &[
    [1, 6, 1], [1, 6, 2], [1, 6, 4], [1, 6, 8], [1, 6, 16], [2, 3, 1],
    [2, 3, 2], [2, 3, 4], [2, 3, 8], [2, 3, 16], [2, 12, 1], [4, 6, 1],
];
const Q3_CHI12: &[[u32; 3]] = &[
    [1, 1, 1], [1, 1, 2], [1, 1, 4], [1, 1, 8], [1, 1, 16], [1, 4, 1], [1, 4, 2], [1, 4, 4],
    [1, 4, 8], [1, 4, 16], [2, 2, 1], [3, 3, 1], [3, 3, 2], [3, 3, 4], [3, 3, 8], [3, 3, 16],
    [3, 12, 1], [3, 12, 2], [3, 12, 4], [3, 12, 8], [3, 12, 16], [4, 4, 1], [6, 6, 1], [12, 12, 1],
];
const Q3_CHI24: &[[u32; 3]] = &[
    [1, 2, 1], [1, 2, 2], [1, 2, 4], [1, 2, 8], [1, 2, 16], [2, 4, 1], [3, 6, 1],
    [3, 6, 2], [3, 6, 4], [3, 6, 8], [3, 6, 16], [6, 12, 1],
];

/// Every catalogued form in listing order: the `Q1` forms space by
/// space, then `Q2`, then `Q3`.
pub fn catalogue() -> Vec<FormSpec> {
    let mut out = Vec::with_capacity(124);
    for (space, rows) in [
        (Space::Chi0, Q1_CHI0),
        (Space::Chi8, Q1_CHI8),
        (Space::Chi12, Q1_CHI12),
        (Space::Chi24, Q1_CHI24),
    ] {
        out.extend(rows.iter().map(|&a| FormSpec { form: QuadForm::Q1(a), space }));
    }
    out.extend(Q2_CHI0.iter().map(|&b| FormSpec {
        form: QuadForm::Q2(b),
        space: Space::Chi0,
    }));
    for (space, rows) in [
        (Space::Chi0, Q3_CHI0),
        (Space::Chi8, Q3_CHI8),
        (Space::Chi12, Q3_CHI12),
        (Space::Chi24, Q3_CHI24),
    ] {
        out.extend(rows.iter().map(|&c| FormSpec { form: QuadForm::Q3(c), space }));
    }
    out
}

/// The space under which the catalogue lists `form`.
pub fn classify_character(form: &QuadForm) -> Result<Space> {
    let hit = match form {
        QuadForm::Q1(a) => [
            (Space::Chi0, Q1_CHI0),
            (Space::Chi8, Q1_CHI8),
            (Space::Chi12, Q1_CHI12),
            (Space::Chi24, Q1_CHI24),
        ]
        .into_iter()
        .find(|(_, rows)| rows.contains(a))
        .map(|(s, _)| s),
        QuadForm::Q2(b) => Q2_CHI0.contains(b).then_some(Space::Chi0),
        QuadForm::Q3(c) => [
            (Space::Chi0, Q3_CHI0),
            (Space::Chi8, Q3_CHI8),
            (Space::Chi12, Q3_CHI12),
            (Space::Chi24, Q3_CHI24),
        ]
        .into_iter()
        .find(|(_, rows)| rows.contains(c))
        .map(|(s, _)| s),
    };
    hit.ok_or_else(|| Error::UnknownForm(form.to_string()))
}

/// `Θ(z) = Σ_{n ∈ ℤ} q^{n²}`.
pub fn theta_series(precision: usize) -> QSeries {
    let mut c = vec![0i64; precision];
    let mut n: i64 = 0;
    while ((n * n) as usize) < precision {
        c[(n * n) as usize] += if n == 0 { 1 } else { 2 };
        n += 1;
    }
    QSeries::from_integers(&c, precision)
}

/// `F(z) = Σ_{m,n ∈ ℤ} q^{m² + mn + n²}`.
pub fn hexagonal_series(precision: usize) -> QSeries {
    let mut c = vec![0i64; precision];
    // m² + mn + n² ≥ 3 max(m², n²) / 4
    let bound = ((4.0 * precision as f64 / 3.0).sqrt().ceil() as i64) + 1;
    for m in -bound..=bound {
        for n in -bound..=bound {
            let v = m * m + m * n + n * n;
            if (v as usize) < precision {
                c[v as usize] += 1;
            }
        }
    }
    QSeries::from_integers(&c, precision)
}

/// The theta series of `form`, whose `n`-th coefficient is the number of
/// representations of `n`.
pub fn form_theta_product(form: &QuadForm, precision: usize) -> QSeries {
    let theta = theta_series(precision);
    let hex = hexagonal_series(precision);
    let factors: Vec<QSeries> = match form {
        QuadForm::Q1(a) => a.iter().map(|&x| theta.dilate(x as usize)).collect(),
        QuadForm::Q2(b) => b.iter().map(|&x| hex.dilate(x as usize)).collect(),
        QuadForm::Q3([a1, a2, b1]) => vec![
            theta.dilate(*a1 as usize),
            theta.dilate(*a2 as usize),
            hex.dilate(*b1 as usize),
        ],
    };
    factors
        .iter()
        .fold(QSeries::one(precision), |acc, f| &acc * f)
}

/// Coefficient of a theta product at `n` as a machine integer.
pub fn theta_coefficient(series: &QSeries, n: usize) -> i64 {
    let c = series.coeff(n);
    assert!(c.is_integer());
    i64::try_from(c.to_integer()).expect("representation counts fit in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{divisor_sigma, rat};

    #[test]
    fn theta_pattern() {
        let t = theta_series(30);
        assert_eq!(t.coeff(0), &rat(1));
        assert_eq!(t.coeff(1), &rat(2));
        assert_eq!(t.coeff(4), &rat(2));
        assert_eq!(t.coeff(3), &rat(0));
        assert_eq!(t.coeff(25), &rat(2));
    }

    #[test]
    fn theta_squared_at_two() {
        let t = theta_series(10);
        assert_eq!((&t * &t).coeff(2), &rat(4));
    }

    #[test]
    fn hexagonal_small() {
        let f = hexagonal_series(20);
        assert_eq!(f.coeff(0), &rat(1));
        assert_eq!(f.coeff(1), &rat(6));
        assert_eq!(f.coeff(2), &rat(0));
        assert_eq!(f.coeff(3), &rat(6));
        assert_eq!(f.coeff(7), &rat(12));
    }

    #[test]
    fn hexagonal_divisible_by_six() {
        let f = hexagonal_series(200);
        for n in 1..200 {
            assert!((f.coeff(n) / rat(6)).is_integer(), "n = {n}");
        }
    }

    #[test]
    fn product_examples() {
        let p = form_theta_product(&QuadForm::Q1([1, 1, 1, 4]), 10);
        assert_eq!(p.coeff(1), &rat(6));
        let p = form_theta_product(&QuadForm::Q2([1, 2]), 10);
        assert_eq!(p.coeff(1), &rat(6));
        let p = form_theta_product(&QuadForm::Q3([1, 3, 1]), 10);
        assert_eq!(p.coeff(1), &rat(8));
    }

    #[test]
    fn jacobi_four_squares_at_odd_n() {
        let t4 = theta_series(100).pow(4);
        for n in (1..100).step_by(2) {
            assert_eq!(t4.coeff(n), &(divisor_sigma(1, n as i64) * rat(8)), "n = {n}");
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_character(&QuadForm::Q1([1, 1, 1, 4])).unwrap(), Space::Chi0);
        assert_eq!(classify_character(&QuadForm::Q1([1, 2, 3, 4])).unwrap(), Space::Chi24);
        assert_eq!(classify_character(&QuadForm::Q3([1, 1, 1])).unwrap(), Space::Chi12);
        assert!(classify_character(&QuadForm::Q1([1, 1, 1, 1])).is_err());
    }

    #[test]
    fn catalogue_counts_and_invariants() {
        let all = catalogue();
        assert_eq!(all.len(), 124);
        let count = |fam: &str| all.iter().filter(|f| f.form.family() == fam).count();
        assert_eq!(count("q1"), 55);
        assert_eq!(count("q2"), 4);
        assert_eq!(count("q3"), 65);
        for (i, f) in all.iter().enumerate() {
            assert!(all[..i].iter().all(|g| g.form != f.form), "duplicate {f}");
            assert_eq!(FormSpec::new(f.form).unwrap(), *f);
        }
    }

    #[test]
    fn form_syntax() {
        let f: FormSpec = "q1:1,1,1,4".parse().unwrap();
        assert_eq!(f.space, Space::Chi0);
        let f: FormSpec = "q3:1,3,16".parse().unwrap();
        assert_eq!(f.form, QuadForm::Q3([1, 3, 16]));
        assert_eq!(f.to_string(), "q3:1,3,16");
        assert!("q1:1,1,1".parse::<QuadForm>().is_err());
        assert!("q4:1,1".parse::<QuadForm>().is_err());
        assert!("q1:4,1,1,1".parse::<FormSpec>().is_err());
        assert!("q1:2,2,2,4".parse::<FormSpec>().is_err());
    }
}
