//! Explicit representation-number formulas: the four Q2 identities, the
//! printed sample formulas, their recomputed counterparts, and three closed
//! forms written with 2- and 3-adic valuations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::basis::{descriptors, Descriptor};
use crate::characters::DirichletCharacter as D;
use crate::decompose::decompose_form;
use crate::eisenstein::twisted_sigma;
use crate::error::{Error, Result};
use crate::eta::CuspForm;
use crate::exact_arith::{divisor_sigma, divisors, format_rational, rat, ratio, Rational};
use crate::qseries::QSeries;
use crate::theta::QuadForm;

/// An arithmetic function of `n` that formulas are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ingredient {
    /// `σ(n)`
    Sigma,
    /// `σ_{2,χ,ψ}(n) = Σ_{d | n} ψ(d) χ(n/d) d`
    TwistedSigma { chi: D, psi: D },
    /// The `n`-th coefficient of a catalogued cusp form.
    Tau(CuspForm),
}

impl Ingredient {
    pub fn eval(&self, n: u64) -> Rational {
        if n == 0 {
            return Rational::zero();
        }
        match self {
            Ingredient::Sigma => divisor_sigma(1, n as i64),
            Ingredient::TwistedSigma { chi, psi } => twisted_sigma(2, chi, psi, n),
            Ingredient::Tau(form) => tau(*form, n as usize),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Ingredient::Sigma => 0,
            Ingredient::TwistedSigma { .. } => 1,
            Ingredient::Tau(_) => 2,
        }
    }
}

impl fmt::Display for Ingredient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ingredient::Sigma => write!(f, "sigma"),
            Ingredient::TwistedSigma { chi, psi } => write!(f, "sigma[{chi},{psi}]"),
            Ingredient::Tau(form) => write!(f, "tau[{form}]"),
        }
    }
}

type TauCache = Mutex<HashMap<CuspForm, QSeries>>;

/// Coefficient `n` of `form`, expanding further on demand.
pub fn tau(form: CuspForm, n: usize) -> Rational {
    static CACHE: OnceLock<TauCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("tau cache poisoned");
    let series = guard.entry(form).or_insert_with(|| form.expand(256));
    if series.precision() <= n {
        *series = form.expand((n + 1).next_power_of_two().max(2 * series.precision()));
    }
    series.coeff(n).clone()
}

/// `coefficient · ingredient(n / divisor)`, zero unless `divisor | n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Rational,
    pub ingredient: Ingredient,
    pub divisor: u64,
}

impl Term {
    pub fn eval(&self, n: u64) -> Rational {
        if n % self.divisor != 0 {
            return Rational::zero();
        }
        &self.coefficient * self.ingredient.eval(n / self.divisor)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = if self.divisor == 1 {
            "n".to_string()
        } else {
            format!("n/{}", self.divisor)
        };
        write!(f, "{} {}({arg})", format_rational(&self.coefficient), self.ingredient)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedFormula {
    pub name: String,
    pub form: QuadForm,
    pub terms: Vec<Term>,
}

impl NamedFormula {
    pub fn eval(&self, n: u64) -> Rational {
        self.terms.iter().map(|t| t.eval(n)).sum()
    }
}

impl fmt::Display for NamedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.name)?;
        for (i, t) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, " {t}")?;
            } else if t.coefficient.is_negative() {
                let flipped = Term {
                    coefficient: -t.coefficient.clone(),
                    ..t.clone()
                };
                write!(f, " - {flipped}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

type Row = (i64, i64, Ingredient, u64);

const S: Ingredient = Ingredient::Sigma;

const fn ts(chi: D, psi: D) -> Ingredient {
    Ingredient::TwistedSigma { chi, psi }
}

const fn tau_of(form: CuspForm) -> Ingredient {
    Ingredient::Tau(form)
}

const Q2_1_2: &[Row] = &[(6, 1, S, 1), (-12, 1, S, 2), (18, 1, S, 3), (-36, 1, S, 6)];

const Q2_1_4: &[Row] = &[
    (6, 1, S, 1),
    (-18, 1, S, 2),
    (-18, 1, S, 3),
    (24, 1, S, 4),
    (54, 1, S, 6),
    (-72, 1, S, 12),
];

const Q2_1_8: &[Row] = &[
    (3, 2, S, 1),
    (-9, 2, S, 2),
    (9, 2, S, 3),
    (9, 1, S, 4),
    (-27, 2, S, 6),
    (-12, 1, S, 8),
    (27, 1, S, 12),
    (-36, 1, S, 24),
    (9, 2, tau_of(CuspForm::Delta24), 1),
];

const Q2_1_16: &[Row] = &[
    (3, 2, S, 1),
    (-9, 2, S, 2),
    (-9, 2, S, 3),
    (9, 1, S, 4),
    (27, 2, S, 6),
    (-18, 1, S, 8),
    (-27, 1, S, 12),
    (24, 1, S, 16),
    (54, 1, S, 24),
    (72, 1, S, 48),
    (9, 2, tau_of(CuspForm::Delta48), 1),
];

const SAMPLE_1_2_4_4: &[Row] = &[(-2, 1, ts(D::ONE, D::CHI_8), 2), (2, 1, ts(D::CHI_8, D::ONE), 1)];

const SAMPLE_1_2_4_6: &[Row] = &[
    (-1, 1, ts(D::ONE, D::CHI_12), 4),
    (3, 2, ts(D::CHI_12, D::ONE), 1),
    (1, 2, ts(D::CHI_M4, D::CHI_M3), 1),
    (-3, 1, ts(D::CHI_M3, D::CHI_M4), 4),
];

const SAMPLE_1_2_4_12: &[Row] = &[
    (1, 1, ts(D::CHI_24, D::ONE), 1),
    (-1, 3, ts(D::ONE, D::CHI_24), 2),
    (1, 3, ts(D::CHI_M8, D::CHI_M3), 1),
    (1, 1, ts(D::CHI_M3, D::CHI_M8), 2),
    (4, 1, tau_of(CuspForm::Delta24Chi24One), 2),
    (2, 3, tau_of(CuspForm::Delta48Chi24Two), 1),
    (4, 3, tau_of(CuspForm::Delta48Chi24Two), 2),
];

const SAMPLE_1_3_4_6: &[Row] = &[
    (-4, 5, ts(D::ONE, D::CHI_8), 2),
    (-6, 5, ts(D::ONE, D::CHI_8), 6),
    (8, 5, ts(D::CHI_8, D::ONE), 1),
    (-12, 5, ts(D::CHI_8, D::ONE), 3),
    (8, 5, tau_of(CuspForm::Delta24Chi8One), 1),
    (-8, 5, tau_of(CuspForm::Delta24Chi8One), 2),
    (-6, 5, tau_of(CuspForm::Delta24Chi8Two), 1),
    (-8, 5, tau_of(CuspForm::Delta24Chi8Two), 2),
];

const SAMPLE_1_3_4_12: &[Row] = &[
    (1204, 1081, S, 1),
    (-3, 1, S, 2),
    (-3, 1, S, 3),
    (10, 1, S, 4),
    (9, 1, S, 6),
    (-12, 1, S, 8),
    (-30, 1, S, 12),
    (360, 23, S, 24),
    (1656, 47, S, 48),
    (-47, 24, ts(D::CHI_M4, D::CHI_M4), 1),
    (1, 1, tau_of(CuspForm::Delta48), 1),
];

const SAMPLE_N3_1_3_1: &[Row] = &[
    (8, 1, S, 1),
    (-12, 1, S, 2),
    (-24, 1, S, 3),
    (16, 1, S, 4),
    (36, 1, S, 6),
    (-48, 1, S, 12),
];

const SAMPLE_N3_1_3_16: &[Row] = &[
    (-17, 92, S, 1),
    (-3, 2, S, 2),
    (-3, 2, S, 3),
    (7, 1, S, 4),
    (9, 2, S, 6),
    (-18, 1, S, 8),
    (-21, 1, S, 12),
    (24, 1, S, 16),
    (54, 1, S, 24),
    (-72, 1, S, 48),
    (3, 2, tau_of(CuspForm::Delta48), 1),
];

const SAMPLE_N3_1_4_8: &[Row] = &[
    (1, 4, ts(D::ONE, D::CHI_12), 1),
    (-1, 4, ts(D::ONE, D::CHI_12), 2),
    (-1, 1, ts(D::ONE, D::CHI_12), 4),
    (3, 4, ts(D::CHI_12, D::ONE), 1),
    (-3, 2, ts(D::CHI_12, D::ONE), 2),
    (6, 1, ts(D::CHI_12, D::ONE), 4),
    (1, 4, ts(D::CHI_M4, D::CHI_M3), 1),
    (1, 2, ts(D::CHI_M4, D::CHI_M3), 2),
    (2, 1, ts(D::CHI_M4, D::CHI_M3), 4),
    (3, 4, ts(D::CHI_M3, D::CHI_M4), 1),
    (3, 4, ts(D::CHI_M3, D::CHI_M4), 2),
    (-3, 1, ts(D::CHI_M3, D::CHI_M4), 4),
];

const SAMPLE_N3_2_3_1: &[Row] = &[
    (2, 5, ts(D::ONE, D::CHI_8), 1),
    (-12, 5, ts(D::ONE, D::CHI_8), 3),
    (16, 5, ts(D::CHI_8, D::ONE), 1),
    (96, 5, ts(D::CHI_8, D::ONE), 3),
    (12, 5, tau_of(CuspForm::Delta24Chi8Two), 3),
];

const SAMPLE_N3_3_3_4: &[Row] = &[
    (-1, 1, ts(D::ONE, D::CHI_12), 1),
    (1, 1, ts(D::CHI_12, D::ONE), 1),
    (-1, 1, ts(D::CHI_M4, D::CHI_M3), 1),
    (1, 1, ts(D::CHI_M3, D::CHI_M4), 1),
];

const SAMPLE_N3_3_6_2: &[Row] = &[
    (-1, 3, ts(D::ONE, D::CHI_24), 1),
    (4, 3, ts(D::CHI_24, D::ONE), 1),
    (-4, 3, ts(D::CHI_M3, D::CHI_M8), 1),
    (1, 3, ts(D::CHI_M8, D::CHI_M3), 1),
    (4, 3, tau_of(CuspForm::Delta24Chi24One), 1),
];

const THEOREM_Q2: &[(QuadForm, &[Row])] = &[
    (QuadForm::Q2([1, 2]), Q2_1_2),
    (QuadForm::Q2([1, 4]), Q2_1_4),
    (QuadForm::Q2([1, 8]), Q2_1_8),
    (QuadForm::Q2([1, 16]), Q2_1_16),
];

const SAMPLES: &[(QuadForm, &[Row])] = &[
    (QuadForm::Q1([1, 2, 4, 4]), SAMPLE_1_2_4_4),
    (QuadForm::Q1([1, 2, 4, 6]), SAMPLE_1_2_4_6),
    (QuadForm::Q1([1, 2, 4, 12]), SAMPLE_1_2_4_12),
    (QuadForm::Q1([1, 3, 4, 6]), SAMPLE_1_3_4_6),
    (QuadForm::Q1([1, 3, 4, 12]), SAMPLE_1_3_4_12),
    (QuadForm::Q3([1, 3, 1]), SAMPLE_N3_1_3_1),
    (QuadForm::Q3([1, 3, 16]), SAMPLE_N3_1_3_16),
    (QuadForm::Q3([1, 4, 8]), SAMPLE_N3_1_4_8),
    (QuadForm::Q3([2, 3, 1]), SAMPLE_N3_2_3_1),
    (QuadForm::Q3([3, 3, 4]), SAMPLE_N3_3_3_4),
    (QuadForm::Q3([3, 6, 2]), SAMPLE_N3_3_6_2),
];

fn from_rows(rows: &[Row]) -> Vec<Term> {
    rows.iter()
        .map(|&(p, q, ingredient, divisor)| Term {
            coefficient: ratio(p, q),
            ingredient,
            divisor,
        })
        .collect()
}

/// `N1_1_2_4_4`, `N2_1_8`, `N3_1_3_16`, ...
pub fn form_id(form: &QuadForm) -> String {
    let prefix = match form {
        QuadForm::Q1(_) => "N1",
        QuadForm::Q2(_) => "N2",
        QuadForm::Q3(_) => "N3",
    };
    let parts: Vec<String> = form.coefficients().iter().map(u32::to_string).collect();
    format!("{prefix}_{}", parts.join("_"))
}

fn parse_form_id(s: &str) -> Option<QuadForm> {
    let mut parts = s.split('_');
    let family = parts.next()?;
    let w: Vec<u32> = parts.map(|p| p.parse().ok()).collect::<Option<_>>()?;
    match (family, w.as_slice()) {
        ("N1", &[a, b, c, d]) => Some(QuadForm::Q1([a, b, c, d])),
        ("N2", &[a, b]) => Some(QuadForm::Q2([a, b])),
        ("N3", &[a, b, c]) => Some(QuadForm::Q3([a, b, c])),
        _ => None,
    }
}

/// The four Q2 identities, in pair order.
pub fn theorem_q2_formulas() -> Vec<NamedFormula> {
    THEOREM_Q2
        .iter()
        .map(|(form, rows)| NamedFormula {
            name: form_id(form),
            form: *form,
            terms: from_rows(rows),
        })
        .collect()
}

pub fn eval_theorem_q2(pair: [u32; 2], n: u64) -> Result<Rational> {
    let form = QuadForm::Q2(pair);
    THEOREM_Q2
        .iter()
        .find(|(f, _)| *f == form)
        .map(|(_, rows)| from_rows(rows).iter().map(|t| t.eval(n)).sum())
        .ok_or_else(|| Error::UnknownForm(form.to_string()))
}

/// The sample formulas exactly as printed, named `<form id>_sample`.
pub fn sample_formulas() -> Vec<NamedFormula> {
    SAMPLES
        .iter()
        .map(|(form, rows)| NamedFormula {
            name: format!("{}_sample", form_id(form)),
            form: *form,
            terms: from_rows(rows),
        })
        .collect()
}

pub fn sample_formula(name: &str) -> Result<NamedFormula> {
    sample_formulas()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn eval_sample(name: &str, n: u64) -> Result<Rational> {
    Ok(sample_formula(name)?.eval(n))
}

/// Contribution of one basis element to the `n ≥ 1` coefficients.
fn descriptor_terms(d: &Descriptor) -> Vec<(Rational, Ingredient, u64)> {
    match *d {
        Descriptor::Phi { a, b } => {
            let span = Rational::from_integer((b - a).into());
            vec![
                (rat(24 * a as i64) / &span, Ingredient::Sigma, a),
                (-rat(24 * b as i64) / &span, Ingredient::Sigma, b),
            ]
        }
        Descriptor::Eisenstein { chi, psi, dilation } => {
            vec![(Rational::one(), Ingredient::TwistedSigma { chi, psi }, dilation as u64)]
        }
        Descriptor::Cusp { form, dilation } => vec![(Rational::one(), Ingredient::Tau(form), dilation as u64)],
    }
}

/// Term list obtained from the computed decomposition of `form`.
pub fn recomputed_formula(form: &QuadForm, precision: usize) -> Result<NamedFormula> {
    let dec = decompose_form(form, precision)?;
    let mut terms: Vec<Term> = Vec::new();
    for (alpha, d) in dec.coefficients.iter().zip(descriptors(dec.space)) {
        if alpha.is_zero() {
            continue;
        }
        for (c, ingredient, divisor) in descriptor_terms(d) {
            let c = alpha * c;
            match terms.iter_mut().find(|t| t.ingredient == ingredient && t.divisor == divisor) {
                Some(t) => t.coefficient += c,
                None => terms.push(Term {
                    coefficient: c,
                    ingredient,
                    divisor,
                }),
            }
        }
    }
    terms.retain(|t| !t.coefficient.is_zero());
    terms.sort_by_key(|t| (t.ingredient.rank(), if t.ingredient == Ingredient::Sigma { t.divisor } else { 0 }));
    Ok(NamedFormula {
        name: format!("{}_recomputed", form_id(form)),
        form: *form,
        terms,
    })
}

/// `S(n) = Σ_{d | n} (8 / (n/d)) d`.
pub fn s_sum(n: u64) -> Rational {
    twisted_sigma(2, &D::CHI_8, &D::ONE, n)
}

/// `R(n) = Σ_{d | n} (8 / d) d`.
pub fn r_sum(n: u64) -> Rational {
    twisted_sigma(2, &D::ONE, &D::CHI_8, n)
}

/// `(k, m)` with `n = p^k m` and `p ∤ m`.
pub fn split_valuation(n: u64, p: u64) -> (u32, u64) {
    let (mut k, mut m) = (0, n);
    while m % p == 0 {
        k += 1;
        m /= p;
    }
    (k, m)
}

/// Sums `Σ_{e | n} χ(e) ψ(n/e) (n/e)`, the reindexed form of `σ_{2,ψ,χ}`
/// used for the four auxiliary functions below.
fn complementary_sum(n: u64, on_divisor: D, on_cofactor: D) -> Rational {
    let mut acc = 0i64;
    for e in divisors(n) {
        acc += (on_divisor.eval(e as i64) * on_cofactor.eval((n / e) as i64)) as i64 * (n / e) as i64;
    }
    rat(acc)
}

/// `A(n) = Σ_{e | n} χ12(e) n/e`.
pub fn a_sum(n: u64) -> Rational {
    complementary_sum(n, D::CHI_12, D::ONE)
}

/// `B(n) = Σ_{e | n} χ-3(e) χ-4(n/e) n/e`.
pub fn b_sum(n: u64) -> Rational {
    complementary_sum(n, D::CHI_M3, D::CHI_M4)
}

/// `C(n) = Σ_{e | n} χ-4(e) χ-3(n/e) n/e`.
pub fn c_sum(n: u64) -> Rational {
    complementary_sum(n, D::CHI_M4, D::CHI_M3)
}

/// `D(n) = Σ_{e | n} χ12(n/e) n/e`.
pub fn d_sum(n: u64) -> Rational {
    complementary_sum(n, D::ONE, D::CHI_12)
}

pub const CLOSED_FORMS: [&str; 3] = ["N1_1_2_4_4", "N3_1_3_1", "N3_3_3_4_ABCD"];

/// Closed forms, accepted with or without a `_closed` suffix.
pub fn eval_closed_form(name: &str, n: u64) -> Result<Rational> {
    assert!(n >= 1, "closed forms are stated for n ≥ 1");
    match name.strip_suffix("_closed").unwrap_or(name) {
        "N1_1_2_4_4" => {
            let (alpha, odd) = split_valuation(n, 2);
            let sign = rat(D::CHI_8.eval(odd as i64).into());
            let even = if n % 2 == 0 { rat(2) } else { rat(0) };
            Ok((rat(1 << (alpha + 1)) - even * sign) * s_sum(odd))
        }
        "N3_1_3_1" => {
            let (alpha, rest) = split_valuation(n, 2);
            let (_, core) = split_valuation(rest, 3);
            let sigma = divisor_sigma(1, core as i64);
            if alpha == 0 {
                Ok(rat(8) * sigma)
            } else {
                Ok(rat(12 * ((1i64 << alpha) - 1)) * sigma)
            }
        }
        "N3_3_3_4_ABCD" => Ok(-d_sum(n) + a_sum(n) - c_sum(n) + b_sum(n)),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Any formula by name: `N2_1_8`, `N1_1_2_4_4_sample`, `N3_1_3_1_closed`,
/// `N1_1_3_4_12_recomputed`.
pub fn evaluate(name: &str, n: u64, precision: usize) -> Result<Rational> {
    if let Some(base) = name.strip_suffix("_recomputed") {
        let form = parse_form_id(base).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        return Ok(recomputed_formula(&form, precision)?.eval(n));
    }
    if name.ends_with("_sample") {
        return eval_sample(name, n);
    }
    if let Some(QuadForm::Q2(pair)) = parse_form_id(name) {
        return eval_theorem_q2(pair, n);
    }
    eval_closed_form(name, n)
}
