//! Eta quotients `Π η(d z)^r` and the catalogue of named cusp forms.
//!
//! An eta quotient is written in the compact notation `d1^r1 d2^r2 ...`,
//! e.g. `2^1 4^1 6^1 12^1`. Its expansion is
//! `q^{Σ r d / 24} Π_d Π_{n ≥ 1} (1 - q^{dn})^r`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qseries::QSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    factors: Vec<(u32, i32)>,
}

impl EtaQuotient {
    /// Builds a quotient from `(scale, exponent)` pairs. Scales must be
    /// positive and distinct, exponents nonzero.
    pub fn new(factors: Vec<(u32, i32)>) -> Result<Self> {
        for (i, &(d, r)) in factors.iter().enumerate() {
            if d == 0 || r == 0 {
                return Err(Error::Parse(format!("bad eta factor {d}^{r}")));
            }
            if factors[..i].iter().any(|&(e, _)| e == d) {
                return Err(Error::Parse(format!("repeated eta scale {d}")));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// `Σ r_i d_i`, i.e. 24 times the order of vanishing at infinity.
    pub fn exponent_numerator(&self) -> i64 {
        self.factors.iter().map(|&(d, r)| d as i64 * r as i64).sum()
    }

    /// Order of the leading `q` power; must be a non-negative integer.
    pub fn leading_exponent(&self) -> Result<usize> {
        let num = self.exponent_numerator();
        if num < 0 || num % 24 != 0 {
            return Err(Error::BadEtaExponent {
                spec: self.to_string(),
                numerator: num,
            });
        }
        Ok((num / 24) as usize)
    }

    /// Weight of the quotient, `Σ r / 2` (may be half-integral).
    pub fn weight_times_two(&self) -> i64 {
        self.factors.iter().map(|&(_, r)| r as i64).sum()
    }

    pub fn expand(&self, precision: usize) -> Result<QSeries> {
        let lead = self.leading_exponent()?;
        if lead >= precision {
            return Ok(QSeries::zero(precision));
        }
        let body_prec = precision - lead;
        let mut body = QSeries::one(body_prec);
        let mut inverse_part = QSeries::one(body_prec);
        let mut has_inverse = false;
        for &(d, r) in &self.factors {
            let d = d as usize;
            let target = if r > 0 {
                &mut body
            } else {
                has_inverse = true;
                &mut inverse_part
            };
            for _ in 0..r.unsigned_abs() {
                let mut m = d;
                while m < body_prec {
                    target.mul_one_minus_q_pow(m);
                    m += d;
                }
            }
        }
        if has_inverse {
            body = &body * &inverse_part.invert_unit()?;
        }
        let mut out = QSeries::zero(precision);
        for (n, c) in body.into_coeffs().into_iter().enumerate() {
            out.coeffs_mut()[n + lead] = c;
        }
        Ok(out)
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(d, r)| format!("{d}^{r}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for EtaQuotient {
    type Err = Error;

    /// Accepts `"2^1 4^1 6^1 12^1"`, `"2^-1 4^4"` or the LaTeX form
    /// `"2^{-1}4^4"`. When braces appear, an unbraced exponent is a single
    /// digit, as in TeX.
    fn from_str(s: &str) -> Result<Self> {
        let tex = s.contains('{');
        let bad = |what: &str| Error::Parse(format!("eta spec `{s}`: expected {what}"));
        let mut factors = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let (d, after) = split_number(rest, false).ok_or_else(|| bad("a scale"))?;
            let after = after.trim_start().strip_prefix('^').ok_or_else(|| bad("`^`"))?;
            let after = after.trim_start();
            let (r, after) = if let Some(inner) = after.strip_prefix('{') {
                let close = inner.find('}').ok_or_else(|| bad("`}`"))?;
                let (r, tail) = split_number(inner[..close].trim(), true).ok_or_else(|| bad("an exponent"))?;
                if !tail.trim().is_empty() {
                    return Err(bad("an exponent"));
                }
                (r, &inner[close + 1..])
            } else if tex {
                let c = after.chars().next().filter(|c| c.is_ascii_digit()).ok_or_else(|| bad("an exponent"))?;
                (c.to_digit(10).unwrap() as i64, &after[1..])
            } else {
                split_number(after, true).ok_or_else(|| bad("an exponent"))?
            };
            let d = u32::try_from(d).map_err(|_| Error::Parse(format!("eta scale {d}")))?;
            let r = i32::try_from(r).map_err(|_| Error::Parse(format!("eta exponent {r}")))?;
            factors.push((d, r));
            rest = after.trim_start();
        }
        Self::new(factors)
    }
}

fn split_number(s: &str, signed: bool) -> Option<(i64, &str)> {
    let mut end = 0;
    let bytes = s.as_bytes();
    if signed && end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
        end += 1;
    }
    let digits_start = end;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == digits_start {
        return None;
    }
    s[..end].parse().ok().map(|v| (v, &s[end..]))
}

/// The named cusp forms that enter the bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CuspForm {
    Delta24,
    Delta48,
    Delta24Chi8One,
    Delta24Chi8Two,
    Delta48Chi12,
    Delta48Chi12One,
    Delta48Chi12Two,
    Delta24Chi24One,
    Delta48Chi24Two,
}

struct CatalogueEntry {
    form: CuspForm,
    names: &'static [&'static str],
    eta: &'static [(u32, i32)],
    /// `(modulus, residue)` kept from the eta expansion.
    residue: Option<(usize, usize)>,
}

const CATALOGUE: &[CatalogueEntry] = &[
    CatalogueEntry {
        form: CuspForm::Delta24,
        names: &["D24", "Delta_2_24"],
        eta: &[(2, 1), (4, 1), (6, 1), (12, 1)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta48,
        names: &["D48", "Delta_2_48"],
        eta: &[(2, -1), (4, 4), (6, -1), (8, -1), (12, 4), (24, -1)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta24Chi8One,
        names: &["D24_chi8_1", "Delta_2_24_chi8_1"],
        eta: &[(1, 1), (2, -1), (3, -1), (6, 4), (8, 2), (12, -1)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta24Chi8Two,
        names: &["D24_chi8_2", "Delta_2_24_chi8_2"],
        eta: &[(1, 2), (4, -1), (6, -1), (8, 1), (12, 4), (24, -1)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta48Chi12,
        names: &["D48_chi12", "Delta_2_48_chi12"],
        eta: &[(1, -4), (2, 11), (4, -5), (6, 1), (8, 1), (12, -1), (24, 1)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta48Chi12One,
        names: &["D48_chi12_1", "Delta_2_48_chi12_1"],
        eta: &[(1, -4), (2, 11), (4, -5), (6, 1), (8, 1), (12, -1), (24, 1)],
        residue: Some((4, 1)),
    },
    CatalogueEntry {
        form: CuspForm::Delta48Chi12Two,
        names: &["D48_chi12_2", "Delta_2_48_chi12_2"],
        eta: &[(1, -4), (2, 11), (4, -5), (6, 1), (8, 1), (12, -1), (24, 1)],
        residue: Some((4, 3)),
    },
    CatalogueEntry {
        form: CuspForm::Delta24Chi24One,
        names: &["D24_chi24_1", "Delta_2_24_chi24_1"],
        eta: &[(1, 1), (2, -1), (3, -1), (4, 1), (6, 4), (12, -2), (24, 2)],
        residue: None,
    },
    CatalogueEntry {
        form: CuspForm::Delta48Chi24Two,
        // printed under both a level-24 and a level-48 subscript
        names: &[
            "D48_chi24_2",
            "D24_chi24_2",
            "Delta_2_48_chi24_2",
            "Delta_2_24_chi24_2",
        ],
        eta: &[(1, 2), (2, -2), (4, 4), (6, 1), (8, -1), (12, -1), (24, 1)],
        residue: None,
    },
];

impl CuspForm {
    pub const ALL: [CuspForm; 9] = [
        CuspForm::Delta24,
        CuspForm::Delta48,
        CuspForm::Delta24Chi8One,
        CuspForm::Delta24Chi8Two,
        CuspForm::Delta48Chi12,
        CuspForm::Delta48Chi12One,
        CuspForm::Delta48Chi12Two,
        CuspForm::Delta24Chi24One,
        CuspForm::Delta48Chi24Two,
    ];

    fn entry(self) -> &'static CatalogueEntry {
        CATALOGUE
            .iter()
            .find(|e| e.form == self)
            .expect("every cusp form has a catalogue entry")
    }

    pub fn name(self) -> &'static str {
        self.entry().names[0]
    }

    pub fn eta_quotient(self) -> EtaQuotient {
        EtaQuotient::new(self.entry().eta.to_vec()).expect("catalogue entries are well formed")
    }

    pub fn residue_restriction(self) -> Option<(usize, usize)> {
        self.entry().residue
    }

    pub fn expand(self, precision: usize) -> QSeries {
        let series = self
            .eta_quotient()
            .expand(precision)
            .expect("catalogue quotients have integral leading exponents");
        match self.residue_restriction() {
            Some((m, r)) => series.restrict_residue(m, r),
            None => series,
        }
    }
}

impl fmt::Display for CuspForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CuspForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        CATALOGUE
            .iter()
            .find(|e| e.names.contains(&s))
            .map(|e| e.form)
            .ok_or_else(|| Error::UnknownName(format!("cusp form `{s}`")))
    }
}

pub fn eta_quotient_expansion(spec: &EtaQuotient, precision: usize) -> Result<QSeries> {
    spec.expand(precision)
}

pub fn named_cusp_form(name: &str, precision: usize) -> Result<QSeries> {
    Ok(name.parse::<CuspForm>()?.expand(precision))
}
