//! Exact decomposition of theta products in the bases of `M_2(48, χ)`, and
//! comparison against the printed tables.

use num_traits::Zero;
use serde::Serialize;

use crate::basis::{build_basis, MIN_PRECISION};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, Rational};
use crate::linalg::solve_columns;
use crate::qseries::QSeries;
use crate::tables::{self, Table};
use crate::theta::{catalogue, classify_character, form_theta_product, QuadForm, Space};

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub space: Space,
    pub coefficients: Vec<Rational>,
    /// Number of leading coefficients at which the identity was checked.
    pub verified_to: usize,
}

impl Decomposition {
    /// `Σ α_i f_i` for the given basis.
    pub fn reconstruct(&self, basis: &[QSeries]) -> QSeries {
        let precision = basis.iter().map(QSeries::precision).min().unwrap_or(0);
        let mut acc = QSeries::zero(precision);
        for (a, f) in self.coefficients.iter().zip(basis) {
            if !a.is_zero() {
                acc = &acc + &f.scale(a);
            }
        }
        acc
    }

    /// `Σ α_i A_i(n)` for the given basis.
    pub fn coefficient_at(&self, basis: &[QSeries], n: usize) -> Rational {
        self.coefficients
            .iter()
            .zip(basis)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, f)| a * f.coeff(n))
            .sum()
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(format_rational).collect()
    }
}

/// Solves `target = Σ α_i basis[i]` over the first `precision` coefficients
/// and re-checks the residual explicitly.
pub fn decompose_against(target: &QSeries, basis: &[QSeries], precision: usize) -> Result<Vec<Rational>> {
    if target.precision() < precision || basis.iter().any(|f| f.precision() < precision) {
        return Err(Error::PrecisionTooLow {
            got: target.precision(),
            min: precision,
        });
    }
    let columns: Vec<&[Rational]> = basis.iter().map(|f| &f.coeffs()[..precision]).collect();
    let x = solve_columns(&columns, &target.coeffs()[..precision], precision)?;
    for n in 0..precision {
        let lhs: Rational = x.iter().zip(basis).map(|(a, f)| a * f.coeff(n)).sum();
        if &lhs != target.coeff(n) {
            return Err(Error::Inconsistent { index: n });
        }
    }
    Ok(x)
}

pub fn decompose(target: &QSeries, space: Space, precision: usize) -> Result<Decomposition> {
    if precision < MIN_PRECISION {
        return Err(Error::PrecisionTooLow {
            got: precision,
            min: MIN_PRECISION,
        });
    }
    let basis = build_basis(space, precision)?;
    let coefficients = decompose_against(target, &basis, precision)?;
    Ok(Decomposition {
        space,
        coefficients,
        verified_to: precision,
    })
}

/// Theta product of `form`, decomposed in the space its character selects.
pub fn decompose_form(form: &QuadForm, precision: usize) -> Result<Decomposition> {
    let space = classify_character(form)?;
    decompose(&form_theta_product(form, precision), space, precision)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiff {
    /// 1-based basis position.
    pub index: usize,
    pub computed: String,
    pub paper: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: &'static str,
    pub form: String,
    pub space: Space,
    pub computed: Vec<String>,
    /// `None` when the paper prints no row for this form.
    pub paper: Option<Vec<String>>,
    pub diffs: Vec<EntryDiff>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TableReport {
    pub fn confirmed(&self) -> bool {
        self.paper.is_some() && self.diffs.is_empty()
    }
}

fn table_for(form: &QuadForm) -> Table {
    match form {
        QuadForm::Q1(_) => Table::Two,
        QuadForm::Q2(_) => Table::C,
        QuadForm::Q3(_) => Table::Three,
    }
}

/// The printed χ24 rows index `E_{2,χ-8,χ-3}` at positions 5, 6 and
/// `E_{2,χ-3,χ-8}` at 7, 8, the reverse of the basis listing.
pub const CHI24_PRINTED_ORDER: [usize; 12] = [0, 1, 2, 3, 6, 7, 4, 5, 8, 9, 10, 11];

fn explain(space: Space, computed: &[Rational], paper: &[Rational]) -> Option<String> {
    if space != Space::Chi24 {
        return None;
    }
    let reordered: Vec<Rational> = CHI24_PRINTED_ORDER.iter().map(|&i| computed[i].clone()).collect();
    (reordered == paper).then(|| "matches with positions 5,6 and 7,8 exchanged".to_string())
}

/// Entry-by-entry diff of a computed vector against a printed one.
pub fn diff_rows(computed: &[Rational], paper: &[Rational]) -> Vec<EntryDiff> {
    computed
        .iter()
        .zip(paper)
        .enumerate()
        .filter(|(_, (c, p))| c != p)
        .map(|(i, (c, p))| EntryDiff {
            index: i + 1,
            computed: format_rational(c),
            paper: format_rational(p),
        })
        .collect()
}

pub fn compare_form(form: &QuadForm, precision: usize) -> Result<TableReport> {
    let dec = decompose_form(form, precision)?;
    let printed = tables::lookup(form);
    let diffs = printed.map_or_else(Vec::new, |r| diff_rows(&dec.coefficients, &r.coefficients));
    let note = match printed {
        Some(r) if !diffs.is_empty() => explain(dec.space, &dec.coefficients, &r.coefficients),
        _ => None,
    };
    Ok(TableReport {
        table: table_for(form).label(),
        form: form.to_string(),
        space: dec.space,
        computed: dec.coefficient_strings(),
        paper: printed.map(|r| r.coefficients.iter().map(format_rational).collect()),
        diffs,
        note,
    })
}

/// One report per catalogued form in the selected tables, in catalogue order.
pub fn compare_with_paper_tables(which: &[Table], precision: usize) -> Result<Vec<TableReport>> {
    use rayon::prelude::*;
    let forms: Vec<QuadForm> = catalogue()
        .into_iter()
        .map(|f| f.form)
        .filter(|f| which.contains(&table_for(f)))
        .collect();
    forms.par_iter().map(|f| compare_form(f, precision)).collect()
}
