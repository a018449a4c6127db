//! Command implementations shared by the binary and the tests. Every
//! command yields a JSON document (schema 1, rationals as strings) plus a
//! plain-text rendering, and a status that maps onto the exit code.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{basis_ids, basis_rank, build_basis};
use crate::decompose::{compare_with_paper_tables, decompose_form, TableReport};
use crate::eisenstein::{eisenstein_series, parse_phi, phi_ab, EisensteinSpec};
use crate::error::{Error, Result};
use crate::eta::{CuspForm, EtaQuotient};
use crate::exact_arith::{format_rational, rat, Rational};
use crate::formulas::{
    eval_closed_form, evaluate, recomputed_formula, sample_formulas, theorem_q2_formulas, NamedFormula,
    CLOSED_FORMS,
};
use crate::oracle::{count, counts_upto};
use crate::qseries::QSeries;
use crate::tables::Table;
use crate::theta::{catalogue, form_theta_product, FormSpec, QuadForm, Space};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Only printed material disagrees with the computation.
    PaperDiscrepancy,
    Failure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::PaperDiscrepancy => 0,
            Status::Failure => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::PaperDiscrepancy => "paper-discrepancy",
            Status::Failure => "failure",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub json: Value,
    pub text: String,
}

/// Usage errors exit with 2, mathematical failures with 1.
pub fn error_exit_code(err: &Error) -> i32 {
    match err {
        Error::Inconsistent { .. } | Error::Underdetermined { .. } | Error::NotInvertible => 1,
        _ => 2,
    }
}

fn envelope(command: &str, status: Status, body: Value) -> Value {
    let mut doc = json!({ "schema": SCHEMA, "command": command, "status": status });
    if let (Value::Object(m), Value::Object(b)) = (&mut doc, body) {
        m.extend(b);
    }
    doc
}

fn rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

/// Parses any series the tool can build: a form (`q1:1,1,1,4`), an
/// Eisenstein series (`E2(chi8, 1, 2)`), `phi(a,b)`, a catalogued cusp
/// form name, or an eta quotient (`2^1 4^1 6^1 12^1`).
pub fn parse_series(spec: &str, precision: usize) -> Result<QSeries> {
    let s = spec.trim();
    let lower = s.to_ascii_lowercase();
    if lower.starts_with('q') && s.contains(':') {
        return Ok(form_theta_product(&s.parse::<QuadForm>()?, precision));
    }
    if lower.starts_with("e2(") {
        return Ok(eisenstein_series(&s.parse::<EisensteinSpec>()?, precision));
    }
    if lower.starts_with("phi(") {
        let (a, b) = parse_phi(s)?;
        return phi_ab(a, b, precision);
    }
    if let Ok(form) = s.parse::<CuspForm>() {
        return Ok(form.expand(precision));
    }
    s.parse::<EtaQuotient>()?.expand(precision)
}

pub fn expand(spec: &str, precision: usize) -> Result<Outcome> {
    let series = parse_series(spec, precision)?;
    let json = envelope(
        "expand",
        Status::Pass,
        json!({ "series": spec, "expansion": series.to_json() }),
    );
    let text = rationals(series.coeffs()).join(" ");
    Ok(Outcome {
        status: Status::Pass,
        json,
        text,
    })
}

pub fn basis(space: Space, precision: usize) -> Result<Outcome> {
    let series = build_basis(space, precision)?;
    let elements: Vec<Value> = basis_ids(space)
        .iter()
        .zip(series.iter())
        .map(|(id, f)| json!({ "index": id.index, "descriptor": id.descriptor, "expansion": f.to_json() }))
        .collect();
    let text = basis_ids(space)
        .iter()
        .zip(series.iter())
        .map(|(id, f)| {
            let head: Vec<String> = f.coeffs().iter().take(12).map(format_rational).collect();
            format!("f{:<2} {:<24} {} ...", id.index, id.descriptor.to_string(), head.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        status: Status::Pass,
        json: envelope("basis", Status::Pass, json!({ "space": space, "elements": elements })),
        text,
    })
}

pub fn count_command(form: &QuadForm, n: u64) -> Outcome {
    let c = count(form, n);
    Outcome {
        status: Status::Pass,
        json: envelope("count", Status::Pass, json!({ "form": form.to_string(), "n": n, "count": c })),
        text: c.to_string(),
    }
}

pub fn decompose_command(form: &QuadForm, precision: usize) -> Result<Outcome> {
    let dec = decompose_form(form, precision)?;
    let ids = basis_ids(dec.space);
    let text = ids
        .iter()
        .zip(&dec.coefficients)
        .map(|(id, c)| format!("f{:<2} {:<24} {}", id.index, id.descriptor.to_string(), format_rational(c)))
        .collect::<Vec<_>>()
        .join("\n");
    let json = envelope(
        "decompose",
        Status::Pass,
        json!({
            "form": form.to_string(),
            "space": dec.space,
            "coefficients": dec.coefficient_strings(),
            "verified_to": dec.verified_to,
        }),
    );
    Ok(Outcome {
        status: Status::Pass,
        json,
        text,
    })
}

pub fn formula_command(name: &str, n: u64, precision: usize) -> Result<Outcome> {
    let v = evaluate(name, n, precision)?;
    Ok(Outcome {
        status: Status::Pass,
        json: envelope("formula", Status::Pass, json!({ "name": name, "n": n, "value": format_rational(&v) })),
        text: format_rational(&v),
    })
}

pub fn verify_tables(which: &[Table], precision: usize) -> Result<Outcome> {
    let reports = compare_with_paper_tables(which, precision)?;
    let discrepancies: Vec<&TableReport> = reports.iter().filter(|r| !r.confirmed()).collect();
    let status = if discrepancies.is_empty() {
        Status::Pass
    } else {
        Status::PaperDiscrepancy
    };
    let mut text = format!(
        "{} rows decomposed, {} confirmed, {} with discrepancies",
        reports.len(),
        reports.len() - discrepancies.len(),
        discrepancies.len()
    );
    for r in &discrepancies {
        text.push_str(&format!("\n  table {} {}: ", r.table, r.form));
        if r.paper.is_none() {
            text.push_str("no printed row");
        } else {
            let diffs: Vec<String> = r
                .diffs
                .iter()
                .map(|d| format!("[{}] {} vs printed {}", d.index, d.computed, d.paper))
                .collect();
            text.push_str(&diffs.join(", "));
        }
        if let Some(note) = &r.note {
            text.push_str(&format!(" ({note})"));
        }
    }
    let labels: Vec<&str> = which.iter().map(|t| t.label()).collect();
    let json = envelope(
        "verify-tables",
        status,
        json!({ "tables": labels, "precision": precision, "rows": reports, "paper-discrepancy": discrepancies }),
    );
    Ok(Outcome { status, json, text })
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaCheck {
    pub name: String,
    pub form: String,
    /// `printed` or `recomputed`.
    pub source: &'static str,
    pub terms: String,
    pub mismatches: Vec<u64>,
}

fn check_formula(f: &NamedFormula, source: &'static str, counts: &[u64]) -> FormulaCheck {
    FormulaCheck {
        name: f.name.clone(),
        form: f.form.to_string(),
        source,
        terms: f.to_string(),
        mismatches: (1..counts.len() as u64)
            .filter(|&n| f.eval(n) != rat(counts[n as usize] as i64))
            .collect(),
    }
}

fn closed_form_target(name: &str) -> QuadForm {
    match name {
        "N1_1_2_4_4" => QuadForm::Q1([1, 2, 4, 4]),
        "N3_1_3_1" => QuadForm::Q3([1, 3, 1]),
        _ => QuadForm::Q3([3, 3, 4]),
    }
}

/// Every printed formula, its recomputed counterpart, and the closed forms,
/// each against brute-force counts for `1 ≤ n ≤ nmax`.
pub fn formula_checks(nmax: u64, precision: usize) -> Result<Vec<FormulaCheck>> {
    let printed: Vec<NamedFormula> = theorem_q2_formulas().into_iter().chain(sample_formulas()).collect();
    let mut checks: Vec<FormulaCheck> = printed
        .par_iter()
        .map(|f| -> Result<Vec<FormulaCheck>> {
            let counts = counts_upto(&f.form, nmax);
            let again = recomputed_formula(&f.form, precision)?;
            Ok(vec![check_formula(f, "printed", &counts), check_formula(&again, "recomputed", &counts)])
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for name in CLOSED_FORMS {
        let form = closed_form_target(name);
        let counts = counts_upto(&form, nmax);
        checks.push(FormulaCheck {
            name: format!("{name}_closed"),
            form: form.to_string(),
            source: "printed",
            terms: "closed form".into(),
            mismatches: (1..=nmax)
                .filter(|&n| eval_closed_form(name, n).expect("known closed form") != rat(counts[n as usize] as i64))
                .collect(),
        });
    }
    Ok(checks)
}

fn formula_status(checks: &[FormulaCheck]) -> Status {
    checks.iter().fold(Status::Pass, |s, c| match (c.mismatches.is_empty(), c.source) {
        (true, _) => s,
        (false, "recomputed") => Status::Failure,
        (false, _) => s.max(Status::PaperDiscrepancy),
    })
}

fn formula_text(checks: &[FormulaCheck]) -> String {
    checks
        .iter()
        .map(|c| {
            let verdict = if c.mismatches.is_empty() {
                "ok".to_string()
            } else {
                let head: Vec<String> = c.mismatches.iter().take(5).map(u64::to_string).collect();
                format!("MISMATCH at {} values (n = {}, ...)", c.mismatches.len(), head.join(", "))
            };
            format!("{:<28} {:<10} {verdict}", c.name, c.source)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn verify_formulas(nmax: u64, precision: usize) -> Result<Outcome> {
    let checks = formula_checks(nmax, precision)?;
    let status = formula_status(&checks);
    let discrepancies: Vec<&FormulaCheck> = checks.iter().filter(|c| !c.mismatches.is_empty()).collect();
    let json = envelope(
        "verify-formulas",
        status,
        json!({ "nmax": nmax, "formulas": checks, "paper-discrepancy": discrepancies }),
    );
    Ok(Outcome {
        status,
        text: formula_text(&checks),
        json,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FormCheck {
    pub form: String,
    pub space: Space,
    pub coefficients: Vec<String>,
    /// Indices where the theta product disagrees with enumeration.
    pub theta_mismatches: Vec<u64>,
    /// Indices where `Σ α_i A_i(n)` disagrees with enumeration.
    pub formula_mismatches: Vec<u64>,
    pub error: Option<String>,
}

impl FormCheck {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.theta_mismatches.is_empty() && self.formula_mismatches.is_empty()
    }
}

/// Decomposition, reconstruction and both count pipelines for one form.
pub fn check_form(spec: &FormSpec, nmax: u64, precision: usize) -> FormCheck {
    let counts = counts_upto(&spec.form, nmax);
    let width = precision.max(nmax as usize + 1);
    let theta = form_theta_product(&spec.form, width);
    let theta_mismatches = (0..=nmax)
        .filter(|&n| theta.coeff(n as usize) != &rat(counts[n as usize] as i64))
        .collect();
    let mut out = FormCheck {
        form: spec.form.to_string(),
        space: spec.space,
        coefficients: Vec::new(),
        theta_mismatches,
        formula_mismatches: Vec::new(),
        error: None,
    };
    let dec = match decompose_form(&spec.form, precision) {
        Ok(d) => d,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let basis = build_basis(dec.space, width).expect("width is above the minimum precision");
    out.formula_mismatches = (1..=nmax)
        .filter(|&n| dec.coefficient_at(&basis, n as usize) != rat(counts[n as usize] as i64))
        .collect();
    out.coefficients = dec.coefficient_strings();
    out
}

pub fn verify_all(nmax: u64, precision: usize) -> Result<Outcome> {
    let forms = catalogue();
    let tally = |f: fn(&QuadForm) -> bool| forms.iter().filter(|s| f(&s.form)).count();
    let (q1, q2, q3) = (
        tally(|f| matches!(f, QuadForm::Q1(_))),
        tally(|f| matches!(f, QuadForm::Q2(_))),
        tally(|f| matches!(f, QuadForm::Q3(_))),
    );
    assert_eq!((q1, q2, q3), (55, 4, 65), "catalogue coverage");

    let ranks: Vec<(Space, usize)> = Space::ALL
        .iter()
        .map(|&s| basis_rank(s, precision).map(|r| (s, r)))
        .collect::<Result<_>>()?;
    let rank_ok = ranks.iter().all(|(s, r)| *r == s.dimension());

    let forms_checked: Vec<FormCheck> = forms.par_iter().map(|s| check_form(s, nmax, precision)).collect();
    let forms_ok = forms_checked.iter().all(FormCheck::passed);

    let tables = verify_tables(&Table::ALL, precision)?;
    let formulas = formula_checks(nmax, precision)?;
    let formulas_status = formula_status(&formulas);

    let mut status = tables.status.max(formulas_status);
    if !rank_ok || !forms_ok {
        status = Status::Failure;
    }

    let mut text = vec![
        format!("catalogue: {q1} Q1 + {q2} Q2 + {q3} Q3 = {} forms", forms.len()),
        format!(
            "basis ranks at P = {precision}: {}",
            ranks
                .iter()
                .map(|(s, r)| format!("{s} {r}/{}", s.dimension()))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!(
            "forms: {}/{} decompose and match enumeration for n <= {nmax}",
            forms_checked.iter().filter(|c| c.passed()).count(),
            forms_checked.len()
        ),
    ];
    for c in forms_checked.iter().filter(|c| !c.passed()) {
        text.push(format!("  FAILED {}: {:?}", c.form, c.error));
    }
    text.push(format!("tables: {}", tables.text));
    text.push(format!("formulas:\n{}", formula_text(&formulas)));
    text.push(format!("status: {}", status.label()));

    let formula_discrepancies: Vec<&FormulaCheck> = formulas.iter().filter(|c| !c.mismatches.is_empty()).collect();
    let json = envelope(
        "verify-all",
        status,
        json!({
            "nmax": nmax,
            "precision": precision,
            "catalogue": { "q1": q1, "q2": q2, "q3": q3 },
            "ranks": ranks.iter().map(|(s, r)| json!({ "space": s, "rank": r })).collect::<Vec<_>>(),
            "forms": forms_checked,
            "formulas": formulas,
            "paper-discrepancy": {
                "tables": tables.json["paper-discrepancy"].clone(),
                "formulas": formula_discrepancies,
            },
        }),
    );
    Ok(Outcome {
        status,
        json,
        text: text.join("\n"),
    })
}
