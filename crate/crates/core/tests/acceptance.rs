//! Acceptance run: one line per criterion.
//!
//! A criterion that fails only because printed material is wrong is shown
//! as FAIL with the reason, and the run still succeeds as long as the
//! failure is exactly the documented one. Any other failure makes the
//! target exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;

use qf48::basis::{basis_rank, build_basis};
use qf48::characters::DirichletCharacter;
use qf48::decompose::{compare_form, decompose_form};
use qf48::eisenstein::{phi_ab, phi_ab_fourier};
use qf48::eta::CuspForm;
use qf48::exact_arith::{divisors, rat, Rational};
use qf48::formulas::{eval_closed_form, eval_sample, eval_theorem_q2};
use qf48::oracle::{count_q2, counts_upto};
use qf48::tables;
use qf48::theta::{catalogue, form_theta_product, hexagonal_series, theta_series, QuadForm, Space};

enum Verdict {
    Pass(String),
    /// Fails for a reason traced to the printed source; the payload says
    /// which, and the check has confirmed nothing else is wrong.
    KnownFail(String),
    Fail(String),
}

fn count_rat(c: u64) -> Rational {
    rat(c as i64)
}

fn criterion_1() -> Verdict {
    let mut unexpected = Vec::new();
    let mut sign_errors = Vec::new();
    for pair in [[1, 2], [1, 4], [1, 8], [1, 16]] {
        for n in 1..=300u64 {
            let lhs = eval_theorem_q2(pair, n).unwrap();
            if lhs != count_rat(count_q2(pair, n)) {
                if pair == [1, 16] && n % 48 == 0 {
                    sign_errors.push(n);
                } else {
                    unexpected.push((pair, n));
                }
            }
        }
    }
    if !unexpected.is_empty() {
        return Verdict::Fail(format!("mismatches {unexpected:?}"));
    }
    if sign_errors.is_empty() {
        return Verdict::Pass("4 pairs, n <= 300".into());
    }
    if sign_errors == [48, 96, 144, 192, 240, 288] {
        return Verdict::KnownFail(format!(
            "(1,2), (1,4), (1,8) exact; (1,16) as printed is off at n = {sign_errors:?}, \
             the printed sign of the sigma(n/48) term (the recomputed formula is exact)"
        ));
    }
    Verdict::Fail(format!("(1,16) mismatches at {sign_errors:?}"))
}

fn criterion_2() -> Verdict {
    let forms: Vec<_> = catalogue()
        .into_iter()
        .filter(|f| !matches!(f.form, QuadForm::Q2(_)))
        .collect();
    let failures: Vec<String> = forms
        .par_iter()
        .filter_map(|spec| {
            let dec = match decompose_form(&spec.form, 200) {
                Ok(d) => d,
                Err(e) => return Some(format!("{}: {e}", spec.form)),
            };
            let basis = build_basis(dec.space, 201).unwrap();
            let target = form_theta_product(&spec.form, 200);
            let residual = &dec.reconstruct(&basis).truncate(200) - &target;
            if !residual.is_zero() {
                return Some(format!("{}: nonzero residual", spec.form));
            }
            let counts = counts_upto(&spec.form, 200);
            (1..=200)
                .find(|&n| dec.coefficient_at(&basis, n) != count_rat(counts[n]))
                .map(|n| format!("{}: count mismatch at {n}", spec.form))
        })
        .collect();
    if forms.len() != 120 {
        return Verdict::Fail(format!("expected 120 Q1/Q3 forms, found {}", forms.len()));
    }
    if failures.is_empty() {
        Verdict::Pass("120 forms, zero residual to q^200, counts equal for n <= 200".into())
    } else {
        Verdict::Fail(failures.join("; "))
    }
}

fn criterion_3() -> Verdict {
    let reports: Vec<_> = catalogue()
        .par_iter()
        .map(|f| compare_form(&f.form, 200).unwrap())
        .collect();
    let confirmed = |form: QuadForm| {
        reports
            .iter()
            .find(|r| r.form == form.to_string())
            .is_some_and(|r| r.confirmed())
    };
    let must = [
        QuadForm::Q1([1, 1, 1, 4]),
        QuadForm::Q1([1, 1, 2, 4]),
        QuadForm::Q2([1, 2]),
        QuadForm::Q2([1, 4]),
        QuadForm::Q2([1, 8]),
        QuadForm::Q2([1, 16]),
    ];
    let missing: Vec<String> = must.iter().filter(|f| !confirmed(**f)).map(|f| f.to_string()).collect();
    if !missing.is_empty() {
        return Verdict::Fail(format!("required rows not confirmed: {missing:?}"));
    }
    let printed_rows = tables::all_rows().len();
    let with_diffs = reports.iter().filter(|r| r.paper.is_some() && !r.diffs.is_empty()).count();
    let absent = reports.iter().filter(|r| r.paper.is_none()).count();
    Verdict::Pass(format!(
        "{printed_rows} printed rows: {} confirmed, {with_diffs} listed in the discrepancy report; \
         {absent} catalogued form without a printed row; Table C and spot rows confirmed",
        printed_rows - with_diffs
    ))
}

fn criterion_4() -> Verdict {
    let mut got = Vec::new();
    for p in [30, 200] {
        for s in Space::ALL {
            got.push((p, s, basis_rank(s, p).unwrap()));
        }
    }
    if got.iter().all(|(_, s, r)| *r == s.dimension()) {
        Verdict::Pass("ranks 14, 12, 14, 12 at P = 30 and 200".into())
    } else {
        Verdict::Fail(format!("{got:?}"))
    }
}

fn criterion_5() -> Verdict {
    let cases = [
        ("N1_1_2_4_4", "N1_1_2_4_4_sample", QuadForm::Q1([1, 2, 4, 4])),
        ("N3_1_3_1", "N3_1_3_1_sample", QuadForm::Q3([1, 3, 1])),
        ("N3_3_3_4_ABCD", "N3_3_3_4_sample", QuadForm::Q3([3, 3, 4])),
    ];
    let mut lines = Vec::new();
    let mut failed_closed = Vec::new();
    for (closed, open, form) in cases {
        let counts = counts_upto(&form, 500);
        let mut open_mismatch = 0;
        let mut oracle_mismatch = 0;
        for n in 1..=500u64 {
            let c = eval_closed_form(closed, n).unwrap();
            if c != eval_sample(open, n).unwrap() {
                open_mismatch += 1;
            }
            if c != count_rat(counts[n as usize]) {
                oracle_mismatch += 1;
            }
        }
        if open_mismatch > 0 {
            return Verdict::Fail(format!("{closed} differs from {open} at {open_mismatch} values"));
        }
        if oracle_mismatch > 0 {
            failed_closed.push(closed);
        }
        lines.push(format!("{closed}: open form equal, oracle mismatches {oracle_mismatch}"));
    }
    match failed_closed.as_slice() {
        [] => Verdict::Pass(lines.join("; ")),
        ["N3_3_3_4_ABCD"] => Verdict::KnownFail(format!(
            "{}; the printed N3(3,3,4) expression carries the chi-4/chi-3 pair with the opposite \
             sign to its table row, so closed = open != count",
            lines.join("; ")
        )),
        _ => Verdict::Fail(lines.join("; ")),
    }
}

fn criterion_6() -> Verdict {
    let bad: Vec<String> = catalogue()
        .par_iter()
        .filter_map(|f| {
            let theta = form_theta_product(&f.form, 101);
            let counts = counts_upto(&f.form, 100);
            (0..=100)
                .find(|&n| theta.coeff(n) != &count_rat(counts[n]))
                .map(|n| format!("{} at {n}", f.form))
        })
        .collect();
    if bad.is_empty() {
        Verdict::Pass("124 forms, n <= 100".into())
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn criterion_7() -> Verdict {
    let mut failures = Vec::new();
    // character multiplicativity
    for chi in DirichletCharacter::ALL {
        for m in -30i64..=30 {
            for n in -30i64..=30 {
                if chi.eval(m * n) != chi.eval(m) * chi.eval(n) {
                    failures.push(format!("{chi} at ({m}, {n})"));
                }
            }
        }
    }
    // dilation is a ring homomorphism
    let f = theta_series(60);
    let g = hexagonal_series(60);
    for d in [2usize, 3, 4] {
        if (&f * &g).dilate(d) != &f.dilate(d) * &g.dilate(d) || (&f + &g).dilate(d) != &f.dilate(d) + &g.dilate(d) {
            failures.push(format!("dilation by {d}"));
        }
    }
    // two constructions of φ_{1,b}
    for b in divisors(48).into_iter().filter(|&b| b > 1) {
        if phi_ab(1, b, 120).unwrap() != phi_ab_fourier(1, b, 120).unwrap() {
            failures.push(format!("phi(1,{b}) routes differ"));
        }
    }
    // eta quotients: integral leading exponent, weight 2
    for form in CuspForm::ALL {
        let q = form.eta_quotient();
        if q.exponent_numerator() % 24 != 0 || q.weight_times_two() != 4 || q.leading_exponent().is_err() {
            failures.push(format!("{form} prefactor"));
        }
    }
    // residue twists
    let one = CuspForm::Delta48Chi12One.expand(200);
    let two = CuspForm::Delta48Chi12Two.expand(200);
    if (0..200).any(|n| (n % 4 != 1 && !one.coeff(n).is_zero()) || (n % 4 != 3 && !two.coeff(n).is_zero())) {
        failures.push("chi12 twist support".into());
    }
    if failures.is_empty() {
        Verdict::Pass("multiplicativity, dilation, phi routes, eta prefactors, twist support".into())
    } else {
        Verdict::Fail(failures.join("; "))
    }
}

fn criterion_8() -> Verdict {
    let d24 = CuspForm::Delta24.expand(10);
    let theta = theta_series(50);
    let hex = hexagonal_series(10);
    let theta_ok = (0..50).all(|n| {
        let r = (n as f64).sqrt().round() as usize;
        let want = if n == 0 {
            1
        } else if r * r == n {
            2
        } else {
            0
        };
        theta.coeff(n) == &rat(want)
    });
    let checks = [
        ("tau_24(3) = -1", d24.coeff(3) == &rat(-1)),
        ("tau_24(5) = -2", d24.coeff(5) == &rat(-2)),
        ("theta pattern", theta_ok),
        ("F coefficient 1 = 6", hex.coeff(1) == &rat(6)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        Verdict::Pass(checks.map(|(n, _)| n).join(", "))
    } else {
        Verdict::Fail(format!("{failed:?}"))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("1 Q2 identities equal enumeration", criterion_1),
        ("2 Q1/Q3 decompositions reproduce counts", criterion_2),
        ("3 table fidelity", criterion_3),
        ("4 basis ranks", criterion_4),
        ("5 closed forms", criterion_5),
        ("6 theta products equal enumeration", criterion_6),
        ("7 property suites", criterion_7),
        ("8 spot values", criterion_8),
    ];
    let mut ok = true;
    for (name, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Verdict::Pass(detail) => println!("criterion {name}: PASS ({secs:.1}s) {detail}"),
            Verdict::KnownFail(detail) => println!("criterion {name}: FAIL ({secs:.1}s) {detail}"),
            Verdict::Fail(detail) => {
                ok = false;
                println!("criterion {name}: FAIL ({secs:.1}s) UNEXPECTED {detail}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
