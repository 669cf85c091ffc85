use std::collections::BTreeMap;

use serde_json::{json, Value};

use catalan2_core::catalan2::Normalization;
use catalan2_core::errata::errata_report;
use catalan2_core::exact::{catalan_formulas, catalan_stream, format_rational, BigInt, ExactRational};
use catalan2_core::report::{
    c2_report, functional_report, q_report, to_canonical_json, C2Request, FunctionalRequest, QRequest,
    C2_REPRESENTATIONS, FUNCTIONAL_REPRESENTATIONS, Q_REPRESENTATIONS,
};
use catalan2_core::selftest::{run_selftest, SelftestConfig};
use catalan2_core::{CompareReport, Representation, RowStatus};

use crate::args::{Command, Compare, Format, NormalizationArg};

pub const SUCCESS: u8 = 0;
pub const TOLERANCE_FAILURE: u8 = 1;
pub const INVALID_INPUT: u8 = 2;

/// Largest `n` accepted by `catalan` (the four closed forms are exact and grow quadratically in cost).
const MAX_CATALAN_N: u32 = 20_000;

pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

pub fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Catalan { n, output } => catalan(n, output.format),
        Command::C2 { a, b, n, rep, normalization, compare } => {
            let reps = representations(&rep, C2_REPRESENTATIONS, "c2")?;
            let normalization = match normalization {
                NormalizationArg::Gf => Normalization::GeneratingFunction,
                NormalizationArg::Paper => Normalization::PrintedPi,
            };
            let req = C2Request { a, b, n, normalization, tol: check_tol(compare.tol)? };
            finish(c2_report(&req, &reps).map_err(|e| e.to_string())?, &rep, &compare)
        }
        Command::Functional { a, b, p, n, rep, compare } => {
            let reps = representations(&rep, FUNCTIONAL_REPRESENTATIONS, "functional")?;
            let req = FunctionalRequest { a, b, p, n, tol: check_tol(compare.tol)? };
            finish(functional_report(&req, &reps).map_err(|e| e.to_string())?, &rep, &compare)
        }
        Command::Q { n, y, p, rep, compare } => {
            let reps = representations(&rep, Q_REPRESENTATIONS, "q")?;
            let req = QRequest { n, y, p, tol: check_tol(compare.tol)? };
            finish(q_report(&req, &reps).map_err(|e| e.to_string())?, &rep, &compare)
        }
        Command::Errata { output } => {
            let report = errata_report().map_err(|e| e.to_string())?;
            let stdout = match output.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
            };
            Ok(Outcome { stdout, stderr: None, code: SUCCESS })
        }
        Command::Selftest { quad_tol, mutate_double_factorial, output } => {
            if !(1e-14..=1e-3).contains(&quad_tol) {
                return Err(format!("--quad-tol {quad_tol} outside [1e-14, 1e-3]"));
            }
            let cfg = SelftestConfig { quad_tol, mutate_double_factorial, ..SelftestConfig::default() };
            let report = run_selftest(&cfg);
            let passed = report.all_passed();
            let stdout = match output.format {
                Format::Text => report.to_text(),
                Format::Json => to_canonical_json(&serde_json::to_value(&report).expect("plain data")) + "\n",
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["suite", "cases", "passed", "failure"]).map_err(|e| e.to_string())?;
                    for s in &report.suites {
                        let failures = if s.failures.is_empty() { vec![String::new()] } else { s.failures.clone() };
                        for f in failures {
                            w.write_record([s.name, &s.cases.to_string(), &s.passed().to_string(), &f])
                                .map_err(|e| e.to_string())?;
                        }
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
                }
            };
            let stderr = (!passed).then(|| {
                let names: Vec<_> = report.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect();
                format!("failing suites: {}", names.join(", "))
            });
            Ok(Outcome { stdout, stderr, code: if passed { SUCCESS } else { TOLERANCE_FAILURE } })
        }
    }
}

fn check_tol(tol: f64) -> Result<f64, String> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(format!("--tol {tol} must be positive and finite"))
    }
}

fn representations(rep: &str, allowed: &[Representation], command: &str) -> Result<Vec<Representation>, String> {
    if rep == "all" {
        return Ok(allowed.to_vec());
    }
    Representation::parse(rep, allowed).map(|r| vec![r]).ok_or_else(|| {
        let names: Vec<_> = allowed.iter().map(|r| r.name()).collect();
        format!("unknown representation `{rep}` for {command}; expected one of {} or all", names.join(", "))
    })
}

fn render(report: &CompareReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn finish(report: CompareReport, rep: &str, compare: &Compare) -> Result<Outcome, String> {
    let stdout = render(&report, compare.output.format);
    let (code, stderr) = if rep == "all" {
        if report.within(compare.tol) {
            (SUCCESS, None)
        } else {
            let failed: Vec<_> =
                report.results.iter().filter(|r| r.status == RowStatus::Failed).map(|r| r.rep.name()).collect();
            let msg = if failed.is_empty() {
                format!(
                    "max pairwise relative difference {:e} exceeds --tol {:e}",
                    report.max_pairwise_rel_diff, compare.tol
                )
            } else {
                format!("numerical failure in {}", failed.join(", "))
            };
            (TOLERANCE_FAILURE, Some(msg))
        }
    } else {
        let row = &report.results[0];
        match row.status {
            RowStatus::Ok | RowStatus::Flagged => (SUCCESS, None),
            RowStatus::Skipped => (INVALID_INPUT, row.note.clone()),
            RowStatus::Failed => (TOLERANCE_FAILURE, row.note.clone()),
        }
    };
    Ok(Outcome { stdout, stderr, code })
}

fn catalan(n: u32, format: Format) -> Result<Outcome, String> {
    if n > MAX_CATALAN_N {
        return Err(format!("--n {n} exceeds the supported maximum {MAX_CATALAN_N}"));
    }
    let forms = catalan_formulas(n);
    let recurrence = ExactRational::from_integer(catalan_stream(n as usize + 1).pop().unwrap_or_else(|| BigInt::from(1)));
    let agree = forms.agree() && forms.binomial == recurrence;
    let entries = [
        ("factorial_quotient", &forms.factorial_quotient),
        ("binomial", &forms.binomial),
        ("gamma_ratio", &forms.gamma_ratio),
        ("hypergeometric", &forms.hypergeometric),
        ("recurrence", &recurrence),
    ];
    let stdout = match format {
        Format::Text => {
            let mut s = format!("C_{n} = {}\n", format_rational(&forms.binomial));
            for (name, v) in &entries {
                s.push_str(&format!("{name:<20}{}\n", format_rational(v)));
            }
            s.push_str(&format!("agree: {agree}\n"));
            s
        }
        Format::Json => {
            let formulas: BTreeMap<&str, Value> =
                entries.iter().map(|(k, v)| (*k, json!(format_rational(v)))).collect();
            to_canonical_json(&json!({
                "n": n,
                "value": format_rational(&forms.binomial),
                "formulas": formulas,
                "agree": agree,
            })) + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["formula", "value"]).map_err(|e| e.to_string())?;
            for (name, v) in &entries {
                w.write_record([*name, &format_rational(v)]).map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
        }
    };
    let stderr = (!agree).then(|| "closed forms disagree".to_string());
    Ok(Outcome { stdout, stderr, code: if agree { SUCCESS } else { TOLERANCE_FAILURE } })
}
