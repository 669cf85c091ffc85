//! Side-by-side evaluation of every representation of one quantity, with
//! text, JSON and CSV rendering.
//!
//! JSON output is canonical: object keys sorted, floats in a fixed
//! 17-significant-digit form, so that parsing and re-emitting a report is
//! byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalan2::{
    c2_double_factorial_sum, c2_gf_coefficient, c2_hyp_closed, c2_hyp_unbounded, c2_jacobi, c2_legendre,
    c2_quadrature, c2_table_printed, C2Params, LegendreVariant, Normalization,
};
use crate::error::{Error, Result};
use crate::exact::{factorial, format_rational, parse_rational, rational_pow, to_f64, ExactRational};
use crate::functional::{
    cf_double_sum, cf_double_sum_exact, cf_quadrature, cf_series, cf_series_printed, cf_via_q, cf_via_q_exact,
    CFParams, BOUNDARY_TOL,
};
use crate::hyper::rel_diff;
use crate::qfunc::{eval_form, q_forms_recurrence, q_hyp, q_hyp_rederived, q_polylog_exact, q_series, q_stirling_exact, QParams};
use crate::series::gf_catalan2_exact;

/// Series settings shared by every report. The Pochhammer series are summed
/// in fixed point, so a tail below 2^-60 of the sum makes them correctly rounded.
const SERIES_TOL: f64 = 1e-18;
const HYP_TOL: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 1_000_000;

/// Quadrature tolerance used for a comparison at tolerance `tol`.
pub fn quad_tol_for(tol: f64) -> f64 {
    (tol * 1e-2).clamp(1e-13, 1e-10)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    DoubleFactorial,
    HypClosed,
    HypUnbounded,
    Jacobi,
    Legendre,
    LegendreSqrtDifference,
    Quadrature,
    GfCoefficient,
    TablePrinted,
    DoubleSum,
    Series,
    SeriesPrinted,
    ViaQ,
    Stirling,
    Polylog,
    Recurrence,
    Hyp,
    HypRederived,
}

use Representation as R;

pub const C2_REPRESENTATIONS: &[Representation] = &[
    R::DoubleFactorial,
    R::HypClosed,
    R::HypUnbounded,
    R::Jacobi,
    R::Legendre,
    R::LegendreSqrtDifference,
    R::Quadrature,
    R::GfCoefficient,
    R::TablePrinted,
];
pub const FUNCTIONAL_REPRESENTATIONS: &[Representation] =
    &[R::DoubleSum, R::Series, R::SeriesPrinted, R::Quadrature, R::ViaQ];
pub const Q_REPRESENTATIONS: &[Representation] =
    &[R::Series, R::Stirling, R::Polylog, R::Recurrence, R::Hyp, R::HypRederived];

impl Representation {
    pub fn name(self) -> &'static str {
        match self {
            R::DoubleFactorial => "double_factorial",
            R::HypClosed => "hyp_closed",
            R::HypUnbounded => "hyp_unbounded",
            R::Jacobi => "jacobi",
            R::Legendre => "legendre",
            R::LegendreSqrtDifference => "legendre_sqrt_difference",
            R::Quadrature => "quadrature",
            R::GfCoefficient => "gf_coefficient",
            R::TablePrinted => "table_printed",
            R::DoubleSum => "double_sum",
            R::Series => "series",
            R::SeriesPrinted => "series_printed",
            R::ViaQ => "via_q",
            R::Stirling => "stirling",
            R::Polylog => "polylog",
            R::Recurrence => "recurrence",
            R::Hyp => "hyp",
            R::HypRederived => "hyp_rederived",
        }
    }

    /// Looks a name up among `allowed`.
    pub fn parse(name: &str, allowed: &[Representation]) -> Option<Self> {
        allowed.iter().copied().find(|r| r.name() == name)
    }
}

/// A parsed numeric input: its double value and, if it was written as a
/// decimal or fraction, the exact rational it denotes.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalar {
    pub value: f64,
    pub exact: Option<ExactRational>,
}

impl Scalar {
    pub fn parse(s: &str) -> Option<Self> {
        if let Some(q) = parse_rational(s) {
            let value = to_f64(&q);
            return value.is_finite().then_some(Scalar { value, exact: Some(q) });
        }
        let value: f64 = s.trim().parse().ok()?;
        value.is_finite().then_some(Scalar { value, exact: None })
    }

    pub fn float(value: f64) -> Self {
        Scalar { value, exact: None }
    }

    pub fn exact(q: ExactRational) -> Self {
        Scalar { value: to_f64(&q), exact: Some(q) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// Compared against the other rows.
    Ok,
    /// Evaluated but known to disagree (a reproduced erratum); not compared.
    Flagged,
    /// Outside the representation's domain.
    Skipped,
    /// Numerical failure (non-convergence); fails the comparison.
    Failed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub rep: Representation,
    pub value: Option<f64>,
    /// Absolute error estimate, for approximate rows that have one.
    pub err: Option<f64>,
    /// `"num/den"` when the row was computed exactly.
    pub exact: Option<String>,
    /// Series terms or integrand evaluations.
    pub terms: Option<u64>,
    pub status: RowStatus,
    pub note: Option<String>,
}

impl CompareRow {
    fn value(rep: Representation, value: f64) -> Self {
        CompareRow {
            rep,
            value: Some(value),
            err: None,
            exact: None,
            terms: None,
            status: RowStatus::Ok,
            note: None,
        }
    }

    fn exact(rep: Representation, q: &ExactRational) -> Self {
        CompareRow {
            exact: Some(format_rational(q)),
            ..Self::value(rep, to_f64(q))
        }
    }

    fn terms(mut self, terms: usize) -> Self {
        self.terms = Some(terms as u64);
        self
    }

    fn flagged(mut self, note: impl Into<String>) -> Self {
        self.status = RowStatus::Flagged;
        self.note = Some(note.into());
        self
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn from_error(rep: Representation, e: &Error) -> Self {
        let status = match e {
            Error::MaxTerms { .. } | Error::Quadrature { .. } => RowStatus::Failed,
            _ => RowStatus::Skipped,
        };
        CompareRow {
            rep,
            value: None,
            err: None,
            exact: None,
            terms: None,
            status,
            note: Some(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub input: BTreeMap<String, Value>,
    pub results: Vec<CompareRow>,
    /// Over rows with status `ok` and a finite value; zero with fewer than two.
    pub max_pairwise_rel_diff: f64,
    pub notes: Vec<String>,
}

impl CompareReport {
    pub fn new(input: BTreeMap<String, Value>, results: Vec<CompareRow>, notes: Vec<String>) -> Self {
        let values: Vec<f64> = results
            .iter()
            .filter(|r| r.status == RowStatus::Ok)
            .filter_map(|r| r.value)
            .collect();
        let mut max = 0.0f64;
        for (i, &x) in values.iter().enumerate() {
            for &y in &values[i + 1..] {
                let d = if x.is_finite() && y.is_finite() { rel_diff(x, y) } else { f64::INFINITY };
                max = max.max(d);
            }
        }
        CompareReport {
            input,
            results,
            max_pairwise_rel_diff: max,
            notes,
        }
    }

    /// No numerical failures and every compared pair within `tol`.
    pub fn within(&self, tol: f64) -> bool {
        self.results.iter().all(|r| r.status != RowStatus::Failed) && self.max_pairwise_rel_diff <= tol
    }

    /// First row with status `ok` (the single-representation answer).
    pub fn primary(&self) -> Option<&CompareRow> {
        self.results.iter().find(|r| r.status == RowStatus::Ok || r.status == RowStatus::Flagged)
    }

    pub fn to_json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "rep": r.rep.name(),
                    "value": float_value(r.value),
                    "err": float_value(r.err),
                    "exact": r.exact,
                    "terms": r.terms,
                    "status": r.status,
                    "note": r.note,
                })
            })
            .collect();
        json!({
            "input": self.input,
            "results": rows,
            "max_pairwise_rel_diff": float_value(Some(self.max_pairwise_rel_diff)),
            "notes": self.notes,
        })
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&self.to_json_value())
    }

    pub fn to_text(&self) -> String {
        let header = ["rep", "value", "err", "exact", "terms", "status", "note"];
        let rows: Vec<[String; 7]> = self
            .results
            .iter()
            .map(|r| {
                [
                    r.rep.name().to_string(),
                    r.value.map(format_f64).unwrap_or_else(|| "-".into()),
                    r.err.map(format_f64).unwrap_or_else(|| "-".into()),
                    r.exact.clone().unwrap_or_else(|| "-".into()),
                    r.terms.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
                    status_name(r.status).to_string(),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for (k, v) in &self.input {
            let v = match v {
                Value::String(s) => s.clone(),
                Value::Number(x) if x.is_f64() => format_f64(x.as_f64().expect("f64 number")),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{k} = {v}");
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{cell:<w$}  ");
                }
            }
            s.trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(&header.map(String::from)));
        for row in &rows {
            let _ = writeln!(out, "{}", line(row));
        }
        let _ = writeln!(out, "max_pairwise_rel_diff = {}", format_f64(self.max_pairwise_rel_diff));
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |v: Option<String>| v.unwrap_or_default();
        w.write_record(["rep", "value", "err", "exact", "terms", "status", "note"])
            .expect("in-memory write");
        for r in &self.results {
            w.write_record([
                r.rep.name().to_string(),
                opt(r.value.map(format_f64)),
                opt(r.err.map(format_f64)),
                opt(r.exact.clone()),
                opt(r.terms.map(|t| t.to_string())),
                status_name(r.status).to_string(),
                opt(r.note.clone()),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

fn status_name(s: RowStatus) -> &'static str {
    match s {
        RowStatus::Ok => "ok",
        RowStatus::Flagged => "flagged",
        RowStatus::Skipped => "skipped",
        RowStatus::Failed => "failed",
    }
}

fn float_value(v: Option<f64>) -> Value {
    v.and_then(serde_json::Number::from_f64).map(Value::Number).unwrap_or(Value::Null)
}

/// 17 significant digits; positional for moderate exponents, scientific otherwise.
pub fn format_f64(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(1) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

struct CanonicalFloats;

impl serde_json::ser::Formatter for CanonicalFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact JSON with sorted keys and [`format_f64`] floats.
pub fn to_canonical_json(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, CanonicalFloats);
    v.serialize(&mut ser).expect("in-memory serialization");
    String::from_utf8(buf).expect("serde_json emits utf-8")
}

/// Parses and re-emits a canonical JSON document.
pub fn recanonicalize(s: &str) -> serde_json::Result<String> {
    let v: Value = serde_json::from_str(s)?;
    Ok(to_canonical_json(&v))
}

/// Evaluates each representation on its own thread, returning rows in request order.
fn evaluate_all<F>(reps: &[Representation], eval: F) -> Vec<CompareRow>
where
    F: Fn(Representation) -> Result<CompareRow> + Sync,
{
    std::thread::scope(|scope| {
        let handles: Vec<_> = reps
            .iter()
            .map(|&rep| {
                let eval = &eval;
                (rep, scope.spawn(move || eval(rep)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(rep, h)| match h.join() {
                Ok(Ok(row)) => row,
                Ok(Err(e)) => CompareRow::from_error(rep, &e),
                Err(_) => CompareRow::from_error(rep, &Error::Domain("evaluation panicked".into())),
            })
            .collect()
    })
}

fn check_allowed(reps: &[Representation], allowed: &[Representation], command: &str) -> Result<()> {
    match reps.iter().find(|r| !allowed.contains(r)) {
        Some(r) => Err(Error::Domain(format!("representation {} does not apply to {command}", r.name()))),
        None if reps.is_empty() => Err(Error::Domain("no representation requested".into())),
        None => Ok(()),
    }
}

fn scalar_echo(s: &Scalar) -> Value {
    float_value(Some(s.value))
}

#[derive(Debug, Clone, PartialEq)]
pub struct C2Request {
    pub a: Scalar,
    pub b: Scalar,
    pub n: u32,
    pub normalization: Normalization,
    pub tol: f64,
}

fn normalization_name(n: Normalization) -> &'static str {
    match n {
        Normalization::GeneratingFunction => "gf",
        Normalization::PrintedPi => "paper",
    }
}

pub fn c2_report(req: &C2Request, reps: &[Representation]) -> Result<CompareReport> {
    check_allowed(reps, C2_REPRESENTATIONS, "c2")?;
    let params = C2Params::new(req.a.value, req.b.value, req.n)?;
    let norm = req.normalization;
    let k = norm.factor();
    let quad_tol = quad_tol_for(req.tol);
    let results = evaluate_all(reps, |rep| {
        Ok(match rep {
            R::DoubleFactorial => CompareRow::value(rep, k * c2_double_factorial_sum(&params)).terms(req.n as usize + 1),
            R::HypClosed => CompareRow::value(rep, c2_hyp_closed(&params, norm)?),
            R::HypUnbounded => CompareRow::value(rep, c2_hyp_unbounded(&params, norm)?),
            R::Jacobi => CompareRow::value(rep, c2_jacobi(&params, norm)?),
            R::Legendre => CompareRow::value(rep, c2_legendre(&params, norm, LegendreVariant::SqrtDiscriminant)?),
            R::LegendreSqrtDifference => {
                CompareRow::value(rep, c2_legendre(&params, norm, LegendreVariant::SqrtDifference)?)
                    .flagged("erratum: the (sqrt b - a)^(2n+1) variant disagrees with the oracles")
            }
            R::Quadrature => {
                let q = c2_quadrature(&params, quad_tol)?;
                let mut row = CompareRow::value(rep, k * q.value).terms(q.evaluations);
                row.err = Some(k * q.abs_err_est);
                row
            }
            R::GfCoefficient => {
                let exact = match (&req.a.exact, &req.b.exact, norm) {
                    (Some(a), Some(b), Normalization::GeneratingFunction) => {
                        gf_catalan2_exact(a, b, req.n as usize + 1)?.map(|s| s.coeff(req.n as usize).clone())
                    }
                    _ => None,
                };
                match exact {
                    Some(q) => CompareRow::exact(rep, &q),
                    None => CompareRow::value(rep, k * c2_gf_coefficient(&params)?.0),
                }
                .terms(req.n as usize + 1)
            }
            R::TablePrinted => {
                let v = c2_table_printed(req.n, req.a.value, req.b.value)
                    .ok_or_else(|| Error::Domain("tabulated only for n <= 5".into()))?;
                let row = CompareRow::value(rep, v / std::f64::consts::PI * k);
                if req.n == 4 {
                    row.noted("denominator read as 128 (a + sqrt b)^5 b^(7/2)")
                } else {
                    row
                }
            }
            _ => unreachable!("checked against C2_REPRESENTATIONS"),
        })
    });
    let mut notes = vec![match norm {
        Normalization::GeneratingFunction => "normalization gf: C_0(a,b) = 1/(a + sqrt b)".to_string(),
        Normalization::PrintedPi => {
            "normalization paper: every value carries the factor pi of the printed closed forms".to_string()
        }
    }];
    if results.iter().any(|r| r.status == RowStatus::Flagged) {
        notes.push("flagged rows reproduce known errata and are excluded from max_pairwise_rel_diff".into());
    }
    let input = BTreeMap::from([
        ("command".to_string(), json!("c2")),
        ("a".to_string(), scalar_echo(&req.a)),
        ("b".to_string(), scalar_echo(&req.b)),
        ("n".to_string(), json!(req.n)),
        ("normalization".to_string(), json!(normalization_name(norm))),
        ("tol".to_string(), float_value(Some(req.tol))),
    ]);
    Ok(CompareReport::new(input, results, notes))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalRequest {
    pub a: Scalar,
    pub b: Scalar,
    pub p: Scalar,
    pub n: u32,
    pub tol: f64,
}

pub fn functional_report(req: &FunctionalRequest, reps: &[Representation]) -> Result<CompareReport> {
    check_allowed(reps, FUNCTIONAL_REPRESENTATIONS, "functional")?;
    let params = CFParams::new(req.a.value, req.b.value, req.p.value, req.n)?;
    let quad_tol = quad_tol_for(req.tol);
    // exact b^p when the inputs allow it
    let exact_inputs = match (&req.a.exact, &req.b.exact, &req.p.exact) {
        (Some(a), Some(b), Some(p)) => rational_pow(b, p).map(|bp| (a.clone(), b.clone(), p.clone(), bp)),
        _ => None,
    };
    let on_boundary = match &exact_inputs {
        Some((a, _, _, bp)) => a == bp,
        None => params.a > 0.0 && (params.ratio() - 1.0).abs() <= BOUNDARY_TOL,
    };
    let results = evaluate_all(reps, |rep| {
        Ok(match rep {
            R::DoubleSum => {
                let terms = (req.n as usize + 1) * (req.n as usize + 2) / 2;
                match &exact_inputs {
                    Some((a, b, p, bp)) => CompareRow::exact(rep, &cf_double_sum_exact(a, b, p, bp, req.n)?),
                    None => CompareRow::value(rep, cf_double_sum(&params)),
                }
                .terms(terms)
            }
            R::Series => {
                if on_boundary {
                    return Err(Error::Domain("b^p = a: both series diverge termwise; see via_q".into()));
                }
                let s = cf_series(&params, SERIES_TOL, SERIES_MAX_TERMS)?;
                CompareRow::value(rep, s.value).terms(s.terms).noted(format!("{} branch", s.branch.name()))
            }
            R::SeriesPrinted => {
                if on_boundary {
                    return Err(Error::Domain("b^p = a: both series diverge termwise".into()));
                }
                let s = cf_series_printed(&params, SERIES_TOL, SERIES_MAX_TERMS)?;
                let n = req.n;
                let expected = to_f64(&ExactRational::new(factorial(n), (n + 1).into()));
                CompareRow::value(rep, s.value).terms(s.terms).flagged(format!(
                    "erratum: prefactor 1/(n+1) instead of 1/n! (ratio n!/(n+1) = {}), descending sum from k = 0",
                    format_f64(expected)
                ))
            }
            R::Quadrature => {
                let q = cf_quadrature(&params, quad_tol)?;
                let mut row = CompareRow::value(rep, q.value).terms(q.evaluations);
                row.err = Some(q.abs_err_est);
                row
            }
            R::ViaQ => match &exact_inputs {
                Some((a, b, p, bp)) => CompareRow::exact(rep, &cf_via_q_exact(a, b, p, bp, req.n)?),
                None => CompareRow::value(rep, cf_via_q(&params)?),
            },
            _ => unreachable!("checked against FUNCTIONAL_REPRESENTATIONS"),
        })
    });
    let mut notes = Vec::new();
    if params.a == 0.0 {
        notes.push("a = 0: only the double sum is defined".to_string());
    } else if on_boundary {
        notes.push("limit branch y=1 (b^p = a): closed form Q(n, 1, p)/(a b^n n!)".to_string());
    } else {
        let y = params.ratio();
        let branch = if y < 1.0 { "ascending" } else { "descending" };
        notes.push(format!("y = b^p/a = {}: {branch} branch", format_f64(y)));
    }
    notes.push("series prefactor 1/(a b^n n!)".into());
    if results.iter().any(|r| r.status == RowStatus::Flagged) {
        notes.push("flagged rows reproduce known errata and are excluded from max_pairwise_rel_diff".into());
    }
    let input = BTreeMap::from([
        ("command".to_string(), json!("functional")),
        ("a".to_string(), scalar_echo(&req.a)),
        ("b".to_string(), scalar_echo(&req.b)),
        ("p".to_string(), scalar_echo(&req.p)),
        ("n".to_string(), json!(req.n)),
        ("tol".to_string(), float_value(Some(req.tol))),
    ]);
    Ok(CompareReport::new(input, results, notes))
}

#[derive(Debug, Clone, PartialEq)]
pub struct QRequest {
    pub n: u32,
    pub y: Scalar,
    pub p: Scalar,
    pub tol: f64,
}

pub fn q_report(req: &QRequest, reps: &[Representation]) -> Result<CompareReport> {
    check_allowed(reps, Q_REPRESENTATIONS, "q")?;
    let params = QParams::new(req.n, req.y.value, req.p.value)?;
    let exact_or_dyadic = |s: &Scalar| s.exact.clone().unwrap_or_else(|| crate::exact::to_exact(s.value).expect("finite"));
    let (y, p) = (exact_or_dyadic(&req.y), exact_or_dyadic(&req.p));
    let exact_inputs = req.y.exact.is_some() && req.p.exact.is_some();
    let exact_row = |rep, q: ExactRational| {
        if exact_inputs {
            CompareRow::exact(rep, &q)
        } else {
            CompareRow::value(rep, to_f64(&q))
        }
    };
    let results = evaluate_all(reps, |rep| {
        Ok(match rep {
            R::Series => {
                let s = q_series(&params, SERIES_TOL, SERIES_MAX_TERMS)?;
                let mut row = CompareRow::value(rep, s.value).terms(s.terms);
                row.err = Some(s.tail_bound);
                row
            }
            R::Stirling => exact_row(rep, q_stirling_exact(req.n, &y, &p)?),
            R::Polylog => exact_row(rep, q_polylog_exact(req.n, &y, &p)?),
            R::Recurrence => {
                let form = q_forms_recurrence(req.n).pop().expect("n + 1 forms");
                exact_row(rep, eval_form(&form, &y, &p))
            }
            R::Hyp => {
                let v = q_hyp(&params, HYP_TOL, SERIES_MAX_TERMS)?;
                let reference = to_f64(&q_stirling_exact(req.n, &y, &p)?);
                CompareRow::value(rep, v).flagged(format!(
                    "erratum: printed nF(n-1) form; ratio to stirling = {}",
                    format_f64(v / reference)
                ))
            }
            R::HypRederived => CompareRow::value(rep, q_hyp_rederived(&params, HYP_TOL, SERIES_MAX_TERMS)?),
            _ => unreachable!("checked against Q_REPRESENTATIONS"),
        })
    });
    let mut notes = Vec::new();
    if req.y.value == 1.0 {
        notes.push("y = 1: evaluated through the rational closed forms only".to_string());
    }
    if results.iter().any(|r| r.exact.is_some()) {
        notes.push("rows with an exact column are computed in rational arithmetic".to_string());
    }
    if results.iter().any(|r| r.status == RowStatus::Flagged) {
        notes.push("flagged rows reproduce known errata and are excluded from max_pairwise_rel_diff".into());
    }
    let input = BTreeMap::from([
        ("command".to_string(), json!("q")),
        ("n".to_string(), json!(req.n)),
        ("y".to_string(), scalar_echo(&req.y)),
        ("p".to_string(), scalar_echo(&req.p)),
        ("tol".to_string(), float_value(Some(req.tol))),
    ]);
    Ok(CompareReport::new(input, results, notes))
}
