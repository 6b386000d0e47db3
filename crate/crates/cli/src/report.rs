//! The machine-readable envelope around every result the CLI prints, and
//! its human rendering.

use std::fmt::Write as _;

use qbinpos::harness::{
    CheckResult, CheckedSpec, FactorialQuotientRow, Lemma6Row, StantonRow, SweepParams, SweepReport, SweepViolation,
    Verdict,
};
use qbinpos::IntPolynomial;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub body: ReportBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "kebab-case")]
pub enum ReportBody {
    Check(CheckResult),
    Batch(Vec<CheckResult>),
    Sweep(SweepReport),
    Remark25(Vec<FactorialQuotientRow>),
    Stanton(Vec<StantonRow>),
    Lemma6(Vec<Lemma6Row>),
}

/// One line of `--format jsonl` sweep output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum SweepRecord {
    Violation(SweepViolation),
    Anomaly(SweepViolation),
    /// Always the last line.
    Report(ReportDocument),
}

impl ReportDocument {
    pub fn new(command: Vec<String>, body: ReportBody) -> Self {
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize infallibly")
    }

    /// Violations and anomalies one per line, then the full document.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut push = |rec: &SweepRecord| {
            out.push_str(&serde_json::to_string(rec).expect("report types serialize infallibly"));
            out.push('\n');
        };
        if let ReportBody::Sweep(report) = &self.body {
            report
                .violations
                .iter()
                .cloned()
                .for_each(|v| push(&SweepRecord::Violation(v)));
            report
                .anomalies
                .iter()
                .cloned()
                .for_each(|v| push(&SweepRecord::Anomaly(v)));
        }
        push(&SweepRecord::Report(self.clone()));
        out
    }

    pub fn to_human(&self, expand: bool) -> String {
        match &self.body {
            ReportBody::Check(r) => render_check(r, expand),
            ReportBody::Batch(rs) => rs
                .iter()
                .map(|r| render_check(r, expand))
                .collect::<Vec<_>>()
                .join("\n"),
            ReportBody::Sweep(r) => render_sweep(r),
            ReportBody::Remark25(rows) => render_remark25(rows),
            ReportBody::Stanton(rows) => render_stanton(rows),
            ReportBody::Lemma6(rows) => render_lemma6(rows),
        }
    }
}

/// `[1,0,0,1]`: exact decimal coefficients from `q^0` up.
pub fn coefficient_list(p: &IntPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn describe_spec(spec: &CheckedSpec) -> String {
    match spec {
        CheckedSpec::Quotient { spec, normalized } if spec == normalized => {
            format!(
                "[{n} choose {k}]_q / [{n} choose {l}]_q",
                n = spec.n,
                k = spec.k,
                l = spec.l
            )
        }
        CheckedSpec::Quotient { spec, normalized } => format!(
            "[{n} choose {k}]_q / [{n} choose {l}]_q (reduced to k={rk}, l={rl})",
            n = spec.n,
            k = spec.k,
            l = spec.l,
            rk = normalized.k,
            rl = normalized.l
        ),
        CheckedSpec::FakeGaussian { spec, symmetric } => {
            format!("{spec}{}", if *symmetric { " (symmetric)" } else { "" })
        }
        CheckedSpec::Named { name } => name.clone(),
    }
}

/// Expansions with at most this many terms are shown inline.
const INLINE_TERMS: usize = 12;

fn render_check(r: &CheckResult, expand: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", describe_spec(&r.spec));
    let _ = writeln!(out, "  expression: {}", r.expression);
    let summary = match (r.verdict, &r.expansion) {
        (Verdict::NotPolynomial, _) => "not a polynomial".to_string(),
        (Verdict::Violation, _) => {
            let loc = r
                .first_negative
                .as_ref()
                .expect("violations carry a negative coefficient");
            format!(
                "VIOLATION at q^{} (coefficient {}); degree {}",
                loc.exponent,
                loc.coefficient,
                r.degree.unwrap_or(0)
            )
        }
        (Verdict::PolynomialNonnegative, Some(p)) if expand => {
            format!("polynomial; coefficients {}", coefficient_list(p))
        }
        (Verdict::PolynomialNonnegative, Some(p))
            if p.coeffs().iter().filter(|c| **c != 0.into()).count() <= INLINE_TERMS =>
        {
            format!("polynomial; {p}")
        }
        (Verdict::PolynomialNonnegative, _) => {
            format!("polynomial; degree {}, nonnegative coefficients", r.degree.unwrap_or(0))
        }
    };
    let _ = writeln!(out, "  {summary}");
    if r.verdict == Verdict::Violation && expand {
        if let Some(p) = &r.expansion {
            let _ = writeln!(out, "  coefficients {}", coefficient_list(p));
        }
    }
    if let Some(p) = &r.properties {
        let _ = writeln!(
            out,
            "  properties: reciprocal={} unimodal={} parity-unimodal={} order={} degree={}",
            p.reciprocal, p.unimodal, p.parity_unimodal, p.order, p.degree
        );
    }
    if let Some(us) = r.elapsed_us {
        let _ = writeln!(out, "  elapsed: {us} us");
    }
    out
}

fn describe_params(p: &SweepParams) -> String {
    match p {
        SweepParams::Conjecture1 { n_max } => format!("conjecture1, all 1 <= l < k <= n/2, n <= {n_max}"),
        SweepParams::FakeGaussian {
            template,
            ranges,
            samples,
        } => format!(
            "fake-gaussian, template {}, {samples} samples, s <= {}, values <= {}, m in [max(s,1), s+{}]",
            template.name(),
            ranges.s_max,
            ranges.value_max,
            ranges.m_span
        ),
        SweepParams::Crosscheck { n_max } => format!("crosscheck, l = 1 and l = 2, n <= {n_max}"),
        SweepParams::Corollary10 { n_max } => format!("corollary10, 1 <= n <= {n_max}"),
    }
}

fn render_sweep(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sweep {}", describe_params(&r.params));
    if let Some(seed) = r.seed {
        let _ = writeln!(out, "  seed: {seed}");
    }
    let c = &r.counts;
    let _ = writeln!(
        out,
        "  examined {}, polynomial {}, violations {}, structure anomalies {}",
        c.examined, c.polynomial, c.violations, c.structure_anomalies
    );
    let state = if r.complete { "complete" } else { "INCOMPLETE" };
    let _ = write!(out, "  {state}: {}/{} units", r.cursor, r.total_units);
    if let Some(last) = &r.last_unit {
        let _ = write!(out, ", last {last}");
    }
    out.push('\n');
    if let Some(ms) = r.wall_time_ms {
        let _ = writeln!(out, "  wall time: {:.3} s", ms as f64 / 1000.0);
    }
    for v in &r.violations {
        let _ = writeln!(out, "  VIOLATION #{} {}: {}", v.position, v.unit, v.reason);
    }
    for v in &r.anomalies {
        let _ = writeln!(out, "  ANOMALY #{} {}: {}", v.position, v.unit, v.reason);
    }
    out
}

fn render_remark25(rows: &[FactorialQuotientRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let _ = writeln!(out, "{}", row.expression);
        let got = row
            .expansion
            .as_ref()
            .map_or("not a polynomial".to_string(), |p| p.to_string());
        let _ = writeln!(out, "  expanded: {got}");
        let _ = writeln!(out, "  expected: {}", row.expected);
        let _ = writeln!(out, "  {}", if row.matches { "match" } else { "MISMATCH" });
    }
    out
}

fn render_stanton(rows: &[StantonRow]) -> String {
    let mut out = String::from("   m  verdict                 degree  first negative\n");
    for r in rows {
        let neg = r
            .first_negative
            .as_ref()
            .map_or("-".to_string(), |l| format!("{} q^{}", l.coefficient, l.exponent));
        let degree = r.degree.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(out, "{:>4}  {:<22}  {:>6}  {}", r.m, r.verdict.as_str(), degree, neg);
    }
    out
}

fn render_lemma6(rows: &[Lemma6Row]) -> String {
    let mut out = String::from("variant   K   M  degree  closed form  order bound  nonneg  reciprocal  ok\n");
    let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    for r in rows {
        let _ = writeln!(
            out,
            "{:<8} {:>3} {:>3}  {:>6}  {:>11}  {:>11}  {:<6}  {:<10}  {}",
            format!("{:?}", r.variant).trim_start_matches("Variant"),
            r.k_param,
            r.m_param,
            r.degree.map_or("-".to_string(), |d| d.to_string()),
            opt(r.closed_form_degree),
            opt(r.order_bound),
            r.nonnegative,
            r.reciprocal,
            if r.ok { "ok" } else { "FAIL" }
        );
    }
    out
}
