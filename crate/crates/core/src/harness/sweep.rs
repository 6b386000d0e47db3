//! Chunked, checkpointed sweeps. Units are evaluated in parallel chunk by
//! chunk and merged in unit order, so a report depends only on the sweep
//! parameters and never on the worker count or on interruptions.

use std::path::PathBuf;
use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::check::{check_by_expansion, check_expression, verify_fake_gaussian, verify_quotient};
use super::check::{CheckOptions, CheckResult, CheckedSpec, Verdict};
use super::checkpoint::{ensure_compatible, load_checkpoint, save_checkpoint};
use super::exec::Executor;
use super::rng::{sample_fake_gaussian, SamplingRanges, Template};
use crate::analysis::is_reciprocal;
use crate::criteria::{
    corollary10_expression, corollary10_via_theorem9, thm8_exponent, thm8_is_polynomial, thm9_exponent,
    thm9_is_polynomial,
};
use crate::error::SweepError;
use crate::expr::{FactoredQExpression, QuotientSpec};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_CHUNK_SIZE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepParams {
    /// All `1 <= l < k <= n/2`, `n <= n_max`.
    Conjecture1 {
        n_max: u64,
    },
    FakeGaussian {
        template: Template,
        ranges: SamplingRanges,
        samples: u64,
    },
    /// `l = 1` and `l = 2` against their closed-form criteria.
    Crosscheck {
        n_max: u64,
    },
    Corollary10 {
        n_max: u64,
    },
}

impl SweepParams {
    pub fn sweep_id(&self) -> &'static str {
        match self {
            SweepParams::Conjecture1 { .. } => "conjecture1",
            SweepParams::FakeGaussian { .. } => "fake-gaussian",
            SweepParams::Crosscheck { .. } => "crosscheck",
            SweepParams::Corollary10 { .. } => "corollary10",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounts {
    pub examined: u64,
    pub polynomial: u64,
    pub violations: u64,
    /// Polynomial expansions without constant term 1 or not reciprocal.
    pub structure_anomalies: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepViolation {
    /// Index of the unit in sweep order.
    pub position: u64,
    pub unit: String,
    pub reason: String,
    pub result: CheckResult,
}

/// Final or partial (checkpointed) state of a sweep.
///
/// Invariant: `violations.len() == counts.violations` and
/// `anomalies.len() == counts.structure_anomalies`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub sweep_id: String,
    pub params: SweepParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub counts: SweepCounts,
    pub violations: Vec<SweepViolation>,
    pub anomalies: Vec<SweepViolation>,
    /// Number of units completed; units are processed strictly in order.
    pub cursor: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub last_unit: Option<String>,
    pub total_units: u64,
    pub complete: bool,
    /// Accumulated across resumptions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    fn empty(params: SweepParams, seed: Option<u64>, total_units: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            sweep_id: params.sweep_id().to_string(),
            params,
            seed,
            counts: SweepCounts::default(),
            violations: Vec::new(),
            anomalies: Vec::new(),
            cursor: 0,
            last_unit: None,
            total_units,
            complete: total_units == 0,
            wall_time_ms: None,
        }
    }

    /// The report with wall time removed; equal across worker counts.
    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = None;
        self
    }

    pub fn is_clean(&self) -> bool {
        self.counts.violations == 0 && self.counts.structure_anomalies == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    /// `0` means the machine's logical parallelism.
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// Continue from `checkpoint` if it exists.
    pub resume: bool,
    /// Stop after this many chunks, leaving an incomplete report.
    pub max_chunks: Option<usize>,
    pub chunk_size: usize,
    /// Check constant term 1 and reciprocity of every expansion.
    pub check_structure: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            workers: 0,
            checkpoint: None,
            resume: false,
            max_chunks: None,
            chunk_size: DEFAULT_CHUNK_SIZE,
            check_structure: true,
        }
    }
}

#[derive(Default)]
struct UnitOutcome {
    examined: bool,
    polynomial: bool,
    violation: Option<(String, CheckResult)>,
    anomaly: Option<(String, CheckResult)>,
}

/// Counts `result` and strips its expansion; flags negative coefficients
/// and, with `structure`, a constant term other than 1 or a non-reciprocal
/// expansion.
fn classify(mut result: CheckResult, structure: bool) -> UnitOutcome {
    let mut out = UnitOutcome {
        examined: true,
        polynomial: result.is_polynomial,
        ..Default::default()
    };
    if let Some(poly) = result.expansion.take() {
        if structure {
            let reason = if !poly.coeff(0).is_one() {
                Some("constant term is not 1")
            } else if !is_reciprocal(&poly) {
                Some("not reciprocal")
            } else {
                None
            };
            out.anomaly = reason.map(|r| (r.to_string(), result.clone()));
        }
    }
    if result.verdict == Verdict::Violation {
        out.violation = Some(("negative coefficient".to_string(), result));
    }
    out
}

fn run<U, D, F>(
    mut report: SweepReport,
    units: &[U],
    describe: D,
    opts: &SweepOptions,
    eval: F,
) -> Result<SweepReport, SweepError>
where
    U: Sync,
    D: Fn(&U) -> String,
    F: Fn(&U) -> UnitOutcome + Sync + Send,
{
    debug_assert_eq!(report.total_units, units.len() as u64);
    let start = Instant::now();
    if let (Some(path), true) = (&opts.checkpoint, opts.resume) {
        if let Some(saved) = load_checkpoint(path)? {
            ensure_compatible(path, &saved, &report)?;
            report = saved;
        }
    }
    let prior_ms = report.wall_time_ms.unwrap_or(0);
    let exec = Executor::new(opts.workers);
    let chunk_size = opts.chunk_size.max(1);
    let mut chunks = 0;

    while (report.cursor as usize) < units.len() && opts.max_chunks.is_none_or(|max| chunks < max) {
        let lo = report.cursor as usize;
        let hi = (lo + chunk_size).min(units.len());
        let outcomes = exec.map(&units[lo..hi], &eval);
        for (offset, out) in outcomes.into_iter().enumerate() {
            let position = (lo + offset) as u64;
            let unit = || describe(&units[lo + offset]);
            report.counts.examined += u64::from(out.examined);
            report.counts.polynomial += u64::from(out.polynomial);
            if let Some((reason, result)) = out.violation {
                report.counts.violations += 1;
                report.violations.push(SweepViolation {
                    position,
                    unit: unit(),
                    reason,
                    result,
                });
            }
            if let Some((reason, result)) = out.anomaly {
                report.counts.structure_anomalies += 1;
                report.anomalies.push(SweepViolation {
                    position,
                    unit: unit(),
                    reason,
                    result,
                });
            }
        }
        report.cursor = hi as u64;
        report.last_unit = Some(describe(&units[hi - 1]));
        report.complete = hi == units.len();
        report.wall_time_ms = Some(prior_ms + start.elapsed().as_millis() as u64);
        chunks += 1;
        if let Some(path) = &opts.checkpoint {
            save_checkpoint(path, &report)?;
        }
    }
    report.wall_time_ms = Some(prior_ms + start.elapsed().as_millis() as u64);
    Ok(report)
}

/// All `(n, k, l)` with `1 <= l < k <= n/2` and `n <= n_max`, in
/// lexicographic order.
pub fn conjecture1_units(n_max: u64) -> Vec<(u64, u64, u64)> {
    let mut units = Vec::new();
    for n in 4..=n_max {
        for k in 2..=n / 2 {
            units.extend((1..k).map(|l| (n, k, l)));
        }
    }
    units
}

fn describe_triple(&(n, k, l): &(u64, u64, u64)) -> String {
    format!("(n={n}, k={k}, l={l})")
}

/// Checks every quotient of Conjecture 1 type up to `n_max`; a violation is
/// a polynomial quotient with a negative coefficient.
pub fn sweep_conjecture1(n_max: u64, opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    if n_max < 2 {
        return Err(SweepError::InvalidParameters(format!(
            "n_max must be at least 2, got {n_max}"
        )));
    }
    let units = conjecture1_units(n_max);
    let report = SweepReport::empty(SweepParams::Conjecture1 { n_max }, None, units.len() as u64);
    let check = CheckOptions {
        keep_expansion: opts.check_structure,
        ..Default::default()
    };
    run(report, &units, describe_triple, opts, |&(n, k, l)| {
        classify(verify_quotient(QuotientSpec::new(n, k, l), check), opts.check_structure)
    })
}

/// Checks `samples` fake Gaussian products drawn from `template`; sample
/// `i` is a function of `(seed, i)` alone.
pub fn sweep_fake_gaussian(
    template: Template,
    ranges: SamplingRanges,
    seed: u64,
    samples: u64,
    opts: &SweepOptions,
) -> Result<SweepReport, SweepError> {
    if ranges.m_span == 0 {
        return Err(SweepError::InvalidParameters("m range must be nonempty".into()));
    }
    let units: Vec<u64> = (0..samples).collect();
    let params = SweepParams::FakeGaussian {
        template,
        ranges,
        samples,
    };
    let report = SweepReport::empty(params, Some(seed), samples);
    let check = CheckOptions {
        keep_expansion: opts.check_structure,
        ..Default::default()
    };
    run(
        report,
        &units,
        |&i| format!("{} (sample {i})", sample_fake_gaussian(template, ranges, seed, i)),
        opts,
        |&i| {
            let spec = sample_fake_gaussian(template, ranges, seed, i);
            classify(verify_fake_gaussian(&spec, check), opts.check_structure)
        },
    )
}

/// `(n, k, l)` with `l = 1, 1 <= k <= n-1` and `l = 2, 2 <= k <= n-2`,
/// ordered by `n`, then `l`, then `k`.
pub fn crosscheck_units(n_max: u64) -> Vec<(u64, u64, u64)> {
    let mut units = Vec::new();
    for n in 2..=n_max {
        units.extend((1..n).map(|k| (n, k, 1)));
        if n >= 4 {
            units.extend((2..=n - 2).map(|k| (n, k, 2)));
        }
    }
    units
}

/// Compares, for `l = 1, 2`, the closed-form criterion, the cyclotomic
/// test, the floor-formula exponents and the outcome of the expansion
/// itself. Any disagreement or negative coefficient is a violation.
pub fn crosscheck_theorems(n_max: u64, opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    if n_max < 4 {
        return Err(SweepError::InvalidParameters(format!(
            "n_max must be at least 4, got {n_max}"
        )));
    }
    let units = crosscheck_units(n_max);
    let report = SweepReport::empty(SweepParams::Crosscheck { n_max }, None, units.len() as u64);
    let check = CheckOptions {
        keep_expansion: opts.check_structure,
        ..Default::default()
    };
    run(report, &units, describe_triple, opts, |&(n, k, l)| {
        let spec = QuotientSpec::new(n, k, l);
        let expr = FactoredQExpression::from_quotient_spec(spec);
        let (criterion, exponent): (bool, fn(u64, u64, u64) -> i64) = if l == 1 {
            (thm8_is_polynomial(n, k), thm8_exponent)
        } else {
            (thm9_is_polynomial(n, k).expect("k in 2..=n-2"), thm9_exponent)
        };
        let cyclotomic = expr.is_polynomial();
        let formula_mismatch = (2..=n).find(|&d| exponent(n, k, d) != expr.cyclotomic_exponent(d));
        let checked = CheckedSpec::Quotient {
            spec,
            normalized: spec.normalized(),
        };
        let result = check_by_expansion(checked, expr, check);
        let reason = if let Some(d) = formula_mismatch {
            Some(format!("floor formula and divisor count differ at d={d}"))
        } else if criterion != cyclotomic {
            Some(format!(
                "closed-form criterion says {criterion}, cyclotomic test says {cyclotomic}"
            ))
        } else if cyclotomic != result.is_polynomial {
            Some(format!(
                "cyclotomic test says {cyclotomic}, expansion says {}",
                result.is_polynomial
            ))
        } else {
            None
        };
        flag(result, reason, opts.check_structure)
    })
}

/// [`classify`], with `reason` (if any) replacing the violation reason.
fn flag(result: CheckResult, reason: Option<String>, structure: bool) -> UnitOutcome {
    let flagged = reason.map(|r| {
        let mut copy = result.clone();
        copy.expansion = None;
        (r, copy)
    });
    let mut out = classify(result, structure);
    if flagged.is_some() {
        out.violation = flagged;
    }
    out
}

/// Expands the Hopkins–Rubey quotient for `1 <= n <= n_max` and compares it
/// with the product form built from the `l = 2` quotient in `q^2`.
pub fn reproduce_corollary10(n_max: u64, opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    if n_max < 1 {
        return Err(SweepError::InvalidParameters("n_max must be at least 1".into()));
    }
    let units: Vec<u64> = (1..=n_max).collect();
    let report = SweepReport::empty(SweepParams::Corollary10 { n_max }, None, n_max);
    run(
        report,
        &units,
        |n| format!("n={n}"),
        opts,
        |&n| {
            let result = check_expression(
                CheckedSpec::Named {
                    name: format!("corollary10 n={n}"),
                },
                corollary10_expression(n),
                CheckOptions {
                    keep_expansion: true,
                    ..Default::default()
                },
            );
            let via_product = corollary10_via_theorem9(n).ok();
            let reason = match (&result.expansion, &via_product) {
                (None, _) => Some("not a polynomial"),
                (Some(_), None) => Some("l = 2 quotient in q^2 is not a polynomial"),
                (Some(a), Some(b)) if a != b => Some("direct expansion and product form differ"),
                _ => None,
            };
            flag(result, reason.map(String::from), opts.check_structure)
        },
    )
}
