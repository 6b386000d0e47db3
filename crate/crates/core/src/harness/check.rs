//! Single-expression verification: polynomiality first (divisor
//! arithmetic only), expansion and the positivity check only when needed.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::analysis::{nonnegativity, NegativeLocus, PropertyRecord};
use crate::expr::{FactoredQExpression, FakeGaussianSpec, QuotientSpec};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckedSpec {
    Quotient {
        spec: QuotientSpec,
        normalized: QuotientSpec,
    },
    FakeGaussian {
        spec: FakeGaussianSpec,
        symmetric: bool,
    },
    /// Any other quotient of q-integers, e.g. from a reproduction.
    Named {
        name: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NotPolynomial,
    PolynomialNonnegative,
    /// A polynomial with a negative coefficient.
    Violation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotPolynomial => "not-polynomial",
            Verdict::PolynomialNonnegative => "polynomial-nonnegative",
            Verdict::Violation => "VIOLATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub spec: CheckedSpec,
    pub expression: FactoredQExpression,
    pub is_polynomial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_negative: Option<NegativeLocus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertyRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expansion: Option<IntPolynomial>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Keep the expanded polynomial in the result.
    pub keep_expansion: bool,
    /// Compute the full [`PropertyRecord`] for polynomial cases.
    pub properties: bool,
    /// Record wall-clock time. Off inside sweeps, whose reports must not
    /// depend on timing.
    pub timed: bool,
}

/// Checks `[n choose k]_q / [n choose l]_q` after reducing `k` and `l` to
/// the lower half by symmetry.
///
/// # Panics
///
/// Panics unless `k <= n` and `l <= n`.
pub fn verify_quotient(spec: QuotientSpec, opts: CheckOptions) -> CheckResult {
    assert!(spec.is_valid(), "quotient spec {spec} needs k, l <= n");
    let normalized = spec.normalized();
    check_expression(
        CheckedSpec::Quotient { spec, normalized },
        FactoredQExpression::from_quotient_spec(normalized),
        opts,
    )
}

/// # Panics
///
/// Panics if `m == 0`.
pub fn verify_fake_gaussian(spec: &FakeGaussianSpec, opts: CheckOptions) -> CheckResult {
    let expr = FactoredQExpression::from_fake_gaussian(spec);
    check_expression(
        CheckedSpec::FakeGaussian {
            symmetric: spec.is_symmetric(),
            spec: spec.clone(),
        },
        expr,
        opts,
    )
}

/// Fast polynomiality test, then expansion only for polynomial cases.
///
/// # Panics
///
/// Panics if the cyclotomic test and the expansion disagree, which can only
/// be an arithmetic bug.
pub fn check_expression(spec: CheckedSpec, expression: FactoredQExpression, opts: CheckOptions) -> CheckResult {
    let start = Instant::now();
    let expansion = if expression.is_polynomial() {
        let poly = expression
            .expand()
            .unwrap_or_else(|_| panic!("cyclotomic test and expansion disagree on {expression}"));
        Some(poly)
    } else {
        None
    };
    finish(spec, expression, expansion, opts, start)
}

/// Decides polynomiality by attempting the expansion, bypassing the
/// cyclotomic test. Used to audit that test.
pub fn check_by_expansion(spec: CheckedSpec, expression: FactoredQExpression, opts: CheckOptions) -> CheckResult {
    let start = Instant::now();
    let expansion = expression.expand().ok();
    finish(spec, expression, expansion, opts, start)
}

fn finish(
    spec: CheckedSpec,
    expression: FactoredQExpression,
    expansion: Option<IntPolynomial>,
    opts: CheckOptions,
    start: Instant,
) -> CheckResult {
    let mut result = CheckResult {
        spec,
        expression,
        is_polynomial: expansion.is_some(),
        degree: None,
        first_negative: None,
        properties: None,
        expansion: None,
        verdict: Verdict::NotPolynomial,
        elapsed_us: None,
    };
    if let Some(poly) = expansion {
        result.degree = poly.degree();
        result.first_negative = nonnegativity(&poly);
        result.verdict = if result.first_negative.is_some() {
            Verdict::Violation
        } else {
            Verdict::PolynomialNonnegative
        };
        if opts.properties {
            result.properties = PropertyRecord::of(&poly);
        }
        if opts.keep_expansion {
            result.expansion = Some(poly);
        }
    }
    if opts.timed {
        result.elapsed_us = Some(start.elapsed().as_micros() as u64);
    }
    result
}
