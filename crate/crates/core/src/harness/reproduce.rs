//! Fixed reproductions with known answers: four printed factorial-quotient
//! expansions, Stanton's sequence, and the two three-factor families.

use serde::{Deserialize, Serialize};

use super::check::{verify_fake_gaussian, CheckOptions, Verdict};
use super::exec::Executor;
use crate::analysis::{is_reciprocal, nonnegativity, NegativeLocus};
use crate::criteria::{lemma6_degree, lemma6_expression, lemma6_numerator_args, lemma6_order_bound, Lemma6Variant};
use crate::expr::{FactoredQExpression, FakeGaussianSpec};
use crate::poly::IntPolynomial;

/// Stanton's sequence; a polynomial with a `-q^7` term at `m = 1`.
pub const STANTON_SEQUENCE: [u64; 17] = [1, 3, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1];

/// `(numerator factorials, denominator factorials, printed expansion)`.
const REMARK25: [(&[u64], &[u64], &[i64]); 4] = [
    (&[12, 2, 2], &[11, 4, 1], &[1, 0, -1, 1, 1, -1, 0, 1]),
    (&[10, 4, 3, 1], &[9, 5, 2, 2], &[1, 0, 1, -1, 1, 0, 1]),
    (&[12, 2, 2, 2], &[11, 4, 1, 1, 1], &[1, 1, -1, 0, 2, 0, -1, 1, 1]),
    (
        &[12, 2, 2, 2, 2, 2],
        &[11, 4, 1, 1, 1, 1, 1, 1, 1],
        &[1, 3, 2, -1, 1, 4, 1, -1, 2, 3, 1],
    ),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialQuotientRow {
    pub numerator: Vec<u64>,
    pub denominator: Vec<u64>,
    pub expression: FactoredQExpression,
    pub expansion: Option<IntPolynomial>,
    pub expected: IntPolynomial,
    pub matches: bool,
}

/// Polynomial factorial quotients with negative coefficients, each compared
/// with its known expansion.
pub fn reproduce_remark25() -> Vec<FactorialQuotientRow> {
    REMARK25
        .iter()
        .map(|&(num, den, expected)| {
            let expression = FactoredQExpression::factorial_quotient(num, den);
            let expansion = expression.expand().ok();
            let expected = IntPolynomial::from_i64s(expected);
            FactorialQuotientRow {
                numerator: num.to_vec(),
                denominator: den.to_vec(),
                matches: expansion.as_ref() == Some(&expected),
                expression,
                expansion,
                expected,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StantonRow {
    pub m: u64,
    pub is_polynomial: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_negative: Option<NegativeLocus>,
}

/// Stanton's sequence for `1 <= m <= m_max`. Rows are recorded as found;
/// nothing beyond the computed range is asserted.
pub fn reproduce_stanton(m_max: u64, workers: usize) -> Vec<StantonRow> {
    let ms: Vec<u64> = (1..=m_max).collect();
    Executor::new(workers).map(&ms, |&m| {
        let r = verify_fake_gaussian(
            &FakeGaussianSpec::new(m, STANTON_SEQUENCE.to_vec()),
            CheckOptions::default(),
        );
        StantonRow {
            m,
            is_polynomial: r.is_polynomial,
            verdict: r.verdict,
            degree: r.degree,
            first_negative: r.first_negative,
        }
    })
}

/// The expected shape: a `-q^7` term at `m = 1` and a nonnegative
/// polynomial for every other `m`.
pub fn stanton_matches(rows: &[StantonRow]) -> bool {
    rows.iter().all(|r| match r.m {
        1 => {
            r.verdict == Verdict::Violation
                && r.first_negative
                    .as_ref()
                    .is_some_and(|l| l.exponent == 7 && l.coefficient == (-1).into())
        }
        _ => r.verdict == Verdict::PolynomialNonnegative,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma6Row {
    pub variant: Lemma6Variant,
    pub k_param: u64,
    pub m_param: u64,
    pub numerator_args: [u64; 3],
    /// Degree of the expansion; `None` if it failed to be a polynomial.
    pub degree: Option<usize>,
    /// Closed-form degree and order bound; stated for the first family only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_bound: Option<i64>,
    pub nonnegative: bool,
    pub reciprocal: bool,
    pub ok: bool,
}

/// Expands both families for `K <= k_max` (from each family's minimum) and
/// `M <= m_max`.
pub fn reproduce_lemma6(k_max: u64, m_max: u64, workers: usize) -> Vec<Lemma6Row> {
    let mut grid = Vec::new();
    for variant in [Lemma6Variant::VariantA, Lemma6Variant::VariantB] {
        for k in variant.min_k()..=k_max {
            grid.extend((0..=m_max).map(|m| (variant, k, m)));
        }
    }
    Executor::new(workers).map(&grid, |&(variant, k, m)| lemma6_row(variant, k, m))
}

fn lemma6_row(variant: Lemma6Variant, k: u64, m: u64) -> Lemma6Row {
    let expr = lemma6_expression(k, m, variant).expect("grid respects the minimum K");
    let poly = expr.expand().ok();
    let degree = poly.as_ref().and_then(IntPolynomial::degree);
    let nonnegative = poly.as_ref().is_some_and(|p| nonnegativity(p).is_none());
    let reciprocal = poly.as_ref().is_some_and(|p| !p.is_zero() && is_reciprocal(p));
    let (closed_form_degree, order_bound) = match variant {
        Lemma6Variant::VariantA => (Some(lemma6_degree(k, m)), Some(lemma6_order_bound(k, m))),
        Lemma6Variant::VariantB => (None, None),
    };
    let degree_i = degree.map(|d| d as i64);
    let ok = nonnegative
        && reciprocal
        && degree_i == Some(expr.net_degree())
        && closed_form_degree.is_none_or(|c| Some(c) == degree_i)
        && order_bound.is_none_or(|b| degree_i.is_some_and(|d| 2 * b > d));
    Lemma6Row {
        variant,
        k_param: k,
        m_param: m,
        numerator_args: lemma6_numerator_args(k, m, variant).expect("grid respects the minimum K"),
        degree,
        closed_form_degree,
        order_bound,
        nonnegative,
        reciprocal,
        ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark25_rows_match() {
        let rows = reproduce_remark25();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert!(row.matches, "{} gave {:?}", row.expression, row.expansion);
        }
        assert_eq!(rows[0].expected.to_string(), "1 - q^2 + q^3 + q^4 - q^5 + q^7");
    }

    #[test]
    fn stanton_small_range() {
        let rows = reproduce_stanton(8, 1);
        assert!(stanton_matches(&rows));
        assert_eq!(rows[0].verdict, Verdict::Violation);
    }

    #[test]
    fn lemma6_small_grid() {
        let rows = reproduce_lemma6(4, 2, 1);
        assert_eq!(rows.len(), 3 * 3 + 2 * 3);
        assert!(rows.iter().all(|r| r.ok), "{rows:?}");
        assert_eq!(rows[0].degree, Some(42));
    }
}
