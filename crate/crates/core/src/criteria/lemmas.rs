//! The two building blocks behind the `l = k-2` and `l = k-3` cases: the
//! coprime quotient `[ab][γ]/([a][b])` and the two three-factor families
//! produced by the congruence `m ≡ 4 (mod 2K-1)`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::CriteriaError;
use crate::expr::FactoredQExpression;

/// `gcd(a, b) = 1` and `gamma >= (a-1)(b-1)`.
pub fn lemma5_applicable(a: u64, b: u64, gamma: i64) -> bool {
    assert!(a >= 1 && b >= 1);
    a.gcd(&b) == 1 && gamma >= ((a - 1) * (b - 1)) as i64
}

/// `[ab]_q [γ]_q / ([a]_q [b]_q)`.
///
/// `γ = 0` satisfies the hypothesis when `a = 1` or `b = 1` but makes the
/// expression vanish, so it is rejected along with inapplicable triples.
pub fn lemma5_expression(a: u64, b: u64, gamma: i64) -> Result<FactoredQExpression, CriteriaError> {
    if a == 0 || b == 0 || !lemma5_applicable(a, b, gamma) {
        return Err(CriteriaError::OutOfRange(format!(
            "[ab][γ]/([a][b]) needs coprime a, b and γ >= (a-1)(b-1); got a={a}, b={b}, γ={gamma}"
        )));
    }
    if gamma < 1 {
        return Err(CriteriaError::OutOfRange("γ must be positive".into()));
    }
    Ok(FactoredQExpression::from_factors([
        (a * b, 1),
        (gamma as u64, 1),
        (a, -1),
        (b, -1),
    ]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma6Variant {
    /// Numerator arguments `X, X+1, X+2`, `X = 4K(2K-2) + MK(2K-1)(2K-2)`, `K >= 2`.
    VariantA,
    /// Numerator arguments `Y, Y-1, Y-2`, `Y = K(2K-5)(2K-2) + MK(2K-1)(2K-2)`, `K >= 3`.
    VariantB,
}

impl Lemma6Variant {
    pub fn min_k(self) -> u64 {
        match self {
            Lemma6Variant::VariantA => 2,
            Lemma6Variant::VariantB => 3,
        }
    }
}

/// The three numerator arguments, in the order `i = 0, 1, 2`.
pub fn lemma6_numerator_args(k: u64, m: u64, variant: Lemma6Variant) -> Result<[u64; 3], CriteriaError> {
    if k < variant.min_k() {
        return Err(CriteriaError::OutOfRange(format!(
            "{variant:?} needs K >= {}, got K={k}",
            variant.min_k()
        )));
    }
    let step = m * k * (2 * k - 1) * (2 * k - 2);
    Ok(match variant {
        Lemma6Variant::VariantA => {
            let x = 4 * k * (2 * k - 2) + step;
            [x, x + 1, x + 2]
        }
        Lemma6Variant::VariantB => {
            let y = k * (2 * k - 5) * (2 * k - 2) + step;
            [y, y - 1, y - 2]
        }
    })
}

/// `prod_i [arg_i]_q / ([2K]_q [2K-1]_q [2K-2]_q)`.
pub fn lemma6_expression(k: u64, m: u64, variant: Lemma6Variant) -> Result<FactoredQExpression, CriteriaError> {
    let args = lemma6_numerator_args(k, m, variant)?;
    Ok(FactoredQExpression::from_factors(
        args.into_iter()
            .map(|a| (a, 1))
            .chain([(2 * k, -1), (2 * k - 1, -1), (2 * k - 2, -1)]),
    ))
}

/// `24K(K-1) + 6MK(K-1)(2K-1) - 6K + 6`, the degree of the first family.
pub fn lemma6_degree(k: u64, m: u64) -> i64 {
    assert!(k >= 2);
    let (k, m) = (k as i64, m as i64);
    24 * k * (k - 1) + 6 * m * k * (k - 1) * (2 * k - 1) - 6 * k + 6
}

/// `16K^2 - 18K + 4 + 4MK(K-1)(2K-1)`: the order of the only part of the
/// geometric-series expansion that can carry negative terms.
pub fn lemma6_order_bound(k: u64, m: u64) -> i64 {
    assert!(k >= 2);
    let (k, m) = (k as i64, m as i64);
    16 * k * k - 18 * k + 4 + 4 * m * k * (k - 1) * (2 * k - 1)
}
