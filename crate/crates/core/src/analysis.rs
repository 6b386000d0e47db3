//! Coefficient-level properties of expanded polynomials.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;

/// Exponent and value of the lowest-degree negative coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeLocus {
    pub exponent: usize,
    #[serde(with = "decimal")]
    pub coefficient: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub nonnegative: bool,
    pub first_negative: Option<NegativeLocus>,
    pub reciprocal: bool,
    pub unimodal: bool,
    pub parity_unimodal: bool,
    pub order: usize,
    pub degree: usize,
}

impl PropertyRecord {
    /// `None` for the zero polynomial, whose order and degree are undefined.
    pub fn of(p: &IntPolynomial) -> Option<Self> {
        let degree = p.degree()?;
        let first_negative = nonnegativity(p);
        Some(Self {
            nonnegative: first_negative.is_none(),
            first_negative,
            reciprocal: is_reciprocal(p),
            unimodal: is_unimodal(p),
            parity_unimodal: is_parity_unimodal(p),
            order: order_of(p)?,
            degree,
        })
    }
}

/// `None` when every coefficient is `>= 0`, otherwise the lowest negative one.
pub fn nonnegativity(p: &IntPolynomial) -> Option<NegativeLocus> {
    p.coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| c.is_negative())
        .map(|(exponent, c)| NegativeLocus {
            exponent,
            coefficient: c.clone(),
        })
}

/// Palindromic coefficients over `0..=degree`, i.e. `P(q) = q^deg P(1/q)`.
///
/// # Panics
///
/// Panics on the zero polynomial.
pub fn is_reciprocal(p: &IntPolynomial) -> bool {
    assert!(!p.is_zero(), "reciprocity is undefined for the zero polynomial");
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// `0 <= p_0 <= ... <= p_r >= ... >= p_m >= 0` for some `r`. Constants and
/// the zero polynomial count as unimodal.
pub fn is_unimodal(p: &IntPolynomial) -> bool {
    sequence_is_unimodal(p.coeffs().iter())
}

/// The even-index and odd-index subsequences are each unimodal.
pub fn is_parity_unimodal(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    sequence_is_unimodal(c.iter().step_by(2)) && sequence_is_unimodal(c.iter().skip(1).step_by(2))
}

fn sequence_is_unimodal<'a>(seq: impl Iterator<Item = &'a BigInt>) -> bool {
    let mut descending = false;
    let mut prev: Option<&BigInt> = None;
    for c in seq {
        if c.is_negative() {
            return false;
        }
        if let Some(p) = prev {
            if c > p && descending {
                return false;
            }
            if c < p {
                descending = true;
            }
        }
        prev = Some(c);
    }
    true
}

/// Least exponent with a nonzero coefficient; `None` for the zero polynomial.
pub fn order_of(p: &IntPolynomial) -> Option<usize> {
    p.coeffs().iter().position(|c| !c.is_zero())
}

mod decimal {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}
