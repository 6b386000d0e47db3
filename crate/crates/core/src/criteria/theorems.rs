//! Closed-form polynomiality criteria for `l = 1` and `l = 2`, the rational
//! q-Catalan polynomials, and the Kreweras-word expression built on them.

use num_integer::Integer;

use crate::error::NotDivisible;
use crate::expr::{FactoredQExpression, QuotientSpec};
use crate::poly::IntPolynomial;

/// `[n choose k]_q / [n]_q` is a polynomial iff `gcd(k, n-k) = 1`.
///
/// The gcd test also gives the right answer at `k = 0` and `k = n`
/// (the quotient is `1/[n]_q`, a polynomial only for `n = 1`).
pub fn thm8_is_polynomial(n: u64, k: u64) -> bool {
    assert!(n >= 1 && k <= n, "need 1 <= n and 0 <= k <= n");
    k.gcd(&(n - k)) == 1
}

/// `[1]_q [2]_q [n choose k]_q / ([n]_q [n-1]_q)` is a polynomial iff each of
/// `gcd(k, n-k)`, `gcd(k, n-k-1)`, `gcd(k-1, n-k)` is 1 or 2.
///
/// Returns `None` outside `2 <= k <= n-2`, where the criterion is not
/// stated; use the cyclotomic test there.
pub fn thm9_is_polynomial(n: u64, k: u64) -> Option<bool> {
    if k < 2 || k + 2 > n {
        return None;
    }
    let small = |g: u64| g == 1 || g == 2;
    Some(small(k.gcd(&(n - k))) && small(k.gcd(&(n - k - 1))) && small((k - 1).gcd(&(n - k))))
}

/// `floor((n-1)/d) - floor(k/d) - floor((n-k)/d)`: exponent of `C_d`, `d >= 2`,
/// in `[n choose k]_q / [n]_q`.
pub fn thm8_exponent(n: u64, k: u64, d: u64) -> i64 {
    assert!(d >= 2 && k <= n && n >= 1);
    ((n - 1) / d) as i64 - (k / d) as i64 - ((n - k) / d) as i64
}

/// Exponent of `C_d`, `d >= 2`, in the `l = 2` quotient:
/// `floor((n-2)/d) - floor(k/d) - floor((n-k)/d) + [d = 2]`.
pub fn thm9_exponent(n: u64, k: u64, d: u64) -> i64 {
    assert!(d >= 2 && k <= n && n >= 2);
    ((n - 2) / d) as i64 - (k / d) as i64 - ((n - k) / d) as i64 + i64::from(d == 2)
}

/// `[n choose k]_q / [n]_q`, expanded.
pub fn rational_q_catalan(n: u64, k: u64) -> Result<IntPolynomial, NotDivisible> {
    assert!(n >= 1 && k <= n, "need 1 <= n and 0 <= k <= n");
    FactoredQExpression::from_quotient_spec(QuotientSpec::new(n, k, 1)).expand()
}

/// `prod_{j=1}^{3n} (1-q^{2j}) / (prod_{j=2}^{2n+1} (1-q^j) prod_{j=2}^{n+1} (1-q^{2j}))`
/// as q-integers. Both sides carry `3n` binomials, so the `(1-q)` powers cancel.
pub fn corollary10_expression(n: u64) -> FactoredQExpression {
    assert!(n >= 1);
    FactoredQExpression::from_factors(
        (1..=3 * n)
            .map(|j| (2 * j, 1))
            .chain((2..=2 * n + 1).map(|j| (j, -1)))
            .chain((2..=n + 1).map(|j| (2 * j, -1))),
    )
}

/// The same polynomial assembled the other way: the `l = 2` quotient for
/// `(3n+2, n+1)` taken in `q^2`, times `prod_{j=3}^{2n+1} (1 + q^j)`.
pub fn corollary10_via_theorem9(n: u64) -> Result<IntPolynomial, NotDivisible> {
    assert!(n >= 1);
    let base = FactoredQExpression::from_quotient_spec(QuotientSpec::new(3 * n + 2, n + 1, 2)).expand()?;
    let mut poly = base.substitute_power(2);
    for j in 3..=2 * n + 1 {
        poly.mul_one_plus_qk_in_place(j as usize);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_reciprocal;

    #[test]
    fn thm8_examples() {
        assert!(thm8_is_polynomial(5, 2));
        assert!(!thm8_is_polynomial(12, 2));
        assert_eq!(thm8_exponent(12, 2, 2), -1);
        assert!(thm8_is_polynomial(1, 0));
        assert!(!thm8_is_polynomial(7, 0));
    }

    #[test]
    fn thm9_examples() {
        assert_eq!(thm9_is_polynomial(8, 3), Some(true));
        assert_eq!(thm9_is_polynomial(9, 4), Some(false));
        assert_eq!(thm9_is_polynomial(9, 1), None);
        assert_eq!(thm9_is_polynomial(9, 8), None);
        for n in 1..=30 {
            assert_eq!(thm9_is_polynomial(3 * n + 2, n + 1), Some(true));
        }
    }

    #[test]
    fn rational_catalan_examples() {
        assert_eq!(rational_q_catalan(5, 2), Ok(IntPolynomial::from_i64s(&[1, 0, 1])));
        assert_eq!(rational_q_catalan(4, 2), Err(NotDivisible));
        for n in 1..20 {
            assert_eq!(rational_q_catalan(n, 1), Ok(IntPolynomial::one()));
        }
    }

    #[test]
    fn rational_catalan_shape() {
        for n in 2..=30u64 {
            for k in 1..n {
                if let Ok(p) = rational_q_catalan(n, k) {
                    assert!(is_reciprocal(&p));
                    let deg = k * (n - k) - (n - 1);
                    assert_eq!(p.degree(), Some(deg as usize));
                }
            }
        }
    }

    #[test]
    fn corollary10_small() {
        let e = corollary10_expression(1);
        assert_eq!(e, FactoredQExpression::from_factors([(6, 1), (3, -1)]));
        let p = IntPolynomial::from_i64s(&[1, 0, 0, 1]);
        assert_eq!(e.expand(), Ok(p.clone()));
        assert_eq!(corollary10_via_theorem9(1), Ok(p));
        assert_eq!(corollary10_expression(2).expand(), corollary10_via_theorem9(2));
    }
}
