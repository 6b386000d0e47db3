//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Everything the toolkit expands is a product or quotient of binomials
//! `1 - q^m`, so besides general convolution and long division the type
//! carries linear-time in-place kernels for multiplying and dividing by
//! `1 - q^m`. Those kernels are what the expansion hot path uses.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::NotDivisible;

/// Polynomial `sum coeffs[i] * q^i` in canonical form: the last stored
/// coefficient is nonzero and the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    #[serde(with = "decimal_coeffs")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    /// `c * q^e`
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 - q^k`
    pub fn one_minus_q_pow(k: usize) -> Self {
        &Self::one() - &Self::monomial(1, k)
    }

    /// Builds a polynomial from coefficients in increasing degree order,
    /// trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// `p(q^s)` for `s >= 1`.
    pub fn substitute_power(&self, s: usize) -> Self {
        assert!(s >= 1, "substitution exponent must be positive");
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = c.clone();
        }
        Self { coeffs }
    }

    /// Schoolbook convolution.
    pub fn mul_schoolbook(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// Exact quotient `self / divisor` in `Z[q]` by long division.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is the zero polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, NotDivisible> {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return Err(NotDivisible);
        }
        let lead = &divisor.coeffs[dlen - 1];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(NotDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        if rem[..dlen - 1].iter().any(|c| !c.is_zero()) {
            return Err(NotDivisible);
        }
        Ok(Self::new(quot))
    }

    /// Quotient by `1 - q^k` through the recurrence `c_i = a_i + c_{i-k}`.
    pub fn div_one_minus_qk(&self, k: usize) -> Result<Self, NotDivisible> {
        let mut out = self.clone();
        out.div_one_minus_qk_in_place(k)?;
        Ok(out)
    }

    /// In-place form of [`IntPolynomial::div_one_minus_qk`]. On error the
    /// contents of `self` are unspecified.
    pub fn div_one_minus_qk_in_place(&mut self, k: usize) -> Result<(), NotDivisible> {
        assert!(k >= 1, "divisor 1 - q^k needs k >= 1");
        let len = self.coeffs.len();
        if len == 0 {
            return Ok(());
        }
        for i in k..len {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
        // The recovered coefficients above degree - k must all vanish.
        let qlen = len.saturating_sub(k);
        if self.coeffs[qlen..].iter().any(|c| !c.is_zero()) {
            return Err(NotDivisible);
        }
        self.coeffs.truncate(qlen);
        self.trim();
        Ok(())
    }

    /// Multiplies in place by `1 - q^k`.
    pub fn mul_one_minus_qk_in_place(&mut self, k: usize) {
        assert!(k >= 1, "factor 1 - q^k needs k >= 1");
        let len = self.coeffs.len();
        if len == 0 {
            return;
        }
        self.coeffs.resize(len + k, BigInt::zero());
        for i in (k..len + k).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - k].is_zero() {
                hi[0] -= &lo[i - k];
            }
        }
        self.trim();
    }

    /// Multiplies in place by `1 + q^k`.
    pub fn mul_one_plus_qk_in_place(&mut self, k: usize) {
        assert!(k >= 1, "factor 1 + q^k needs k >= 1");
        let len = self.coeffs.len();
        if len == 0 {
            return;
        }
        self.coeffs.resize(len + k, BigInt::zero());
        for i in (k..len + k).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - k].is_zero() {
                hi[0] += &lo[i - k];
            }
        }
    }

    /// Multiplies in place by the q-integer `[m]_q = 1 + q + ... + q^{m-1}`.
    pub fn mul_q_int_in_place(&mut self, m: usize) {
        assert!(m >= 1, "q-integer argument must be positive");
        if m == 1 {
            return;
        }
        self.mul_one_minus_qk_in_place(m);
        self.div_one_minus_qk_in_place(1)
            .expect("(1 - q^m) is divisible by (1 - q)");
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}` for `m >= 1`.
pub fn q_int(m: usize) -> IntPolynomial {
    assert!(m >= 1, "q-integer argument must be positive");
    IntPolynomial {
        coeffs: vec![BigInt::one(); m],
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`; zero when `k < 0` or `k > n`.
///
/// Built from the numerator `[n-k+1]_q ... [n]_q` with the division by
/// `[i]_q` interleaved right after the `i`-th multiplication, so every
/// intermediate value is itself a q-binomial coefficient.
pub fn q_binomial(n: usize, k: i64) -> IntPolynomial {
    if k < 0 || k as u64 > n as u64 {
        return IntPolynomial::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut p = IntPolynomial::one();
    for i in 1..=k {
        p.mul_q_int_in_place(n - k + i);
        // Divide by [i]_q = (1 - q^i) / (1 - q).
        p.mul_one_minus_qk_in_place(1);
        p.div_one_minus_qk_in_place(i)
            .expect("partial q-binomial products are exact");
    }
    p
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_schoolbook(rhs)
    }
}

/// Coefficients travel as decimal strings so no consumer ever rounds them.
mod decimal_coeffs {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(coeffs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(coeffs.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let mut coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        while coeffs.last().is_some_and(|c| c == &BigInt::default()) {
            coeffs.pop();
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Naive rational long division, independent of `div_exact`.
    fn oracle_divides(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
        let mut rem: Vec<i128> = a.iter().map(|&x| x as i128).collect();
        let b: Vec<i128> = b.iter().map(|&x| x as i128).collect();
        let lead = *b.last().unwrap();
        if rem.len() < b.len() {
            return if rem.iter().all(|&x| x == 0) {
                Some(vec![])
            } else {
                None
            };
        }
        let mut q = vec![0i128; rem.len() - b.len() + 1];
        for i in (0..q.len()).rev() {
            let top = rem[i + b.len() - 1];
            if top % lead != 0 {
                return None;
            }
            q[i] = top / lead;
            for (j, &bj) in b.iter().enumerate() {
                rem[i + j] -= q[i] * bj;
            }
        }
        rem.iter()
            .all(|&x| x == 0)
            .then(|| q.into_iter().map(|x| x as i64).collect())
    }

    #[test]
    fn canonical_form_trims() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        let x = p(&[3, 0, -2]);
        assert_eq!(&x + &IntPolynomial::zero(), x);
        assert_eq!(
            &p(&[1, 0, -1]) + &p(&[0, 0, 1, 0, 0, 0, 0, -1]),
            p(&[1, 0, 0, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
        assert!((&p(&[1, 2, 3]) * &IntPolynomial::zero()).is_zero());
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, -1]), p(&[1, 0, 0, -1]));
        let a = p(&[2, -1, 4]);
        let b = p(&[0, 3, 0, 1]);
        assert_eq!((&a * &b).degree(), Some(5));
    }

    #[test]
    fn div_exact_examples() {
        let one_minus = IntPolynomial::one_minus_q_pow;
        assert_eq!(one_minus(6).div_exact(&one_minus(3)), Ok(p(&[1, 0, 0, 1])));
        assert_eq!(one_minus(5).div_exact(&one_minus(2)), Err(NotDivisible));

        // (1-q^4)(1-q^6) / (1-q^2)^2: the oracle decides, and it divides.
        let a = &one_minus(4) * &one_minus(6);
        let b = &one_minus(2) * &one_minus(2);
        let expected =
            oracle_divides(&[1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1], &[1, 0, -2, 0, 1]).expect("oracle says divisible");
        assert_eq!(expected, vec![1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(a.div_exact(&b), Ok(p(&expected)));
    }

    #[test]
    fn div_exact_rejects_non_integral_quotient() {
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 2])), Err(NotDivisible));
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Ok(p(&[2])));
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn div_by_zero_panics() {
        let _ = p(&[1]).div_exact(&IntPolynomial::zero());
    }

    #[test]
    fn div_one_minus_qk_examples() {
        let one_minus = IntPolynomial::one_minus_q_pow;
        assert_eq!(one_minus(9).div_one_minus_qk(3), Ok(p(&[1, 0, 0, 1, 0, 0, 1])));
        assert_eq!(one_minus(1).div_one_minus_qk(1), Ok(IntPolynomial::one()));

        // ((1-q^4)(1-q^3)) / (1-q^2): 1-q^4 already carries 1-q^2.
        let a = &one_minus(4) * &one_minus(3);
        let oracle = oracle_divides(&[1, 0, 0, -1, -1, 0, 0, 1], &[1, 0, -1]);
        assert_eq!(oracle, Some(vec![1, 0, 1, -1, 0, -1]));
        assert_eq!(a.div_one_minus_qk(2), Ok(p(&[1, 0, 1, -1, 0, -1])));

        assert_eq!(p(&[1, 1]).div_one_minus_qk(2), Err(NotDivisible));
        assert_eq!(p(&[1, 0, 1]).div_one_minus_qk(1), Err(NotDivisible));
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(1), p(&[1]));
        assert_eq!(q_int(2), p(&[1, 1]));
        assert_eq!(q_int(5), p(&[1, 1, 1, 1, 1]));
        let mut x = IntPolynomial::one();
        x.mul_q_int_in_place(4);
        assert_eq!(x, q_int(4));
    }

    /// Pascal recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
    fn pascal_oracle(n: usize) -> Vec<Vec<Vec<i64>>> {
        let mut rows: Vec<Vec<Vec<i64>>> = vec![vec![vec![1]]];
        for m in 1..=n {
            let prev = &rows[m - 1];
            let mut row = Vec::new();
            for k in 0..=m {
                let mut c = vec![0i64; k * (m - k) + 1];
                if k >= 1 {
                    for (i, v) in prev[k - 1].iter().enumerate() {
                        c[i] += v;
                    }
                }
                if k < m {
                    for (i, v) in prev[k].iter().enumerate() {
                        c[i + k] += v;
                    }
                }
                row.push(c);
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn q_binomial_examples() {
        let oracle = pascal_oracle(12);
        assert_eq!(oracle[4][2], vec![1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0), IntPolynomial::one());
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        for (n, row) in oracle.iter().enumerate() {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(q_binomial(n, k as i64), p(expected), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn substitute_and_eval() {
        let x = p(&[1, 2, 3]);
        assert_eq!(x.substitute_power(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(x.eval_at_one(), BigInt::from(6));
        assert_eq!(x.eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn one_plus_qk() {
        let mut x = IntPolynomial::one();
        x.mul_one_plus_qk_in_place(3);
        assert_eq!(x, p(&[1, 0, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[1, 0, -1, 1, 1, -1, 0, 1]).to_string(),
            "1 - q^2 + q^3 + q^4 - q^5 + q^7"
        );
        assert_eq!(p(&[0, -2, 3]).to_string(), "-2*q + 3*q^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = IntPolynomial::new(vec![BigInt::from(-1), big]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"coeffs":["-1","123456789012345678901234567890"]}"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), x);
    }
}
