//! Products and quotients of q-integers kept in factored form.
//!
//! A [`FactoredQExpression`] is `prod [m]_q^e` over a finite set of
//! arguments. Because `[m]_q = prod_{d | m, d >= 2} C_d(q)`, the exponent of
//! each cyclotomic polynomial is a divisor count, and polynomiality is
//! decided without expanding anything.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{divisors, CyclotomicCache};
use crate::error::NotDivisible;
use crate::poly::IntPolynomial;

/// One factor `[arg]_q^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QFactor {
    pub arg: u64,
    pub exp: i64,
}

/// Canonical factored form: arguments strictly increasing, no zero
/// exponents, no `[1]_q` factors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<QFactor>", into = "Vec<QFactor>")]
pub struct FactoredQExpression {
    factors: Vec<QFactor>,
}

impl TryFrom<Vec<QFactor>> for FactoredQExpression {
    type Error = String;

    fn try_from(factors: Vec<QFactor>) -> Result<Self, String> {
        if factors.iter().any(|f| f.arg == 0) {
            return Err("q-integer arguments must be positive".into());
        }
        Ok(Self::from_factors(factors.into_iter().map(|f| (f.arg, f.exp))))
    }
}

impl From<FactoredQExpression> for Vec<QFactor> {
    fn from(e: FactoredQExpression) -> Self {
        e.factors
    }
}

/// The triple `(n, k, l)` standing for `[n choose k]_q / [n choose l]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientSpec {
    pub n: u64,
    pub k: u64,
    pub l: u64,
}

impl QuotientSpec {
    pub fn new(n: u64, k: u64, l: u64) -> Self {
        Self { n, k, l }
    }

    pub fn is_valid(&self) -> bool {
        self.k <= self.n && self.l <= self.n
    }

    /// Reduces `k` and `l` to at most `n/2` via `[n choose k] = [n choose n-k]`.
    /// The value of the quotient is unchanged. `l` and `k` are never
    /// swapped: that would invert the quotient.
    pub fn normalized(&self) -> Self {
        Self {
            n: self.n,
            k: self.k.min(self.n - self.k),
            l: self.l.min(self.n - self.l),
        }
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, l={})", self.n, self.k, self.l)
    }
}

/// `m` together with `(a_1, ..., a_n)` for `prod ((1-q^{m+i}) / (1-q^i))^{a_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FakeGaussianSpec {
    pub m: u64,
    pub a: Vec<u64>,
}

impl FakeGaussianSpec {
    pub fn new(m: u64, a: Vec<u64>) -> Self {
        Self { m, a }
    }

    /// Whether `a_i = a_{n+1-i}` for every `i`.
    pub fn is_symmetric(&self) -> bool {
        self.a.iter().eq(self.a.iter().rev())
    }
}

impl fmt::Display for FakeGaussianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.a.iter().map(u64::to_string).collect();
        write!(f, "(m={}, a=({}))", self.m, seq.join(","))
    }
}

impl FactoredQExpression {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// Canonicalizes an arbitrary list of `(arg, exp)` pairs.
    ///
    /// # Panics
    ///
    /// Panics on a zero argument (`[0]_q = 0` is not invertible).
    pub fn from_factors(pairs: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut merged: BTreeMap<u64, i64> = BTreeMap::new();
        for (arg, exp) in pairs {
            assert!(arg >= 1, "q-integer arguments must be positive");
            if arg > 1 {
                *merged.entry(arg).or_default() += exp;
            }
        }
        Self {
            factors: merged
                .into_iter()
                .filter(|&(_, exp)| exp != 0)
                .map(|(arg, exp)| QFactor { arg, exp })
                .collect(),
        }
    }

    /// `[n]_q!` telescoped into `[1]_q ... [n]_q`.
    pub fn q_factorial(n: u64) -> Self {
        Self::from_factors((2..=n).map(|m| (m, 1)))
    }

    /// `prod [num_i]_q! / prod [den_j]_q!`.
    pub fn factorial_quotient(num: &[u64], den: &[u64]) -> Self {
        Self::from_factors(
            num.iter()
                .flat_map(|&n| (2..=n).map(|m| (m, 1)))
                .chain(den.iter().flat_map(|&n| (2..=n).map(|m| (m, -1)))),
        )
    }

    /// `[l]! [n-l]! / ([k]! [n-k]!)`, i.e. `[n choose k]_q / [n choose l]_q`.
    ///
    /// # Panics
    ///
    /// Panics unless `k <= n` and `l <= n`.
    pub fn from_quotient_spec(spec: QuotientSpec) -> Self {
        assert!(spec.is_valid(), "quotient spec {spec} needs k, l <= n");
        let QuotientSpec { n, k, l } = spec;
        Self::factorial_quotient(&[l, n - l], &[k, n - k])
    }

    /// `prod_i ([m+i]_q / [i]_q)^{a_i}`.
    ///
    /// # Panics
    ///
    /// Panics if `m == 0`.
    pub fn from_fake_gaussian(spec: &FakeGaussianSpec) -> Self {
        assert!(spec.m >= 1, "fake Gaussian products need m >= 1");
        Self::from_factors(spec.a.iter().enumerate().flat_map(|(idx, &ai)| {
            let i = idx as u64 + 1;
            [(spec.m + i, ai as i64), (i, -(ai as i64))]
        }))
    }

    pub fn factors(&self) -> &[QFactor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_factors(self.pairs().chain(other.pairs()))
    }

    pub fn inverse(&self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|f| QFactor {
                    arg: f.arg,
                    exp: -f.exp,
                })
                .collect(),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|f| (f.arg, f.exp))
    }

    pub fn max_arg(&self) -> u64 {
        self.factors.last().map_or(1, |f| f.arg)
    }

    /// `sum e * (m - 1)`: the degree of the expansion when it is a polynomial.
    pub fn net_degree(&self) -> i64 {
        self.factors.iter().map(|f| f.exp * (f.arg as i64 - 1)).sum()
    }

    /// Exponent of `C_d(q)` for `d >= 2`: `sum e * [d | m]`.
    pub fn cyclotomic_exponent(&self, d: u64) -> i64 {
        assert!(d >= 2, "cyclotomic exponents are tracked for d >= 2");
        self.factors.iter().filter(|f| f.arg % d == 0).map(|f| f.exp).sum()
    }

    /// All exponents at once, indexed by `d`; entries `0` and `1` are unused.
    /// `C_d` cannot divide `[m]_q` for `d > m`, so the table stops at the
    /// largest argument.
    pub fn cyclotomic_exponents(&self) -> Vec<i64> {
        let mut table = vec![0i64; self.max_arg() as usize + 1];
        for f in &self.factors {
            for d in divisors(f.arg) {
                table[d as usize] += f.exp;
            }
        }
        table[0] = 0;
        table[1] = 0;
        table
    }

    pub fn is_polynomial(&self) -> bool {
        self.cyclotomic_exponents().iter().all(|&e| e >= 0)
    }

    /// Exact expansion, or [`NotDivisible`] when the expression is not a
    /// polynomial.
    ///
    /// Works on the binomial form `prod (1-q^m)^e * (1-q)^{-sum e}`.
    /// Numerator binomials are multiplied in increasing order and each
    /// pending denominator is divided out as soon as the cyclotomic factors
    /// accumulated so far cover it, which keeps the working degree close to
    /// the final one. Every division is checked, so a wrong schedule could
    /// only cost time, never correctness.
    pub fn expand(&self) -> Result<IntPolynomial, NotDivisible> {
        let mut num: Vec<u64> = Vec::new();
        let mut den: Vec<u64> = Vec::new();
        let mut total = 0i64;
        for f in &self.factors {
            let target = if f.exp > 0 { &mut num } else { &mut den };
            target.extend(std::iter::repeat_n(f.arg, f.exp.unsigned_abs() as usize));
            total += f.exp;
        }
        // (1 - q) powers from [m]_q = (1 - q^m)/(1 - q).
        if total > 0 {
            den.extend(std::iter::repeat_n(1, total as usize));
        } else {
            num.extend(std::iter::repeat_n(1, total.unsigned_abs() as usize));
        }
        num.sort_unstable();
        den.sort_unstable_by(|a, b| b.cmp(a));

        let mut available = vec![0u32; self.max_arg() as usize + 1];
        let mut poly = IntPolynomial::one();
        let mut pending = den;
        for m in num {
            poly.mul_one_minus_qk_in_place(m as usize);
            for d in divisors(m) {
                available[d as usize] += 1;
            }
            let mut i = 0;
            while i < pending.len() {
                let arg = pending[i];
                let divs = divisors(arg);
                if divs.iter().all(|&d| available[d as usize] > 0) {
                    poly.div_one_minus_qk_in_place(arg as usize)?;
                    for d in divs {
                        available[d as usize] -= 1;
                    }
                    pending.remove(i);
                } else {
                    i += 1;
                }
            }
        }
        for arg in pending {
            poly.div_one_minus_qk_in_place(arg as usize)?;
        }
        Ok(poly)
    }

    /// Independent expansion route: `prod_{d >= 2} C_d(q)^{e_d}` by
    /// schoolbook multiplication of cached cyclotomic polynomials. Slower
    /// than [`FactoredQExpression::expand`]; kept as a cross-check.
    pub fn expand_via_cyclotomics(&self, cache: &CyclotomicCache) -> Result<IntPolynomial, NotDivisible> {
        let exps = self.cyclotomic_exponents();
        if exps.iter().any(|&e| e < 0) {
            return Err(NotDivisible);
        }
        let mut poly = IntPolynomial::one();
        for (d, &e) in exps.iter().enumerate().skip(2) {
            if e > 0 {
                let c = cache.get(d as u64);
                for _ in 0..e {
                    poly = poly.mul_schoolbook(&c);
                }
            }
        }
        Ok(poly)
    }
}

impl fmt::Display for FactoredQExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let render = |fs: Vec<&QFactor>| -> String {
            fs.iter()
                .map(|x| match x.exp.unsigned_abs() {
                    1 => format!("[{}]", x.arg),
                    e => format!("[{}]^{}", x.arg, e),
                })
                .collect::<Vec<_>>()
                .join("")
        };
        let num: Vec<&QFactor> = self.factors.iter().filter(|x| x.exp > 0).collect();
        let den: Vec<&QFactor> = self.factors.iter().filter(|x| x.exp < 0).collect();
        let top = if num.is_empty() { "1".to_string() } else { render(num) };
        if den.is_empty() {
            write!(f, "{top}")
        } else {
            write!(f, "{top} / {}", render(den))
        }
    }
}
