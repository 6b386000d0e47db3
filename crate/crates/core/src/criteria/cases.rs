//! Divisibility patterns for `l = k-1, k-2, k-3`.
//!
//! For these gaps the quotient is `prod_{i<g} [n-k+1+i]_q / prod_{i<g} [k-i]_q`
//! with `g = k - l`. Any `d >= 3` divides at most one of the denominator
//! arguments, so the quotient is a polynomial exactly when every
//! denominator argument divides some numerator argument and the numerator
//! has at least as many even arguments as the denominator (the `C_2` count).
//! Which numerator argument each denominator argument lands in decides the
//! sub-case of the positivity argument.

use serde::{Deserialize, Serialize};

use super::lemmas::Lemma6Variant;
use crate::error::CriteriaError;

/// Numerator arguments divisible by one denominator argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisibility {
    pub divisor: u64,
    pub divides: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "label")]
pub enum CaseLabel {
    /// Every denominator argument divides its own numerator argument.
    DistinctFactors,
    /// Two coprime denominator arguments divide the same numerator argument.
    TwoShareCoprime,
    /// `k`, `k-2` even and dividing `n-k+1`; `k-1 | n-k+2`.
    TwoShareEvenA,
    /// `k`, `k-2` even and dividing `n-k+3`; `k-1 | n-k+2`.
    TwoShareEvenB,
    AllThreeOddK,
    AllThreeEvenK,
    /// `k = 2K` with the numerator equal to one of the two three-factor
    /// families; `m_param` is the `M` of `m = 4 + M(2K-1)`.
    Lemma6 {
        variant: Lemma6Variant,
        k_param: u64,
        m_param: u64,
    },
}

impl CaseLabel {
    fn rank(&self) -> u8 {
        match self {
            CaseLabel::DistinctFactors => 0,
            CaseLabel::TwoShareCoprime => 1,
            CaseLabel::TwoShareEvenA | CaseLabel::TwoShareEvenB => 2,
            CaseLabel::Lemma6 { .. } => 3,
            CaseLabel::AllThreeOddK | CaseLabel::AllThreeEvenK => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::DistinctFactors => "distinct-factors",
            CaseLabel::TwoShareCoprime => "two-share-coprime",
            CaseLabel::TwoShareEvenA => "two-share-even-A",
            CaseLabel::TwoShareEvenB => "two-share-even-B",
            CaseLabel::AllThreeOddK => "all-three-odd-k",
            CaseLabel::AllThreeEvenK => "all-three-even-k",
            CaseLabel::Lemma6 {
                variant: Lemma6Variant::VariantA,
                ..
            } => "lemma6-A",
            CaseLabel::Lemma6 {
                variant: Lemma6Variant::VariantB,
                ..
            } => "lemma6-B",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case4Pattern {
    /// One entry per denominator argument, in the order `k, k-1, k-2`.
    pub assignment: Vec<Divisibility>,
    pub label: CaseLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseVerdict {
    Pattern(Case4Pattern),
    NotPolynomialPattern,
}

impl CaseVerdict {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, CaseVerdict::Pattern(_))
    }
}

/// Classifies `(n, k, l)` with `1 <= l < k <= n/2` and `k - l <= 3`.
pub fn case_classify(n: u64, k: u64, l: u64) -> Result<CaseVerdict, CriteriaError> {
    if !(1 <= l && l < k && 2 * k <= n && k - l <= 3) {
        return Err(CriteriaError::OutOfRange(format!(
            "case classification needs 1 <= l < k <= n/2 and k - l <= 3; got (n={n}, k={k}, l={l})"
        )));
    }
    let gap = k - l;
    let nums: Vec<u64> = (1..=gap).map(|i| n - k + i).collect();
    let dens: Vec<u64> = (0..gap).map(|i| k - i).collect();

    let assignment: Vec<Divisibility> = dens
        .iter()
        .map(|&d| Divisibility {
            divisor: d,
            divides: nums.iter().copied().filter(|a| a % d == 0).collect(),
        })
        .collect();
    if assignment.iter().any(|a| a.divides.is_empty()) {
        return Ok(CaseVerdict::NotPolynomialPattern);
    }
    let evens = |xs: &[u64]| xs.iter().filter(|&&x| x % 2 == 0).count();
    if evens(&dens) > evens(&nums) {
        return Ok(CaseVerdict::NotPolynomialPattern);
    }

    let mut best: Option<CaseLabel> = None;
    for choice in choices(&assignment) {
        let label = label_for(n, k, &choice);
        if best.is_none_or(|b| label.rank() > b.rank()) {
            best = Some(label);
        }
    }
    Ok(CaseVerdict::Pattern(Case4Pattern {
        assignment,
        label: best.expect("every divisor has at least one target"),
    }))
}

/// Every way to pick one target per divisor, in lexicographic order.
fn choices(assignment: &[Divisibility]) -> Vec<Vec<u64>> {
    assignment.iter().fold(vec![Vec::new()], |acc, div| {
        acc.into_iter()
            .flat_map(|prefix| {
                div.divides.iter().map(move |&t| {
                    let mut next = prefix.clone();
                    next.push(t);
                    next
                })
            })
            .collect()
    })
}

fn label_for(n: u64, k: u64, choice: &[u64]) -> CaseLabel {
    match *choice {
        [_] => CaseLabel::DistinctFactors,
        [a, b] if a == b => CaseLabel::TwoShareCoprime,
        [_, _] => CaseLabel::DistinctFactors,
        [a, b, c] if a == b && b == c => {
            if k % 2 == 1 {
                CaseLabel::AllThreeOddK
            } else {
                CaseLabel::AllThreeEvenK
            }
        }
        [a, b, c] if a == b || b == c => {
            debug_assert!(a != c);
            CaseLabel::TwoShareCoprime
        }
        [shared, middle, c] if shared == c => {
            if k % 2 == 1 {
                return CaseLabel::TwoShareCoprime;
            }
            // The C_2 count forces the shared argument to be n-k+1 or n-k+3.
            let (low, mid, high) = (n - k + 1, n - k + 2, n - k + 3);
            match (shared, middle) {
                (s, m) if s == low && m == mid => CaseLabel::TwoShareEvenA,
                (s, m) if s == high && m == mid => CaseLabel::TwoShareEvenB,
                (s, m) if s == low && m == high => lemma6_label(Lemma6Variant::VariantA, k, low),
                (s, m) if s == high && m == low => lemma6_label(Lemma6Variant::VariantB, k, high),
                _ => unreachable!("shared argument {shared} is odd although k={k} is even"),
            }
        }
        [_, _, _] => CaseLabel::DistinctFactors,
        _ => unreachable!("gap is at most three"),
    }
}

/// Recovers `(K, M)` from `k = 2K` and the numerator argument divisible by
/// both `k` and `k-2`.
fn lemma6_label(variant: Lemma6Variant, k: u64, shared: u64) -> CaseLabel {
    let big_k = k / 2;
    let base = big_k * (2 * big_k - 2);
    assert_eq!(shared % base, 0, "lcm(k, k-2) divides the shared argument");
    let mult = (shared / base) as i64;
    let modulus = (2 * big_k - 1) as i64;
    let offset = match variant {
        Lemma6Variant::VariantA => 4,
        Lemma6Variant::VariantB => 2 * big_k as i64 - 5,
    };
    let diff = mult - offset;
    assert!(
        diff >= 0 && diff % modulus == 0,
        "multiplier {mult} violates the congruence mod {modulus}"
    );
    CaseLabel::Lemma6 {
        variant,
        k_param: big_k,
        m_param: (diff / modulus) as u64,
    }
}
