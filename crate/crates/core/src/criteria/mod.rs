//! Closed-form criteria and the parametrized families used in the
//! positivity arguments. Each is checkable against the brute-force
//! cyclotomic test in [`crate::expr`].

pub mod cases;
pub mod lemmas;
pub mod theorems;

pub use cases::{case_classify, Case4Pattern, CaseLabel, CaseVerdict, Divisibility};
pub use lemmas::{
    lemma5_applicable, lemma5_expression, lemma6_degree, lemma6_expression, lemma6_numerator_args, lemma6_order_bound,
    Lemma6Variant,
};
pub use theorems::{
    corollary10_expression, corollary10_via_theorem9, rational_q_catalan, thm8_exponent, thm8_is_polynomial,
    thm9_exponent, thm9_is_polynomial,
};
