//! Exact arithmetic for quotients of q-binomial coefficients and fake
//! Gaussian products: expansion, polynomiality and positivity tests, the
//! closed-form criteria for small cases, and resumable parameter sweeps.
//!
//! Polynomials have arbitrary-precision integer coefficients throughout;
//! no floating point is involved anywhere.

pub mod analysis;
pub mod criteria;
pub mod cyclotomic;
pub mod error;
pub mod expr;
pub mod harness;
pub mod poly;

pub use analysis::{NegativeLocus, PropertyRecord};
pub use cyclotomic::{cyclotomic, CyclotomicCache};
pub use error::{CriteriaError, NotDivisible, SweepError};
pub use expr::{FactoredQExpression, FakeGaussianSpec, QFactor, QuotientSpec};
pub use poly::{q_binomial, q_int, IntPolynomial};
