//! Verification of single expressions, parameter sweeps and fixed
//! reproductions.

pub mod check;
pub mod checkpoint;
pub mod exec;
pub mod reproduce;
pub mod rng;
pub mod sweep;

pub use check::{
    check_by_expansion, check_expression, verify_fake_gaussian, verify_quotient, CheckOptions, CheckResult,
    CheckedSpec, Verdict,
};
pub use checkpoint::{load_checkpoint, save_checkpoint};
pub use exec::{default_workers, Executor};
pub use reproduce::{
    reproduce_lemma6, reproduce_remark25, reproduce_stanton, stanton_matches, FactorialQuotientRow, Lemma6Row,
    StantonRow, STANTON_SEQUENCE,
};
pub use rng::{sample_fake_gaussian, sample_rng, SamplingRanges, Template};
pub use sweep::{
    conjecture1_units, crosscheck_theorems, crosscheck_units, reproduce_corollary10, sweep_conjecture1,
    sweep_fake_gaussian, SweepCounts, SweepOptions, SweepParams, SweepReport, SweepViolation, SCHEMA_VERSION,
};
