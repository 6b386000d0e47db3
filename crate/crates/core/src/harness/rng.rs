//! Counter-based sampling: the `i`-th sample of a randomized sweep depends
//! only on `(seed, i)`, never on how many samples ran before it or on which
//! worker draws it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::expr::FakeGaussianSpec;

/// ChaCha8 keyed by `seed`, positioned on stream `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Shapes of the sequences `(a_1, ..., a_n)` used by randomized sweeps;
/// `0^s` pads both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Template {
    /// `(0^s, a, 0^s)`
    A,
    /// `(0^s, a, a, 0^s)`
    Aa,
    /// `(0^s, a, b, a, 0^s)`
    Aba,
    /// `(0^s, a, b, b, a, 0^s)`
    Abba,
    /// `(0^s, a, b, c, b, a, 0^s)`
    Abcba,
}

impl Template {
    pub const ALL: [Template; 5] = [
        Template::A,
        Template::Aa,
        Template::Aba,
        Template::Abba,
        Template::Abcba,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Template::A => "a",
            Template::Aa => "aa",
            Template::Aba => "aba",
            Template::Abba => "abba",
            Template::Abcba => "abcba",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }

    pub fn sequence(self, s: u64, a: u64, b: u64, c: u64) -> Vec<u64> {
        let core: Vec<u64> = match self {
            Template::A => vec![a],
            Template::Aa => vec![a, a],
            Template::Aba => vec![a, b, a],
            Template::Abba => vec![a, b, b, a],
            Template::Abcba => vec![a, b, c, b, a],
        };
        let pad = std::iter::repeat_n(0, s as usize);
        pad.clone().chain(core).chain(pad).collect()
    }
}

/// Ranges for drawing fake Gaussian specs: `s` and the template values are
/// uniform on `0..=s_max` and `0..=value_max`, and `m` is uniform on
/// `max(s, 1)..=s + m_span`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingRanges {
    pub s_max: u64,
    pub value_max: u64,
    pub m_span: u64,
}

impl Default for SamplingRanges {
    fn default() -> Self {
        Self {
            s_max: 10,
            value_max: 10,
            m_span: 200,
        }
    }
}

pub fn sample_fake_gaussian(template: Template, ranges: SamplingRanges, seed: u64, index: u64) -> FakeGaussianSpec {
    let mut rng = sample_rng(seed, index);
    let s = rng.gen_range(0..=ranges.s_max);
    let a = rng.gen_range(0..=ranges.value_max);
    let b = rng.gen_range(0..=ranges.value_max);
    let c = rng.gen_range(0..=ranges.value_max);
    let m = rng.gen_range(s.max(1)..=s + ranges.m_span.max(1));
    FakeGaussianSpec::new(m, template.sequence(s, a, b, c))
}
