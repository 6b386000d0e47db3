//! Command-line and batch-file spec syntax.
//!
//! A quotient is three integers `n k l`; a fake Gaussian product is `m`
//! followed by a comma-separated sequence without spaces, e.g.
//! `1 1,3,1`. Batch files hold one spec per line; blank lines and lines
//! starting with `#` are skipped.

use qbinpos::{FakeGaussianSpec, QuotientSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecInput {
    Quotient(QuotientSpec),
    FakeGaussian(FakeGaussianSpec),
}

fn int(s: &str, what: &str) -> Result<u64, String> {
    s.parse()
        .map_err(|_| format!("{what} must be a non-negative integer, got {s:?}"))
}

pub fn parse_sequence(s: &str) -> Result<Vec<u64>, String> {
    if s.is_empty() {
        return Err("sequence must not be empty".into());
    }
    s.split(',').map(|x| int(x, "sequence entry")).collect()
}

pub fn quotient(n: u64, k: u64, l: u64) -> Result<QuotientSpec, String> {
    let spec = QuotientSpec::new(n, k, l);
    if spec.is_valid() {
        Ok(spec)
    } else {
        Err(format!("need k <= n and l <= n, got n={n}, k={k}, l={l}"))
    }
}

pub fn fake_gaussian(m: u64, seq: &str) -> Result<FakeGaussianSpec, String> {
    if m == 0 {
        return Err("m must be at least 1".into());
    }
    Ok(FakeGaussianSpec::new(m, parse_sequence(seq)?))
}

pub fn parse_line(line: &str) -> Result<Option<SpecInput>, String> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens[..] {
        [n, k, l] => Ok(Some(SpecInput::Quotient(quotient(
            int(n, "n")?,
            int(k, "k")?,
            int(l, "l")?,
        )?))),
        [m, seq] => Ok(Some(SpecInput::FakeGaussian(fake_gaussian(int(m, "m")?, seq)?))),
        _ => Err(format!("expected `n k l` or `m a1,a2,...`, got {line:?}")),
    }
}

/// Parses every line, reporting the first bad one with its line number.
pub fn parse_batch(text: &str) -> Result<Vec<SpecInput>, String> {
    let mut specs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line) {
            Ok(Some(s)) => specs.push(s),
            Ok(None) => {}
            Err(e) => return Err(format!("line {}: {e}", i + 1)),
        }
    }
    Ok(specs)
}
