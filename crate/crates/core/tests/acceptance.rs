//! Acceptance suite: every criterion prints one PASS/FAIL line with its
//! elapsed time against its budget. Exits nonzero if any criterion fails.
//!
//! Run alone with `cargo test -p qbinpos --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qbinpos::criteria::{
    corollary10_expression, lemma6_degree, lemma6_order_bound, thm8_exponent, thm9_exponent, Lemma6Variant,
};
use qbinpos::harness::{
    crosscheck_theorems, reproduce_corollary10, reproduce_lemma6, reproduce_remark25, sample_rng, stanton_matches,
    sweep_conjecture1, sweep_fake_gaussian, verify_fake_gaussian, CheckOptions, SamplingRanges, SweepOptions, Template,
    Verdict, STANTON_SEQUENCE,
};
use qbinpos::{q_binomial, CyclotomicCache, FactoredQExpression, FakeGaussianSpec, IntPolynomial, QuotientSpec};
use rand::Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(d) if elapsed <= budget => (true, d),
        Ok(d) => (false, format!("{d}; over time budget")),
        Err(e) => (false, e),
    };
    println!(
        "[{}] criterion {id}: {name} ({:.2} s of {} s): {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    pass
}

fn remark25() -> Check {
    let rows = reproduce_remark25();
    for row in &rows {
        ensure(row.matches, || {
            format!(
                "{} expanded to {:?}, expected {}",
                row.expression, row.expansion, row.expected
            )
        })?;
    }
    Ok(format!("{}/4 expansions bit-exact", rows.len()))
}

fn stanton() -> Check {
    let poly = |m: u64| {
        let r = verify_fake_gaussian(
            &FakeGaussianSpec::new(m, STANTON_SEQUENCE.to_vec()),
            CheckOptions {
                keep_expansion: true,
                ..Default::default()
            },
        );
        (r.verdict, r.expansion)
    };
    let (verdict, p) = poly(1);
    let p = p.ok_or("m = 1 is not a polynomial")?;
    ensure(verdict == Verdict::Violation, || format!("m = 1 verdict {verdict:?}"))?;
    ensure(p.coeff(7) == BigInt::from(-1), || {
        format!("coefficient of q^7 is {}", p.coeff(7))
    })?;
    let rows = qbinpos::harness::reproduce_stanton(50, 0);
    ensure(stanton_matches(&rows), || {
        "some m in 2..=50 is not a nonnegative polynomial".into()
    })?;
    Ok("m=1 has -q^7; m=2..50 nonnegative polynomials".into())
}

fn conjecture1() -> Check {
    let r = sweep_conjecture1(150, &SweepOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.complete && r.counts.examined == r.total_units, || {
        "sweep incomplete".into()
    })?;
    ensure(r.counts.violations == 0, || {
        format!("{} violations: {:?}", r.counts.violations, r.violations)
    })?;
    ensure(r.counts.structure_anomalies == 0, || format!("{:?}", r.anomalies))?;
    Ok(format!(
        "{} triples, {} polynomial, 0 violations",
        r.counts.examined, r.counts.polynomial
    ))
}

fn theorems() -> Check {
    let r = crosscheck_theorems(100, &SweepOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.complete, || "sweep incomplete".into())?;
    ensure(r.is_clean(), || format!("disagreements: {:?}", r.violations))?;
    Ok(format!(
        "{} (n, k, l) checked, {} polynomial, 0 disagreements",
        r.counts.examined, r.counts.polynomial
    ))
}

fn floor_formulas() -> Check {
    for i in 0..1000u64 {
        let mut rng = sample_rng(2024, i);
        let l = rng.gen_range(1..=2u64);
        let n = rng.gen_range(2 * l..=300);
        let k = rng.gen_range(l..=n - l);
        let expr = FactoredQExpression::from_quotient_spec(QuotientSpec::new(n, k, l));
        for d in 2..=300 {
            let formula = if l == 1 {
                thm8_exponent(n, k, d)
            } else {
                thm9_exponent(n, k, d)
            };
            ensure(formula == expr.cyclotomic_exponent(d), || {
                format!("(n={n}, k={k}, l={l}) differs at d={d}")
            })?;
        }
    }
    Ok("1000 specs, d = 2..300, all equal".into())
}

fn lemma6() -> Check {
    let rows = reproduce_lemma6(12, 6, 0);
    ensure(rows.len() == 11 * 7 + 10 * 7, || format!("{} rows", rows.len()))?;
    for r in &rows {
        let degree = r.degree.ok_or_else(|| format!("{r:?} is not a polynomial"))? as i64;
        ensure(r.nonnegative && r.reciprocal, || format!("{r:?}"))?;
        if r.variant == Lemma6Variant::VariantA {
            ensure(degree == lemma6_degree(r.k_param, r.m_param), || {
                format!("degree {r:?}")
            })?;
            ensure(2 * lemma6_order_bound(r.k_param, r.m_param) > degree, || {
                format!("order bound {r:?}")
            })?;
        }
        ensure(r.ok, || format!("{r:?}"))?;
    }
    Ok(format!("{} expansions nonnegative and reciprocal", rows.len()))
}

fn corollary10() -> Check {
    let one = corollary10_expression(1).expand().map_err(|e| e.to_string())?;
    ensure(one == IntPolynomial::from_i64s(&[1, 0, 0, 1]), || {
        format!("n=1 gave {one}")
    })?;
    let r = reproduce_corollary10(30, &SweepOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.complete && r.counts.polynomial == 30, || format!("{:?}", r.counts))?;
    ensure(r.is_clean(), || format!("{:?}", r.violations))?;
    Ok("n = 1..30 nonnegative, product form agrees, n=1 is 1+q^3".into())
}

fn properties() -> Check {
    let cache = CyclotomicCache::new();
    for n in 1..=300u64 {
        let product = qbinpos::cyclotomic::divisors(n)
            .into_iter()
            .fold(IntPolynomial::one(), |acc, d| acc.mul_schoolbook(&cache.get(d)));
        let expected = &IntPolynomial::monomial(1, n as usize) - &IntPolynomial::one();
        ensure(product == expected, || format!("cyclotomic product fails at n={n}"))?;
    }
    for n in 1..=60u64 {
        for k in 0..=n as i64 {
            let b = q_binomial(n as usize, k);
            let left = q_binomial(n as usize - 1, k - 1);
            let right = q_binomial(n as usize - 1, k);
            let pascal1 = &left + &(&IntPolynomial::monomial(1, k as usize) * &right);
            let pascal2 = &(&IntPolynomial::monomial(1, n as usize - k as usize) * &left) + &right;
            ensure(b == pascal1 && b == pascal2, || format!("Pascal fails at ({n},{k})"))?;
            ensure(b == q_binomial(n as usize, n as i64 - k), || {
                format!("symmetry fails at ({n},{k})")
            })?;
            ensure(b.is_nonnegative(), || format!("negative coefficient at ({n},{k})"))?;
        }
    }
    // Sweeps check constant term 1 and reciprocity of every expansion.
    let serial = SweepOptions {
        workers: 1,
        ..Default::default()
    };
    let parallel = SweepOptions {
        workers: 8,
        ..Default::default()
    };
    let a = sweep_conjecture1(40, &serial)
        .map_err(|e| e.to_string())?
        .without_timing();
    let b = sweep_conjecture1(40, &parallel)
        .map_err(|e| e.to_string())?
        .without_timing();
    ensure(a == b && a.is_clean(), || {
        "conjecture1 sweep differs across worker counts".into()
    })?;
    let ranges = SamplingRanges::default();
    let a = sweep_fake_gaussian(Template::Aba, ranges, 42, 500, &serial).map_err(|e| e.to_string())?;
    let b = sweep_fake_gaussian(Template::Aba, ranges, 42, 500, &parallel).map_err(|e| e.to_string())?;
    ensure(
        serde_json::to_vec(&a.clone().without_timing()).unwrap() == serde_json::to_vec(&b.without_timing()).unwrap(),
        || "fake Gaussian sweep differs across worker counts".into(),
    )?;
    ensure(a.is_clean(), || format!("{:?}", a.violations))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("c1.json");
    let interrupted = SweepOptions {
        checkpoint: Some(path.clone()),
        chunk_size: 500,
        max_chunks: Some(3),
        ..serial.clone()
    };
    let partial = sweep_conjecture1(60, &interrupted).map_err(|e| e.to_string())?;
    ensure(!partial.complete, || "interruption did not stop the sweep".into())?;
    let resumed = sweep_conjecture1(
        60,
        &SweepOptions {
            resume: true,
            max_chunks: None,
            ..interrupted
        },
    )
    .map_err(|e| e.to_string())?;
    let straight = sweep_conjecture1(
        60,
        &SweepOptions {
            chunk_size: 500,
            ..serial
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(resumed.without_timing() == straight.without_timing(), || {
        "resumed report differs from uninterrupted one".into()
    })?;
    Ok("cyclotomic products n<=300, q-binomials n<=60, structure, determinism, resume".into())
}

/// `(number, name, budget in seconds, check)`.
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "factorial-quotient golden values", 1, remark25),
        (2, "Stanton counterexample and m=2..50", 30, stanton),
        (3, "Conjecture 1 sweep, n <= 150", 600, conjecture1),
        (4, "l=1 and l=2 criteria vs brute force, n <= 100", 120, theorems),
        (5, "floor-formula exponents, 1000 random specs", 10, floor_formulas),
        (6, "three-factor families, K <= 12, M <= 6", 120, lemma6),
        (7, "Hopkins-Rubey quotient, n <= 30", 60, corollary10),
        (8, "property suite", 180, properties),
    ];
    let mut failed = 0;
    for (id, name, budget, f) in criteria {
        if !run(id, name, Duration::from_secs(budget), f) {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
