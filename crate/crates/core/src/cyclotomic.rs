//! Cyclotomic polynomials `C_d(q)`, memoized.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::poly::IntPolynomial;

/// Memo table `d -> C_d(q)`. Shared across threads behind a read-mostly
/// lock; entries are never replaced once inserted.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    table: RwLock<HashMap<u64, Arc<IntPolynomial>>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C_d(q)`, computed as `(q^d - 1) / prod_{e | d, e < d} C_e(q)`.
    pub fn get(&self, d: u64) -> Arc<IntPolynomial> {
        assert!(d >= 1, "cyclotomic index must be positive");
        if let Some(hit) = self.table.read().expect("cache lock poisoned").get(&d) {
            return Arc::clone(hit);
        }
        let mut poly = &IntPolynomial::monomial(1, d as usize) - &IntPolynomial::one();
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            poly = poly.div_exact(&self.get(e)).expect("C_e divides q^d - 1 for e | d");
        }
        let poly = Arc::new(poly);
        let mut table = self.table.write().expect("cache lock poisoned");
        Arc::clone(table.entry(d).or_insert(poly))
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `C_d(q)` through `cache`.
pub fn cyclotomic(d: u64, cache: &CyclotomicCache) -> Arc<IntPolynomial> {
    cache.get(d)
}

/// Divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
