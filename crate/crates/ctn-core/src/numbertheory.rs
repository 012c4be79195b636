//! Factorization, divisor enumeration, and primality by deterministic
//! trial division. Exact and ample for the desk scale this crate targets
//! (values up to a few times 10¹⁶ factor instantly because their prime
//! factors are small).

use crate::{Error, Result};

/// A positive integer together with its full prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
    omega: u32,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// (prime, exponent) pairs in ascending prime order; empty for 1.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of prime factors counted with multiplicity (Ω).
    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn is_prime(&self) -> bool {
        self.omega == 1
    }

    /// True iff the value is pᵏ for a single prime p, k ≥ 1.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// Every divisor of the value, ascending. The length is the product of
    /// (exponent + 1) over the factorization.
    pub fn divisors(&self) -> Vec<u64> {
        let count: usize = self.factors.iter().map(|&(_, e)| e as usize + 1).product();
        let mut divs = Vec::with_capacity(count);
        divs.push(1u64);
        for &(p, e) in &self.factors {
            let prev = divs.len();
            let mut power = 1u64;
            for _ in 0..e {
                power *= p;
                for i in 0..prev {
                    divs.push(divs[i] * power);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factor `n` by trial division. Deterministic; rejects 0.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut rem = n;
    let mut factors = Vec::new();
    let push = |p: u64, e: u32, factors: &mut Vec<(u64, u32)>| {
        if e > 0 {
            factors.push((p, e));
        }
    };

    let mut e = 0;
    while rem % 2 == 0 {
        rem /= 2;
        e += 1;
    }
    push(2, e, &mut factors);

    let mut d = 3u64;
    while d <= rem / d {
        let mut e = 0;
        while rem % d == 0 {
            rem /= d;
            e += 1;
        }
        push(d, e, &mut factors);
        d += 2;
    }
    push(rem, u32::from(rem > 1), &mut factors);

    let omega = factors.iter().map(|&(_, e)| e).sum();
    Ok(FactoredInteger { value: n, factors, omega })
}

/// True iff `n` has exactly two divisors.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
