//! Necessary-condition filters for census-taker candidates.
//!
//! Three facts eliminate most integers without enumerating a single
//! triple: the mysterious triples of a CTN never share an entry (which
//! rules out 1, primes, and products of two primes), a CTN is never a
//! prime power, and a CTN always has at least four prime factors counted
//! with multiplicity. The filters are sound but not complete — 56 passes
//! all three yet is not a CTN.

use rayon::prelude::*;

use crate::classify::{classify, Classification};
use crate::numbertheory::factorize;
use crate::{check_range, Result};

/// First elimination rule that applies to `n`, in the fixed order below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elimination {
    /// No rule applies; `n` stays a candidate.
    None,
    /// 1 or a prime.
    TrivialSmall,
    PrimePower,
    FewerThanFourPrimeFactors,
}

impl Elimination {
    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Elimination::None => "NONE",
            Elimination::TrivialSmall => "TRIVIAL_SMALL",
            Elimination::PrimePower => "PRIME_POWER",
            Elimination::FewerThanFourPrimeFactors => "FEWER_THAN_FOUR_PRIME_FACTORS",
        }
    }
}

/// Strike used when rendering an elimination grid, one mark per rule:
/// `/` for 1 and products of at most two primes, `//` for higher prime
/// powers, `—` for products of exactly three primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strike {
    Slash,
    DoubleSlash,
    Dash,
}

impl Strike {
    pub fn symbol(&self) -> &'static str {
        match self {
            Strike::Slash => "/",
            Strike::DoubleSlash => "//",
            Strike::Dash => "—",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveVerdict {
    pub n: u64,
    pub eliminated_by: Elimination,
    pub omega: u32,
    pub prime_power: bool,
}

impl SieveVerdict {
    pub fn survives(&self) -> bool {
        self.eliminated_by == Elimination::None
    }

    /// Grid mark for eliminated integers; `None` for survivors.
    pub fn strike(&self) -> Option<Strike> {
        if self.omega <= 2 {
            Some(Strike::Slash)
        } else if self.prime_power {
            Some(Strike::DoubleSlash)
        } else if self.omega == 3 {
            Some(Strike::Dash)
        } else {
            None
        }
    }
}

/// Apply the elimination rules to `n`.
pub fn sieve(n: u64) -> Result<SieveVerdict> {
    let f = factorize(n)?;
    let eliminated_by = if n == 1 || f.is_prime() {
        Elimination::TrivialSmall
    } else if f.is_prime_power() {
        Elimination::PrimePower
    } else if f.omega() < 4 {
        Elimination::FewerThanFourPrimeFactors
    } else {
        Elimination::None
    };
    Ok(SieveVerdict { n, eliminated_by, omega: f.omega(), prime_power: f.is_prime_power() })
}

/// All integers in `[lo, hi]` that pass every elimination rule, ascending.
pub fn sieve_survivors(lo: u64, hi: u64) -> Result<Vec<u64>> {
    check_range(lo, hi)?;
    Ok((lo..=hi).filter(|&n| sieve(n).expect("n >= 1").survives()).collect())
}

/// All census-taker numbers in `[lo, hi]`, found by sieving first and
/// classifying only the survivors. Same output as a full scan, usually much
/// faster because most integers never reach triple enumeration.
pub fn sieved_scan_range(lo: u64, hi: u64) -> Result<Vec<Classification>> {
    check_range(lo, hi)?;
    Ok((lo..=hi)
        .filter(|&n| sieve(n).expect("n >= 1").survives())
        .map(|n| classify(n).expect("n >= 1"))
        .filter(Classification::is_ctn)
        .collect())
}

/// [`sieved_scan_range`] on a pool of `workers` threads, with the same
/// deterministic ascending output.
pub fn sieved_scan_range_with_workers(
    lo: u64,
    hi: u64,
    workers: usize,
) -> Result<Vec<Classification>> {
    check_range(lo, hi)?;
    if workers <= 1 {
        return sieved_scan_range(lo, hi);
    }
    let end = hi.checked_add(1).expect("range end overflows u64");
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to build scan thread pool");
    let per_n: Vec<Option<Classification>> = pool.install(|| {
        (lo..end)
            .into_par_iter()
            .map(|n| {
                if !sieve(n).expect("n >= 1").survives() {
                    return None;
                }
                let c = classify(n).expect("n >= 1");
                c.is_ctn().then_some(c)
            })
            .collect()
    });
    Ok(per_n.into_iter().flatten().collect())
}

/// Outcome of replaying full classification against the sieve on `[1, hi]`.
#[derive(Debug, Clone)]
pub struct SoundnessReport {
    pub hi: u64,
    /// Census-taker numbers found by full classification.
    pub ctns: Vec<u64>,
    /// How many integers in the range pass the sieve.
    pub survivor_count: usize,
    /// CTNs the sieve would wrongly eliminate. Always expected empty; a
    /// nonempty list is a fatal inconsistency.
    pub violations: Vec<u64>,
}

impl SoundnessReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check that no census-taker number in `[1, hi]` is eliminated by the
/// sieve. `hi = 0` yields a vacuous, empty report.
pub fn verify_sieve_soundness(hi: u64) -> SoundnessReport {
    let mut ctns = Vec::new();
    let mut survivor_count = 0;
    let mut violations = Vec::new();
    for n in 1..=hi {
        let verdict = sieve(n).expect("n >= 1");
        if verdict.survives() {
            survivor_count += 1;
        }
        if classify(n).expect("n >= 1").is_ctn() {
            ctns.push(n);
            if !verdict.survives() {
                violations.push(n);
            }
        }
    }
    SoundnessReport { hi, ctns, survivor_count, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn rejects_zero() {
        assert_eq!(sieve(0).unwrap_err(), Error::NonPositive);
    }

    #[test]
    fn rule_order_is_fixed() {
        assert_eq!(sieve(1).unwrap().eliminated_by, Elimination::TrivialSmall);
        assert_eq!(sieve(7).unwrap().eliminated_by, Elimination::TrivialSmall);
        assert_eq!(sieve(81).unwrap().eliminated_by, Elimination::PrimePower);
        // 16 = 2^4 has omega 4 but is still a prime power.
        assert_eq!(sieve(16).unwrap().eliminated_by, Elimination::PrimePower);
        assert_eq!(
            sieve(12).unwrap().eliminated_by,
            Elimination::FewerThanFourPrimeFactors,
        );
        assert!(sieve(36).unwrap().survives());
    }

    #[test]
    fn strikes_follow_the_grid_scheme() {
        let strike = |n| sieve(n).unwrap().strike();
        assert_eq!(strike(1), Some(Strike::Slash));
        assert_eq!(strike(7), Some(Strike::Slash));
        // Products of two primes get a single slash even when they are
        // prime squares.
        assert_eq!(strike(4), Some(Strike::Slash));
        assert_eq!(strike(6), Some(Strike::Slash));
        assert_eq!(strike(49), Some(Strike::Slash));
        assert_eq!(strike(8), Some(Strike::DoubleSlash));
        assert_eq!(strike(81), Some(Strike::DoubleSlash));
        assert_eq!(strike(12), Some(Strike::Dash));
        assert_eq!(strike(76), Some(Strike::Dash));
        assert_eq!(strike(24), None);
    }

    #[test]
    fn survivors_up_to_100() {
        assert_eq!(
            sieve_survivors(1, 100).unwrap(),
            vec![24, 36, 40, 48, 54, 56, 60, 72, 80, 84, 88, 90, 96, 100],
        );
    }

    #[test]
    fn no_single_digit_survivors() {
        assert!(sieve_survivors(1, 9).unwrap().is_empty());
    }

    #[test]
    fn singleton_range() {
        assert_eq!(sieve_survivors(36, 36).unwrap(), vec![36]);
    }

    #[test]
    fn survivors_validate_the_range() {
        assert_eq!(sieve_survivors(0, 5).unwrap_err(), Error::NonPositive);
        assert_eq!(sieve_survivors(5, 2).unwrap_err(), Error::InvalidRange { lo: 5, hi: 2 });
    }

    #[test]
    fn soundness_to_100() {
        let report = verify_sieve_soundness(100);
        assert!(report.ok());
        assert_eq!(report.ctns, vec![36, 40, 72, 96]);
        assert_eq!(report.survivor_count, 14);
    }

    #[test]
    fn soundness_to_10000() {
        let report = verify_sieve_soundness(10_000);
        assert!(report.ok());
        assert_eq!(report.ctns.len(), 310);
    }

    #[test]
    fn soundness_is_vacuous_for_tiny_ranges() {
        let report = verify_sieve_soundness(1);
        assert!(report.ok());
        assert!(report.ctns.is_empty());
    }

    #[test]
    fn a_survivor_that_is_not_a_ctn_exists() {
        // The sieve is not complete: 56 survives yet fails classification.
        assert!(sieve(56).unwrap().survives());
        assert!(!classify(56).unwrap().is_ctn());
    }

    #[test]
    fn sieved_scan_equals_full_scan() {
        let full = crate::classify::scan_range(1, 400).unwrap();
        assert_eq!(sieved_scan_range(1, 400).unwrap(), full);
        assert_eq!(sieved_scan_range_with_workers(1, 400, 3).unwrap(), full);
    }
}
