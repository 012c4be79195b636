//! Census-taker numbers: exact classification, theorem-based sieving, and
//! the p²(2p−1)² family.
//!
//! A positive integer N is a *census-taker number* (CTN) when there is
//! exactly one pair of different unordered triples of positive integers
//! whose products both equal N and whose sums agree. The shared sum is the
//! *magic sum* and the two triples are the *mysterious triples*. 36 is the
//! smallest example: of its eight triples, only {9,2,2} and {6,6,1} share a
//! sum (13).
//!
//! Everything here runs in exact integer arithmetic:
//!
//! - [`numbertheory`] — factorization, divisors, primality.
//! - [`triples`] — exhaustive triple tables grouped by sum.
//! - [`classify`] — the CTN decision with full evidence, range scans, and
//!   the oldest/youngest disambiguating-question analysis.
//! - [`sieve`] — necessary-condition filters (never a high prime power,
//!   always a product of at least four primes) with soundness checks.
//! - [`family`] — the infinite family N = p²(2p−1)² for p and 2p−1 both
//!   prime, plus the inequality suite behind its sum ordering.

pub mod classify;
pub mod family;
pub mod numbertheory;
pub mod sieve;
pub mod triples;

pub use classify::{
    classify, disambiguators, scan_range, scan_range_with_workers, Classification,
    Disambiguation, NotCtnReason, Verdict,
};
pub use family::{
    check_lemmas, family_candidates, family_rows, inequality_checks, verify_family,
    FamilyMember, FamilyReport, FamilyRow, FamilyViolation, InequalityCheck, LemmaReport,
};
pub use numbertheory::{factorize, is_prime, FactoredInteger};
pub use sieve::{
    sieve, sieve_survivors, sieved_scan_range, sieved_scan_range_with_workers,
    verify_sieve_soundness, Elimination, SieveVerdict, SoundnessReport, Strike,
};
pub use triples::{enumerate_triples, SumClass, Triple, TripleTable};

/// Errors for operations on the positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("n must be a positive integer")]
    NonPositive,
    #[error("invalid range: {lo} > {hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("{0} is not a census-taker number")]
    NotCensusTaker(u64),
    #[error("{p} is not admissible: p and 2p-1 must both be prime")]
    NotFamilyPrime { p: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Validate a scan interval: `lo` must be positive and at most `hi`.
pub fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo == 0 {
        return Err(Error::NonPositive);
    }
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    Ok(())
}
