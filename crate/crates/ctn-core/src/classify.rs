//! The census-taker decision.
//!
//! `n` is a census-taker number exactly when one sum value is attained by
//! two or more of its triples, and that collision class holds exactly two
//! triples. Everything else is rejected with a structured reason:
//! no collision at all, several distinct colliding sums, or a single sum
//! hit by three or more triples (which would give more than one pair).

use rayon::prelude::*;

use crate::triples::{enumerate_triples, SumClass, Triple};
use crate::{check_range, Error, Result};

/// Why an integer fails to be a census-taker number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotCtnReason {
    /// No two triples share a sum.
    NoEqualSumPair,
    /// Two or more different sums are each attained more than once.
    MultipleEqualSumClasses,
    /// A single sum is attained by three or more triples.
    CollisionClassTooLarge,
}

impl NotCtnReason {
    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            NotCtnReason::NoEqualSumPair => "NO_EQUAL_SUM_PAIR",
            NotCtnReason::MultipleEqualSumClasses => "MULTIPLE_EQUAL_SUM_CLASSES",
            NotCtnReason::CollisionClassTooLarge => "COLLISION_CLASS_TOO_LARGE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The mysterious triples, ordered by largest entry descending.
    Ctn { magic_sum: u64, pair: [Triple; 2] },
    NotCtn { reason: NotCtnReason },
}

/// A census-taker decision for `n`, with the collision evidence it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub n: u64,
    pub verdict: Verdict,
    /// Every sum attained by two or more triples, ascending by sum.
    pub collisions: Vec<SumClass>,
    /// How many distinct triples have product `n`.
    pub triple_count: usize,
}

impl Classification {
    pub fn is_ctn(&self) -> bool {
        matches!(self.verdict, Verdict::Ctn { .. })
    }

    pub fn magic_sum(&self) -> Option<u64> {
        match self.verdict {
            Verdict::Ctn { magic_sum, .. } => Some(magic_sum),
            Verdict::NotCtn { .. } => None,
        }
    }

    pub fn pair(&self) -> Option<[Triple; 2]> {
        match self.verdict {
            Verdict::Ctn { pair, .. } => Some(pair),
            Verdict::NotCtn { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<NotCtnReason> {
        match self.verdict {
            Verdict::Ctn { .. } => None,
            Verdict::NotCtn { reason } => Some(reason),
        }
    }
}

/// Decide whether `n` is a census-taker number.
///
/// Runs the general algorithm for every input (1 and primes included);
/// shortcuts live in the sieve, not here.
pub fn classify(n: u64) -> Result<Classification> {
    let table = enumerate_triples(n)?;
    let collisions = table.equal_sum_classes();
    let verdict = match collisions.as_slice() {
        [] => Verdict::NotCtn { reason: NotCtnReason::NoEqualSumPair },
        [class] if class.triples.len() == 2 => {
            let pair = [class.triples[0], class.triples[1]];
            // The mysterious triples can never share an entry; a violation
            // here means the enumeration itself is broken.
            assert!(
                pair[0].is_disjoint(&pair[1]),
                "equal-sum pair of {n} shares an entry: {} / {}",
                pair[0],
                pair[1],
            );
            Verdict::Ctn { magic_sum: class.sum, pair }
        }
        [_] => Verdict::NotCtn { reason: NotCtnReason::CollisionClassTooLarge },
        _ => Verdict::NotCtn { reason: NotCtnReason::MultipleEqualSumClasses },
    };
    Ok(Classification { n, verdict, collisions, triple_count: table.len() })
}

/// Whether the oldest/youngest questions can settle a CTN's triple pair,
/// and which triple an affirmative answer selects.
///
/// A question works when exactly one of the two triples has the matching
/// strict extremum: "is there an oldest?" separates {9,2,2} from {6,6,1},
/// because only the former has a unique largest entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Disambiguation {
    pub n: u64,
    pub oldest_works: bool,
    pub youngest_works: bool,
    pub oldest_selects: Option<Triple>,
    pub youngest_selects: Option<Triple>,
}

/// Analyze the disambiguating questions for a census-taker number.
///
/// Errors with [`Error::NotCensusTaker`] when `n` has no unique pair.
pub fn disambiguators(n: u64) -> Result<Disambiguation> {
    let classification = classify(n)?;
    let Verdict::Ctn { pair, .. } = classification.verdict else {
        return Err(Error::NotCensusTaker(n));
    };
    let [first, second] = pair;

    let select = |first_has: bool, second_has: bool| match (first_has, second_has) {
        (true, false) => (true, Some(first)),
        (false, true) => (true, Some(second)),
        _ => (false, None),
    };
    let (oldest_works, oldest_selects) =
        select(first.has_strict_max(), second.has_strict_max());
    let (youngest_works, youngest_selects) =
        select(first.has_strict_min(), second.has_strict_min());

    Ok(Disambiguation { n, oldest_works, youngest_works, oldest_selects, youngest_selects })
}

/// All census-taker numbers in `[lo, hi]`, ascending.
pub fn scan_range(lo: u64, hi: u64) -> Result<Vec<Classification>> {
    check_range(lo, hi)?;
    Ok((lo..=hi)
        .map(|n| classify(n).expect("n >= 1"))
        .filter(Classification::is_ctn)
        .collect())
}

/// Same output as [`scan_range`], computed on a pool of `workers` threads.
///
/// The range is mapped in index order and merged sequentially, so the
/// result is identical to a sequential scan regardless of thread count.
pub fn scan_range_with_workers(lo: u64, hi: u64, workers: usize) -> Result<Vec<Classification>> {
    check_range(lo, hi)?;
    if workers <= 1 {
        return scan_range(lo, hi);
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
                let c = classify(n).expect("n >= 1");
                c.is_ctn().then_some(c)
            })
            .collect()
    });
    Ok(per_n.into_iter().flatten().collect())
}
