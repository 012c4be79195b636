//! Exhaustive enumeration of the unordered triples of positive integers
//! with a given product, grouped by sum.

use std::collections::BTreeMap;
use std::fmt;

use crate::numbertheory::factorize;
use crate::Result;

/// An unordered triple of positive integers, stored in descending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([u64; 3]);

impl Triple {
    /// Canonicalizes the three entries into descending order.
    ///
    /// Panics if any entry is zero.
    pub fn new(x: u64, y: u64, z: u64) -> Self {
        assert!(x >= 1 && y >= 1 && z >= 1, "triple entries must be positive");
        let mut entries = [x, y, z];
        entries.sort_unstable_by(|l, r| r.cmp(l));
        Triple(entries)
    }

    pub fn a(&self) -> u64 {
        self.0[0]
    }

    pub fn b(&self) -> u64 {
        self.0[1]
    }

    pub fn c(&self) -> u64 {
        self.0[2]
    }

    /// The entries in descending order.
    pub fn entries(&self) -> [u64; 3] {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    /// True if the two triples share no entry at all.
    pub fn is_disjoint(&self, other: &Triple) -> bool {
        self.0.iter().all(|x| !other.0.contains(x))
    }

    /// The largest entry occurs exactly once ("there is an oldest").
    pub fn has_strict_max(&self) -> bool {
        self.0[0] > self.0[1]
    }

    /// The smallest entry occurs exactly once ("there is a youngest").
    pub fn has_strict_min(&self) -> bool {
        self.0[2] < self.0[1]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A sum attained by two or more triples of the same product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumClass {
    pub sum: u64,
    /// The colliding triples, in table order.
    pub triples: Vec<Triple>,
}

/// All distinct unordered triples with product `n`, listed in display order
/// (descending by largest entry, then by the middle entry) and indexed by
/// their sums.
#[derive(Debug, Clone)]
pub struct TripleTable {
    n: u64,
    triples: Vec<Triple>,
    by_sum: BTreeMap<u64, Vec<Triple>>,
}

impl TripleTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples keyed by sum, ascending.
    pub fn by_sum(&self) -> &BTreeMap<u64, Vec<Triple>> {
        &self.by_sum
    }

    /// Every sum attained by two or more triples, ascending by sum, each
    /// with its full collision class (classes of size three and more are
    /// kept whole).
    pub fn equal_sum_classes(&self) -> Vec<SumClass> {
        self.by_sum
            .iter()
            .filter(|(_, triples)| triples.len() >= 2)
            .map(|(&sum, triples)| SumClass { sum, triples: triples.clone() })
            .collect()
    }
}

/// Enumerate every unordered factorization of `n` into three positive parts.
///
/// Walks c over divisors with c³ ≤ n and b over divisors of n/c with
/// c ≤ b and b² ≤ n/c, so each triple a ≥ b ≥ c appears exactly once.
pub fn enumerate_triples(n: u64) -> Result<TripleTable> {
    let divisors = factorize(n)?.divisors();
    let wide = u128::from;

    let mut triples = Vec::new();
    for &c in &divisors {
        if wide(c) * wide(c) * wide(c) > wide(n) {
            break;
        }
        let m = n / c;
        for &b in &divisors {
            if b < c {
                continue;
            }
            if wide(b) * wide(b) > wide(m) {
                break;
            }
            if m % b == 0 {
                triples.push(Triple([m / b, b, c]));
            }
        }
    }

    triples.sort_unstable_by(|l, r| (r.a(), r.b()).cmp(&(l.a(), l.b())));
    let mut by_sum: BTreeMap<u64, Vec<Triple>> = BTreeMap::new();
    for &t in &triples {
        by_sum.entry(t.sum()).or_default().push(t);
    }
    Ok(TripleTable { n, triples, by_sum })
}
