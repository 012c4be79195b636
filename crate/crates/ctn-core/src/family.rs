//! The infinite census-taker family N = p²(2p−1)².
//!
//! When p and q = 2p−1 are both prime, N = p²q² has exactly eight triples
//! and exactly one sum collision: {q²,p,p} and {pq,pq,1} both sum to
//! 4p²−2p+1, and the remaining six sums form a strictly decreasing chain.
//! The chain rests on six polynomial inequalities, four of which carry a
//! completing-square witness identity; those are checked here in exact
//! arithmetic alongside the members themselves.

use crate::classify::{classify, Verdict};
use crate::numbertheory::is_prime;
use crate::triples::{enumerate_triples, Triple};
use crate::{Error, Result};

/// One row of a family member's eight-triple layout: the instantiated
/// triple and sum, plus the symbolic forms they were derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyRow {
    pub triple: Triple,
    pub sum: u64,
    pub triple_form: &'static str,
    pub sum_form: &'static str,
}

/// A prime p with 2p−1 prime, and the census-taker number it generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub p: u64,
    /// 2p−1.
    pub q: u64,
    /// p²·q².
    pub n: u64,
    /// The eight rows in display order.
    pub rows: Vec<FamilyRow>,
    /// 4p²−2p+1, the sum shared by {q²,p,p} and {pq,pq,1}.
    pub magic_sum: u64,
}

fn to_u64(v: u128) -> u64 {
    u64::try_from(v).expect("family value exceeds u64")
}

/// The eight (triple, sum) rows for N = p²(2p−1)², in display order.
///
/// Every sum is evaluated twice — once as a+b+c and once from its sum
/// polynomial — and the two are asserted equal. Errors when p or 2p−1
/// is not prime.
pub fn family_rows(p: u64) -> Result<Vec<FamilyRow>> {
    if !is_prime(p) || !is_prime(2 * p - 1) {
        return Err(Error::NotFamilyPrime { p });
    }
    let pw = u128::from(p);
    let q = 2 * pw - 1;

    let rows: [([u128; 3], u128, &'static str, &'static str); 8] = [
        (
            [pw * pw * q * q, 1, 1],
            4 * pw.pow(4) - 4 * pw.pow(3) + pw * pw + 2,
            "{p^2(2p-1)^2, 1, 1}",
            "4p^4-4p^3+p^2+2",
        ),
        (
            [pw * q * q, pw, 1],
            4 * pw.pow(3) - 4 * pw * pw + 2 * pw + 1,
            "{p(2p-1)^2, p, 1}",
            "4p^3-4p^2+2p+1",
        ),
        (
            [pw * pw * q, q, 1],
            2 * pw.pow(3) - pw * pw + 2 * pw,
            "{p^2(2p-1), 2p-1, 1}",
            "2p^3-p^2+2p",
        ),
        (
            [q * q, pw * pw, 1],
            5 * pw * pw - 4 * pw + 2,
            "{(2p-1)^2, p^2, 1}",
            "5p^2-4p+2",
        ),
        (
            [q * q, pw, pw],
            4 * pw * pw - 2 * pw + 1,
            "{(2p-1)^2, p, p}",
            "4p^2-2p+1",
        ),
        (
            [pw * q, pw * q, 1],
            4 * pw * pw - 2 * pw + 1,
            "{p(2p-1), p(2p-1), 1}",
            "4p^2-2p+1",
        ),
        (
            [pw * q, q, pw],
            2 * pw * pw + 2 * pw - 1,
            "{p(2p-1), 2p-1, p}",
            "2p^2+2p-1",
        ),
        (
            [pw * pw, q, q],
            pw * pw + 4 * pw - 2,
            "{p^2, 2p-1, 2p-1}",
            "p^2+4p-2",
        ),
    ];

    Ok(rows
        .into_iter()
        .map(|(entries, sum, triple_form, sum_form)| {
            let triple =
                Triple::new(to_u64(entries[0]), to_u64(entries[1]), to_u64(entries[2]));
            let sum = to_u64(sum);
            assert_eq!(triple.sum(), sum, "sum polynomial disagrees with {triple}");
            FamilyRow { triple, sum, triple_form, sum_form }
        })
        .collect())
}

fn member(p: u64) -> Result<FamilyMember> {
    let rows = family_rows(p)?;
    let q = 2 * p - 1;
    let n = to_u64(u128::from(p) * u128::from(p) * u128::from(q) * u128::from(q));
    let magic_sum = 4 * p * p - 2 * p + 1;
    Ok(FamilyMember { p, q, n, rows, magic_sum })
}

/// One member for every prime p ≤ max_p with 2p−1 prime, ascending by p.
pub fn family_candidates(max_p: u64) -> Vec<FamilyMember> {
    (2..=max_p)
        .filter(|&p| is_prime(p) && is_prime(2 * p - 1))
        .map(|p| member(p).expect("candidate passed the primality filter"))
        .collect()
}

/// A failed family check, tagged with the member's p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyViolation {
    pub p: u64,
    pub detail: String,
}

/// Every family member up to max_p with the verification outcome.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub members: Vec<FamilyMember>,
    pub violations: Vec<FamilyViolation>,
}

impl FamilyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify every family member with p ≤ max_p against full classification:
/// the classifier must see a CTN with the predicted magic sum and pair,
/// the eight rows must equal the exhaustive triple table, and the six
/// distinct sums must decrease strictly in display order.
pub fn verify_family(max_p: u64) -> FamilyReport {
    let members = family_candidates(max_p);
    let mut violations = Vec::new();

    for m in &members {
        let mut fail = |detail: String| violations.push(FamilyViolation { p: m.p, detail });

        match classify(m.n).expect("n >= 1").verdict {
            Verdict::Ctn { magic_sum, pair } => {
                if magic_sum != m.magic_sum {
                    fail(format!("magic sum {magic_sum} != predicted {}", m.magic_sum));
                }
                let predicted = [m.rows[4].triple, m.rows[5].triple];
                if pair != predicted {
                    fail(format!(
                        "pair {} / {} != predicted {} / {}",
                        pair[0], pair[1], predicted[0], predicted[1],
                    ));
                }
            }
            Verdict::NotCtn { reason } => {
                fail(format!("{} is not classified as a CTN ({})", m.n, reason.tag()));
            }
        }

        let table = enumerate_triples(m.n).expect("n >= 1");
        let row_triples: Vec<Triple> = m.rows.iter().map(|r| r.triple).collect();
        if table.triples() != row_triples.as_slice() {
            fail("rows differ from the exhaustive triple table".into());
        }

        // Strict chain over the six distinct sums; rows 4 and 5 share the
        // magic sum.
        let s: Vec<u64> = m.rows.iter().map(|r| r.sum).collect();
        let chain_ok = s[0] > s[1]
            && s[1] > s[2]
            && s[2] > s[3]
            && s[3] > s[4]
            && s[4] == s[5]
            && s[5] > s[6]
            && s[6] > s[7];
        if !chain_ok {
            fail(format!("sum chain is not strictly ordered: {s:?}"));
        }
        if s[4] != m.magic_sum {
            fail(format!("shared sum {} != magic sum {}", s[4], m.magic_sum));
        }
    }

    FamilyReport { members, violations }
}

/// One inequality from the family's sum-ordering argument: its admissible
/// integer domain and, when published, the completing-square witness that
/// proves it.
pub struct InequalityCheck {
    /// The inequality itself, e.g. `"5x^2-4x+2 > 4x^2-2x+1"`.
    pub label: &'static str,
    pub domain: &'static str,
    /// Witness term w(x) with lhs = rhs + w(x); `None` where only the bare
    /// inequality is published.
    pub witness: Option<&'static str>,
    admits: fn(i64) -> bool,
    lhs: fn(i128) -> i128,
    rhs: fn(i128) -> i128,
    witness_term: Option<fn(i128) -> i128>,
}

impl InequalityCheck {
    pub fn admits(&self, x: i64) -> bool {
        (self.admits)(x)
    }

    /// lhs(x) > rhs(x), evaluated exactly.
    pub fn holds(&self, x: i64) -> bool {
        (self.lhs)(x.into()) > (self.rhs)(x.into())
    }

    /// lhs(x) = rhs(x) + w(x) for the published witness; vacuously true
    /// when there is none.
    pub fn witness_holds(&self, x: i64) -> bool {
        match self.witness_term {
            Some(w) => (self.lhs)(x.into()) == (self.rhs)(x.into()) + w(x.into()),
            None => true,
        }
    }
}

/// The six inequalities, ordered along the descending sum chain.
pub fn inequality_checks() -> &'static [InequalityCheck] {
    static CHECKS: [InequalityCheck; 6] = [
        InequalityCheck {
            label: "4x^4-4x^3+x^2+2 > 4x^3-4x^2+2x+1",
            domain: "x != 1",
            witness: Some("(4x^2+1)(x-1)^2"),
            admits: |x| x != 1,
            lhs: |x| 4 * x.pow(4) - 4 * x.pow(3) + x * x + 2,
            rhs: |x| 4 * x.pow(3) - 4 * x * x + 2 * x + 1,
            witness_term: Some(|x| (4 * x * x + 1) * (x - 1) * (x - 1)),
        },
        InequalityCheck {
            label: "4x^3-4x^2+2x+1 > 2x^3-x^2+2x",
            domain: "x > -1/2 and x != 1",
            witness: None,
            admits: |x| x >= 0 && x != 1,
            lhs: |x| 4 * x.pow(3) - 4 * x * x + 2 * x + 1,
            rhs: |x| 2 * x.pow(3) - x * x + 2 * x,
            witness_term: None,
        },
        InequalityCheck {
            label: "2x^3-x^2+2x > 5x^2-4x+2",
            domain: "x > 1",
            witness: None,
            admits: |x| x > 1,
            lhs: |x| 2 * x.pow(3) - x * x + 2 * x,
            rhs: |x| 5 * x * x - 4 * x + 2,
            witness_term: None,
        },
        InequalityCheck {
            label: "5x^2-4x+2 > 4x^2-2x+1",
            domain: "x != 1",
            witness: Some("(x-1)^2"),
            admits: |x| x != 1,
            lhs: |x| 5 * x * x - 4 * x + 2,
            rhs: |x| 4 * x * x - 2 * x + 1,
            witness_term: Some(|x| (x - 1) * (x - 1)),
        },
        InequalityCheck {
            label: "4x^2-2x+1 > 2x^2+2x-1",
            domain: "x != 1",
            witness: Some("2(x-1)^2"),
            admits: |x| x != 1,
            lhs: |x| 4 * x * x - 2 * x + 1,
            rhs: |x| 2 * x * x + 2 * x - 1,
            witness_term: Some(|x| 2 * (x - 1) * (x - 1)),
        },
        InequalityCheck {
            label: "2x^2+2x-1 > x^2+4x-2",
            domain: "x != 1",
            witness: Some("(x-1)^2"),
            admits: |x| x != 1,
            lhs: |x| 2 * x * x + 2 * x - 1,
            rhs: |x| x * x + 4 * x - 2,
            witness_term: Some(|x| (x - 1) * (x - 1)),
        },
    ];
    &CHECKS
}

/// A failed inequality or witness identity at a specific x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub label: &'static str,
    pub x: i64,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub x_lo: i64,
    pub x_hi: i64,
    /// Total (inequality, x) pairs examined.
    pub points_checked: u64,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluate all six inequalities, and the published witness identities,
/// at every admissible integer x in `[x_lo, x_hi]`. An empty range yields
/// a vacuous report.
///
/// Panics when |x| exceeds 10⁹, where quartic terms would no longer fit
/// the exact i128 evaluation.
pub fn check_lemmas(x_lo: i64, x_hi: i64) -> LemmaReport {
    const LIMIT: i64 = 1_000_000_000;
    assert!(
        x_lo.abs() <= LIMIT && x_hi.abs() <= LIMIT,
        "lemma range must stay within [-10^9, 10^9]",
    );
    let mut points_checked = 0;
    let mut violations = Vec::new();
    for check in inequality_checks() {
        for x in x_lo..=x_hi {
            if !check.admits(x) {
                continue;
            }
            points_checked += 1;
            if !check.holds(x) {
                violations.push(LemmaViolation {
                    label: check.label,
                    x,
                    detail: "inequality fails".into(),
                });
            }
            if !check.witness_holds(x) {
                violations.push(LemmaViolation {
                    label: check.label,
                    x,
                    detail: "witness identity fails".into(),
                });
            }
        }
    }
    LemmaReport { x_lo, x_hi, points_checked, violations }
}
