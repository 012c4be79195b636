//! Acceptance suite: the published facts this project must reproduce,
//! one test per criterion, each printing a pass line. Everything is exact;
//! the only tolerances are the two wall-clock budgets, asserted as stated.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use ctn_core::{
    check_lemmas, classify, enumerate_triples, factorize, inequality_checks, scan_range,
    verify_family, Triple,
};

fn ctn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctn"))
        .args(args)
        .output()
        .expect("failed to run ctn binary")
}

fn stdout_of(output: &Output) -> String {
    assert!(output.status.success(), "ctn exited with {:?}", output.status);
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|line| serde_json::from_str(line).expect("json line"))
        .collect()
}

fn t(a: u64, b: u64, c: u64) -> Triple {
    Triple::new(a, b, c)
}

#[test]
fn a01_the_eight_triples_of_36() {
    let table = enumerate_triples(36).unwrap();
    assert_eq!(table.len(), 8);
    let sums: Vec<u64> = table.triples().iter().map(Triple::sum).collect();
    assert_eq!(sums, vec![38, 21, 16, 14, 13, 13, 11, 10]);

    let mut best = Duration::MAX;
    for _ in 0..10 {
        let started = Instant::now();
        let rebuilt = enumerate_triples(36).unwrap();
        best = best.min(started.elapsed());
        assert_eq!(rebuilt.len(), 8);
    }
    assert!(best < Duration::from_millis(1), "enumeration took {best:?}");

    let text = stdout_of(&ctn(&["triples", "36"]));
    for row in ["{36,1,1}  38", "{9,2,2}", "{6,6,1}", "{4,3,3}"] {
        assert!(text.contains(row), "missing {row:?} in:\n{text}");
    }
    println!("[PASS] criterion 1: the eight triples of 36 and their sums, under 1 ms");
}

#[test]
fn a02_all_two_digit_ctns() {
    let records = json_lines(&stdout_of(&ctn(&["scan", "10", "99", "--format", "json"])));
    let expected = [
        (36, 13, [[9, 2, 2], [6, 6, 1]]),
        (40, 14, [[10, 2, 2], [8, 5, 1]]),
        (72, 14, [[8, 3, 3], [6, 6, 2]]),
        (96, 21, [[16, 3, 2], [12, 8, 1]]),
    ];
    assert_eq!(records.len(), expected.len());
    for (record, (n, magic, pair)) in records.iter().zip(expected) {
        assert_eq!(record["n"], n);
        assert_eq!(record["ctn"], true);
        assert_eq!(record["magic_sum"], magic);
        assert_eq!(record["pair"], serde_json::json!(pair));
    }
    println!("[PASS] criterion 2: the two-digit CTNs are 36, 40, 72, 96 with their pairs");
}

#[test]
fn a03_144_is_rejected_with_two_collision_classes() {
    let c = classify(144).unwrap();
    assert!(!c.is_ctn());
    assert_eq!(c.reason().unwrap().tag(), "MULTIPLE_EQUAL_SUM_CLASSES");
    assert_eq!(c.collisions.len(), 2);
    assert_eq!(c.collisions[0].sum, 17);
    assert_eq!(c.collisions[0].triples, vec![t(9, 4, 4), t(8, 6, 3)]);
    assert_eq!(c.collisions[1].sum, 19);
    assert_eq!(c.collisions[1].triples, vec![t(12, 4, 3), t(9, 8, 2)]);

    let records = json_lines(&stdout_of(&ctn(&["classify", "144", "--format", "json"])));
    assert_eq!(records[0]["ctn"], false);
    assert_eq!(records[0]["reason"], "MULTIPLE_EQUAL_SUM_CLASSES");
    println!("[PASS] criterion 3: 144 fails with equal-sum classes at 17 and 19");
}

#[test]
fn a04_tables_for_56_and_96() {
    let t56 = enumerate_triples(56).unwrap();
    assert_eq!(t56.len(), 6);
    assert!(t56.equal_sum_classes().is_empty());

    let t96 = enumerate_triples(96).unwrap();
    assert_eq!(t96.len(), 12);
    let classes = t96.equal_sum_classes();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].sum, 21);
    assert_eq!(classes[0].triples, vec![t(16, 3, 2), t(12, 8, 1)]);
    println!("[PASS] criterion 4: 56 has six collision-free triples; 96 collides only at 21");
}

#[test]
fn a05_elimination_grid_to_100() {
    // The full 1..100 grid, frozen: single strike for 1 and products of at
    // most two primes, double strike for higher prime powers, dash for
    // products of exactly three primes, survivors unmarked.
    let slash = [
        1u64, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 25, 26, 29, 31,
        33, 34, 35, 37, 38, 39, 41, 43, 46, 47, 49, 51, 53, 55, 57, 58, 59, 61, 62, 65, 67,
        69, 71, 73, 74, 77, 79, 82, 83, 85, 86, 87, 89, 91, 93, 94, 95, 97,
    ];
    let double_slash = [8u64, 16, 27, 32, 64, 81];
    let dash = [
        12u64, 18, 20, 28, 30, 42, 44, 45, 50, 52, 63, 66, 68, 70, 75, 76, 78, 92, 98, 99,
    ];
    let survivors = [24u64, 36, 40, 48, 54, 56, 60, 72, 80, 84, 88, 90, 96, 100];
    assert_eq!(slash.len() + double_slash.len() + dash.len() + survivors.len(), 100);

    let records = json_lines(&stdout_of(&ctn(&["sieve", "1", "100", "--format", "json"])));
    assert_eq!(records.len(), 100);
    for record in &records {
        let n = record["n"].as_u64().unwrap();
        let expected_strike = if slash.contains(&n) {
            Some("/")
        } else if double_slash.contains(&n) {
            Some("//")
        } else if dash.contains(&n) {
            Some("—")
        } else {
            None
        };
        let got = record["strike"].as_str();
        assert_eq!(got, expected_strike, "wrong strike for {n}");
        assert_eq!(record["survives"], expected_strike.is_none(), "wrong verdict for {n}");
    }
    let surviving: Vec<u64> = records
        .iter()
        .filter(|r| r["survives"] == true)
        .map(|r| r["n"].as_u64().unwrap())
        .collect();
    assert_eq!(surviving, survivors);
    println!("[PASS] criterion 5: grid marks and the 14 survivors match for 1..100");
}

#[test]
fn a06_counts_by_digit_length() {
    let started = Instant::now();
    let found = scan_range(1, 9999).unwrap();
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "full scan took {elapsed:?}");

    let count_in = |lo: u64, hi: u64| found.iter().filter(|c| (lo..=hi).contains(&c.n)).count();
    assert_eq!(count_in(1, 9), 0);
    assert_eq!(count_in(10, 99), 4);
    assert_eq!(count_in(100, 999), 29);
    assert_eq!(count_in(1000, 9999), 277);
    assert_eq!(found.len(), 310);
    let largest = found.iter().map(|c| c.n).max().unwrap();
    assert_eq!(largest, 9996);

    let records = json_lines(&stdout_of(&ctn(&["count", "--digits", "4", "--format", "json"])));
    assert_eq!(records[0]["count"], 277);
    assert_eq!(records[0]["largest"], 9996);
    println!(
        "[PASS] criterion 6: digit counts 0/4/29/277 with 9996 the largest (scan in {elapsed:?})",
    );
}

#[test]
fn a07_every_ctn_satisfies_the_three_eliminations() {
    let found = scan_range(1, 10_000).unwrap();
    assert_eq!(found.len(), 310);
    for c in &found {
        let [x, y] = c.pair().unwrap();
        assert!(x.is_disjoint(&y), "{}: pair {x} / {y} shares an entry", c.n);
        let f = factorize(c.n).unwrap();
        assert!(!f.is_prime_power(), "{} is a prime power", c.n);
        assert!(f.omega() >= 4, "{} has omega {}", c.n, f.omega());
    }
    println!("[PASS] criterion 7: all 310 CTNs have disjoint pairs, no prime powers, omega >= 4");
}

#[test]
fn a08_family_members_up_to_p_100() {
    let started = Instant::now();
    let report = verify_family(100);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "family verification took {elapsed:?}");

    assert!(report.ok(), "violations: {:?}", report.violations);
    let ps: Vec<u64> = report.members.iter().map(|m| m.p).collect();
    assert_eq!(ps, vec![2, 3, 7, 19, 31, 37, 79, 97]);

    for m in &report.members {
        let c = classify(m.n).unwrap();
        assert_eq!(c.magic_sum(), Some(4 * m.p * m.p - 2 * m.p + 1));
        let q = m.q;
        let predicted = [t(q * q, m.p, m.p), t(m.p * q, m.p * q, 1)];
        assert_eq!(c.pair(), Some(predicted));
        let rows: Vec<Triple> = m.rows.iter().map(|r| r.triple).collect();
        assert_eq!(rows, enumerate_triples(m.n).unwrap().triples().to_vec());
        let sums: Vec<u64> = m.rows.iter().map(|r| r.sum).collect();
        for w in [&sums[..5], &sums[5..]] {
            assert!(w.windows(2).all(|p| p[0] > p[1]), "chain break in {sums:?}");
        }
        assert_eq!(sums[4], sums[5]);
    }

    let records = json_lines(&stdout_of(&ctn(&["family", "--max-p", "100", "--format", "json"])));
    assert_eq!(records.len(), 8);
    assert!(records.iter().all(|r| r["verified"] == true));
    println!("[PASS] criterion 8: all 8 family members with p <= 100 verify (in {elapsed:?})");
}

#[test]
fn a09_inequalities_and_witness_identities() {
    let report = check_lemmas(-1000, 1000);
    assert!(report.ok(), "violations: {:?}", report.violations);
    assert!(report.points_checked >= 6 * 1000);

    // The four published completing-square identities, sampled well past
    // the ten points needed to pin a degree-four polynomial.
    let witnessed: Vec<_> = inequality_checks()
        .iter()
        .filter(|c| c.witness.is_some())
        .collect();
    assert_eq!(witnessed.len(), 4);
    for check in witnessed {
        let points: Vec<i64> = (-8..=8).filter(|&x| check.admits(x)).collect();
        assert!(points.len() >= 10);
        for x in points {
            assert!(check.witness_holds(x), "{} witness fails at {x}", check.label);
            assert!(check.holds(x), "{} fails at {x}", check.label);
        }
    }
    println!("[PASS] criterion 9: all six inequalities and four witness identities hold");
}

#[test]
fn a10_enumeration_matches_the_brute_force_oracle() {
    // Independent oracle: walk the (c, b) grid with a bare divisibility
    // test, no divisor lists.
    let brute_force = |n: u64| {
        let mut out = Vec::new();
        let mut c = 1;
        while c * c * c <= n {
            let mut b = c;
            while c * b * b <= n {
                if n % (c * b) == 0 {
                    out.push(t(n / (c * b), b, c));
                }
                b += 1;
            }
            c += 1;
        }
        out.sort_unstable();
        out
    };
    for n in 1..=2000 {
        let mut got = enumerate_triples(n).unwrap().triples().to_vec();
        got.sort_unstable();
        assert_eq!(got, brute_force(n), "mismatch at n = {n}");
    }
    println!("[PASS] criterion 10: divisor-based enumeration equals the oracle for n <= 2000");
}

#[test]
fn a11_scan_output_is_identical_across_worker_counts() {
    let single = ctn(&["scan", "1", "9999", "--workers", "1"]);
    let eight = ctn(&["scan", "1", "9999", "--workers", "8"]);
    assert!(single.status.success() && eight.status.success());
    assert_eq!(single.stdout, eight.stdout, "table output differs across worker counts");

    let single_json = ctn(&["scan", "1", "2000", "--workers", "1", "--format", "json"]);
    let eight_json = ctn(&["scan", "1", "2000", "--workers", "8", "--format", "json"]);
    assert_eq!(single_json.stdout, eight_json.stdout, "json output differs across worker counts");
    println!("[PASS] criterion 11: scan output is byte-identical for 1 and 8 workers");
}
