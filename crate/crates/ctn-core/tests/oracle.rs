//! Cross-validation against independent brute-force oracles. The oracles
//! never touch the divisor-based paths they check.

use ctn_core::{enumerate_triples, factorize, is_prime, Triple};

/// Every (a, b, c) with a >= b >= c >= 1 and a*b*c == n, found by walking
/// the (c, b) grid directly with a divisibility test. No divisor lists.
fn brute_force_triples(n: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    let mut c = 1;
    while c * c * c <= n {
        let mut b = c;
        while c * b * b <= n {
            if n % (c * b) == 0 {
                out.push(Triple::new(n / (c * b), b, c));
            }
            b += 1;
        }
        c += 1;
    }
    out
}

/// Divisors by testing every candidate up to n.
fn brute_force_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[test]
fn enumeration_matches_brute_force_up_to_2000() {
    for n in 1..=2000 {
        let mut expected = brute_force_triples(n);
        expected.sort_unstable();
        let mut got: Vec<Triple> = enumerate_triples(n).unwrap().triples().to_vec();
        got.sort_unstable();
        assert_eq!(got, expected, "triple mismatch at n = {n}");
    }
}

#[test]
fn divisor_list_matches_trial_division_up_to_10000() {
    for n in 1..=10_000 {
        assert_eq!(
            factorize(n).unwrap().divisors(),
            brute_force_divisors(n),
            "divisor mismatch at n = {n}",
        );
    }
}

#[test]
fn primality_matches_divisor_counting_up_to_5000() {
    for n in 1..=5000 {
        let by_divisors = brute_force_divisors(n).len() == 2;
        assert_eq!(is_prime(n), by_divisors, "primality mismatch at n = {n}");
    }
}

#[test]
fn frozen_divisor_examples() {
    assert_eq!(brute_force_divisors(96), vec![1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 96]);
    assert_eq!(factorize(96).unwrap().divisors(), brute_force_divisors(96));
}
