#!/usr/bin/env python3
"""Smoke test for the ctn_py extension module.

Builds nothing itself: run `cargo build -p ctn-py` (or --release) first.
The script locates the compiled cdylib under target/, loads it, and checks
the main operations end to end.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libctn_py.so", "ctn_py.so", "libctn_py.dylib", "ctn_py.pyd")
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit("ctn_py cdylib not found; run `cargo build -p ctn-py` first")
    stage = Path(tempfile.mkdtemp(prefix="ctn_py_"))
    shutil.copy2(lib, stage / "ctn_py.so")
    sys.path.insert(0, str(stage))
    import ctn_py

    print(f"loaded {lib}")
    return ctn_py


def check(name, condition):
    status = "ok" if condition else "FAIL"
    print(f"  {name:<46} {status}")
    return condition


def main():
    ctn = load_module()
    results = []

    f = ctn.factorize(9996)
    results.append(check("factorize(9996)", f.factors == [(2, 2), (3, 1), (7, 2), (17, 1)] and f.omega == 6))
    results.append(check("divisors(36)", ctn.divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]))
    results.append(check("is_prime", ctn.is_prime(13) and not ctn.is_prime(1)))
    results.append(check("is_prime_power(81)", ctn.is_prime_power(81) and not ctn.is_prime_power(36)))

    table = ctn.enumerate_triples(96)
    results.append(check("enumerate_triples(96) has 12 rows", len(table) == 12))
    results.append(check("96 collides only at 21", table.equal_sum_classes() == [(21, [(16, 3, 2), (12, 8, 1)])]))

    c = ctn.classify(36)
    results.append(check("classify(36) is a CTN", c.is_ctn and c.magic_sum == 13))
    results.append(check("classify(36) pair", c.pair == ((9, 2, 2), (6, 6, 1))))
    c144 = ctn.classify(144)
    results.append(check("classify(144) rejected", not c144.is_ctn and c144.reason == "MULTIPLE_EQUAL_SUM_CLASSES"))

    d = ctn.disambiguators(36)
    results.append(check("disambiguators(36)", d.oldest_selects == (9, 2, 2) and d.youngest_selects == (6, 6, 1)))
    try:
        ctn.disambiguators(56)
        results.append(check("disambiguators(56) raises", False))
    except ValueError:
        results.append(check("disambiguators(56) raises", True))

    found = [c.n for c in ctn.scan_range(1, 99)]
    results.append(check("scan_range(1, 99)", found == [36, 40, 72, 96]))
    par = [c.n for c in ctn.scan_range(1, 999, workers=4)]
    seq = [c.n for c in ctn.scan_range(1, 999)]
    results.append(check("worker scan matches sequential", par == seq and len(seq) == 33))

    results.append(check(
        "sieve_survivors(1, 100)",
        ctn.sieve_survivors(1, 100) == [24, 36, 40, 48, 54, 56, 60, 72, 80, 84, 88, 90, 96, 100],
    ))
    v = ctn.sieve(16)
    results.append(check("sieve(16)", v.eliminated_by == "PRIME_POWER" and v.strike == "//"))
    soundness = ctn.verify_sieve_soundness(500)
    results.append(check("sieve soundness to 500", soundness.ok and len(soundness.ctns) == 14))

    members = ctn.family_candidates(7)
    results.append(check("family_candidates(7)", [m.p for m in members] == [2, 3, 7] and members[2].n == 8281))
    report = ctn.verify_family(31)
    results.append(check("verify_family(31)", report.ok and len(report.members) == 5))
    rows = ctn.family_rows(2)
    results.append(check("family_rows(2) sums", [s for _, s in rows] == [38, 21, 16, 14, 13, 13, 11, 10]))

    lemmas = ctn.check_lemmas(-200, 200)
    results.append(check("check_lemmas(-200, 200)", lemmas.ok and lemmas.points_checked > 0))

    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
