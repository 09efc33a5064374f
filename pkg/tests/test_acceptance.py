"""Exit criteria.  Each test prints one [PASS]/[FAIL] line, collected again in the
terminal summary.  All comparisons are exact integer equalities or congruences."""

import time

from twosize.arith import divisor_count, divisor_sum
from twosize.classes import ADMISSIBLE, class_census, class_totals, classify, conjugate_class
from twosize.identities import (
    KNOWN_FAMILIES,
    check_conjecture,
    tau_complement,
    verify_identity,
)
from twosize.maps import rho
from twosize.partitions import count_k_sizes, enumerate_two_size, nu2_closed_form, nu_k_series

LEMMA_IDS = ("admissible-classes", "oeeo-even", "odd-pairs", "even-parities", "sixgroup",
             "three-class", "twiceOEOE", "twogroup", "oeeo-value")
MAP_IDS = ("conj-involution", "rho-involution", "phibar-involution", "rho-fixed-point-free",
           "rho-eoeo", "crc-closed-form", "crc-fixed-point-free")
RESIDUE = {"admissible-classes": (4, 2), "oeeo-even": (4, 2), "twiceOEOE": (4, 2),
           "three-class": (8, 6), "phibar-involution": (4, 2), "crc-closed-form": (4, 2),
           "conj-involution": (1, 0), "rho-involution": (1, 0)}


def _weights(identity_id, top):
    modulus, residue = RESIDUE.get(identity_id, (16, 14))
    return [n for n in range(1, top + 1) if n % modulus == residue]


def test_1_oracle_triangle(acceptance):
    start = time.perf_counter()
    series = nu_k_series(2, 2000)
    mismatches = [n for n in range(1, 2001)
                  if not count_k_sizes(n, 2) == nu2_closed_form(n) == series[n]]
    conv14 = sum(divisor_count(k) * divisor_count(14 - k) for k in range(1, 14))
    spots = (count_k_sizes(6, 2) == 6 and count_k_sizes(14, 2) == 44 and conv14 == 108
             and divisor_sum(14) == 24 and divisor_count(14) == 4)
    elapsed = time.perf_counter() - start
    ok = acceptance(1, "oracle triangle n <= 2000", not mismatches and spots,
                    f"{len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok, mismatches[:10]


def test_2_main_theorem_to_5000(acceptance):
    reports = [verify_identity("main", n) for n in range(14, 5001, 16)]
    bad = [r for r in reports if not r.holds]
    ok = acceptance(2, "nu2(16j+14) = 0 mod 4 for 16j+14 <= 5000", not bad,
                    f"{len(reports)} weights")
    assert ok, bad[:3]


def test_3_lemma_suite(acceptance):
    bad, count = [], 0
    for identity_id in LEMMA_IDS:
        for n in _weights(identity_id, 2000):
            count += 1
            r = verify_identity(identity_id, n)
            if not r.holds:
                bad.append(r)
    ok = acceptance(3, "lemma suite at every admissible n <= 2000", not bad,
                    f"{count} checks, {len(bad)} failures")
    assert ok, bad[:3]


def test_4_golden_census_14(acceptance):
    census = class_census(14)
    totals = {str(k): v for k, v in class_totals(census).items() if v}
    marks = {str(k): v for k, v in census.items() if str(k).startswith("OEEO")}
    expected = {"OOOO": 10, "EOOE": 10, "EOEO": 6, "EEOE": 6, "OEEE": 2, "EEEO": 2,
                "OEOE": 3, "EOEE": 3, "OEEO": 2}
    table1 = all(totals.get(str(c), 0) == totals.get(str(conjugate_class(c)), 0)
                 for c in ADMISSIBLE)
    d = divisor_count(14)
    cross = (
        totals["EOEO"] * 4 == totals["OEOE"] * 4 + 2 * divisor_sum(7) - d   # 6 = 3 + 4 - 1
        and (totals["EOEE"] + totals["OEOE"] - d // 2) % 4 == 0          # 3+3 = 2 mod 4
        and (totals["OEEO"] - d // 2) % 4 == 0                            # 2 = 2 mod 4
    )
    ok = acceptance(4, "golden census at n = 14",
                    totals == expected and sum(totals.values()) == 44
                    and marks == {"OEEO:1": 1, "OEEO:2": 1} and table1 and cross)
    assert ok, (totals, marks)


def test_5_involution_laws(acceptance):
    bad, count = [], 0
    for identity_id in MAP_IDS:
        for n in _weights(identity_id, 2000):
            count += 1
            r = verify_identity(identity_id, n)
            if not r.holds:
                bad.append(r)
    eoeo = [p for p in enumerate_two_size(14) if classify(p).cls.letters == "EOEO"]
    orbits = {frozenset((str(p), str(rho(p)))) for p in eoeo}
    witness = orbits == {frozenset({"12^1 2^1", "4^3 2^1"}), frozenset({"10^1 4^1", "4^1 2^5"}),
                         frozenset({"8^1 6^1", "8^1 2^3"})}
    ok = acceptance(5, "involution and fixed-point-freedom laws, weights <= 2000",
                    not bad and witness, f"{count} checks, {len(bad)} failures")
    assert ok, bad[:3]


def test_6_tau_complement(acceptance):
    bad, count = [], 0
    for n in range(2, 2001, 4):
        count += 1
        if not verify_identity("tau-complement", n).holds:
            bad.append(n)
    v6 = tau_complement(6)
    spot = (v6["EOEO"], v6["image"]) == (1, 0) and divisor_sum(3) // 2 - divisor_count(6) // 4 == 1
    ok = acceptance(6, "|EOEO| - |tau(OEOE)| = sigma1(n/2)/2 - d(n)/4, n <= 2000",
                    not bad and spot, f"{count} weights")
    assert ok, bad[:10]


def test_7_conjecture_scan(acceptance):
    counterexamples, weights = [], 0
    for family in KNOWN_FAMILIES:
        stats = ("rk2",) if (family.A, family.B) == (16, 14) else ("rk2", "rk")
        for stat in stats:
            for r in check_conjecture(family, stat, family.index_bound(5000)):
                if r.exploratory:
                    continue
                weights += 1
                if not r.holds:
                    counterexamples.append(r)
    for r in counterexamples[:10]:
        print(f"  counterexample: {r.identity_id} n={r.n} {r.values} {r.witnesses}")
    ok = acceptance(7, "rk2 (all five families) and rk (four families) parity counts = 0 mod 4",
                    not counterexamples,
                    f"{weights} family members <= 5000, {len(counterexamples)} counterexamples")
    assert ok


def test_8_crank_exploratory(acceptance):
    found = []
    for family in KNOWN_FAMILIES:
        for r in check_conjecture(family, "crank", family.index_bound(5000)):
            if not r.exploratory and not r.holds:
                found.append(r)
                break
    if found:
        first = found[0]
        detail = (f"counterexample in {len(found)} of 5 families, first at n={first.n} "
                  f"(even {first.values['even']}, odd {first.values['odd']})")
    else:
        detail = "no counterexample at bound 5000"
    acceptance(8, "crank lacks the parity divisibility", True, detail)
