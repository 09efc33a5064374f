from fractions import Fraction

import pytest

from twosize import identities as ids
from twosize.arith import divisor_count, divisor_sum
from twosize.identities import (
    IDENTITIES,
    MAP_CHECKS,
    KNOWN_FAMILIES,
    CongruenceFamily,
    IdentityReport,
    check_conjecture,
    crank,
    dyson_rank,
    rank2,
    rank_class_census,
    stat_values,
    tau_complement,
    verify_identity,
)
from twosize.partitions import FrequencyPartition, enumerate_two_size, parse_partition, two_size_table


def P(text):
    return parse_partition(text)


def test_main_at_14():
    r = verify_identity("main", 14)
    assert r.holds and r.values == {"nu2": 44, "nu2_closed_form": 44}


def test_twice_oeoe_at_6():
    r = verify_identity("twiceOEOE", 6)
    assert r.holds
    assert r.values == {"EOEO": 1, "OEOE": 0, "sigma1(n/2)": 4, "d(n)": 4}


def test_oeeo_value_at_14():
    r = verify_identity("oeeo-value", 14)
    assert r.holds and r.values == {"OEEO": 2, "d(n)": 4}


def test_sixgroup_at_14():
    r = verify_identity("sixgroup", 14)
    assert r.holds and r.values["sum"] == 36 == 10 + 6 + 2 + 10 + 6 + 2


def test_twice_oeoe_when_terms_are_not_integers():
    # n/2 = 9 is an odd square: sigma1(9)/2 and d(18)/4 are halves, their difference is not
    assert divisor_sum(9) % 2 == 1 and divisor_count(18) % 4 == 2
    assert verify_identity("twiceOEOE", 18).holds


def test_unknown_identity_and_wrong_residue():
    with pytest.raises(KeyError):
        verify_identity("no-such-identity", 14)
    with pytest.raises(ValueError, match="14 mod 16"):
        verify_identity("main", 30 - 4)
    with pytest.raises(ValueError):
        verify_identity("three-class", 10)


@pytest.mark.parametrize("identity_id", sorted(IDENTITIES) + sorted(MAP_CHECKS))
def test_every_check_holds_up_to_500(identity_id):
    modulus, residue, _ = ids.ALL_CHECKS[identity_id]
    for n in range(1, 501):
        if n % modulus == residue:
            r = verify_identity(identity_id, n)
            assert r.holds, r


@pytest.mark.slow
@pytest.mark.parametrize("identity_id", sorted(IDENTITIES))
def test_every_identity_holds_up_to_5000(identity_id):
    modulus, residue, _ = IDENTITIES[identity_id]
    for n in range(residue, 5001, modulus):
        assert verify_identity(identity_id, n).holds, (identity_id, n)


def test_report_invariant():
    with pytest.raises(ValueError):
        IdentityReport("x", 1, {}, "r", True, ("w",))
    with pytest.raises(ValueError):
        IdentityReport("x", 1, {}, "r", False, ())


def test_reports_are_deterministic():
    a = [verify_identity(i, 30).to_record() for i in ("main", "twiceOEOE", "oeeo-even")]
    b = [verify_identity(i, 30).to_record() for i in ("main", "twiceOEOE", "oeeo-even")]
    assert a == b


def test_harness_detects_a_broken_census(monkeypatch):
    real = ids.class_census

    def skewed(n):
        census = dict(real(n))
        key = next(k for k in census if str(k) == "OEEO:1")
        census[key] += 1
        return census

    monkeypatch.setattr(ids, "class_census", skewed)
    for identity_id in ("oeeo-even", "oeeo-value", "three-class"):
        r = verify_identity(identity_id, 14)
        assert not r.holds and r.witnesses


def test_harness_detects_a_missing_odd_pair(monkeypatch):
    import numpy as np

    monkeypatch.setattr(ids, "odd_pair_mask", lambda t: np.zeros((len(t), 2), dtype=bool))
    r = verify_identity("odd-pairs", 14)
    assert not r.holds
    assert r.witnesses[0] == "13^1 1^1"


def test_harness_detects_a_non_integer_half(monkeypatch):
    monkeypatch.setattr(ids, "divisor_count", lambda n: 5)
    r = verify_identity("twogroup", 14)
    assert not r.holds and "odd" in r.witnesses[0]


# -- tau complement -------------------------------------------------------------------

def test_tau_complement_at_6():
    v = tau_complement(6)
    assert v["EOEO"] - v["image"] == 1 == Fraction(divisor_sum(3), 2) - Fraction(divisor_count(6), 4)


def test_tau_complement_identity():
    for n in range(2, 2001, 4):
        v = tau_complement(n)
        expected = Fraction(divisor_sum(n // 2), 2) - Fraction(divisor_count(n), 4)
        assert v["EOEO"] - v["image"] == expected
        assert v["complement_not_equal_odd"] == v["equal_odd_in_image"] == 0


def test_tau_complement_counts_solutions_directly():
    # complement <-> n/2 = k(x + y) with k odd, x = 2^t a (t > 0, a odd), y odd
    for n in range(2, 400, 4):
        half = n // 2
        sols = sum(1 for k in range(1, half + 1, 2) if half % k == 0
                   for x in range(2, half // k, 2))
        assert tau_complement(n)["complement"] == sols


# -- statistics ------------------------------------------------------------------------

@pytest.mark.parametrize("text, rk, rk2", [("5^1 1^1", 3, 3), ("2^1 1^4", -3, -3),
                                            ("3^4 2^1", -2, -4), ("4^1 2^1", 2, 3)])
def test_rank_examples(text, rk, rk2):
    assert dyson_rank(P(text)) == rk
    assert rank2(P(text)) == rk2


@pytest.mark.parametrize("text, expected", [("4^1 2^1", 4), ("5^1 1^1", 0), ("2^1 1^4", -4)])
def test_crank_examples(text, expected):
    assert crank(P(text)) == expected


def crank_from_parts(parts):
    ones = parts.count(1)
    if ones == 0:
        return max(parts)
    return sum(1 for x in parts if x > ones) - ones


def test_crank_generic_partitions():
    for text in ("7 5 1^3", "9^2 4 2^3", "3^3 1^2", "6 1"):
        p = P(text)
        assert crank(p) == crank_from_parts(p.parts())


def test_dyson_rank_generic_partitions():
    p = FrequencyPartition.from_parts((5, 4, 1))
    assert dyson_rank(p) == 2


def test_stat_arrays_match_scalar():
    for n in range(3, 150):
        table = two_size_table(n)
        parts = enumerate_two_size(n)
        for stat, f in ids.STATS.items():
            assert stat_values(table, stat).tolist() == [f(p) for p in parts]
        assert [crank(p) for p in parts] == [crank_from_parts(p.to_frequency().parts())
                                            for p in parts]


def test_rank_class_census_examples():
    # rk2 over the partitions of 6 is 3, 3, 1, -1, -3, -3: all odd
    by_hand = [l1 + l2 - 2 * m1 - m2 for l1, m1, l2, m2 in
               [(5, 1, 1, 1), (4, 1, 2, 1), (4, 1, 1, 2), (3, 1, 1, 3), (2, 2, 1, 2), (2, 1, 1, 4)]]
    assert by_hand == [3, 3, 1, -1, -3, -3]
    assert rank_class_census(6, "rk2", 2) == {0: 0, 1: 6}
    assert rank_class_census(37, "crank", 1) == {0: len(two_size_table(37))}
    c = rank_class_census(14, "rk2", 2)
    assert c[0] % 4 == 0 and c[1] % 4 == 0 and sum(c.values()) == 44
    with pytest.raises(ValueError):
        rank_class_census(14, "rk2", 0)
    with pytest.raises(ValueError):
        rank_class_census(14, "spt", 2)


def test_negative_stats_reduce_to_least_residue():
    c = rank_class_census(6, "rk", 5)
    assert set(c) == set(range(5))
    expected = {r: 0 for r in range(5)}
    for p in enumerate_two_size(6):
        expected[dyson_rank(p) % 5] += 1
    assert c == expected


# -- conjecture scanner ---------------------------------------------------------------

def test_family_validation():
    with pytest.raises(ValueError):
        CongruenceFamily(16, 16)
    with pytest.raises(ValueError):
        CongruenceFamily(0, 0)
    assert CongruenceFamily(16, 14).members(2) == [14, 30, 46]
    assert CongruenceFamily(5, 0).members(2) == [5, 10]
    assert CongruenceFamily(16, 14).index_bound(5000) == 311


def test_conjecture_single_weight():
    reports = check_conjecture(CongruenceFamily(16, 14), "rk2", 0)
    assert [(r.identity_id, r.n, r.holds) for r in reports] == [
        ("conjecture-rk2", 14, True), ("conjecture-rk2-zero-residue", 14, True)]
    assert reports[1].exploratory and not reports[0].exploratory


def test_conjecture_surfaces_rank_failure_on_16n_14():
    reports = check_conjecture(CongruenceFamily(16, 14), "rk", 3)
    fails = [r for r in reports if not r.holds and not r.exploratory]
    assert fails and fails[0].n == 14
    assert fails[0].values["even"] == 14 and fails[0].values["odd"] == 30
    assert "not divisible by 4" in fails[0].witnesses[0]


def test_conjecture_rank_holds_on_36n_30_small():
    assert all(r.holds for r in check_conjecture(CongruenceFamily(36, 30), "rk", 20)
               if not r.exploratory)


def test_conjecture_unknown_stat():
    with pytest.raises(ValueError):
        check_conjecture(KNOWN_FAMILIES[0], "spt", 3)


def test_known_families():
    assert [(f.A, f.B) for f in KNOWN_FAMILIES] == [
        (16, 14), (36, 30), (72, 42), (196, 70), (252, 114)]
