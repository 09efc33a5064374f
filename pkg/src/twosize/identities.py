"""Executable checks of the congruence proof at concrete weights.

Every check takes a weight ``n`` and returns an ``IdentityReport``.  Checks are
computed from the exhaustive enumeration of two-size partitions of ``n``; they
never assume the statement they test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .arith import divisor_count, divisor_sum, odd_part_array
from .classes import (
    ALL_MARKED,
    MarkedParityClass,
    class_census,
    class_codes,
    class_totals,
    mark_codes,
    marked_key_indices,
    odd_pair_mask,
    ParityClass,
)
from .maps import (
    conj_rho_conj_table,
    conjugate_table,
    phi_bar_table,
    rho_table,
    tau_table,
)
from .partitions import (
    AnyPartition,
    TwoSizePartition,
    as_two_size,
    nu2_closed_form,
    two_size_table,
)

MAX_WITNESSES = 10


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    n: int
    values: dict[str, int]
    relation: str
    holds: bool
    witnesses: tuple[str, ...] = ()
    exploratory: bool = False

    def __post_init__(self):
        if self.holds == bool(self.witnesses):
            raise ValueError("a report carries witnesses exactly when it fails")

    def to_record(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "n": self.n,
            "values": dict(self.values),
            "relation": self.relation,
            "holds": self.holds,
            "witnesses": list(self.witnesses),
            "exploratory": self.exploratory,
        }


def _report(identity_id, n, values, relation, holds, witnesses=(), why=None, **kw):
    witnesses = tuple(witnesses)
    if not holds and not witnesses:
        witnesses = (why or f"{relation} fails with {values}",)
    if holds:
        witnesses = ()
    return IdentityReport(identity_id, n, values, relation, holds, witnesses[:MAX_WITNESSES], **kw)


def _rows_to_text(rows):
    return [f"{a}^{b} {c}^{d}" for a, b, c, d in rows[:MAX_WITNESSES].tolist()]


def _totals(n) -> dict[str, int]:
    return {str(k): v for k, v in class_totals(class_census(n)).items()}


def _marked(n) -> dict[str, int]:
    return {str(k): v for k, v in class_census(n).items()}


# -- the statements of the proof ---------------------------------------------

def _admissible_classes(n):
    table = two_size_table(n)
    bad = marked_key_indices(table) < 0
    return _report(
        "admissible-classes", n,
        {"partitions": len(table), "outside": int(bad.sum())},
        "every partition is in one of the 9 classes; outside OOOO exactly one product is 2 mod 4",
        not bad.any(), _rows_to_text(table[bad]),
    )


def _oeeo_even(n):
    m = _marked(n)
    a, b = m["OEEO:1"], m["OEEO:2"]
    return _report(
        "oeeo-even", n, {"OEEO": a + b, "OEEO:1": a, "OEEO:2": b},
        "OEEO even and OEEO:1 = OEEO:2", (a + b) % 2 == 0 and a == b,
    )


def _odd_pairs(n):
    table = two_size_table(n)
    bad = ~odd_pair_mask(table).any(axis=1)
    return _report(
        "odd-pairs", n, {"partitions": len(table), "without_odd_pair": int(bad.sum())},
        "some pair has odd_part(l_i) != odd_part(m_i) mod 8",
        not bad.any(), _rows_to_text(table[bad]),
    )


def _class_sum_check(identity_id, names, modulus):
    def check(n):
        t = _totals(n)
        values = {c: t[c] for c in names}
        total = sum(values.values())
        values["sum"] = total
        return _report(identity_id, n, values, f"{'+'.join(names)} = 0 mod {modulus}",
                       total % modulus == 0)
    return check


def _twice_oeoe(n):
    t = _totals(n)
    sigma_half, d = divisor_sum(n // 2), divisor_count(n)
    # sigma(n/2)/2 and d(n)/4 need not be integers separately (n/2 an odd square)
    rhs = t["OEOE"] + Fraction(sigma_half, 2) - Fraction(d, 4)
    values = {"EOEO": t["EOEO"], "OEOE": t["OEOE"], "sigma1(n/2)": sigma_half, "d(n)": d}
    relation = "EOEO = OEOE + sigma1(n/2)/2 - d(n)/4"
    if rhs.denominator != 1:
        return _report("twiceOEOE", n, values, relation, False,
                       why=f"right-hand side {rhs} is not an integer")
    return _report("twiceOEOE", n, values, relation, t["EOEO"] == rhs)


def _half_divisor_count(identity_id, n, values, relation, lhs):
    d = divisor_count(n)
    values["d(n)"] = d
    if d % 2:
        return _report(identity_id, n, values, relation, False, why=f"d(n) = {d} is odd")
    return _report(identity_id, n, values, relation, (lhs - d // 2) % 4 == 0)


def _twogroup(n):
    t = _totals(n)
    values = {"EOEE": t["EOEE"], "OEOE": t["OEOE"]}
    return _half_divisor_count("twogroup", n, values, "EOEE + OEOE = d(n)/2 mod 4",
                               t["EOEE"] + t["OEOE"])


def _oeeo_value(n):
    t = _totals(n)
    return _half_divisor_count("oeeo-value", n, {"OEEO": t["OEEO"]},
                               "OEEO = d(n)/2 mod 4", t["OEEO"])


def _main(n):
    count = len(two_size_table(n))
    closed = nu2_closed_form(n)
    values = {"nu2": count, "nu2_closed_form": closed}
    if count != closed:
        return _report("main", n, values, "nu2(n) = 0 mod 4", False,
                       why=f"enumeration {count} disagrees with closed form {closed}")
    return _report("main", n, values, "nu2(n) = 0 mod 4", count % 4 == 0)


# -- checks on the maps themselves ------------------------------------------

def _keys(rows, n):
    base = n + 1
    return ((rows[:, 0] * base + rows[:, 1]) * base + rows[:, 2]) * base + rows[:, 3]


def _valid_rows(rows, n):
    return ((rows[:, 0] > rows[:, 2]) & (rows[:, 2] >= 1) & (rows[:, 1] >= 1)
            & (rows[:, 3] >= 1) & (rows[:, 0] * rows[:, 1] + rows[:, 2] * rows[:, 3] == n))


def _in_classes(table, names):
    codes = class_codes(table)
    return np.isin(codes, [ParityClass(c).code for c in names])


def _conj_involution(n):
    table = two_size_table(n)
    once, _ = conjugate_table(table)
    twice, _ = conjugate_table(once)
    bad = ~_valid_rows(once, n) | (twice != table).any(axis=1)
    return _report("conj-involution", n, {"partitions": len(table), "failures": int(bad.sum())},
                   "Conj(Conj(p)) = p with Conj(p) a two-size partition of n",
                   not bad.any(), _rows_to_text(table[bad]))


def _rho_involution(n):
    table = two_size_table(n)
    once, defined = rho_table(table)
    dom = table[defined]
    once = once[defined]
    twice, defined2 = rho_table(once)
    bad = ~_valid_rows(once, n) | ~defined2 | (twice != dom).any(axis=1)
    return _report("rho-involution", n,
                   {"domain": len(dom), "outside_domain": int((~defined).sum()),
                    "failures": int(bad.sum())},
                   "rho(rho(p)) = p on the domain of rho", not bad.any(), _rows_to_text(dom[bad]))


def _phibar_involution(n):
    table = two_size_table(n)
    marked = table[mark_codes(table) > 0]
    once, defined = phi_bar_table(marked)
    dom, once = marked[defined], once[defined]
    twice, defined2 = phi_bar_table(once)
    bad = ~_valid_rows(once, n) | ~defined2 | (twice != dom).any(axis=1)
    # where the proof applies phibar it must be defined
    used = _in_classes(marked, ("OEOE", "OEEO"))
    missing = used & ~defined
    return _report("phibar-involution", n,
                   {"domain": len(dom), "outside_domain": int((~defined).sum()),
                    "undefined_on_OEOE_OEEO": int(missing.sum()), "failures": int(bad.sum())},
                   "phibar(phibar(p)) = p wherever defined; defined on all of OEOE and OEEO",
                   not bad.any() and not missing.any(),
                   _rows_to_text(np.concatenate((dom[bad], marked[missing]))))


RHO_FREE_CLASSES = ("EOOE", "EEOE", "OEEE", "OEEO")


def _rho_fixed_point_free(n):
    table = two_size_table(n)
    dom = table[_in_classes(table, RHO_FREE_CLASSES)]
    image, defined = rho_table(dom)
    bad = ~defined | (image == dom).all(axis=1)
    return _report("rho-fixed-point-free", n, {"domain": len(dom), "failures": int(bad.sum())},
                   "rho defined without fixed points on EOOE+EEOE+OEEE+OEEO",
                   not bad.any(), _rows_to_text(dom[bad]))


def _rho_eoeo(n):
    table = two_size_table(n)
    dom = table[_in_classes(table, ("EOEO",))]
    image, defined = rho_table(dom)
    bad = ~defined | (image == dom).all(axis=1) | ~_in_classes(image, ("EOEO",))
    return _report("rho-eoeo", n, {"EOEO": len(dom), "failures": int(bad.sum())},
                   "rho is a fixed-point-free involution of EOEO",
                   not bad.any(), _rows_to_text(dom[bad]))


def _eooe_first(table):
    eooe1 = [i for i, k in enumerate(ALL_MARKED) if str(k) == "EOOE:1"][0]
    return table[(marked_key_indices(table) == eooe1) & (table[:, 0] != 2 * table[:, 2])]


def _crc_closed_form(n):
    dom = _eooe_first(two_size_table(n))
    closed, _ = conj_rho_conj_table(dom)
    step, _ = conjugate_table(dom)
    step, defined = rho_table(step)
    composed, _ = conjugate_table(step)
    bad = ~defined | (closed != composed).any(axis=1)
    return _report("crc-closed-form", n, {"domain": len(dom), "failures": int(bad.sum())},
                   "closed form of Conj.rho.Conj equals the composition",
                   not bad.any(), _rows_to_text(dom[bad]))


def _crc_fixed_point_free(n):
    dom = _eooe_first(two_size_table(n))
    image, _ = conj_rho_conj_table(dom)
    twice, _ = conj_rho_conj_table(image)
    big = dom[:, 0] > 2 * dom[:, 2]
    stays = np.isin(_keys(image, n), _keys(dom, n))
    bad = (
        (image == dom).all(axis=1)
        | (twice != dom).any(axis=1)
        | ((image[:, 0] > 2 * image[:, 2]) != big)
        | ~stays
    )
    return _report("crc-fixed-point-free", n,
                   {"above": int(big.sum()), "below": int((~big).sum()),
                    "failures": int(bad.sum())},
                   "Conj.rho.Conj is a fixed-point-free involution of each EOOE:1 subset",
                   not bad.any(), _rows_to_text(dom[bad]))


def tau_complement(n: int) -> dict[str, int]:
    """Sizes behind the twiceOEOE count: EOEO, the image of tau, and its complement."""
    table = two_size_table(n)
    oeoe = table[_in_classes(table, ("OEOE",))]
    eoeo = table[_in_classes(table, ("EOEO",))]
    image, defined = tau_table(oeoe)
    image_keys = _keys(image, n)
    in_image = np.isin(_keys(eoeo, n), image_keys)
    odd = odd_part_array(eoeo)
    equal_odd = odd[:, 0] == odd[:, 2]
    return {
        "EOEO": len(eoeo),
        "OEOE": len(oeoe),
        "image": int(np.unique(image_keys).size),
        "image_outside_EOEO": int((~np.isin(image_keys, _keys(eoeo, n))).sum()),
        "undefined": int((~defined).sum()),
        "complement": int((~in_image).sum()),
        "complement_not_equal_odd": int((~in_image & ~equal_odd).sum()),
        "equal_odd_in_image": int((in_image & equal_odd).sum()),
    }


def _tau_complement(n):
    v = tau_complement(n)
    expected = Fraction(divisor_sum(n // 2), 2) - Fraction(divisor_count(n), 4)
    holds = (
        v["undefined"] == 0
        and v["image"] == v["OEOE"]
        and v["image_outside_EOEO"] == 0
        and v["complement_not_equal_odd"] == 0
        and v["equal_odd_in_image"] == 0
        and v["complement"] == expected
    )
    return _report("tau-complement", n, v,
                   "tau injects OEOE into EOEO, missing exactly the equal-odd-part members, "
                   "sigma1(n/2)/2 - d(n)/4 of them", holds)


# id -> (modulus, residue, check)
IDENTITIES: dict[str, tuple[int, int, Callable[[int], IdentityReport]]] = {
    "admissible-classes": (4, 2, _admissible_classes),
    "oeeo-even": (4, 2, _oeeo_even),
    "odd-pairs": (16, 14, _odd_pairs),
    "even-parities": (16, 14, _class_sum_check(
        "even-parities", ("EOOE", "EEOE", "OEEE", "OEEO"), 2)),
    "sixgroup": (16, 14, _class_sum_check(
        "sixgroup", ("EOOE", "EEOE", "OEEE", "OOOO", "EOEO", "EEEO"), 4)),
    "three-class": (8, 6, _class_sum_check("three-class", ("EOEE", "OEOE", "OEEO"), 4)),
    "twiceOEOE": (4, 2, _twice_oeoe),
    "twogroup": (16, 14, _twogroup),
    "oeeo-value": (16, 14, _oeeo_value),
    "main": (16, 14, _main),
}

MAP_CHECKS: dict[str, tuple[int, int, Callable[[int], IdentityReport]]] = {
    "conj-involution": (1, 0, _conj_involution),
    "rho-involution": (1, 0, _rho_involution),
    "phibar-involution": (4, 2, _phibar_involution),
    "rho-fixed-point-free": (16, 14, _rho_fixed_point_free),
    "rho-eoeo": (16, 14, _rho_eoeo),
    "crc-closed-form": (4, 2, _crc_closed_form),
    "crc-fixed-point-free": (16, 14, _crc_fixed_point_free),
    "tau-complement": (4, 2, _tau_complement),
}

ALL_CHECKS = {**IDENTITIES, **MAP_CHECKS}


def admits(identity_id: str, n: int) -> bool:
    if identity_id not in ALL_CHECKS:
        raise KeyError(f"unknown identity {identity_id!r}")
    modulus, residue, _ = ALL_CHECKS[identity_id]
    return n >= 1 and n % modulus == residue


def verify_identity(identity_id: str, n: int) -> IdentityReport:
    if identity_id not in ALL_CHECKS:
        raise KeyError(f"unknown identity {identity_id!r}; known: {', '.join(ALL_CHECKS)}")
    modulus, residue, check = ALL_CHECKS[identity_id]
    if n < 1 or n % modulus != residue:
        raise ValueError(f"{identity_id} needs n = {residue} mod {modulus}, got {n}")
    return check(n)


# -- rank statistics -----------------------------------------------------------

def dyson_rank(p: AnyPartition) -> int:
    """Largest part minus number of parts."""
    return p.pairs[0][0] - sum(m for _, m in p.pairs)


def rank2(p: AnyPartition) -> int:
    l1, m1, l2, m2 = as_two_size(p).quad
    return l1 + l2 - 2 * m1 - m2


def crank(p: AnyPartition) -> int:
    """Andrews-Garvan crank: the largest part if there are no ones, else
    (number of parts larger than the number of ones) minus (number of ones)."""
    ones = dict(p.pairs).get(1, 0)
    if ones == 0:
        return p.pairs[0][0]
    return sum(m for s, m in p.pairs if s > ones) - ones


STATS = {"rk": dyson_rank, "rk2": rank2, "crank": crank}


def stat_values(table: np.ndarray, stat: str) -> np.ndarray:
    l1, m1, l2, m2 = table.T
    if stat == "rk":
        return l1 - m1 - m2
    if stat == "rk2":
        return l1 + l2 - 2 * m1 - m2
    if stat == "crank":
        ones = np.where(l2 == 1, m2, 0)
        mu = np.where(l1 > ones, m1, 0) + np.where(l2 > ones, m2, 0)
        return np.where(ones == 0, l1, mu - ones)
    raise ValueError(f"unknown statistic {stat!r}; choose from {', '.join(STATS)}")


def rank_class_census(n: int, stat: str, modulus: int) -> dict[int, int]:
    """Counts of two-size partitions of ``n`` by ``stat`` mod ``modulus``."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    values = stat_values(two_size_table(n), stat)
    counts = np.bincount(np.mod(values, modulus), minlength=modulus)
    return dict(enumerate(counts.tolist()))


@dataclass(frozen=True)
class CongruenceFamily:
    """Weights ``A*j + B`` for ``j >= 0``; counts are tested mod ``modulus``."""

    A: int
    B: int
    modulus: int = 4

    def __post_init__(self):
        if self.A < 1 or not 0 <= self.B < self.A or self.modulus < 1:
            raise ValueError(f"need A >= 1, 0 <= B < A, modulus >= 1; got {self}")

    def members(self, n_max: int) -> list[int]:
        """Weights for ``j = 0..n_max``, skipping a zero weight."""
        return [w for w in (self.A * j + self.B for j in range(n_max + 1)) if w >= 1]

    def index_bound(self, weight_bound: int) -> int:
        return (weight_bound - self.B) // self.A

    def __str__(self):
        return f"{self.A},{self.B}"


KNOWN_FAMILIES = tuple(
    CongruenceFamily(a, b) for a, b in ((16, 14), (36, 30), (72, 42), (196, 70), (252, 114))
)


def check_conjecture(family: CongruenceFamily, stat: str, n_max: int) -> list[IdentityReport]:
    """Per-weight parity-split counts of ``stat`` along ``family``.

    Two reports per weight: the claim that the numbers with ``stat`` even and
    odd are both divisible by the modulus, and an exploratory report on the
    count with ``stat`` = 0 mod 4.
    """
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}; choose from {', '.join(STATS)}")
    q = family.modulus
    reports = []
    for w in family.members(n_max):
        res4 = rank_class_census(w, stat, 4)
        even, odd = res4[0] + res4[2], res4[1] + res4[3]
        values = {"even": even, "odd": odd, **{f"res{r}": c for r, c in res4.items()}}
        bad = [f"{name} count {c} is not divisible by {q}"
               for name, c in (("even", even), ("odd", odd)) if c % q]
        reports.append(_report(f"conjecture-{stat}", w, values,
                               f"{stat} even and odd counts = 0 mod {q}", not bad, bad))
        reports.append(_report(f"conjecture-{stat}-zero-residue", w, {"res0": res4[0]},
                               f"count with {stat} = 0 mod 4 is = 0 mod {q}",
                               res4[0] % q == 0, exploratory=True))
    return reports
