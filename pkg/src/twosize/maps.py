"""Bijections on two-size partitions.

Each map comes in a scalar form acting on ``TwoSizePartition`` and, for the
bulk scans, an array form acting on ``(N, 4)`` tables of ``(l1, m1, l2, m2)``
rows.  Array forms return ``(image, defined)`` where ``defined`` flags the rows
inside the map's domain; other image rows are meaningless.
"""

from __future__ import annotations

import numpy as np

from .arith import decompose_pow2, odd_part_array, valuation2_array
from .classes import Mark, MarkedParityClass, ParityClass, classify
from .partitions import (
    AnyPartition,
    FrequencyPartition,
    PartitionError,
    TwoSizePartition,
    as_two_size,
    ferrers_conjugate,
)


class MapDomainError(ValueError):
    """Input lies outside the domain of a map."""

    def __init__(self, map_name, precondition, partition=None):
        self.map_name = map_name
        self.precondition = precondition
        self.partition = partition
        where = f" for {partition}" if partition is not None else ""
        super().__init__(f"{map_name}: {precondition}{where}")


def _swap_odd(size, mult):
    """Exchange the odd parts of a (size, mult) pair, keeping both valuations."""
    bs, ls = decompose_pow2(size)
    bm, lm = decompose_pow2(mult)
    return (lm << bs, ls << bm)


def _swap_valuations(size, mult):
    """Exchange the 2-adic valuations of a (size, mult) pair, keeping odd parts."""
    bs, ls = decompose_pow2(size)
    bm, lm = decompose_pow2(mult)
    return (ls << bm, lm << bs)


def _rebuild(name, first, second, source):
    try:
        return TwoSizePartition.from_pairs(first, second)
    except PartitionError:
        raise MapDomainError(name, "resulting part sizes coincide", source) from None


def conjugate(p: AnyPartition) -> AnyPartition:
    """Ferrers conjugate.

    Two-size inputs use ``Conj(l1^m1 l2^m2) = (m1+m2)^l2 m1^(l1-l2)`` and stay
    ``TwoSizePartition``; anything else goes through the general transpose.
    """
    if isinstance(p, TwoSizePartition):
        l1, m1, l2, m2 = p.quad
        return TwoSizePartition(m1 + m2, l2, m1, l1 - l2)
    return ferrers_conjugate(p)


def rho(p: AnyPartition) -> TwoSizePartition:
    """Swap the odd part of each part size with that of its multiplicity."""
    p = as_two_size(p)
    (l1, m1), (l2, m2) = p.pairs
    return _rebuild("rho", _swap_odd(l1, m1), _swap_odd(l2, m2), p)


def marked_pair(p: TwoSizePartition) -> int:
    """Index (0 or 1) of the pair whose product is 2 mod 4."""
    if p.weight % 4 != 2:
        raise MapDomainError("phibar", "weight must be 2 mod 4", p)
    mark = classify(p).mark
    if mark is Mark.NONE:
        raise MapDomainError("phibar", "class OOOO has no marked pair", p)
    return int(mark) - 1


def phi_bar(p: AnyPartition) -> TwoSizePartition:
    """Swap the 2-adic valuations inside the marked pair only."""
    p = as_two_size(p)
    i = marked_pair(p)
    pairs = list(p.pairs)
    pairs[i] = _swap_valuations(*pairs[i])
    return _rebuild("phibar", pairs[0], pairs[1], p)


OEOE = ParityClass("OEOE")
EOOE_FIRST = MarkedParityClass(ParityClass("EOOE"), Mark.FIRST)


def tau(p: AnyPartition) -> TwoSizePartition:
    """Swap the 2-adic valuations inside both pairs; OEOE into EOEO."""
    p = as_two_size(p)
    if p.weight % 4 != 2 or classify(p).cls != OEOE:
        raise MapDomainError("tau", "input must lie in class OEOE", p)
    (l1, m1), (l2, m2) = p.pairs
    return _rebuild("tau", _swap_valuations(l1, m1), _swap_valuations(l2, m2), p)


def _crc_domain(p):
    if p.weight % 4 != 2 or classify(p) != EOOE_FIRST:
        raise MapDomainError("crc", "input must lie in EOOE with the first pair marked", p)
    if p.large_part == 2 * p.small_part:
        raise MapDomainError("crc", "l1 = 2*l2 is excluded", p)


def conj_rho_conj(p: AnyPartition) -> TwoSizePartition:
    """``Conj . rho . Conj`` on EOOE:1, via its closed form."""
    p = as_two_size(p)
    _crc_domain(p)
    l1, m1, l2, m2 = p.quad
    if l1 > 2 * l2:
        return TwoSizePartition(2 * m1 + m2, l2, m1, l1 - 2 * l2)
    return TwoSizePartition(2 * m1 + m2, l1 - l2, m1 + m2, 2 * l2 - l1)


def conj_rho_conj_composed(p: AnyPartition) -> TwoSizePartition:
    """The same map as the literal composition of the three maps."""
    p = as_two_size(p)
    _crc_domain(p)
    return conjugate(rho(conjugate(p)))


MAPS = {
    "conj": conjugate,
    "rho": rho,
    "phibar": phi_bar,
    "tau": tau,
    "crc": conj_rho_conj,
}


def apply_map(name: str, p: FrequencyPartition):
    """Apply a map by its CLI name; two-size maps require two part sizes."""
    if name not in MAPS:
        raise KeyError(f"unknown map {name!r}; choose from {', '.join(MAPS)}")
    if name == "conj":
        return conjugate(p)
    try:
        q = as_two_size(p)
    except PartitionError as exc:
        raise MapDomainError(name, "input must have exactly two part sizes", p) from exc
    return MAPS[name](q)


# -- array forms --------------------------------------------------------------

def _canonical(s1, t1, s2, t2):
    swap = s1 < s2
    out = np.column_stack((
        np.where(swap, s2, s1), np.where(swap, t2, t1),
        np.where(swap, s1, s2), np.where(swap, t1, t2),
    ))
    return out, s1 != s2


def conjugate_table(table):
    l1, m1, l2, m2 = table.T
    return np.column_stack((m1 + m2, l2, m1, l1 - l2)), np.ones(len(table), dtype=bool)


def rho_table(table):
    b = valuation2_array(table)
    ell = odd_part_array(table)
    return _canonical(
        ell[:, 1] << b[:, 0], ell[:, 0] << b[:, 1],
        ell[:, 3] << b[:, 2], ell[:, 2] << b[:, 3],
    )


def tau_table(table):
    """Defined flag covers only distinct sizes; callers restrict to OEOE rows."""
    b = valuation2_array(table)
    ell = odd_part_array(table)
    return _canonical(
        ell[:, 0] << b[:, 1], ell[:, 1] << b[:, 0],
        ell[:, 2] << b[:, 3], ell[:, 3] << b[:, 2],
    )


def phi_bar_table(table):
    """Rows with weight 2 mod 4 and a marked pair; others flagged undefined."""
    b = valuation2_array(table)
    ell = odd_part_array(table)
    r1 = (table[:, 0] * table[:, 1]) % 4
    r2 = (table[:, 2] * table[:, 3]) % 4
    first = (r1 == 2) & (r2 == 0)
    second = (r1 == 0) & (r2 == 2)
    s1 = np.where(first, ell[:, 0] << b[:, 1], table[:, 0])
    t1 = np.where(first, ell[:, 1] << b[:, 0], table[:, 1])
    s2 = np.where(second, ell[:, 2] << b[:, 3], table[:, 2])
    t2 = np.where(second, ell[:, 3] << b[:, 2], table[:, 3])
    out, distinct = _canonical(s1, t1, s2, t2)
    return out, distinct & (first | second)


def conj_rho_conj_table(table):
    """Closed form; callers restrict to EOOE:1 rows with ``l1 != 2*l2``."""
    l1, m1, l2, m2 = table.T
    big = l1 > 2 * l2
    out = np.column_stack((
        2 * m1 + m2,
        np.where(big, l2, l1 - l2),
        np.where(big, m1, m1 + m2),
        np.where(big, l1 - 2 * l2, 2 * l2 - l1),
    ))
    return out, l1 != 2 * l2
