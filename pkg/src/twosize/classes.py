"""Parity classes of two-size partitions of weights 2 mod 4.

A partition ``l1^m1 l2^m2`` is in class ``ABCD`` when ``l1, m1, l2, m2`` are
respectively odd (O) or even (E).  Outside ``OOOO`` exactly one of the products
``l1*m1``, ``l2*m2`` is 2 mod 4; the mark records which one.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import odd_part, odd_part_array
from .partitions import TwoSizePartition, two_size_table


@dataclass(frozen=True, order=True)
class ParityClass:
    letters: str

    def __post_init__(self):
        if len(self.letters) != 4 or set(self.letters) - {"O", "E"}:
            raise ValueError(f"parity class must be 4 letters from O/E, got {self.letters!r}")

    @classmethod
    def of(cls, l1, m1, l2, m2) -> "ParityClass":
        return cls("".join("O" if x % 2 else "E" for x in (l1, m1, l2, m2)))

    @property
    def code(self) -> int:
        """4-bit code, bit set for E, ``l1`` in the high bit."""
        return int(self.letters.translate(str.maketrans("OE", "01")), 2)

    @classmethod
    def from_code(cls, code: int) -> "ParityClass":
        return cls(format(code, "04b").translate(str.maketrans("01", "OE")))

    @property
    def admissible(self) -> bool:
        return self in ADMISSIBLE

    def __str__(self):
        return self.letters


ADMISSIBLE = tuple(
    ParityClass(s)
    for s in ("OOOO", "EOOE", "EEOE", "EOEO", "OEEE", "EEEO", "EOEE", "OEOE", "OEEO")
)
OOOO = ADMISSIBLE[0]

# Table 1: conjugation pairs the classes up, OEEO going to itself.
TABLE_1 = {
    "EOOE": "OOOO",
    "EEOE": "EOEO",
    "OEEE": "EEEO",
    "EOEE": "OEOE",
    "OEEO": "OEEO",
}
_CONJ = {}
for _a, _b in TABLE_1.items():
    _CONJ[ParityClass(_a)] = ParityClass(_b)
    _CONJ[ParityClass(_b)] = ParityClass(_a)


class Mark(enum.IntEnum):
    NONE = 0
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True, order=True)
class MarkedParityClass:
    cls: ParityClass
    mark: Mark = Mark.NONE

    def __post_init__(self):
        object.__setattr__(self, "mark", Mark(self.mark))
        if not self.cls.admissible:
            raise ValueError(f"{self.cls} is not an admissible class")
        if (self.mark is Mark.NONE) != (self.cls == OOOO):
            raise ValueError(f"class {self.cls} cannot carry mark {self.mark.name}")
        if self.mark is not Mark.NONE:
            i = 2 * (self.mark - 1)
            if self.cls.letters[i] == self.cls.letters[i + 1]:
                # a pair with equal parities has product odd or 0 mod 4
                raise ValueError(f"pair {self.mark} of {self.cls} cannot be 2 mod 4")

    @classmethod
    def parse(cls, text: str) -> "MarkedParityClass":
        letters, _, mark = text.partition(":")
        return cls(ParityClass(letters), Mark(int(mark)) if mark else Mark.NONE)

    def __str__(self):
        if self.mark is Mark.NONE:
            return self.cls.letters
        return f"{self.cls.letters}:{int(self.mark)}"


ALL_MARKED = tuple(
    MarkedParityClass(c, m)
    for c in ADMISSIBLE
    for m in Mark
    if (m is Mark.NONE) == (c == OOOO)
    and (m is Mark.NONE or c.letters[2 * m - 2] != c.letters[2 * m - 1])
)


def _require_2_mod_4(n):
    if n % 4 != 2:
        raise ValueError(
            f"parity classes are only defined for weights 2 mod 4, got {n} (= {n % 4} mod 4)"
        )


def classify(p: TwoSizePartition) -> MarkedParityClass:
    l1, m1, l2, m2 = p.quad
    _require_2_mod_4(p.weight)
    c = ParityClass.of(l1, m1, l2, m2)
    if c == OOOO:
        return MarkedParityClass(c)
    r1, r2 = l1 * m1 % 4, l2 * m2 % 4
    if (r1, r2) == (2, 0):
        return MarkedParityClass(c, Mark.FIRST)
    if (r1, r2) == (0, 2):
        return MarkedParityClass(c, Mark.SECOND)
    raise ArithmeticError(f"{p} in {c} has pair products {r1}, {r2} mod 4")


def conjugate_class(c: ParityClass) -> ParityClass:
    """Class of the conjugates of the members of ``c``."""
    if c not in _CONJ:
        raise ValueError(f"{c} is not an admissible class")
    return _CONJ[c]


@lru_cache(maxsize=None)
def conjugate_marked(c: MarkedParityClass) -> tuple[MarkedParityClass, ...]:
    """Marked classes that conjugates of members of ``c`` can land in.

    Both the class and the mark of ``Conj(l1^m1 l2^m2) = (m1+m2)^l2 m1^(l1-l2)``
    depend only on ``l1, m1, l2, m2`` mod 4, and every residue pattern with
    ``l1 > l2`` occurs, so enumerating residues gives the exact image set.
    Only some classes have a forced image mark (e.g. OEEO:1 -> OEEO:2).
    """
    images = set()
    for r in itertools.product(range(4), repeat=4):
        # lift residues to a genuine partition with l1 > l2
        l1, m1, l2, m2 = r[0] + 8, r[1] + 4, r[2] + 4, r[3] + 4
        p = TwoSizePartition(l1, m1, l2, m2)
        if p.weight % 4 != 2 or classify(p) != c:
            continue
        q = TwoSizePartition(m1 + m2, l2, m1, l1 - l2)
        images.add(classify(q))
    return tuple(sorted(images))


def census_keys():
    return ALL_MARKED


# -- bulk classification ------------------------------------------------------

def class_codes(table: np.ndarray) -> np.ndarray:
    even = (table & 1) ^ 1
    return (even[:, 0] << 3) | (even[:, 1] << 2) | (even[:, 2] << 1) | even[:, 3]


def mark_codes(table: np.ndarray) -> np.ndarray:
    """0 for two odd products, 1/2 for the pair that is 2 mod 4, -1 otherwise."""
    r1 = (table[:, 0] * table[:, 1]) % 4
    r2 = (table[:, 2] * table[:, 3]) % 4
    out = np.full(len(table), -1, dtype=np.int64)
    out[(r1 % 2 == 1) & (r2 % 2 == 1)] = 0
    out[(r1 == 2) & (r2 == 0)] = 1
    out[(r1 == 0) & (r2 == 2)] = 2
    return out


_KEY_INDEX = {(k.cls.code, int(k.mark)): i for i, k in enumerate(ALL_MARKED)}


def marked_key_indices(table: np.ndarray) -> np.ndarray:
    """Index into ``ALL_MARKED`` per row, -1 where no admissible marked class fits."""
    lookup = np.full(16 * 3, -1, dtype=np.int64)
    for (code, mark), i in _KEY_INDEX.items():
        lookup[code * 3 + mark] = i
    codes, marks = class_codes(table), mark_codes(table)
    idx = np.full(len(table), -1, dtype=np.int64)
    ok = marks >= 0
    idx[ok] = lookup[codes[ok] * 3 + marks[ok]]
    return idx


@lru_cache(maxsize=64)
def _census(n: int) -> tuple[int, ...]:
    idx = marked_key_indices(two_size_table(n))
    if (idx < 0).any():
        raise ArithmeticError(f"weight {n} has partitions outside the admissible classes")
    return tuple(np.bincount(idx, minlength=len(ALL_MARKED)).tolist())


def class_census(n: int) -> dict[MarkedParityClass, int]:
    """Counts of the two-size partitions of ``n`` per marked class (zeros included)."""
    _require_2_mod_4(n)
    return dict(zip(ALL_MARKED, _census(n)))


def class_totals(census: dict[MarkedParityClass, int]) -> dict[ParityClass, int]:
    """Collapse marks; all 16 syntactic classes appear, inadmissible ones as 0."""
    totals = {ParityClass.from_code(c): 0 for c in range(16)}
    for k, v in census.items():
        totals[k.cls] += v
    return totals


def odd_pair_indices(p: TwoSizePartition) -> frozenset[int]:
    """Pairs ``i`` with ``odd_part(l_i) != odd_part(m_i)`` mod 8."""
    out = set()
    for i, (size, mult) in enumerate(p.pairs, start=1):
        if (odd_part(size) - odd_part(mult)) % 8:
            out.add(i)
    return frozenset(out)


def odd_pair_mask(table: np.ndarray) -> np.ndarray:
    """``(N, 2)`` boolean array, the array form of ``odd_pair_indices``."""
    odd = odd_part_array(table) % 8
    return np.column_stack((odd[:, 0] != odd[:, 1], odd[:, 2] != odd[:, 3]))
