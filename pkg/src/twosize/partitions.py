"""Partitions with a fixed number of distinct part sizes.

A partition is held in frequency notation: ``(size, multiplicity)`` pairs
with sizes strictly decreasing.  ``TwoSizePartition`` is the special case
of exactly two sizes and is what the census and the maps operate on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

import numpy as np

from .arith import _check_positive, divisor_count, divisor_sum


class PartitionError(ValueError):
    """An invalid partition was constructed or requested."""


class PartitionFormatError(PartitionError):
    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True, slots=True)
class FrequencyPartition:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(s), int(m)) for s, m in self.pairs)
        if not pairs:
            raise PartitionError("a partition needs at least one part")
        for i, (s, m) in enumerate(pairs):
            if s < 1:
                raise PartitionError(f"part size must be positive, got {s}")
            if m < 1:
                raise PartitionError(f"multiplicity of {s} must be positive, got {m}")
            if i and s >= pairs[i - 1][0]:
                raise PartitionError(
                    f"part sizes must strictly decrease, got {pairs[i - 1][0]} then {s}"
                )
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_parts(cls, parts) -> "FrequencyPartition":
        """Build from a flat list of parts in any order, e.g. ``(4, 2, 1, 1)``."""
        counts: dict[int, int] = {}
        for x in parts:
            counts[x] = counts.get(x, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def weight(self) -> int:
        return sum(s * m for s, m in self.pairs)

    @property
    def num_sizes(self) -> int:
        return len(self.pairs)

    def parts(self) -> list[int]:
        return [s for s, m in self.pairs for _ in range(m)]

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True, slots=True)
class TwoSizePartition:
    """``large_part^large_mult small_part^small_mult`` with ``large_part > small_part``."""

    large_part: int
    large_mult: int
    small_part: int
    small_mult: int

    def __post_init__(self):
        if not (self.large_part > self.small_part >= 1):
            raise PartitionError(
                f"need large_part > small_part >= 1, got {self.large_part}, {self.small_part}"
            )
        if self.large_mult < 1 or self.small_mult < 1:
            raise PartitionError(
                f"multiplicities must be positive, got {self.large_mult}, {self.small_mult}"
            )

    @classmethod
    def from_pairs(cls, first, second) -> "TwoSizePartition":
        """Order two ``(size, mult)`` pairs so the larger size leads."""
        if first[0] == second[0]:
            raise PartitionError(f"part sizes coincide ({first[0]}); not a two-size partition")
        if first[0] < second[0]:
            first, second = second, first
        return cls(first[0], first[1], second[0], second[1])

    @property
    def quad(self) -> tuple[int, int, int, int]:
        return (self.large_part, self.large_mult, self.small_part, self.small_mult)

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.large_part, self.large_mult), (self.small_part, self.small_mult))

    @property
    def weight(self) -> int:
        return self.large_part * self.large_mult + self.small_part * self.small_mult

    def to_frequency(self) -> FrequencyPartition:
        return FrequencyPartition(self.pairs)

    def __str__(self):
        return format_partition(self)


AnyPartition = Union[FrequencyPartition, TwoSizePartition]


def as_two_size(p: AnyPartition) -> TwoSizePartition:
    if isinstance(p, TwoSizePartition):
        return p
    if len(p.pairs) != 2:
        raise PartitionError(f"{format_partition(p)} has {len(p.pairs)} part sizes, not 2")
    return TwoSizePartition.from_pairs(*p.pairs)


def weight(p: AnyPartition) -> int:
    return p.weight


# -- enumeration ------------------------------------------------------------

@lru_cache(maxsize=8)
def _pair_tables(limit: int):
    """All ``(a, m)`` with ``a*m <= limit`` in two orders.

    ``desc``: by descending ``a`` then descending ``m``.
    ``byprod``: by product, then descending ``a`` within a product.
    """
    a = np.arange(1, limit + 1, dtype=np.int64)
    counts = limit // a
    A = np.repeat(a, counts)
    starts = np.cumsum(counts) - counts
    M = np.arange(A.size, dtype=np.int64) - np.repeat(starts, counts) + 1
    desc = (A[::-1].copy(), M[::-1].copy())
    order = np.lexsort((-A, A * M))
    byprod = (A[order], M[order], (A * M)[order])
    for arr in (*desc, *byprod):
        arr.flags.writeable = False
    return desc, byprod


def two_size_table(n: int) -> np.ndarray:
    """Every two-size partition of ``n`` as rows ``(l1, m1, l2, m2)``.

    Rows are in canonical order: descending ``l1``, then ``m1``, then ``l2``.
    Built by splitting ``n`` into two products ``l1*m1 + l2*m2`` and keeping
    the splits with ``l2 < l1``.
    """
    return _two_size_table(_check_positive(n))


@lru_cache(maxsize=32)
def _two_size_table(n: int) -> np.ndarray:
    if n < 3:
        table = np.zeros((0, 4), dtype=np.int64)
        table.flags.writeable = False
        return table
    (A1, M1), (A2, M2, P2) = _pair_tables(1 << max(4, (n - 1).bit_length()))
    first = A1 * M1 < n
    A1, M1 = A1[first], M1[first]
    # pairs with product r sit at P2[lo[r]:lo[r + 1]], larger sizes first
    lo = np.searchsorted(P2, np.arange(n + 1), side="left")
    rest = n - A1 * M1
    c = lo[rest + 1] - lo[rest]
    offs = np.arange(c.sum()) - np.repeat(np.cumsum(c) - c, c)
    second = np.repeat(lo[rest], c) + offs
    l1 = np.repeat(A1, c)
    keep = A2[second] < l1
    second = second[keep]
    table = np.column_stack((l1[keep], np.repeat(M1, c)[keep], A2[second], M2[second]))
    table.flags.writeable = False
    return table


def table_to_partitions(table: np.ndarray) -> list[TwoSizePartition]:
    return [TwoSizePartition(*row) for row in table.tolist()]


def enumerate_two_size(n: int) -> list[TwoSizePartition]:
    """All partitions of ``n`` into exactly two part sizes, canonical order."""
    return table_to_partitions(two_size_table(n))


def iter_k_sizes(n: int, k: int) -> Iterator[FrequencyPartition]:
    """Partitions of ``n`` with exactly ``k`` distinct sizes.

    Order: descending first size, then descending first multiplicity, and so on.
    """
    n = _check_positive(n)
    k = _check_positive(k, "k")
    for pairs in _k_size_pairs(n, k, n + 1):
        yield FrequencyPartition(pairs)


def _k_size_pairs(n, k, below):
    if k == 1:
        # last size must divide what is left
        for a in range(min(below - 1, n), 0, -1):
            if n % a == 0:
                yield ((a, n // a),)
        return
    # k-1 distinct smaller sizes weigh at least 1 + 2 + ... + (k-1)
    reserve = k * (k - 1) // 2
    for a in range(min(below - 1, n - reserve), k - 1, -1):
        for m in range((n - reserve) // a, 0, -1):
            for rest in _k_size_pairs(n - a * m, k - 1, a):
                yield ((a, m),) + rest


def count_k_sizes(n: int, k: int) -> int:
    """``nu_k(n)`` by exhaustive enumeration."""
    n = _check_positive(n)
    k = _check_positive(k, "k")
    if k == 2:
        return len(two_size_table(n))
    return sum(1 for _ in _k_size_pairs(n, k, n + 1))


def nu2_closed_form(n: int) -> int:
    """``nu_2(n)`` from the divisor-convolution formula of MacMahon and Andrews."""
    n = _check_positive(n)
    conv = sum(divisor_count(k) * divisor_count(n - k) for k in range(1, n))
    total = conv - divisor_sum(n) + divisor_count(n)
    if total % 2:
        raise ArithmeticError(f"odd numerator {total} in the nu_2 formula at n={n}")
    return total // 2


_SERIES_MAX_N = 10**4


def nu_k_series(k: int, N: int) -> list[int]:
    """Coefficients ``[q^0 .. q^N]`` of ``sum q^(a1+..+ak) / prod(1 - q^ai)``.

    The sum runs over strictly increasing ``a1 < ... < ak``, i.e. ``k``
    distinct part sizes.  Truncated polynomial arithmetic, exact in int64
    for the supported range.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"nu_k_series supports k in (1, 2, 3), got {k}")
    if not 0 <= N <= _SERIES_MAX_N:
        raise ValueError(f"N must be in 0..{_SERIES_MAX_N}, got {N}")
    # S[j] = series over all j-subsets of the sizes processed so far
    S = np.zeros((k + 1, N + 1), dtype=np.int64)
    S[0, 0] = 1
    for a in range(1, N + 1):
        for j in range(min(k, a), 0, -1):
            term = np.zeros(N + 1, dtype=np.int64)
            term[a:] = S[j - 1, : N + 1 - a]
            S[j] += _divide_one_minus_qa(term, a)
    # every coefficient is bounded by (N(ln N + 1))^k < 2**53 here
    assert S.min() >= 0
    return S[k].tolist()


def _divide_one_minus_qa(series: np.ndarray, a: int) -> np.ndarray:
    """Multiply by ``1/(1 - q^a)``: running sums along each residue class mod ``a``."""
    size = series.size
    rows = -(-size // a)
    padded = np.zeros(rows * a, dtype=series.dtype)
    padded[:size] = series
    return np.cumsum(padded.reshape(rows, a), axis=0).reshape(-1)[:size]


def ferrers_conjugate(p: AnyPartition) -> FrequencyPartition:
    """Transpose the Ferrers diagram, working directly in frequency notation.

    With sizes ``s1 > ... > sk`` and running multiplicity totals ``M1 < ... < Mk``,
    the conjugate has size ``Mi`` repeated ``si - s(i+1)`` times.
    """
    pairs = p.pairs
    out = []
    running = 0
    for i, (s, m) in enumerate(pairs):
        running += m
        nxt = pairs[i + 1][0] if i + 1 < len(pairs) else 0
        out.append((running, s - nxt))
    return FrequencyPartition(tuple(reversed(out)))


def is_self_conjugate(p: AnyPartition) -> bool:
    return ferrers_conjugate(p).pairs == tuple(p.pairs)


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(r"(0|[1-9][0-9]*)(?:\^(0|[1-9][0-9]*))?")


def parse_partition(text: str) -> FrequencyPartition:
    """Parse ``"4^6 3^2"`` style text; a bare ``"5"`` means ``5^1``."""
    if not text:
        raise PartitionFormatError("empty partition text")
    pairs = []
    for token in text.split(" "):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise PartitionFormatError(f"malformed token {token!r}", token)
        size = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if size == 0:
            raise PartitionFormatError(f"zero part in token {token!r}", token)
        if mult == 0:
            raise PartitionFormatError(f"zero multiplicity in token {token!r}", token)
        if pairs and size >= pairs[-1][0]:
            raise PartitionFormatError(
                f"part sizes must strictly decrease: token {token!r} follows {pairs[-1][0]}",
                token,
            )
        pairs.append((size, mult))
    return FrequencyPartition(tuple(pairs))


def format_partition(p: AnyPartition) -> str:
    return " ".join(f"{s}^{m}" for s, m in p.pairs)
