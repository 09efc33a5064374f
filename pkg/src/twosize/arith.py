"""2-adic decomposition and divisor functions."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import NamedTuple

import numpy as np

# Inputs are held to the unsigned 64-bit range; bulk tables use int64.
MAX_INT = 2**64 - 1


class OddEvenDecomposition(NamedTuple):
    """``m == 2**valuation * odd_part`` with ``odd_part`` odd."""

    valuation: int
    odd_part: int


def _check_positive(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    if n > MAX_INT:
        raise OverflowError(f"{name}={n} exceeds the 64-bit range")
    return n


def decompose_pow2(m: int) -> OddEvenDecomposition:
    """Split ``m`` into its 2-adic valuation and largest odd divisor."""
    m = _check_positive(m, "m")
    k = (m & -m).bit_length() - 1
    return OddEvenDecomposition(k, m >> k)


def valuation2(m: int) -> int:
    return decompose_pow2(m).valuation


def odd_part(m: int) -> int:
    return decompose_pow2(m).odd_part


@lru_cache(maxsize=1 << 16)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order (trial division)."""
    return list(_divisors(_check_positive(n)))


def divisor_count(n: int) -> int:
    return len(_divisors(_check_positive(n)))


def divisor_sum(n: int) -> int:
    return sum(_divisors(_check_positive(n)))


def divisor_count_table(N: int) -> np.ndarray:
    """``d(k)`` for ``k = 0..N`` with ``d(0) = 0``, by sieving."""
    d = np.zeros(N + 1, dtype=np.int64)
    for i in range(1, N + 1):
        d[i::i] += 1
    return d


# Array counterparts used by the bulk census and map scans.

def valuation2_array(x: np.ndarray) -> np.ndarray:
    low = x & -x
    # exact: low is a power of two well inside float64's mantissa range
    return np.log2(low.astype(np.float64)).astype(np.int64)


def odd_part_array(x: np.ndarray) -> np.ndarray:
    return x // (x & -x)
