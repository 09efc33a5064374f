import pytest
from hypothesis import given
from hypothesis import strategies as st

from twosize.arith import (
    MAX_INT,
    decompose_pow2,
    divisor_count,
    divisor_count_table,
    divisor_sum,
    divisors,
)

from oracles import d_brute, divisor_sieve, halve_out, sigma_brute


@pytest.mark.parametrize("m, expected", [(1, (0, 1)), (12, (2, 3)), (6, (1, 3))])
def test_decompose_examples(m, expected):
    assert decompose_pow2(m) == expected


def test_decompose_reconstructs_up_to_a_million():
    for m in range(1, 10**6 + 1):
        k, t = decompose_pow2(m)
        assert t & 1 and (t << k) == m


def test_decompose_matches_repeated_halving():
    for m in range(1, 10**4 + 1):
        assert decompose_pow2(m) == halve_out(m)


@given(st.integers(min_value=1, max_value=MAX_INT))
def test_decompose_full_64_bit_range(m):
    k, t = decompose_pow2(m)
    assert t % 2 == 1
    assert 2**k * t == m


@pytest.mark.parametrize("bad", [0, -3])
def test_nonpositive_rejected(bad):
    for f in (decompose_pow2, divisors, divisor_count, divisor_sum):
        with pytest.raises(ValueError):
            f(bad)


def test_overflow_rejected():
    with pytest.raises(OverflowError):
        decompose_pow2(MAX_INT + 1)


def test_non_integer_rejected():
    with pytest.raises(TypeError):
        divisors(6.0)
    with pytest.raises(TypeError):
        divisors(True)


@pytest.mark.parametrize("n, expected", [(1, [1]), (14, [1, 2, 7, 14]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("n, d, s", [(6, 4, 12), (1, 1, 1), (14, 4, 24), (7, 2, 8)])
def test_divisor_function_examples(n, d, s):
    assert divisor_count(n) == d
    assert divisor_sum(n) == s


def test_divisor_functions_against_sieve():
    d, s = divisor_sieve(10**4)
    table = divisor_count_table(10**4)
    for n in range(1, 10**4 + 1):
        divs = divisors(n)
        assert divs == sorted(set(divs)) and divs[0] == 1 and divs[-1] == n
        assert divisor_count(n) == len(divs) == d[n] == table[n]
        assert divisor_sum(n) == sum(divs) == s[n]


def test_divisor_functions_against_brute_force_small():
    for n in range(1, 300):
        assert divisor_count(n) == d_brute(n)
        assert divisor_sum(n) == sigma_brute(n)


def test_divisors_returns_fresh_list():
    divisors(12).append(99)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_divisibility_on_16j_plus_14():
    # 8j+7 is never a square, so divisors of 16j+14 pair up
    for j in range(501):
        n = 16 * j + 14
        assert divisor_count(n) % 4 == 0
        assert divisor_sum(n) % 8 == 0
