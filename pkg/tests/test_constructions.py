"""Tests for the extremal families and their block fixtures."""

import pytest

from zeckpow.constructions import (
    BelowThresholdError,
    bounded_power_witness,
    cube_blocks,
    family_member,
    lower_family,
    lower_power_upper_bound,
    lucas_power_remainder,
    scaled_lower_family,
    scaled_upper_family,
    square_blocks,
    upper_family,
    upper_power_lower_bound,
    witness_threshold,
)
from zeckpow.fib_core import fib, lucas
from zeckpow.lucas_algebra import value
from zeckpow.zeckendorf import digit_sum, encode, from_blocks, noninterfering


def test_upper_family_examples():
    m = upper_family(2)
    assert m.n == 4 and digit_sum(m.n) == 2
    m = upper_family(5)
    assert m.n == 76 and digit_sum(m.n) == 2
    # k = 1 degenerates: L_1 = 1 is a single Fibonacci number
    assert upper_family(1).n == 1 and digit_sum(1) == 1


def test_upper_family_two_digits():
    for k in range(2, 41):
        assert digit_sum(upper_family(k).n) == 2


def test_lower_family_examples():
    m = lower_family(7)
    assert digit_sum(m.n) == 13
    assert digit_sum(m.n ** 2) == 26
    assert digit_sum(lower_family(10).n ** 3) == 60


def test_family_forms_match_values():
    for k in (1, 3, 7):
        for mem in (upper_family(k), lower_family(k),
                    scaled_lower_family(3, k), scaled_upper_family(3, k)):
            assert value(mem.form) == mem.n


def test_scaled_families_reduce_to_base():
    assert scaled_lower_family(1, 7).n == lower_family(7).n
    assert scaled_upper_family(1, 7).n == upper_family(7).n


def test_scaled_upper_small_digit_count():
    # 2 L_59 = F_62 + F_56
    n = scaled_upper_family(2, 30).n
    assert n == 2 * lucas(59)
    assert digit_sum(n) == 2 <= 4
    assert encode(n).indices == (56, 62)


def test_scaled_lower_digit_count_frozen():
    # derived by direct computation of 2*(L_80+L_60+L_40+L_20-1)
    assert digit_sum(scaled_lower_family(2, 10).n) == 14
    # the requested qualitative example (m=5, k=15) computes to 64/17 > 1;
    # a ratio below 1 first occurs much further out, e.g. m=2, k=60
    n = scaled_lower_family(5, 15).n
    assert digit_sum(n) == 17 and digit_sum(n ** 2) == 64
    n = scaled_lower_family(2, 60).n
    assert digit_sum(n) == 64 and digit_sum(n ** 2) == 44  # ratio 11/16 < 1


def test_scaled_upper_large_ratio_witness():
    n = scaled_upper_family(3, 20).n
    assert digit_sum(n) == 4 and digit_sum(n ** 2) == 37  # ratio 37/4 > 2


def test_family_member_dispatch():
    assert family_member("upper", 3).n == upper_family(3).n
    assert family_member("thm4", 3, m=2).n == scaled_lower_family(2, 3).n
    assert family_member("thm5", 3, m=2).n == scaled_upper_family(2, 3).n
    with pytest.raises(ValueError):
        family_member("nope", 3)


def test_member_record():
    rec = lower_family(7).record(powers=(2,))
    assert rec == {"family": "lower", "k": 7, "m": 1,
                   "n": "505618944674", "sF_n": 13, "sF_n2": 26}


def test_square_blocks_digit_budget():
    blocks = square_blocks(7)
    assert len(blocks) == 9
    assert sum(b.one_count() for b in blocks) == 26


def test_cube_blocks_digit_budget():
    blocks = cube_blocks(10)
    assert len(blocks) == 13
    assert sum(b.one_count() for b in blocks) == 60


def test_square_blocks_reconstruct():
    for k in range(4, 31):
        assert from_blocks(square_blocks(k)) == lower_family(k).n ** 2


def test_square_blocks_noninterference_threshold():
    assert not noninterfering(square_blocks(6))
    for k in range(7, 31):
        assert noninterfering(square_blocks(k))


def test_cube_blocks_reconstruct():
    for k in range(6, 26):
        assert from_blocks(cube_blocks(k)) == lower_family(k).n ** 3


def test_cube_blocks_below_threshold():
    # at k = 9 the blocks still overlap and the digit count differs from 60
    assert not noninterfering(cube_blocks(9))
    assert digit_sum(lower_family(9).n ** 3) == 57
    for k in range(10, 26):
        assert noninterfering(cube_blocks(k))


def test_linear_digit_pattern():
    for k in range(3, 31):
        idx = encode(lower_family(k).n).indices
        low = [j for j in idx if j < 2 * k + 2]
        assert low == list(range(2, 2 * k - 1, 2)) + [2 * k + 1]
        assert len(idx) == k + 6


def test_power_remainder_identity():
    for k in range(3, 26):
        j = 2 * k - 1
        for h in range(2, 6):
            r = lucas_power_remainder(k, h)
            assert lucas(j) ** h == fib(h * j + 1) + fib(h * j - 1) - r
            assert r > 0
            assert r <= 2 ** (h - 1) * lucas((h - 2) * j, allow_negative=True)


def test_power_remainder_h2_is_two():
    # squares of odd-indexed Lucas numbers: L_j^2 = L_{2j} - 2
    for k in range(2, 10):
        assert lucas_power_remainder(k, 2) == 2


def test_upper_power_lower_bound():
    for h in (2, 3, 4, 5):
        for k in range(10, 31):
            assert upper_power_lower_bound(k, h)
    # the bound is weak enough to hold even at tiny k
    assert upper_power_lower_bound(2, 2)


def test_lower_power_upper_bound():
    for k in range(7, 20):
        assert lower_power_upper_bound(k, 2)
    for k in range(10, 20):
        assert lower_power_upper_bound(k, 3)


def test_bounded_power_witness():
    mem = bounded_power_witness(13, 2)
    assert mem.k == 7
    assert digit_sum(mem.n) == 13
    assert digit_sum(mem.n ** 2) == 26 <= 520
    mem = bounded_power_witness(16, 3)
    assert mem.k == 10
    assert digit_sum(mem.n ** 3) == 60 <= 1170


def test_bounded_power_witness_below_threshold():
    with pytest.raises(BelowThresholdError) as e:
        bounded_power_witness(5, 2)
    assert e.value.threshold == witness_threshold(2)
    assert 7 <= e.value.threshold <= 13


def test_family_validation():
    with pytest.raises(ValueError):
        upper_family(0)
    with pytest.raises(ValueError):
        scaled_lower_family(0, 3)
