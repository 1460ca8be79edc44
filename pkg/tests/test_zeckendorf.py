"""Tests for greedy encoding, the minimality oracle and digit blocks."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeckpow.fib_core import fib
from zeckpow.zeckendorf import (
    FibBlock,
    ZeckRep,
    decode,
    digit_sum,
    encode,
    from_blocks,
    from_digits,
    minimal_count_oracle,
    noninterfering,
    to_digits,
)


def test_encode_examples():
    assert encode(6).indices == (2, 5)
    assert encode(1).indices == (2,)
    assert encode(0).indices == ()


def test_encode_100_against_subset_search():
    # exhaustive oracle: the unique non-adjacent index set summing to 100
    hits = []
    for r in range(1, 6):
        for combo in itertools.combinations(range(2, 12), r):
            if any(b - a == 1 for a, b in zip(combo, combo[1:])):
                continue
            if sum(fib(j) for j in combo) == 100:
                hits.append(combo)
    assert hits == [(4, 6, 11)]
    assert encode(100).indices == (4, 6, 11)


def test_decode_examples():
    assert decode(ZeckRep((2, 5))) == 6
    assert decode(ZeckRep(())) == 0
    assert decode(ZeckRep((4, 9, 11))) == 3 + 34 + 89 == 126


def test_zeckrep_rejects_bad_indices():
    with pytest.raises(ValueError):
        ZeckRep((1, 5))
    with pytest.raises(ValueError):
        ZeckRep((3, 4))  # adjacent
    with pytest.raises(ValueError):
        ZeckRep((5, 3))  # unordered


def test_encode_rejects_negative():
    with pytest.raises(ValueError):
        encode(-1)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 24))
def test_round_trip_and_validity(x):
    rep = encode(x)
    assert decode(rep) == x
    # ZeckRep construction already rejects adjacency, re-check explicitly
    assert all(b - a >= 2 for a, b in zip(rep.indices, rep.indices[1:]))


def test_round_trip_boundaries():
    for x in (0, 1, 2, 3, 4, fib(30) - 1, fib(30), fib(30) + 1, 10 ** 6):
        assert decode(encode(x)) == x


def test_digit_sum_examples():
    assert digit_sum(144) == 1  # 144 = F_12
    assert digit_sum(6) == 2
    assert digit_sum(0) == 0
    assert digit_sum(10 ** 4) == 6


def test_oracle_examples():
    assert minimal_count_oracle(8) == 1
    assert minimal_count_oracle(6) == 2


def test_oracle_bounds_checked():
    with pytest.raises(ValueError):
        minimal_count_oracle(0)
    with pytest.raises(ValueError):
        minimal_count_oracle(1001, cap=1000)


def test_greedy_matches_oracle_prefix():
    # the full 10^4 run lives in the acceptance suite
    for x in range(1, 2001):
        assert digit_sum(x) == minimal_count_oracle(x, cap=2000)


def test_subadditive_full_range():
    table = [digit_sum(x) for x in range(4001)]
    for a in range(1, 2001):
        ta = table[a]
        for b in range(1, 2001):
            assert table[a + b] <= ta + table[b]


def test_not_submultiplicative_witness():
    assert digit_sum(2 * 3) == 2
    assert digit_sum(2) * digit_sum(3) == 1
    assert digit_sum(6) > digit_sum(2) * digit_sum(3)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10 ** 18))
def test_digit_count_at_most_half_top_index(x):
    rep = encode(x)
    assert len(rep) <= rep.top // 2


def test_fib_block_validation():
    with pytest.raises(ValueError):
        FibBlock((), 5)
    with pytest.raises(ValueError):
        FibBlock((0, 1), 5)
    with pytest.raises(ValueError):
        FibBlock((1, 2), 5)
    with pytest.raises(ValueError):
        FibBlock((1, 0, 1), 1)  # offset below 2


def test_block_value_and_positions():
    b = FibBlock.from_string("101", 2)
    assert b.one_positions() == [2, 4]
    assert b.value() == fib(4) + fib(2) == 4
    assert b.span == (2, 4)
    assert b.one_count() == 2


def test_from_blocks_examples():
    assert from_blocks([FibBlock.from_string("101", 2)]) == 4
    assert from_blocks([FibBlock.from_string("10001", 2)]) == fib(6) + fib(2) == 9
    # overlapping blocks simply add their values
    two = [FibBlock.from_string("101", 2), FibBlock.from_string("101", 2)]
    assert from_blocks(two) == 8


def test_noninterfering():
    a = FibBlock.from_string("101", 2)
    b = FibBlock.from_string("101", 7)
    assert noninterfering([a, b])
    assert noninterfering([])
    assert not noninterfering([a, a])  # identical blocks overlap
    # spans disjoint but 1-digits adjacent across the boundary
    c = FibBlock.from_string("101", 5)
    assert not noninterfering([a, c])
    # a block with internal adjacent ones interferes with itself
    assert not noninterfering([FibBlock.from_string("11", 4)])


def test_digit_string_round_trip():
    assert to_digits(encode(6)) == "1001"
    assert to_digits(encode(0)) == "0"
    assert from_digits("1001").indices == (2, 5)
    assert from_digits("0001001").indices == (2, 5)  # leading zeros tolerated
    assert from_digits("0").indices == ()
    for x in (0, 1, 6, 100, 12345):
        assert decode(from_digits(to_digits(encode(x)))) == x


def test_from_digits_rejects_garbage():
    with pytest.raises(ValueError):
        from_digits("")
    with pytest.raises(ValueError):
        from_digits("10021")
    with pytest.raises(ValueError):
        from_digits("11")  # adjacent ones
