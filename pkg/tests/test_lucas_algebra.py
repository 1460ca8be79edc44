"""Tests for the Lucas-form algebra and Lucas-multiple digit blocks."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeckpow.fib_core import lucas
from zeckpow.lucas_algebra import (
    InterferenceError,
    LucasForm,
    form_digit_sum,
    lucas_power_direct,
    make_form,
    mul,
    multiple_offsets,
    multiple_stabilization_index,
    multiple_to_blocks,
    power,
    render_form,
    value,
)
from zeckpow.zeckendorf import digit_sum, from_blocks


def test_make_form_normalizes():
    f = make_form({3: 0, 5: 2}, 1)
    assert f.terms == {5: 2}
    # L_0 folds into the constant as 2 per coefficient
    g = make_form({0: 3, 2: 1})
    assert g.terms == {2: 1} and g.constant == 6
    # negative indices fold through L_{-n} = (-1)^n L_n
    h = make_form({-3: 1, 3: 1})
    assert h.terms == {} and h.constant == 0
    h2 = make_form({-4: 1})
    assert h2.terms == {4: 1}


def test_form_validation():
    with pytest.raises(ValueError):
        LucasForm({0: 1}, 0)
    with pytest.raises(ValueError):
        LucasForm({3: 0}, 0)


def test_value_examples():
    assert value(make_form({}, 9)) == 9
    f = make_form({8: 1, 6: 1, 4: 1, 2: 1}, -1)
    assert value(f) == 47 + 18 + 7 + 3 - 1 == 74


def test_mul_examples():
    f = mul(make_form({4: 1}), make_form({2: 1}))
    assert f == make_form({6: 1, 2: 1})
    assert value(f) == 21 == 7 * 3
    g = mul(make_form({3: 1}), make_form({3: 1}))
    assert g == make_form({6: 1}, -2)
    assert value(g) == 16 == 4 ** 2


def test_mul_identity_and_commutativity():
    one = make_form({}, 1)
    f = make_form({7: 3, 2: -1}, 5)
    assert mul(f, one) == f
    g = make_form({5: 2}, -3)
    assert mul(f, g) == mul(g, f)


forms = st.builds(
    make_form,
    st.dictionaries(st.integers(min_value=1, max_value=60),
                    st.integers(min_value=-100, max_value=100), max_size=4),
    st.integers(min_value=-100, max_value=100),
)


@settings(max_examples=300, deadline=None)
@given(forms, forms)
def test_mul_is_value_homomorphism(f, g):
    assert value(mul(f, g)) == value(f) * value(g)


@settings(max_examples=100, deadline=None)
@given(forms, forms, forms)
def test_mul_associative(f, g, h):
    assert mul(mul(f, g), h) == mul(f, mul(g, h))


def test_power_examples():
    f = make_form({9: 2}, 1)
    assert power(f, 1) == f
    assert value(power(f, 3)) == value(f) ** 3
    with pytest.raises(ValueError):
        power(f, 0)


def test_lower_form_square_coefficients_independent_of_k():
    # indices are (16,14,...,2)*k with coefficients 1,2,3,4,1,2,3,4 and constant 9
    for k in range(5, 21):
        f = make_form({8 * k: 1, 6 * k: 1, 4 * k: 1, 2 * k: 1}, -1)
        sq = power(f, 2)
        assert sq.constant == 9
        want = {16 * k: 1, 14 * k: 2, 12 * k: 3, 10 * k: 4,
                8 * k: 1, 6 * k: 2, 4 * k: 3, 2 * k: 4}
        assert sq.terms == want


def test_lower_form_cube_coefficients():
    coefs = (1, 3, 6, 10, 9, 9, 10, 12, 27, 28, 27, 24)
    for k in (5, 8, 12):
        f = make_form({8 * k: 1, 6 * k: 1, 4 * k: 1, 2 * k: 1}, -1)
        cu = power(f, 3)
        assert cu.constant == 11
        assert [cu.terms[j * k] for j in range(24, 0, -2)] == list(coefs)


def test_lower_form_power_coefficient_bound():
    f = make_form({24: 1, 18: 1, 12: 1, 6: 1}, -1)  # k = 3
    acc = f
    for h in range(2, 7):
        acc = mul(acc, f)
        assert len(acc.terms) == 4 * h
        assert all(0 < c <= 9 ** h for c in acc.terms.values())


def test_lucas_power_direct_examples():
    f = lucas_power_direct(1, 2)
    assert f == make_form({2: 1}, -2)
    assert value(f) == 1 == lucas(1) ** 2
    g = lucas_power_direct(3, 2)
    assert g == make_form({6: 1}, -2)
    assert value(g) == 16


def test_lucas_power_direct_matches_repeated_mul():
    for k in range(1, 16):
        base = make_form({k: 1})
        for h in range(2, 7):
            assert lucas_power_direct(k, h) == power(base, h)


def test_lucas_power_direct_symmetric_reading():
    # pairing i with h-i pre-combines symmetric terms; both readings agree
    for k in (2, 3, 5, 8):
        for h in (2, 3, 4, 5):
            terms: dict[int, int] = {}
            const = 0
            for i in range(h + 1):
                if 2 * i > h:
                    break
                c = math.comb(h, i) * (-1) ** (i * k)
                idx = (h - 2 * i) * k
                if 2 * i == h:
                    const += c  # the middle term appears once, halved
                else:
                    terms[idx] = terms.get(idx, 0) + c
            assert make_form(terms, const) == lucas_power_direct(k, h)


def test_multiple_to_blocks_examples():
    blocks = multiple_to_blocks(1, 10)
    assert len(blocks) == 1
    assert blocks[0].one_positions() == [9, 11]
    assert from_blocks(blocks) == lucas(10)

    blocks = multiple_to_blocks(2, 10)
    assert blocks[0].one_positions() == [7, 13]  # 2 L_k = F_{k+3} + F_{k-3}

    blocks = multiple_to_blocks(4, 20)
    assert blocks[0].one_positions() == [15, 18, 21, 24]
    assert from_blocks(blocks) == 4 * lucas(20)


def test_multiple_to_blocks_round_trip():
    for m in range(1, 51):
        k0 = multiple_stabilization_index(m)
        for k in range(k0, k0 + 6):
            assert from_blocks(multiple_to_blocks(m, k)) == m * lucas(k)


def test_multiple_to_blocks_interference():
    with pytest.raises(InterferenceError) as e:
        multiple_to_blocks(1, 2)
    assert e.value.k0 == 3
    assert multiple_to_blocks(1, 3)[0].one_positions() == [2, 4]


def test_multiple_offsets_stability():
    assert multiple_offsets(1) == (-1, 1)
    assert multiple_offsets(2) == (-3, 3)
    assert multiple_offsets(3) == (-3, -1, 1, 3)
    assert multiple_offsets(4) == (-5, -2, 1, 4)
    with pytest.raises(ValueError):
        multiple_offsets(0)


def test_multiple_block_length_bound():
    # span of the stable block is at most 2 log(sqrt5 * m)/log phi + 2
    lphi = math.log((1 + math.sqrt(5)) / 2)
    for m in range(1, 201):
        offs = multiple_offsets(m)
        span = offs[-1] - offs[0] + 1
        assert span <= 2 * math.log(math.sqrt(5) * m) / lphi + 2 + 1e-9


def test_form_digit_sum():
    assert form_digit_sum(make_form({}, 6)) == 2
    f = make_form({56: 1, 42: 1, 28: 1, 14: 1}, -1)  # lower family at k = 7
    assert form_digit_sum(f) == 13
    assert form_digit_sum(power(f, 2)) == 26
    with pytest.raises(ValueError):
        form_digit_sum(make_form({}, -5))


def test_render_form():
    f = make_form({8: 1, 6: 1, 4: 1, 2: 1}, -1)
    sq = power(f, 2)
    assert render_form(sq) == "L16+2·L14+3·L12+4·L10+L8+2·L6+3·L4+4·L2+9"
    assert render_form(make_form({}, 0)) == "0"
    assert render_form(make_form({5: -2}, 3)) == "-2·L5+3"
    assert render_form(make_form({56: 1, 42: 1, 28: 1, 14: 1}, -1)) == "L56+L42+L28+L14-1"


def test_digit_count_of_multiple_matches_block():
    for m in (1, 7, 50, 200):
        k0 = multiple_stabilization_index(m)
        blocks = multiple_to_blocks(m, k0 + 2)
        assert blocks[0].one_count() == digit_sum(m * lucas(k0 + 2))
