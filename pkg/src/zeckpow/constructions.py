"""Extremal families for the digit sums of powers, with their exact claims.

Two base families drive everything:

* upper family  n_k = L_{2k-1}: two Zeckendorf digits, while n_k^h keeps
  on the order of 2k digits — the ratio digit_sum(n^h)/digit_sum(n) grows
  like log n along it.
* lower family  n_k = L_{8k} + L_{6k} + L_{4k} + L_{2k} - 1: k+6 digits,
  while its square and cube collapse to 26 and 60 digits once the blocks
  separate (k >= 7 and k >= 10) — the ratio shrinks like 1/log n.

Scaled variants multiply either family by m >= 1.  The square/cube digit
block lists are stored as literal fixtures so reconstruction tests check
the transcription, not the code that could re-derive it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import certified
from .fib_core import lucas
from .lucas_algebra import LucasForm, make_form, value
from .zeckendorf import FibBlock, digit_sum

FAMILY_IDS = ("upper", "lower", "thm4", "thm5")


@dataclass(frozen=True)
class FamilyMember:
    """One constructed integer n with its generating Lucas form."""

    family_id: str
    k: int
    m: int
    n: int
    form: LucasForm

    def record(self, powers: tuple[int, ...] = ()) -> dict:
        """Serializable summary; big integers as decimal strings."""
        rec = {
            "family": self.family_id,
            "k": self.k,
            "m": self.m,
            "n": str(self.n),
            "sF_n": digit_sum(self.n),
        }
        for h in powers:
            rec["sF_n%d" % h] = digit_sum(self.n ** h)
        return rec


def upper_family(k: int) -> FamilyMember:
    """n_k = L_{2k-1}; digit sum 2 for every k >= 2."""
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    form = make_form({2 * k - 1: 1})
    return FamilyMember("upper", k, 1, value(form), form)


def lower_family(k: int) -> FamilyMember:
    """n_k = L_{8k} + L_{6k} + L_{4k} + L_{2k} - 1; digit sum k+6 for k >= 2."""
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    form = make_form({8 * k: 1, 6 * k: 1, 4 * k: 1, 2 * k: 1}, -1)
    return FamilyMember("lower", k, 1, value(form), form)


def scaled_lower_family(m: int, k: int) -> FamilyMember:
    """m times the lower family member (family id "thm4")."""
    if m < 1:
        raise ValueError("m must be >= 1, got %d" % m)
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    form = make_form({8 * k: m, 6 * k: m, 4 * k: m, 2 * k: m}, -m)
    return FamilyMember("thm4", k, m, value(form), form)


def scaled_upper_family(m: int, k: int) -> FamilyMember:
    """m times L_{2k-1} (family id "thm5")."""
    if m < 1:
        raise ValueError("m must be >= 1, got %d" % m)
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    form = make_form({2 * k - 1: m})
    return FamilyMember("thm5", k, m, value(form), form)


def family_member(family_id: str, k: int, m: int = 1) -> FamilyMember:
    """Dispatch by family id string."""
    if family_id == "upper":
        return upper_family(k)
    if family_id == "lower":
        return lower_family(k)
    if family_id == "thm4":
        return scaled_lower_family(m, k)
    if family_id == "thm5":
        return scaled_upper_family(m, k)
    raise ValueError("unknown family %r (expected one of %s)" % (family_id, ", ".join(FAMILY_IDS)))


# Digit blocks of (lower family)^2: nine blocks, 26 one-digits in total.
_SQUARE_BLOCKS = (
    ("101", 16, -1),
    ("1000001", 14, -3),
    ("1010101", 12, -3),
    ("1001001001", 10, -5),
    ("101", 8, -1),
    ("1000001", 6, -3),
    ("1010101", 4, -3),
    ("1001001001", 2, -5),
    ("10001", 0, 2),
)

# Digit blocks of (lower family)^3: thirteen blocks, 60 one-digits in total.
_CUBE_BLOCKS = (
    ("101", 24, -1),
    ("1010101", 22, -3),
    ("10001010001", 20, -5),
    ("10010000001001", 18, -7),
    ("10000100101001", 16, -7),
    ("10000100101001", 14, -7),
    ("10010000001001", 12, -7),
    ("10100100100001", 10, -7),
    ("100100010100001001", 8, -9),
    ("100101000001001001", 6, -9),
    ("100100010100001001", 4, -9),
    ("100001010100101001", 2, -9),
    ("10100", 0, 2),
)


def _blocks_at(fixtures, k: int) -> list[FibBlock]:
    return [FibBlock.from_string(d, slope * k + shift) for d, slope, shift in fixtures]


def square_blocks(k: int) -> list[FibBlock]:
    """The transcribed digit blocks of lower_family(k).n ** 2 (k >= 4)."""
    return _blocks_at(_SQUARE_BLOCKS, k)


def cube_blocks(k: int) -> list[FibBlock]:
    """The transcribed digit blocks of lower_family(k).n ** 3 (k >= 6)."""
    return _blocks_at(_CUBE_BLOCKS, k)


def lucas_power_remainder(k: int, h: int) -> int:
    """R such that L_{2k-1}^h = F_{h(2k-1)+1} + F_{h(2k-1)-1} - R.

    R collects the lower-order half of the binomial expansion of the power;
    it is positive and at most 2^{h-1} L_{(h-2)(2k-1)}, which the claim
    suite checks in exact arithmetic.
    """
    if k < 1 or h < 2:
        raise ValueError("need k >= 1 and h >= 2")
    j = 2 * k - 1
    tot = sum(
        comb(h, i) * (-1) ** ((i + 1) * j) * lucas((h - 2 * i) * j, allow_negative=True)
        for i in range(1, h)
    )
    if tot % 2:
        raise ArithmeticError("remainder sum is odd for k=%d, h=%d" % (k, h))
    return tot // 2


def upper_power_lower_bound(k: int, h: int) -> bool:
    """digit_sum(L_{2k-1}^h) >= 2k - 3h/4 - 3, compared in exact integers."""
    if k < 1 or h < 2:
        raise ValueError("need k >= 1 and h >= 2")
    s = digit_sum(lucas(2 * k - 1) ** h)
    return 4 * s >= 8 * k - 3 * h - 12


def lower_power_upper_bound(k: int, h: int) -> bool:
    """digit_sum(lower_family(k).n ** h) <= (h log9/log phi + 3)(4h + 1)."""
    if k < 1 or h < 2:
        raise ValueError("need k >= 1 and h >= 2")
    s = digit_sum(lower_family(k).n ** h)
    return certified.sign(
        lambda c: (c.num(h) * c.ln(9) / c.ln_phi + 3) * (4 * h + 1) - c.num(s)) > 0


class BelowThresholdError(ValueError):
    """Requested digit count is below the family's working threshold."""

    def __init__(self, n_digits: int, h: int, threshold: int):
        super().__init__(
            "no witness with %d digits for power %d; construction works from %d digits"
            % (n_digits, h, threshold))
        self.n_digits = n_digits
        self.h = h
        self.threshold = threshold


def _witness_ok(n_digits: int, h: int) -> bool:
    k = n_digits - 6
    if k < 1:
        return False
    mem = lower_family(k)
    return digit_sum(mem.n) == n_digits and digit_sum(mem.n ** h) <= 130 * h * h


_witness_threshold_cache: dict[int, int] = {}


def witness_threshold(h: int) -> int:
    """Smallest digit count from which ``bounded_power_witness`` works,
    discovered by scanning until the check holds ten times in a row."""
    t = _witness_threshold_cache.get(h)
    if t is None:
        n = 7
        while not all(_witness_ok(n + i, h) for i in range(10)):
            n += 1
            if n > 200:
                raise ArithmeticError("no stable witness threshold for h=%d" % h)
        _witness_threshold_cache[h] = t = n
    return t


def bounded_power_witness(n_digits: int, h: int) -> FamilyMember:
    """A member that is a sum of ``n_digits`` distinct non-adjacent Fibonacci
    numbers and whose h-th power uses at most 130 h^2 of them.

    Raises BelowThresholdError (carrying the discovered threshold) when the
    requested digit count is too small for the lower family.
    """
    if h < 2:
        raise ValueError("need h >= 2, got %d" % h)
    if n_digits - 6 >= 1 and _witness_ok(n_digits, h):
        return lower_family(n_digits - 6)
    raise BelowThresholdError(n_digits, h, witness_threshold(h))
