"""Zeckendorf numeration: greedy encoding, digit sums and digit blocks.

Every positive integer is uniquely a sum of Fibonacci numbers F_j with
j >= 2 and no two indices adjacent; the greedy algorithm finds that
expansion.  Its 1-digit count equals the least number of Fibonacci summands
(repetitions allowed), which ``minimal_count_oracle`` re-derives by an
independent coin-change dynamic program so the two routes can be checked
against each other.

Digit strings render most significant first, e.g. 6 = F_5 + F_2 = "1001".
"""

from __future__ import annotations

from dataclasses import dataclass

from .fib_core import fib, fib_floor_index


@dataclass(frozen=True)
class ZeckRep:
    """Strictly increasing Fibonacci indices, all >= 2, none adjacent.

    Empty only for the number 0.
    """

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if any(j < 2 for j in idx):
            raise ValueError("representation indices must be >= 2: %r" % (idx,))
        if any(b - a < 2 for a, b in zip(idx, idx[1:])):
            raise ValueError("adjacent or unordered indices: %r" % (idx,))

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def top(self) -> int:
        """Highest index; 0 for the empty representation."""
        return self.indices[-1] if self.indices else 0


def encode(x: int) -> ZeckRep:
    """Greedy Zeckendorf expansion of x >= 0.

    >>> encode(6).indices
    (2, 5)
    """
    if x < 0:
        raise ValueError("cannot encode negative integer %d" % x)
    out: list[int] = []
    while x > 0:
        j = fib_floor_index(x)
        out.append(j)
        x -= fib(j)
    return ZeckRep(tuple(reversed(out)))


def decode(rep: ZeckRep) -> int:
    """Sum of F_j over the representation's indices."""
    return sum(fib(j) for j in rep.indices)


def digit_sum(x: int) -> int:
    """Number of 1-digits in the Zeckendorf expansion of x (0 for x = 0).

    Equals the minimal number of Fibonacci summands for x >= 1.
    """
    return len(encode(x))


ORACLE_CAP_DEFAULT = 100_000

_dp_tables: dict[int, list[int]] = {}


def _dp_table(cap: int) -> list[int]:
    table = _dp_tables.get(cap)
    if table is None:
        coins = []
        j = 2
        while fib(j) <= cap:
            coins.append(fib(j))
            j += 1
        table = list(range(cap + 1))  # worst case: all-ones
        for c in coins:
            for x in range(c, cap + 1):
                t = table[x - c] + 1
                if t < table[x]:
                    table[x] = t
        _dp_tables[cap] = table
    return table


def minimal_count_oracle(x: int, cap: int = ORACLE_CAP_DEFAULT) -> int:
    """Least r such that x is a sum of r Fibonacci numbers, repetitions allowed.

    Classic unbounded coin-change dynamic program, built once per cap and
    then read-only.  Deliberately independent of the greedy encoder.
    """
    if not 1 <= x <= cap:
        raise ValueError("oracle accepts 1 <= x <= %d, got %d" % (cap, x))
    return _dp_table(cap)[x]


@dataclass(frozen=True)
class FibBlock:
    """Digit block (e_p ... e_0) read at offset l, worth sum of e_i F_{i+l}.

    ``digits`` is most significant first with a leading 1; offsets below 2
    are rejected because F_0 and F_1 do not occur in representations.
    """

    digits: tuple[int, ...]
    offset: int

    def __post_init__(self):
        if not self.digits:
            raise ValueError("empty digit block")
        if self.digits[0] != 1:
            raise ValueError("leading digit must be 1: %r" % (self.digits,))
        if any(d not in (0, 1) for d in self.digits):
            raise ValueError("digits must be 0/1: %r" % (self.digits,))
        if self.offset < 2:
            raise ValueError("block offset must be >= 2, got %d" % self.offset)

    @classmethod
    def from_string(cls, digits: str, offset: int) -> "FibBlock":
        """Build a block from a digit string like "1001001001"."""
        return cls(tuple(int(d) for d in digits), offset)

    @property
    def span(self) -> tuple[int, int]:
        """Lowest and highest Fibonacci index the block occupies."""
        return self.offset, self.offset + len(self.digits) - 1

    def one_positions(self) -> list[int]:
        """Fibonacci indices of the 1-digits, ascending."""
        p = len(self.digits) - 1
        return [self.offset + p - i for i, d in enumerate(self.digits) if d][::-1]

    def value(self) -> int:
        return sum(fib(j) for j in self.one_positions())

    def one_count(self) -> int:
        return sum(self.digits)


def from_blocks(blocks: list[FibBlock]) -> int:
    """Total value of the blocks.  Overlaps are allowed and simply add."""
    return sum(b.value() for b in blocks)


def noninterfering(blocks: list[FibBlock]) -> bool:
    """True when block index spans are pairwise disjoint and the combined
    digit string has no adjacent 1s, so digit counts add under summation."""
    spans = sorted(b.span for b in blocks)
    for (_, hi), (lo, _) in zip(spans, spans[1:]):
        if lo <= hi:
            return False
    ones = sorted(p for b in blocks for p in b.one_positions())
    return all(b - a >= 2 for a, b in zip(ones, ones[1:]))


def to_digits(rep: ZeckRep) -> str:
    """Digit string from index ``rep.top`` down to 2; "0" when empty."""
    if not rep.indices:
        return "0"
    ones = set(rep.indices)
    return "".join("1" if j in ones else "0" for j in range(rep.top, 1, -1))


def from_digits(s: str) -> ZeckRep:
    """Parse a digit string as produced by ``to_digits``.

    Leading zeros are tolerated; adjacency violations are rejected by the
    ZeckRep constructor.
    """
    s = s.strip()
    if not s or any(ch not in "01" for ch in s):
        raise ValueError("digit string must be nonempty over {0,1}: %r" % s)
    idx = tuple(j for j, ch in enumerate(reversed(s), start=2) if ch == "1")
    return ZeckRep(idx)
