"""Exact Fibonacci and Lucas numbers with golden-ratio digit estimates.

Everything is computed on Python ints, so results are exact at any size.
Both sequences are backed by one append-only table that only ever grows
within a process; entries already handed out are never touched again, so
concurrent readers are safe.  Floating point enters only through the
certified interval estimates used to bracket top digit indices.

Conventions: F_0 = 0, F_1 = F_2 = 1; L_0 = 2 and L_k = F_{k-1} + F_{k+1}
for k >= 1.  Negative Lucas indices follow L_{-n} = (-1)^n L_n and must be
requested explicitly.
"""

from __future__ import annotations

import bisect
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .certified import certified_ceil, certified_floor

_fib_table = [0, 1, 1]
_table_lock = threading.Lock()


def fib(j: int) -> int:
    """Return F_j.

    >>> fib(12)
    144
    """
    if j < 0:
        raise ValueError("Fibonacci index must be >= 0, got %d" % j)
    if j >= len(_fib_table):
        with _table_lock:
            while j >= len(_fib_table):
                _fib_table.append(_fib_table[-1] + _fib_table[-2])
    return _fib_table[j]


def fib_floor_index(x: int) -> int:
    """Largest index j with F_j <= x, preferring j = 2 over j = 1 for x = 1.

    Requires x >= 1.  This is the greedy step of Zeckendorf encoding.
    """
    if x < 1:
        raise ValueError("x must be >= 1, got %d" % x)
    if _fib_table[-1] <= x:
        with _table_lock:
            while _fib_table[-1] <= x:
                _fib_table.append(_fib_table[-1] + _fib_table[-2])
    return bisect.bisect_right(_fib_table, x) - 1


def fib_cache_size() -> int:
    """Number of Fibonacci values currently memoized."""
    return len(_fib_table)


def lucas(k: int, allow_negative: bool = False) -> int:
    """Return L_k.

    >>> lucas(0)
    2
    >>> lucas(4)
    7
    """
    if k < 0:
        if not allow_negative:
            raise ValueError("negative Lucas index %d (pass allow_negative=True)" % k)
        n = -k
        return -lucas(n) if n % 2 else lucas(n)
    if k == 0:
        return 2
    return fib(k - 1) + fib(k + 1)


@dataclass(frozen=True)
class Constants:
    """Golden-ratio constants governing Zeckendorf digit counts.

    The top index n of x satisfies n = log x / log phi + gamma with
    gamma in (delta, delta_prime).  The float fields are display-precision
    only; certified comparisons rebuild the quantities exactly.
    """

    phi: float
    delta: float
    delta_prime: float


_LOG_PHI = math.log((1.0 + math.sqrt(5.0)) / 2.0)

GOLDEN = Constants(
    phi=(1.0 + math.sqrt(5.0)) / 2.0,
    delta=math.log(math.sqrt(5.0)) / _LOG_PHI - 1.0,
    delta_prime=math.log(math.sqrt(5.0)) / _LOG_PHI + 1.5,
)


def delta_expr(c):
    """log(sqrt 5)/log(phi) - 1 in a certified-comparison context."""
    return c.ln(5) / (2 * c.ln_phi) - 1


def delta_prime_expr(c):
    """log(sqrt 5)/log(phi) + 3/2 in a certified-comparison context."""
    return c.ln(5) / (2 * c.ln_phi) + c.num(Fraction(3, 2))


def digit_index_estimate(x: int) -> tuple[int, int]:
    """Integer bracket guaranteed to contain the top Zeckendorf index of x.

    Returns (ceil(log x/log phi + delta), floor(log x/log phi + delta')).
    Requires x >= 1.
    """
    if x < 1:
        raise ValueError("digit index estimate needs x >= 1, got %d" % x)
    lo = certified_ceil(lambda c: c.ln(x) / c.ln_phi + delta_expr(c))
    hi = certified_floor(lambda c: c.ln(x) / c.ln_phi + delta_prime_expr(c))
    return lo, hi
