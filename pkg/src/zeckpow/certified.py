"""Certified comparisons of exact quantities against logarithmic expressions.

Digit-count bounds here always compare an exact integer or rational with an
expression built from natural logarithms of integers and of the golden ratio.
Such a comparison must never be settled by rounding error, so expressions are
written once, as callables over a tiny evaluation context, and evaluated in
two stages:

1. plain floats, accepted only when the result clears a conservative margin;
2. otherwise mpmath interval arithmetic (outward rounding) at escalating
   precision until the sign of the expression is unambiguous.

Exact ties cannot occur for the expressions used in this package (an integer
never equals a nonzero rational multiple of ``log n / log phi``), so the
escalation terminates; a hard precision ceiling guards against misuse.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from mpmath.ctx_iv import MPIntervalContext

# Fast path decides only when |value| clears this; everything closer goes to
# interval arithmetic.  Operand magnitudes in this package stay below ~1e5,
# so accumulated double-precision error is < 1e-10.
_FLOAT_MARGIN = 1e-9

_ESCALATION_DPS = (30, 60, 120, 240, 480, 1000, 2000)


class PrecisionExhausted(ArithmeticError):
    """Interval refinement hit the precision ceiling without deciding."""


class _FloatCtx:
    """Double-precision evaluation context (fast path, margin-checked)."""

    __slots__ = ()
    ln_phi = math.log((1.0 + math.sqrt(5.0)) / 2.0)

    @staticmethod
    def num(x):
        return float(x)

    @staticmethod
    def ln(n):
        return math.log(n)


class _IntervalCtx:
    """Outward-rounded interval context at a given decimal precision."""

    def __init__(self, dps: int):
        ctx = MPIntervalContext()
        ctx.dps = dps
        self._ctx = ctx
        self.ln_phi = ctx.log((1 + ctx.sqrt(ctx.mpf(5))) / 2)

    def num(self, x):
        if isinstance(x, Fraction):
            return self._ctx.mpf(x.numerator) / self._ctx.mpf(x.denominator)
        return self._ctx.mpf(x)

    def ln(self, n):
        return self._ctx.log(self._ctx.mpf(n))


def sign(expr: Callable) -> int:
    """Certified sign of ``expr(ctx)``; returns 0 only when provably zero.

    ``expr`` receives a context with ``num(int | Fraction)``, ``ln(int)`` and
    the constant ``ln_phi``, and combines the results with ordinary
    arithmetic operators.
    """
    try:
        est = expr(_FloatCtx())
        if abs(est) > _FLOAT_MARGIN:
            return 1 if est > 0 else -1
    except OverflowError:
        pass
    for dps in _ESCALATION_DPS:
        v = expr(_IntervalCtx(dps))
        # Interval comparisons yield None when the interval straddles the
        # bound; that means "not yet decidable", so refine further.
        if v > 0:
            return 1
        if v < 0:
            return -1
        if v == 0:
            return 0
    raise PrecisionExhausted(
        "sign undecided at %d significant digits" % _ESCALATION_DPS[-1])


def _nearest_int_candidates(expr: Callable) -> range:
    try:
        est = expr(_FloatCtx())
        mid = math.floor(est)
    except OverflowError:
        v = expr(_IntervalCtx(_ESCALATION_DPS[0]))
        mid = math.floor(float(v.mid))
    return range(mid - 2, mid + 4)


def certified_ceil(expr: Callable) -> int:
    """Smallest integer >= expr(ctx); expr must not be exactly integral."""
    candidates = _nearest_int_candidates(expr)
    for dps in _ESCALATION_DPS:
        v = expr(_IntervalCtx(dps))
        for c in candidates:
            if (v > c - 1) and (v <= c):
                return c
    raise PrecisionExhausted("ceil undecided; expression may be integral")


def certified_floor(expr: Callable) -> int:
    """Largest integer <= expr(ctx); expr must not be exactly integral."""
    candidates = _nearest_int_candidates(expr)
    for dps in _ESCALATION_DPS:
        v = expr(_IntervalCtx(dps))
        for c in candidates:
            if (v >= c) and (v < c + 1):
                return c
    raise PrecisionExhausted("floor undecided; expression may be integral")
