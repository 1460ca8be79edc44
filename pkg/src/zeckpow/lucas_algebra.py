"""Exact algebra on integer combinations of Lucas numbers.

A form is a finite sum of coef * L_k terms (k >= 1) plus an integer
constant.  Products close over forms through

    L_a L_b = L_{a+b} + (-1)^b L_{a-b}        (a >= b >= 1),

with L_0 = 2 folded into the constant, so powers of forms stay forms with
integer coefficients.  Forms are treated as immutable once built; all
operations return new forms in canonical shape (no zero coefficients,
indices >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .fib_core import lucas
from .zeckendorf import FibBlock, digit_sum, encode


@dataclass(frozen=True)
class LucasForm:
    """Canonical integer combination of Lucas numbers plus a constant."""

    terms: dict[int, int] = field(default_factory=dict)
    constant: int = 0

    def __post_init__(self):
        if any(k < 1 for k in self.terms):
            raise ValueError("term indices must be >= 1 (use make_form to fold)")
        if any(c == 0 for c in self.terms.values()):
            raise ValueError("zero coefficients must be dropped (use make_form)")


def make_form(terms: dict[int, int] | None = None, constant: int = 0) -> LucasForm:
    """Build a form, folding index 0 into the constant (L_0 = 2) and
    negative indices through L_{-n} = (-1)^n L_n."""
    folded: dict[int, int] = {}
    const = constant
    for k, c in (terms or {}).items():
        if c == 0:
            continue
        if k == 0:
            const += 2 * c
        elif k < 0:
            n = -k
            folded[n] = folded.get(n, 0) + (-c if n % 2 else c)
        else:
            folded[k] = folded.get(k, 0) + c
    return LucasForm({k: c for k, c in folded.items() if c}, const)


def value(f: LucasForm) -> int:
    """Exact numeric value of the form."""
    return sum(c * lucas(k) for k, c in f.terms.items()) + f.constant


def _add_term(out: dict[int, int], k: int, c: int) -> int:
    """Accumulate c*L_k into out; returns the constant contribution."""
    if k == 0:
        return 2 * c
    out[k] = out.get(k, 0) + c
    return 0


def mul(f: LucasForm, g: LucasForm) -> LucasForm:
    """Product of two forms, rewritten back to canonical form."""
    out: dict[int, int] = {}
    const = f.constant * g.constant
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            c = ca * cb
            hi, lo = (a, b) if a >= b else (b, a)
            const += _add_term(out, hi + lo, c)
            sgn = -1 if lo % 2 else 1
            const += _add_term(out, hi - lo, sgn * c)
        const += _add_term(out, a, ca * g.constant)
    for b, cb in g.terms.items():
        const += _add_term(out, b, cb * f.constant)
    return make_form(out, const)


def power(f: LucasForm, h: int) -> LucasForm:
    """h-th power of a form by repeated multiplication, h >= 1."""
    if h < 1:
        raise ValueError("power expects h >= 1, got %d" % h)
    acc = f
    for _ in range(h - 1):
        acc = mul(acc, f)
    return acc


def lucas_power_direct(k: int, h: int) -> LucasForm:
    """L_k^h expanded by the halved binomial identity

        L_k^h = (1/2) * sum_{i=0..h} C(h,i) (-1)^{ik} L_{(h-2i)k},

    evaluated literally (negative indices fold via L_{-n} = (-1)^n L_n).
    The halving must come out integral; a remainder would falsify this
    reading of the identity and raises instead of truncating.
    """
    if k < 1:
        raise ValueError("index must be >= 1, got %d" % k)
    if h < 2:
        raise ValueError("exponent must be >= 2, got %d" % h)
    doubled: dict[int, int] = {}
    dconst = 0
    for i in range(h + 1):
        c = comb(h, i) * (-1) ** (i * k)
        idx = (h - 2 * i) * k
        if idx == 0:
            dconst += 2 * c
        elif idx < 0:
            n = -idx
            doubled[n] = doubled.get(n, 0) + (-c if n % 2 else c)
        else:
            doubled[idx] = doubled.get(idx, 0) + c
    if dconst % 2 or any(c % 2 for c in doubled.values()):
        raise ValueError(
            "halved power sum is non-integral for k=%d, h=%d" % (k, h))
    return make_form({i: c // 2 for i, c in doubled.items()}, dconst // 2)


class InterferenceError(ValueError):
    """A Lucas-multiple digit block is not yet stable at the requested index.

    Carries the smallest index at which the block form is valid.
    """

    def __init__(self, m: int, k: int, k0: int):
        super().__init__(
            "digit blocks of %d*L_k interfere at k=%d; stable from k=%d" % (m, k, k0))
        self.m = m
        self.k = k
        self.k0 = k0


_stable_offset_cache: dict[int, tuple[int, ...]] = {}


def multiple_offsets(m: int) -> tuple[int, ...]:
    """Stable digit pattern of m*L_k, as index offsets relative to k.

    For k large the Zeckendorf indices of m*L_k are {k + d} for a fixed
    offset set d depending only on m (both sides satisfy the Fibonacci
    recurrence in k, so agreement at two consecutive k propagates).  The
    pattern is read off at a reference index and cross-checked at the two
    following ones.
    """
    if m < 1:
        raise ValueError("multiplier must be >= 1, got %d" % m)
    cached = _stable_offset_cache.get(m)
    if cached is not None:
        return cached
    kref = encode(m).top + 48
    for _ in range(4):
        pats = {
            tuple(j - k for j in encode(m * lucas(k)).indices)
            for k in (kref, kref + 1, kref + 2)
        }
        if len(pats) == 1:
            pat = pats.pop()
            _stable_offset_cache[m] = pat
            return pat
        kref *= 2
    raise ArithmeticError("digit pattern of %d*L_k does not stabilize" % m)


def multiple_stabilization_index(m: int) -> int:
    """Smallest k at which m*L_k carries the stable digit pattern."""
    return 2 - multiple_offsets(m)[0]


def multiple_to_blocks(m: int, k: int) -> list[FibBlock]:
    """Fibonacci digit block of m*L_k, as a single noninterfering block.

    Valid exactly from ``multiple_stabilization_index(m)`` on; below that
    the pattern would reach indices under F_2 or rearrange, and an
    InterferenceError (carrying the threshold) is raised instead of a wrong
    expansion.
    """
    offs = multiple_offsets(m)
    k0 = 2 - offs[0]
    if k < k0:
        raise InterferenceError(m, k, k0)
    idx = [k + d for d in offs]
    if list(encode(m * lucas(k)).indices) != idx:
        raise InterferenceError(m, k, k0)
    digits = [0] * (idx[-1] - idx[0] + 1)
    for j in idx:
        digits[idx[-1] - j] = 1
    return [FibBlock(tuple(digits), idx[0])]


def form_digit_sum(f: LucasForm) -> int:
    """Zeckendorf digit sum of the form's value, which must be >= 0."""
    v = value(f)
    if v < 0:
        raise ValueError("form has negative value %d" % v)
    return digit_sum(v)


def render_form(f: LucasForm) -> str:
    """Canonical text, e.g. "L16+2·L14+3·L12+4·L10+L8+2·L6+3·L4+4·L2+9"."""
    parts: list[tuple[int, str]] = []
    for k in sorted(f.terms, reverse=True):
        c = f.terms[k]
        mag = abs(c)
        body = "L%d" % k if mag == 1 else "%d·L%d" % (mag, k)
        parts.append((1 if c > 0 else -1, body))
    if f.constant:
        parts.append((1 if f.constant > 0 else -1, str(abs(f.constant))))
    if not parts:
        return "0"
    out = []
    for i, (sgn, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if sgn < 0 else body)
        else:
            out.append(("-" if sgn < 0 else "+") + body)
    return "".join(out)
