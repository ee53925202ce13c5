"""Thin layer over ``mpmath.iv``: precision control, conversions and value types.

mpmath keeps its working precision in a module-global context, so code that
evaluates in parallel should use processes rather than threads.
"""
from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp, mpf

GUARD_BITS = 24


@contextlib.contextmanager
def workprec(bits: int):
    """Temporarily set the interval context to ``bits`` of precision."""
    saved_iv, saved_mp = iv.prec, mp.prec
    iv.prec = int(bits)
    mp.prec = int(bits)
    try:
        yield
    finally:
        iv.prec, mp.prec = saved_iv, saved_mp


def ival(x):
    """Interval enclosing ``x`` (int, Fraction, mpf, str or an interval)."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return iv.mpf(x.numerator)
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    if isinstance(x, Enclosure):
        return x.to_iv()
    return iv.mpf(x)


def lo(x) -> mpf:
    return mp.make_mpf(x._mpi_[0])


def hi(x) -> mpf:
    return mp.make_mpf(x._mpi_[1])


def pi():
    return +iv.pi


def fraction_of(x) -> Fraction:
    """Exact rational value of a binary float (mpf, float, int or Fraction)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if not isinstance(x, mpf):
        x = mpf(x)  # an existing mpf must not be re-rounded to the ambient precision
    if not mp.isfinite(x):
        raise ValueError("non-finite value")
    man, exp = x.man_exp if x != 0 else (0, 0)
    man = int(man)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)


def to_binary(value, prec: int) -> mpf:
    """Round a decimal string / number to a ``prec``-bit binary float."""
    with workprec(prec):
        if isinstance(value, Fraction):
            return mpf(value.numerator) / value.denominator
        return mpf(value)


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] certified to contain a real number."""

    lo: mpf
    hi: mpf

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def from_iv(cls, x) -> "Enclosure":
        return cls(lo(x), hi(x))

    @classmethod
    def point(cls, x) -> "Enclosure":
        if not isinstance(x, mpf):
            x = mpf(x)
        return cls(x, x)

    def to_iv(self):
        return iv.mpf([self.lo, self.hi])

    @property
    def width(self) -> mpf:
        with workprec(max(mp.prec, 64)):
            return mp.fsub(self.hi, self.lo, rounding="u")

    @property
    def mid(self) -> mpf:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, Fraction):
            return fraction_of(self.lo) <= x <= fraction_of(self.hi)
        return self.lo <= x <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def __str__(self):
        return f"[{mp.nstr(self.lo, 20)}, {mp.nstr(self.hi, 20)}]"


@dataclass(frozen=True)
class TailBound:
    """Truncation record: how many terms were summed, and a bound on the rest."""

    terms: int
    bound: mpf


def decimal_digits(prec: int) -> int:
    # one digit more than ceil(prec*log10 2) so every binary value round-trips
    return math.ceil(prec * 0.3010) + 1


def to_decimal(x, prec: int) -> str:
    from mpmath.libmp import to_str

    return to_str(mpf(x)._mpf_, decimal_digits(prec))


def chebyshev_nodes(a, b, n: int) -> list:
    """``n`` Chebyshev points of the first kind on [a, b], ascending."""
    a, b = mpf(a), mpf(b)
    half, mid = (b - a) / 2, (a + b) / 2
    pts = [mid - half * mp.cos((2 * i - 1) * mp.pi / (2 * n)) for i in range(1, n + 1)]
    return pts
