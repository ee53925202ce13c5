"""Trigamma and tetragamma (psi', psi''') at positive integers and half-integers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpf

from .errors import RejectedInput
from .forms import ExactForm
from .intervals import GUARD_BITS, Enclosure, TailBound, ival, workprec
from .rational_series import RationalTerm, poly, ppow, sum_series
from .zeta_sums import even_zeta_form, odd_zeta_even_form

ORDERS = (1, 3)


@dataclass(frozen=True)
class PolygammaValue:
    order: int
    argument: Fraction
    value: mpf
    enclosure: Enclosure
    tail: TailBound


def _argument(z) -> Fraction:
    try:
        z = Fraction(z)
    except (TypeError, ValueError):
        raise RejectedInput(f"argument {z!r} is not a rational number") from None
    if z <= 0 or z.denominator not in (1, 2):
        raise RejectedInput(f"argument must be a positive integer or half-integer, got {z}")
    return z


def _order(m):
    if m not in ORDERS:
        raise RejectedInput(f"polygamma order {m!r} not supported (only 1 and 3)")
    return m


def _shift_sum(m: int, z: Fraction, n: int) -> Fraction:
    """m! * sum_{i<n} 1/(z+i)^(m+1)."""
    return math.factorial(m) * sum((1 / (z + i)) ** (m + 1) for i in range(n))


def polygamma(m: int, z, precision: int = 256) -> PolygammaValue:
    """psi^(m)(z) = m! sum_{k>=0} 1/(z+k)^(m+1), after shifting z upward."""
    m, z = _order(m), _argument(z)
    z0 = max(20, precision // 8)
    n = max(0, math.ceil(z0 - z))
    zs = z + n
    with workprec(precision + GUARD_BITS):
        # sum_{k>=1} 1/(k + zs - 1)^(m+1)
        term = RationalTerm(poly(1), ppow(poly(zs - 1, 1), m + 1))
        val, tail = sum_series(term, 1, precision + 8)
        total = val * math.factorial(m) + ival(_shift_sum(m, z, n))
        enc = Enclosure.from_iv(total)
    return PolygammaValue(m, z, enc.mid, enc, tail)


def polygamma_form(m: int, z) -> ExactForm:
    """Exact value of psi'(z) or psi'''(z) in pi-power form."""
    m, z = _order(m), _argument(z)
    base = Fraction(1) if z.denominator == 1 else Fraction(1, 2)
    n = int(z - base)
    if base == 1:
        start = even_zeta_form((m + 1) // 2) * math.factorial(m)
    else:
        # sum_{k>=0} 1/(k+1/2)^(m+1) = 2^(m+1) sum over odd integers
        start = odd_zeta_even_form((m + 1) // 2) * (math.factorial(m) * 2 ** (m + 1))
    return start - _shift_sum(m, base, n)


def _check_N(N):
    if not isinstance(N, int) or isinstance(N, bool) or N < 0:
        raise RejectedInput(f"N must be a nonnegative integer, got {N!r}")


def tail_inverse_quartic(N: int, precision: int = 256) -> Enclosure:
    """sum_{k>N} 1/k^4 = psi'''(N+1)/6."""
    _check_N(N)
    v = polygamma(3, N + 1, precision)
    with workprec(precision + GUARD_BITS):
        return Enclosure.from_iv(v.enclosure.to_iv() / 6)


def tail_inverse_quartic_form(N: int) -> ExactForm:
    _check_N(N)
    return polygamma_form(3, N + 1) / 6


def _correction(N: int) -> Fraction:
    return Fraction(N + 1, 2 * (2 * N + 1) ** 2)


def tail_4k2_minus_1_sq(N: int, precision: int = 256) -> Enclosure:
    """sum_{k>N} 1/(4k^2-1)^2 = psi'(N+1/2)/8 - (N+1)/(2(2N+1)^2)."""
    _check_N(N)
    v = polygamma(1, Fraction(2 * N + 1, 2), precision)
    with workprec(precision + GUARD_BITS):
        return Enclosure.from_iv(v.enclosure.to_iv() / 8 - ival(_correction(N)))


def tail_4k2_minus_1_sq_form(N: int) -> ExactForm:
    _check_N(N)
    return polygamma_form(1, Fraction(2 * N + 1, 2)) / 8 - _correction(N)
