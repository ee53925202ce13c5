"""Bernoulli and Euler numbers, Taylor coefficients, and ratio bounds in exact arithmetic.

Bernoulli numbers come from the integer tangent numbers (Brent-Harvey), Euler
numbers from the Seidel boustrophedon for zigzag numbers. Both tables are
extended on demand and cached behind a lock.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .errors import RejectedInput
from .forms import ExactForm

MAX_INDEX = 512

FUNCTION_IDS = ("tan", "tanh", "sec", "cot", "csc", "wilker", "huygens", "sec2tan")

_lock = threading.Lock()
_tangent: list[int] = [0]   # _tangent[k] = T_k, tan x = sum T_k x^(2k-1)/(2k-1)!
_zigzag: list[int] = [1]    # _zigzag[n] = A_n, sec x + tan x = sum A_n x^n/n!


def _check_index(n, lo=0):
    if not isinstance(n, int) or isinstance(n, bool):
        raise RejectedInput(f"index must be an integer, got {n!r}")
    if n < lo:
        raise RejectedInput(f"index {n} below minimum {lo}")
    if n > MAX_INDEX:
        raise RejectedInput(f"index {n} exceeds the supported maximum {MAX_INDEX}")


def _tangent_numbers(m: int) -> list[int]:
    """T_1..T_m by the in-place integer recurrence (T[0] unused)."""
    with _lock:
        if len(_tangent) > m:
            return _tangent
        t = [0] * (m + 1)
        t[1] = 1
        for k in range(2, m + 1):
            t[k] = (k - 1) * t[k - 1]
        for k in range(2, m + 1):
            for j in range(k, m + 1):
                t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
        _tangent[:] = t
        return _tangent


def _zigzag_numbers(m: int) -> list[int]:
    """A_0..A_m (Euler zigzag numbers) by the boustrophedon triangle."""
    with _lock:
        if len(_zigzag) > m:
            return _zigzag
        out = [1]
        row = [1]
        for n in range(1, m + 1):
            new = [0]
            for v in reversed(row):
                new.append(new[-1] + v)
            row = new
            out.append(row[-1])
        _zigzag[:] = out
        return _zigzag


def bernoulli(n: int) -> Fraction:
    """B_n for the generating function t/(e^t - 1), so B_1 = -1/2."""
    _check_index(n)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    k = n // 2
    t = _tangent_numbers(k)[k]
    sign = 1 if k % 2 else -1
    return Fraction(sign * 2 * k * t, 4**k * (4**k - 1))


def euler_number(n: int) -> int:
    """E_n for sech t = sum E_n t^n/n!, so E_2 = -1 and E_4 = 5."""
    _check_index(n)
    if n % 2:
        return 0
    a = _zigzag_numbers(n)[n]
    return a if (n // 2) % 2 == 0 else -a


def _absb(n):
    return abs(bernoulli(n))


def series_coefficient(function_id: str, j: int) -> Fraction:
    """Exact Taylor coefficient number ``j`` of the named expansion.

    tan, tanh, cot, csc: coefficient of t^(2j-1) (cot and csc after the 1/t term);
    sec, huygens: coefficient of t^(2j); wilker: of t^(2j+2); sec2tan: of t^(2j+1).
    tanh carries the sign of B_2j, every other family uses |B_2j|.
    """
    if function_id not in FUNCTION_IDS:
        raise RejectedInput(f"unknown function id {function_id!r}")
    if not isinstance(j, int) or isinstance(j, bool):
        raise RejectedInput("coefficient index must be an integer")
    if j < (0 if function_id == "sec" else 1):
        raise RejectedInput(f"coefficient index {j} out of range for {function_id}")
    p = 4**j
    if function_id == "tan":
        return p * (p - 1) * _absb(2 * j) / factorial(2 * j)
    if function_id == "tanh":
        return p * (p - 1) * bernoulli(2 * j) / factorial(2 * j)
    if function_id == "sec":
        return Fraction(abs(euler_number(2 * j)), factorial(2 * j))
    if function_id == "cot":
        return -p * _absb(2 * j) / factorial(2 * j)
    if function_id == "csc":
        return (p - 2) * _absb(2 * j) / factorial(2 * j)
    if function_id == "wilker":
        return j * 8 * p * _absb(2 * j + 2) / factorial(2 * j + 2)
    if function_id == "huygens":
        return (p - 4) * _absb(2 * j) / factorial(2 * j)
    # sec2tan
    q = 4 * p
    return 2 * j * q * (q - 1) * _absb(2 * j + 2) / factorial(2 * j + 2)


class RatioBounds:
    """Exact two-sided bounds, each a rational multiple of a power of pi."""

    def __init__(self, lower: ExactForm, upper: ExactForm, exact: Fraction):
        self.lower = lower
        self.upper = upper
        self.exact = exact

    def __repr__(self):
        return f"RatioBounds(lower={self.lower}, upper={self.upper})"


def bernoulli_ratio_bounds(n: int) -> RatioBounds:
    """2/(2 pi)^(2n) < |B_2n|/(2n)! < 2/((2 pi)^(2n) (1 - 2^(1-2n)))."""
    _check_index(n, lo=1)
    base = Fraction(2, 4**n)
    lower = ExactForm.pi_power(-2 * n, base)
    upper = ExactForm.pi_power(-2 * n, base / (1 - Fraction(2, 4**n)))
    return RatioBounds(lower, upper, _absb(2 * n) / factorial(2 * n))


def euler_ratio_bounds(n: int) -> RatioBounds:
    """4^(n+1)/pi^(2n+1) / (1 + 3^(-1-2n)) < |E_2n|/(2n)! < 4^(n+1)/pi^(2n+1)."""
    _check_index(n)
    c = Fraction(4 ** (n + 1))
    lower = ExactForm.pi_power(-(2 * n + 1), c / (1 + Fraction(1, 3 ** (2 * n + 1))))
    upper = ExactForm.pi_power(-(2 * n + 1), c)
    return RatioBounds(lower, upper, Fraction(abs(euler_number(2 * n)), factorial(2 * n)))
