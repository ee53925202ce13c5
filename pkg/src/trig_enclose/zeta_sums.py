"""Closed forms for zeta-type lattice sums and the fixed registry of mixed sums.

Every closed form is an ExactForm; numeric values are enclosures computed from
it. ``brute_sum`` sums the defining series directly and serves as the oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from mpmath import iv, mpf

from .errors import BudgetExceeded, RejectedInput
from .exact_numbers import bernoulli, euler_number
from .forms import ExactForm
from .intervals import GUARD_BITS, Enclosure, TailBound, hi, ival, workprec
from .rational_series import RationalTerm, pmul, poly, ppow, sum_series


@dataclass(frozen=True)
class ClosedFormConstant:
    expression_id: str
    form: ExactForm
    numeric: Enclosure
    precision: int

    @property
    def exact_terms(self) -> list:
        """(coefficient, basis label) pairs, e.g. (Fraction(-1, 2), 'pi^2')."""
        out = []
        for (p, extra), c in sorted(self.form.terms.items(), key=lambda kv: (str(kv[0][1]), kv[0][0])):
            label = {0: "1", 1: "pi"}.get(p, f"pi^{p}")
            if extra:
                label = {"ln2": "ln2", "zeta3": "zeta(3)"}[extra] if p == 0 else f"{label}*{extra}"
            out.append((c, label))
        return out

    @property
    def value(self) -> mpf:
        return self.numeric.mid


def _check_n(n, lo):
    if not isinstance(n, int) or isinstance(n, bool) or n < lo:
        raise RejectedInput(f"order must be an integer >= {lo}, got {n!r}")


@lru_cache(maxsize=None)
def even_zeta_form(n: int) -> ExactForm:
    """sum_{k>=1} 1/k^(2n)."""
    c = Fraction(2 ** (2 * n - 1)) * abs(bernoulli(2 * n)) / math.factorial(2 * n)
    return ExactForm.pi_power(2 * n, c)


@lru_cache(maxsize=None)
def odd_zeta_even_form(n: int) -> ExactForm:
    """sum_{k>=1} 1/(2k-1)^(2n)."""
    c = Fraction(4**n - 1) * abs(bernoulli(2 * n)) / (2 * math.factorial(2 * n))
    return ExactForm.pi_power(2 * n, c)


@lru_cache(maxsize=None)
def alt_even_zeta_form(n: int) -> ExactForm:
    """sum_{k>=1} (-1)^(k+1)/k^(2n)."""
    c = Fraction(2 ** (2 * n - 1) - 1) * abs(bernoulli(2 * n)) / math.factorial(2 * n)
    return ExactForm.pi_power(2 * n, c)


@lru_cache(maxsize=None)
def alt_odd_sum_form(n: int) -> ExactForm:
    """sum_{k>=1} (-1)^(k+1)/(2k-1)^(2n+1) = pi^(2n+1) |E_2n| / (2^(2n+2) (2n)!)."""
    c = Fraction(abs(euler_number(2 * n)), 2 ** (2 * n + 2) * math.factorial(2 * n))
    return ExactForm.pi_power(2 * n + 1, c)


def _constant(name, form, prec) -> ClosedFormConstant:
    return ClosedFormConstant(name, form, form.enclosure(prec), prec)


def odd_zeta_even(n: int, precision: int = 256) -> ClosedFormConstant:
    _check_n(n, 1)
    return _constant(f"odd_zeta_even({n})", odd_zeta_even_form(n), precision)


def even_zeta(n: int, precision: int = 256) -> ClosedFormConstant:
    _check_n(n, 1)
    return _constant(f"even_zeta({n})", even_zeta_form(n), precision)


def alt_even_zeta(n: int, precision: int = 256) -> ClosedFormConstant:
    _check_n(n, 1)
    return _constant(f"alt_even_zeta({n})", alt_even_zeta_form(n), precision)


def alt_odd_sum(n: int, precision: int = 256) -> ClosedFormConstant:
    _check_n(n, 0)
    return _constant(f"alt_odd_sum({n})", alt_odd_sum_form(n), precision)


# shorthand for the registry
_k = poly(0, 1)
_km1 = poly(-1, 1)
_2km1 = poly(-1, 2)
_2kp1 = poly(1, 2)
_pi = ExactForm.pi_power
_q = ExactForm.rational
_ln2 = ExactForm.ln2
_z3 = ExactForm.zeta3
F = Fraction


@dataclass(frozen=True)
class RegistryEntry:
    expression_id: str
    description: str
    term: RationalTerm
    start: int
    form: ExactForm


def _entry(eid, desc, den, start, form, alternating=False):
    return RegistryEntry(eid, desc, RationalTerm(poly(1), den, alternating), start, form)


REGISTRY: dict[str, RegistryEntry] = {e.expression_id: e for e in [
    _entry("S1", "sum_{k>=2} 1/(k(k-1)(2k-1)^2)", pmul(_k, _km1, _2km1, _2km1), 2,
           _q(5) - _pi(2, F(1, 2))),
    _entry("S2", "sum_{k>=2} (-1)^(k+1)/(k(k-1)(2k-1))", pmul(_k, _km1, _2km1), 2,
           _q(3) - _pi(1), alternating=True),
    _entry("S3", "sum_{k>=2} 1/(2k-1)^4", ppow(_2km1, 4), 2, _pi(4, F(1, 96)) - 1),
    _entry("S4", "sum_{k>=2} 1/(2k-1)^6", ppow(_2km1, 6), 2, _pi(6, F(1, 960)) - 1),
    _entry("S5", "sum_{k>=2} (-1)^(k+1)/(2k-1)^3", ppow(_2km1, 3), 2,
           _pi(3, F(1, 32)) - 1, alternating=True),
    _entry("S6", "sum_{k>=1} (-1)^(k+1)/(k^2(2k-1))", pmul(_k, _k, _2km1), 1,
           _pi(1) - _ln2(2) - _pi(2, F(1, 12)), alternating=True),
    _entry("S7", "sum_{k>=1} (-1)^(k+1)/(k^2(2k+1))", pmul(_k, _k, _2kp1), 1,
           _q(4) - _ln2(2) - _pi(1) + _pi(2, F(1, 12)), alternating=True),
    _entry("S8", "sum_{k>=1} 1/(k^2(2k-1))", pmul(_k, _k, _2km1), 1,
           _pi(2, F(-1, 6)) + _ln2(4)),
    _entry("S9", "sum_{k>=1} 1/(k^2(2k+1))", pmul(_k, _k, _2kp1), 1,
           _q(-4) + _ln2(4) + _pi(2, F(1, 6))),
    _entry("S10", "sum_{k>=1} (-1)^(k+1)/(k^4(2k-1))", pmul(ppow(_k, 4), _2km1), 1,
           _pi(1, 4) - _ln2(8) - _pi(2, F(1, 3)) - _z3(F(3, 2)) - _pi(4, F(7, 720)),
           alternating=True),
    _entry("S11", "sum_{k>=1} (-1)^(k+1)/(k^4(2k+1))", pmul(ppow(_k, 4), _2kp1), 1,
           _q(16) - _pi(1, 4) - _ln2(8) + _pi(2, F(1, 3)) - _z3(F(3, 2)) + _pi(4, F(7, 720)),
           alternating=True),
    _entry("S12", "sum_{k>=1} 1/(k^4(2k-1))", pmul(ppow(_k, 4), _2km1), 1,
           _ln2(16) - _pi(2, F(2, 3)) - _z3(2) - _pi(4, F(1, 90))),
    _entry("S13", "sum_{k>=1} 1/(k^4(2k+1))", pmul(ppow(_k, 4), _2kp1), 1,
           _q(-16) + _ln2(16) + _pi(2, F(2, 3)) - _z3(2) + _pi(4, F(1, 90))),
    _entry("S14", "sum_{k>=2} 1/((2k-1)^4 k(k-1))", pmul(ppow(_2km1, 4), _k, _km1), 2,
           _q(9) - _pi(4, F(1, 24)) - _pi(2, F(1, 2))),
    _entry("S15", "sum_{k>=2} 1/((2k-1)^4 k^2(k-1)^2)", pmul(ppow(_2km1, 4), _k, _k, _km1, _km1), 2,
           _q(-59) + _pi(2, F(13, 3)) + _pi(4, F(1, 6))),
]}


def registry_entry(expression_id: str) -> RegistryEntry:
    try:
        return REGISTRY[expression_id.upper()]
    except (KeyError, AttributeError):
        raise RejectedInput(f"unknown registry constant {expression_id!r}") from None


def registry_constant(expression_id: str, precision: int = 256) -> ClosedFormConstant:
    e = registry_entry(expression_id)
    return _constant(e.expression_id, e.form, precision)


def brute_sum(term_rule, start_k: int, precision: int = 256, tolerance=mpf(2) ** -128,
              envelope: tuple | None = None, max_terms: int = 10**6):
    """Sum a series from ``start_k`` with a certified tail.

    ``term_rule`` is either a RationalTerm (tail handled exactly, see
    rational_series) or a callable k -> Fraction together with an
    ``envelope`` (C, p), p > 1, such that |term(k)| <= C/k^p for k >= start_k;
    the callable path bounds the tail by C/((p-1)(K-1)^(p-1)).
    Returns (Enclosure of the full sum, TailBound).
    """
    if not isinstance(start_k, int) or start_k < 1:
        raise RejectedInput("start index must be a positive integer")
    tol = mpf(tolerance)
    if not tol > 0:
        raise RejectedInput("tolerance must be positive")
    bits = max(8, int(math.ceil(-math.log2(float(tol)))) + 2) if float(tol) > 0 else precision
    with workprec(precision + GUARD_BITS):
        if isinstance(term_rule, RationalTerm):
            val, tail = sum_series(term_rule, start_k, bits)
            return Enclosure.from_iv(val), tail
        if envelope is None:
            raise RejectedInput("a plain callable needs an envelope (C, p)")
        C, p = Fraction(envelope[0]), Fraction(envelope[1])
        if p <= 1 or C < 0:
            raise RejectedInput("envelope must satisfy C >= 0, p > 1")
        # smallest K with C/((p-1)(K-1)^(p-1)) <= tol/2
        need = float(C) / (float(p - 1) * float(tol) / 2)
        K = start_k + 1 + int(math.ceil(need ** (1 / float(p - 1))))
        if K - start_k > max_terms:
            K = start_k + max_terms
            best = mpf(float(C)) / (float(p - 1) * float(K - 1) ** float(p - 1))
            raise BudgetExceeded("tail bound not reached within the term budget",
                                 best_bound=best, terms=max_terms)
        total = iv.mpf(0)
        for k in range(start_k, K):
            total += ival(Fraction(term_rule(k)))
        bound = ival(C) / (ival(p - 1) * ival(Fraction(K - 1)) ** ival(p - 1))
        total += iv.mpf([-1, 1]) * bound
        return Enclosure.from_iv(total), TailBound(K - start_k, hi(bound))
