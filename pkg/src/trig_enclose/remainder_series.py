"""Remainder series of the tan/tanh/sec/cot/csc/(t sec^2 t - tan t) expansions.

Each remainder is a prefactor times a lattice sum

    S = sum_{m in L} w(m) / (m^a (pi^2 m^2 - s)^e),   e in {1, 2},

over all positive integers or the odd ones, with w = 1 or alternating signs.
S is evaluated with Kummer subtraction: for m >= m0 (where |s|/(pi^2 m^2) <= 1/4)
the factor (1 - q)^-e, q = s/(pi^2 m^2), is expanded to J terms whose lattice
sums are exact zeta-type constants; terms m < m0 are summed directly, the
expansion remainder is summed directly up to M and bounded beyond it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mp, mpf

from . import exact_numbers as en
from .errors import BudgetExceeded, DomainError, RejectedInput
from .forms import ExactForm
from .intervals import (GUARD_BITS, Enclosure, TailBound, fraction_of, hi, ival, lo,
                        to_binary, workprec)
from .zeta_sums import alt_even_zeta_form, alt_odd_sum_form, even_zeta_form, odd_zeta_even_form

GUARD_REL = Fraction(1, 10**6)
MAX_TERMS = 10**6
FUNCTIONS = ("tan", "tanh", "sec", "cot", "csc", "sec2tan")


@dataclass(frozen=True)
class RemainderEval:
    function_id: str
    N: int
    t: mpf
    partial_sum: mpf
    remainder: Enclosure
    value: Enclosure
    terms_used: int
    tail: TailBound
    precision: int


# ---------------------------------------------------------------- lattice kernel

def _zeta_form(odd: bool, alt: bool, p: int) -> ExactForm:
    if odd and not alt and p % 2 == 0 and p >= 2:
        return odd_zeta_even_form(p // 2)
    if not odd and not alt and p % 2 == 0 and p >= 2:
        return even_zeta_form(p // 2)
    if not odd and alt and p % 2 == 0 and p >= 2:
        return alt_even_zeta_form(p // 2)
    if odd and alt and p % 2 == 1 and p >= 1:
        return alt_odd_sum_form((p - 1) // 2)
    raise RejectedInput(f"no closed form for lattice sum (odd={odd}, alt={alt}, p={p})")


def _lattice(odd: bool, start: int, stop: int):
    """Lattice members m with start <= m < stop, with their sign weight."""
    step = 2 if odd else 1
    m = start
    if odd and m % 2 == 0:
        m += 1
    while m < stop:
        yield m
        m += step


def _weight(odd: bool, alt: bool, m: int) -> int:
    if not alt:
        return 1
    k = (m + 1) // 2 if odd else m
    return 1 if k % 2 else -1


@lru_cache(maxsize=4096)
def _tail_constant(odd: bool, alt: bool, p: int, m0: int, prec: int):
    """sum_{m in L, m >= m0} w(m) m^-p as an interval at ``prec`` bits."""
    head = sum(Fraction(_weight(odd, alt, m), m**p) for m in _lattice(odd, 1, m0))
    with workprec(prec):
        return (_zeta_form(odd, alt, p) - head).ival()


def _kernel_plan(ratio: float, odd: bool, power: int, e: int, rel_bits: int):
    """Choose m0, M and J for |s|/pi^2 <= ratio; returns (m0, M, J)."""
    m0 = max(1, math.ceil(2 * math.sqrt(ratio) + 1e-9))
    if odd and m0 % 2 == 0:
        m0 += 1
    M = max(m0, 4 * m0 + 4)
    if odd and M % 2 == 0:
        M += 1
    jmin = max(1, math.ceil((2 - power - 2 * e) / 2))
    qT = ratio / (M + 1) ** 2
    # tail(J) ~ ratio^J K_J M^(1-p)/(p-1), compare in log2 against the target
    J = jmin
    while True:
        p = power + 2 * e + 2 * J
        kj = 1 / (1 - qT) if e == 1 else (J + 1 + J * qT) / (1 - qT) ** 2
        lg = (J * math.log2(ratio) if ratio > 0 else -math.inf) + math.log2(kj) \
            + (1 - p) * math.log2(M) - math.log2(p - 1) - e * math.log2(9.8)
        if lg < -rel_bits - 8 or J > 4000:
            return m0, M, J
        J += 1


def lattice_sum(odd: bool, alt: bool, power: int, e: int, s, rel_bits: int, prec: int):
    """Interval for sum_{m in L} w(m) / (m^power (pi^2 m^2 - s)^e) and its TailBound.

    ``s`` is an interval (or number) in the current iv context; the omitted
    tail is below 2^-rel_bits times a lower bound on |first term|/2.
    """
    s = ival(s) if not isinstance(s, type(iv.mpf(0))) else s
    with workprec(64):
        A_lo = lo(+iv.pi) ** 2 * (1 - mpf(2) ** -60)
        sabs = max(abs(lo(s)), abs(hi(s)))
        ratio = float(sabs / A_lo) * (1 + 1e-12)
    m0, M, J = _kernel_plan(ratio, odd, power, e, rel_bits)
    if M > MAX_TERMS:
        raise BudgetExceeded(f"lattice sum needs {M} direct terms", best_bound=None, terms=MAX_TERMS)
    extra = math.ceil(J * math.log2(max(1.0, ratio))) if ratio > 0 else 0
    wp = prec + GUARD_BITS + extra
    with workprec(wp):
        s = +s
        A = (+iv.pi) ** 2
        one = iv.mpf(1)
        terms = 0
        total = iv.mpf(0)
        first = None
        for m in _lattice(odd, 1, m0):
            w = _weight(odd, alt, m)
            v = one / (iv.mpf(m) ** power * (A * m * m - s) ** e)
            total += v if w > 0 else -v
            terms += 1
        # Kummer part: sum_j c_j s^j A^(-e-j) * sum_{m>=m0} w m^-(power+2e+2j)
        sj = one
        Ainv = one / A
        Apow = Ainv**e
        for j in range(J):
            c = 1 if e == 1 else j + 1
            p = power + 2 * e + 2 * j
            total += c * sj * Apow * _tail_constant(odd, alt, p, m0, wp)
            sj = sj * s
            Apow = Apow * Ainv
        # remainder factor summed directly on m0 <= m <= M
        for m in _lattice(odd, m0, M + 1):
            w = _weight(odd, alt, m)
            Am2 = A * m * m
            q = s / Am2
            base = one / (iv.mpf(m) ** power * Am2**e)
            if e == 1:
                r = q**J / (one - q)
            else:
                r = q**J * (J + 1 - J * q) / (one - q) ** 2
            v = base * r
            total += v if w > 0 else -v
            terms += 1
        # tail m > M
        p = power + 2 * e + 2 * J
        ratio_iv = iv.mpf(sabs) / iv.mpf(A_lo)
        qT = ratio_iv / iv.mpf(M + 1) ** 2
        kj = one / (one - qT) if e == 1 else (J + 1 + J * qT) / (one - qT) ** 2
        bound = ratio_iv**J * kj * iv.mpf(M) ** (1 - p) / (p - 1) / iv.mpf(A_lo) ** e
        bound_hi = hi(bound)
        total += iv.mpf([-bound_hi, bound_hi])
        return total, TailBound(terms, bound_hi)


# ---------------------------------------------------------------- domains

def _check_order(N, lo_=0):
    if not isinstance(N, int) or isinstance(N, bool) or N < lo_:
        raise RejectedInput(f"order N must be an integer >= {lo_}, got {N!r}")
    if N > 200:
        raise RejectedInput("order N above 200 is not supported")


def _arg(t, prec: int) -> mpf:
    if isinstance(t, Fraction):
        return to_binary(t, prec)
    with workprec(prec):
        try:
            x = mpf(t)
        except (TypeError, ValueError):
            raise RejectedInput(f"argument {t!r} is not a number") from None
    if not mp.isfinite(x):
        raise DomainError("argument must be finite")
    return x


def _half_pi_guarded():
    """Largest |t| accepted for domains ending at pi/2 (guard relative to width pi)."""
    return lo(iv.pi / 2 - iv.pi * ival(GUARD_REL))


def _check_half_pi(t: mpf, name: str):
    with workprec(64):
        if abs(t) >= _half_pi_guarded():
            raise DomainError(f"{name}: |t| must stay below pi/2 minus the guard band")


def _check_pi(t: mpf, name: str):
    if t == 0:
        raise DomainError(f"{name}: t = 0 is excluded")
    with workprec(64):
        if abs(t) >= lo(iv.pi - iv.pi * ival(GUARD_REL)):
            raise DomainError(f"{name}: |t| must stay below pi minus the guard band")


# ---------------------------------------------------------------- remainders

def _rel_bits(prec: int, tolerance) -> int:
    if tolerance is None:
        return max(32, prec // 2)
    tol = float(tolerance)
    if not tol > 0:
        raise RejectedInput("tolerance must be positive")
    return max(8, math.ceil(-math.log2(tol)))


def _t_iv(t):
    return iv.mpf(t)


def _finish(prefactor, inner, tail: TailBound) -> tuple:
    val = prefactor * inner
    pb = max(abs(lo(prefactor)), abs(hi(prefactor)))
    return val, TailBound(tail.terms, tail.bound * pb)


def _tan_like(N, t, prec, tol, sign_flip: bool, shift_sign: int):
    rb = _rel_bits(prec, tol)
    with workprec(prec + GUARD_BITS):
        tv = _t_iv(t)
        if t == 0:
            return iv.mpf(0), TailBound(0, mpf(0))
        pref = iv.mpf(2) ** (2 * N + 3) * tv ** (2 * N + 1) / (+iv.pi) ** (2 * N)
        if sign_flip and N % 2:
            pref = -pref
        inner, tail = lattice_sum(True, False, 2 * N, 1, shift_sign * 4 * tv * tv, rb, prec)
        return _finish(pref, inner, tail)


def _remainder_tan_iv(N, t, prec, tol=None):
    return _tan_like(N, t, prec, tol, False, 1)


def _remainder_tanh_iv(N, t, prec, tol=None):
    return _tan_like(N, t, prec, tol, True, -1)


def _remainder_sec_iv(N, t, prec, tol=None):
    rb = _rel_bits(prec, tol)
    with workprec(prec + GUARD_BITS):
        tv = _t_iv(t)
        if t == 0 and N > 0:
            return iv.mpf(0), TailBound(0, mpf(0))
        pref = iv.mpf(2) ** (2 * N + 2) * tv ** (2 * N) / (+iv.pi) ** (2 * N - 1)
        inner, tail = lattice_sum(True, True, 2 * N - 1, 1, 4 * tv * tv, rb, prec)
        return _finish(pref, inner, tail)


def _cot_like(N, t, prec, tol, alt: bool):
    rb = _rel_bits(prec, tol)
    with workprec(prec + GUARD_BITS):
        tv = _t_iv(t)
        pref = 2 * tv ** (2 * N + 1) / (+iv.pi) ** (2 * N)
        if not alt:
            pref = -pref
        inner, tail = lattice_sum(False, alt, 2 * N, 1, tv * tv, rb, prec)
        return _finish(pref, inner, tail)


def _remainder_sec2tan_iv(N, t, prec, tol=None):
    rb = _rel_bits(prec, tol)
    with workprec(prec + GUARD_BITS):
        tv = _t_iv(t)
        if t == 0:
            return iv.mpf(0), TailBound(0, mpf(0))
        pi = +iv.pi
        s = 4 * tv * tv
        p1 = N * iv.mpf(2) ** (2 * N + 4) * tv ** (2 * N + 1) / pi ** (2 * N)
        p2 = iv.mpf(2) ** (2 * N + 6) * tv ** (2 * N + 3) / pi ** (2 * N)
        s1, t1 = lattice_sum(True, False, 2 * N, 1, s, rb + 2, prec)
        s2, t2 = lattice_sum(True, False, 2 * N, 2, s, rb + 2, prec)
        v1, b1 = _finish(p1, s1, t1)
        v2, b2 = _finish(p2, s2, t2)
        return v1 + v2, TailBound(b1.terms + b2.terms, b1.bound + b2.bound)


def _enclose(pair) -> tuple[Enclosure, TailBound]:
    v, tail = pair
    return Enclosure.from_iv(v), tail


def remainder_tan(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of tan t - sum_{j<=N} c_j t^(2j-1) for |t| < pi/2."""
    _check_order(N)
    t = _arg(t, precision)
    _check_half_pi(t, "tan")
    return _enclose(_remainder_tan_iv(N, t, precision, tolerance))[0]


def remainder_tanh(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of tanh t minus its degree-(2N-1) Taylor polynomial; any real t."""
    _check_order(N)
    t = _arg(t, precision)
    return _enclose(_remainder_tanh_iv(N, t, precision, tolerance))[0]


def xi_factor(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """g(t)/g(0) for g(t) = sum_k 1/((2k-1)^(2N) (pi^2 (2k-1)^2 + 4t^2)); t != 0."""
    _check_order(N)
    t = _arg(t, precision)
    if t == 0:
        raise RejectedInput("xi is defined for t != 0 only")
    g = tanh_g(N, t, precision, tolerance)
    with workprec(precision + GUARD_BITS):
        g0 = odd_zeta_even_form(N + 1).ival() / (+iv.pi) ** 2
        return Enclosure.from_iv(g.to_iv() / g0)


def remainder_sec(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of sec t - sum_{j<N} |E_2j|/(2j)! t^(2j) for |t| < pi/2."""
    _check_order(N)
    t = _arg(t, precision)
    _check_half_pi(t, "sec")
    return _enclose(_remainder_sec_iv(N, t, precision, tolerance))[0]


def remainder_cot(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of cot t - 1/t + sum_{j<=N} 2^(2j)|B_2j|/(2j)! t^(2j-1), 0 < |t| < pi."""
    _check_order(N)
    t = _arg(t, precision)
    _check_pi(t, "cot")
    return _enclose(_cot_like(N, t, precision, tolerance, False))[0]


def remainder_csc(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of csc t - 1/t - sum_{j<=N} (2^(2j)-2)|B_2j|/(2j)! t^(2j-1), 0 < |t| < pi."""
    _check_order(N)
    t = _arg(t, precision)
    _check_pi(t, "csc")
    return _enclose(_cot_like(N, t, precision, tolerance, True))[0]


def remainder_sec2tan(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """Enclosure of t sec^2 t - tan t minus its first N-1 Taylor terms, |t| < pi/2."""
    _check_order(N, 1)
    t = _arg(t, precision)
    _check_half_pi(t, "sec2tan")
    return _enclose(_remainder_sec2tan_iv(N, t, precision, tolerance))[0]


# ---------------------------------------------------------------- partial sums

def partial_sum_exact(function_id: str, N: int, t) -> Fraction:
    """Exact value of the truncated expansion at the binary number t."""
    x = fraction_of(t)
    if function_id == "tan":
        return sum(en.series_coefficient("tan", j) * x ** (2 * j - 1) for j in range(1, N + 1))
    if function_id == "tanh":
        return sum(en.series_coefficient("tanh", j) * x ** (2 * j - 1) for j in range(1, N + 1))
    if function_id == "sec":
        return sum(en.series_coefficient("sec", j) * x ** (2 * j) for j in range(N))
    if function_id in ("cot", "csc"):
        return 1 / x + sum(en.series_coefficient(function_id, j) * x ** (2 * j - 1)
                           for j in range(1, N + 1))
    if function_id == "sec2tan":
        return sum(en.series_coefficient("sec2tan", j) * x ** (2 * j + 1) for j in range(1, N))
    raise RejectedInput(f"unknown function id {function_id!r}")


_DISPATCH = {
    "tan": (remainder_tan, _remainder_tan_iv),
    "tanh": (remainder_tanh, _remainder_tanh_iv),
    "sec": (remainder_sec, _remainder_sec_iv),
    "cot": (remainder_cot, lambda N, t, p, tol=None: _cot_like(N, t, p, tol, False)),
    "csc": (remainder_csc, lambda N, t, p, tol=None: _cot_like(N, t, p, tol, True)),
    "sec2tan": (remainder_sec2tan, _remainder_sec2tan_iv),
}


def remainder(function_id: str, N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    if function_id not in _DISPATCH:
        raise RejectedInput(f"unknown function id {function_id!r}")
    return _DISPATCH[function_id][0](N, t, precision, tolerance)


def eval_with_enclosure(function_id: str, N: int, t, precision: int = 256,
                        tolerance=None) -> RemainderEval:
    """Partial sum (exact, rounded once) plus certified remainder."""
    if function_id not in _DISPATCH:
        raise RejectedInput(f"unknown function id {function_id!r}")
    public, raw = _DISPATCH[function_id]
    t = _arg(t, precision)
    rem = public(N, t, precision, tolerance)  # validates domain and order
    _, tail = raw(N, t, precision, tolerance)
    exact = partial_sum_exact(function_id, N, t) if not (function_id in ("tan", "tanh", "sec2tan") and N == 0) else Fraction(0)
    with workprec(precision + GUARD_BITS):
        value = Enclosure.from_iv(ival(exact) + rem.to_iv())
    ps = to_binary(exact, precision)
    return RemainderEval(function_id, N, t, ps, rem, value, tail.terms, tail, precision)


# ---------------------------------------------------------------- auxiliary series

def tanh_g(N: int, t, precision: int = 256, tolerance=None) -> Enclosure:
    """g(t) = sum_k 1/((2k-1)^(2N) (pi^2 (2k-1)^2 + 4t^2))."""
    t = _arg(t, precision)
    with workprec(precision + GUARD_BITS):
        tv = iv.mpf(t)
        v, _ = lattice_sum(True, False, 2 * N, 1, -4 * tv * tv, _rel_bits(precision, tolerance), precision)
        return Enclosure.from_iv(v)


def wilker_V(N: int, t, precision: int = 256) -> Enclosure:
    """N sum_k 1/(k^2N (pi^2 k^2 - t^2)) + t^2 sum_k 1/(k^2N (pi^2 k^2 - t^2)^2)."""
    t = _arg(t, precision)
    rb = _rel_bits(precision, None)
    with workprec(precision + GUARD_BITS):
        tv = iv.mpf(t)
        a, _ = lattice_sum(False, False, 2 * N, 1, tv * tv, rb, precision)
        b, _ = lattice_sum(False, False, 2 * N, 2, tv * tv, rb, precision)
        return Enclosure.from_iv(N * a + tv * tv * b)


def huygens_U(N: int, x, precision: int = 256) -> Enclosure:
    """sum_k (-1)^(k+1) (2 - (-1)^(k+1)) / (k^2N ((k pi)^2 - x^2))."""
    x = _arg(x, precision)
    rb = _rel_bits(precision, None)
    with workprec(precision + GUARD_BITS):
        xv = iv.mpf(x)
        alt, _ = lattice_sum(False, True, 2 * N, 1, xv * xv, rb, precision)
        plain, _ = lattice_sum(False, False, 2 * N, 1, xv * xv, rb, precision)
        return Enclosure.from_iv(2 * alt - plain)


def sec_H(N: int, t, precision: int = 256) -> Enclosure:
    """sum_{k>=2} (-1)^(k+1) / ((2k-1)^(2N-1) (pi^2 (2k-1)^2 - 4t^2))."""
    t = _arg(t, precision)
    rb = _rel_bits(precision, None)
    with workprec(precision + GUARD_BITS):
        tv = iv.mpf(t)
        full, _ = lattice_sum(True, True, 2 * N - 1, 1, 4 * tv * tv, rb + 8, precision)
        return Enclosure.from_iv(full - 1 / ((+iv.pi) ** 2 - 4 * tv * tv))
