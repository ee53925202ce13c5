"""Certified sums of rational-function series  sum_{k>=k0} s_k P(k)/Q(k).

The tail beyond a cutoff K is expanded in inverse factorial powers
1/(k)_r = 1/(k(k+1)...(k+r-1)), whose sums telescope exactly:

    sum_{k>=K} 1/(k)_r = 1 / ((r-1) (K)_{r-1}),   r >= 2.

The residual  f - sum_{r<=R} a_r/(k)_r  is formed as an exact rational function
and bounded termwise, so the only rounding is in the finite head and the final
conversion. Alternating series are summed after pairing neighbouring terms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mpf

from .errors import BudgetExceeded, RejectedInput
from .intervals import TailBound, ival

Poly = tuple  # coefficients, lowest degree first


def poly(*coeffs) -> Poly:
    return _trim(tuple(Fraction(c) for c in coeffs))


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pmul(*ps) -> Poly:
    out = (Fraction(1),)
    for p in ps:
        res = [Fraction(0)] * (len(out) + len(p) - 1) if p and out else []
        for i, a in enumerate(out):
            if a:
                for j, b in enumerate(p):
                    res[i + j] += a * b
        out = tuple(res)
    return _trim(out)


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))


def pscale(a: Poly, c) -> Poly:
    return _trim(tuple(x * c for x in a))


def ppow(a: Poly, e: int) -> Poly:
    return pmul(*([a] * e)) if e else (Fraction(1),)


def peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pshift(p: Poly, alpha, beta) -> Poly:
    """Coefficients of p(alpha*i + beta) as a polynomial in i."""
    out: Poly = ()
    lin = poly(beta, alpha)
    for c in reversed(p):
        out = padd(pmul(out, lin) if out else (), (Fraction(c),))
    return out


def deg(p: Poly) -> int:
    return len(p) - 1


@dataclass(frozen=True)
class RationalTerm:
    """k -> P(k)/Q(k), optionally times (-1)^(k+1)."""

    num: Poly
    den: Poly
    alternating: bool = False

    def __post_init__(self):
        object.__setattr__(self, "num", _trim(tuple(Fraction(c) for c in self.num)))
        object.__setattr__(self, "den", _trim(tuple(Fraction(c) for c in self.den)))
        if not self.den:
            raise RejectedInput("zero denominator polynomial")

    def __call__(self, k) -> Fraction:
        v = Fraction(peval(self.num, Fraction(k))) / peval(self.den, Fraction(k))
        return -v if self.alternating and k % 2 == 0 else v

    @property
    def decay(self) -> int:
        return deg(self.den) - (deg(self.num) if self.num else -10**6)


def _pair(term: RationalTerm, start: int) -> RationalTerm:
    """g(i) = f(start+2i) - f(start+2i+1), non-alternating, for i >= 0."""
    p0, q0 = pshift(term.num, 2, start), pshift(term.den, 2, start)
    p1, q1 = pshift(term.num, 2, start + 1), pshift(term.den, 2, start + 1)
    return RationalTerm(padd(pmul(p0, q1), pscale(pmul(p1, q0), -1)), pmul(q0, q1))


def _reversed_series(p: Poly, d: int, n: int) -> list:
    """Coefficients of x^0..x^n for x^d p(1/x) with d = deg p."""
    out = [Fraction(0)] * (n + 1)
    for i in range(min(n, d) + 1):
        out[i] = p[d - i]
    return out


@lru_cache(maxsize=256)
def _tail_model(num: Poly, den: Poly, R: int, K: int):
    """Return (a_2..a_R telescoped sum from K, rigorous residual bound) as Fractions."""
    dp, dq = deg(num), deg(den)
    d = dq - dp
    # power series of f in x = 1/k up to x^R
    pt = _reversed_series(num, dp, R)
    qt = _reversed_series(den, dq, R)
    ratio = [Fraction(0)] * (R + 1)
    inv0 = 1 / qt[0]
    for n in range(R + 1):
        acc = pt[n] - sum(qt[i] * ratio[n - i] for i in range(1, n + 1) if qt[i])
        ratio[n] = acc * inv0
    b = [Fraction(0)] * (R + 1)
    for n in range(d, R + 1):
        b[n] = ratio[n - d]
    # peel off a_r/(k)_r; E holds the series of 1/(k)_r
    a = [Fraction(0)] * (R + 1)
    E = [0] * (R + 1)
    E[1] = 1
    for r in range(1, R + 1):
        a[r] = b[r]
        if a[r]:
            for n in range(r, R + 1):
                if E[n]:
                    b[n] -= a[r] * E[n]
        if r < R:
            # E_{r+1} = E_r * x / (1 + r x)
            nxt = [0] * (R + 1)
            for n in range(r + 1, R + 1):
                nxt[n] = E[n - 1] - r * nxt[n - 1]
            E = nxt
    if a[1]:
        raise RejectedInput("series terms decay too slowly to converge")
    # exact telescoped contribution of sum_r a_r/(k)_r over k >= K
    tele = Fraction(0)
    rising = Fraction(K)  # (K)_{r-1}
    for r in range(2, R + 1):
        if a[r]:
            tele += a[r] / ((r - 1) * rising)
        rising *= K + r - 1
    # residual U/(Q (k)_R) with U = P (k)_R - Q S, all scaled to integers
    scale = math.lcm(*(c.denominator for c in num + den))
    P = [int(c * scale) for c in num]
    Q = [int(c * scale) for c in den]
    L = math.lcm(*(a[r].denominator for r in range(R + 1)))
    D = [1]
    for i in range(R):
        D = _mul_linear(D, i)
    T: list = []
    for r in range(2, R + 1):
        T = _mul_linear(T, r - 1) if T else []
        c = int(a[r] * L)
        if T:
            T[0] += c
        elif c:
            T = [c]
    U = _int_sub(_int_mul(P, [d * L for d in D]), _int_mul(Q, T))
    while U and U[-1] == 0:
        U.pop()
    U = [Fraction(u, L) for u in U]
    den = tuple(Fraction(q) for q in Q)
    du = deg(U)
    if du > dq - 1:
        raise AssertionError("inverse factorial expansion failed to cancel")
    if du < 0:
        return tele, Fraction(0)
    C = sum(abs(u) * Fraction(K) ** (i - du) for i, u in enumerate(U))
    qlow = abs(den[dq]) - sum(abs(q) * Fraction(K) ** (i - dq) for i, q in enumerate(den[:dq]))
    if qlow <= 0:
        return tele, None
    # (k)_R / k^R increases with k, so (k)_R >= k^R (K)_R / K^R for k >= K
    growth = Fraction(1)
    for i in range(1, R):
        growth *= 1 + Fraction(i, K)
    p = dq + R - du
    tail = C / (qlow * growth) * (Fraction(1, K**p) + Fraction(1, (p - 1) * K ** (p - 1)))
    return tele, tail


def _mul_linear(p: list, c: int) -> list:
    """Integer coefficients of p(k) * (k + c)."""
    out = [0] * (len(p) + 1)
    for i, v in enumerate(p):
        out[i] += c * v
        out[i + 1] += v
    return out


def _int_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _bound_bits(x: Fraction) -> float:
    if x == 0:
        return float("inf")
    return -(math.log2(x.numerator) - math.log2(x.denominator))


def sum_series(term: RationalTerm, start: int, target_bits: int, max_order: int = 600):
    """Interval enclosing sum_{k>=start} term(k), evaluated in the current iv context.

    The tail model error is driven below 2^-target_bits. Returns (interval, TailBound).
    """
    if term.decay < 2 and not term.alternating:
        raise RejectedInput("series must decay at least like 1/k^2")
    if term.alternating:
        if term.decay < 1:
            raise RejectedInput("alternating series must decay at least like 1/k")
        sign = 1 if start % 2 else -1
        g = _pair(term, start)
        val, tail = sum_series(g, 0, target_bits, max_order)
        return val * sign, TailBound(2 * tail.terms, tail.bound)
    R = max(term.decay + 2, int(target_bits / 5.5) + 4)
    while True:
        K = max(start + 1, 6 * R)
        tele, err = _tail_model(term.num, term.den, R, K)
        if err is not None and _bound_bits(err) >= target_bits:
            break
        if R >= max_order:
            best = mpf(err) if err is not None else mpf("inf")
            raise BudgetExceeded("tail of rational series not certified", best_bound=best, terms=K)
        R = min(max_order, int(R * 1.3) + 1)
    head = iv.mpf(0)
    for k in range(start, K):
        qk = peval(term.den, Fraction(k))
        if qk == 0:
            raise RejectedInput(f"series term has a pole at k={k}")
        head += ival(Fraction(peval(term.num, Fraction(k)))) / ival(Fraction(qk))
    errv = ival(err)
    total = head + ival(tele) + iv.mpf([-1, 1]) * errv
    return total, TailBound(K - start, mpf(err.numerator) / err.denominator if err else mpf(0))
