"""Exact constants of the shape  sum_i r_i * pi^p_i * e_i,  e_i in {1, ln 2, zeta(3)}.

Coefficients are Fractions; nothing is rounded until ``enclosure`` is called.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from .intervals import Enclosure, ival, workprec

EXTRAS = (None, "ln2", "zeta3")


@lru_cache(maxsize=64)
def _ln2(prec: int):
    # ln 2 = sum_{k>=1} 1/(k 2^k); the tail after K terms is below 1/((K+1) 2^K)
    with workprec(prec + 20):
        total = iv.mpf(0)
        k = 0
        term_bits = 0
        while term_bits < prec + 20:
            k += 1
            total += iv.mpf(1) / (iv.mpf(k) * iv.mpf(2) ** k)
            term_bits = k
        err = iv.mpf(1) / (iv.mpf(k + 1) * iv.mpf(2) ** k)
        return total + iv.mpf([-1, 1]) * err


@lru_cache(maxsize=64)
def _zeta3(prec: int):
    # zeta(3) = 5/2 sum_{k>=1} (-1)^(k+1) / (k^3 C(2k, k)); terms shrink by ~1/4
    # and decrease monotonically, so the first omitted term bounds the tail
    with workprec(prec + 20):
        total = iv.mpf(0)
        binom = 1
        k = 0
        while True:
            k += 1
            binom = binom * 2 * (2 * k - 1) // k
            term = iv.mpf(1) / (iv.mpf(k) ** 3 * iv.mpf(binom))
            if 2 * k > prec + 24:
                total += iv.mpf([-1, 1]) * term
                break
            total += term if k % 2 else -term
        return total * iv.mpf(5) / 2


def _basis(p: int, extra):
    v = (+iv.pi) ** p if p else iv.mpf(1)
    if extra == "ln2":
        v = v * _ln2(iv.prec)
    elif extra == "zeta3":
        v = v * _zeta3(iv.prec)
    return v


class ExactForm:
    """Immutable exact linear combination keyed by (pi power, extra constant)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            p, extra = key
            if extra not in EXTRAS:
                raise ValueError(f"unknown basis constant {extra!r}")
            c = Fraction(c)
            if c:
                clean[(int(p), extra)] = clean.get((int(p), extra), 0) + c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def rational(cls, r) -> "ExactForm":
        return cls({(0, None): Fraction(r)})

    @classmethod
    def pi_power(cls, p: int, c=1) -> "ExactForm":
        return cls({(p, None): Fraction(c)})

    @classmethod
    def ln2(cls, c=1) -> "ExactForm":
        return cls({(0, "ln2"): Fraction(c)})

    @classmethod
    def zeta3(cls, c=1) -> "ExactForm":
        return cls({(0, "zeta3"): Fraction(c)})

    @staticmethod
    def coerce(x) -> "ExactForm":
        if isinstance(x, ExactForm):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactForm.rational(x)
        raise TypeError(f"cannot treat {type(x).__name__} as an exact form")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_rational(self) -> bool:
        return all(k == (0, None) for k in self._terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get((0, None), Fraction(0))

    def __add__(self, other):
        try:
            other = ExactForm.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return ExactForm(out)

    __radd__ = __add__

    def __neg__(self):
        return ExactForm({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        try:
            return self + (-ExactForm.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactForm({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, ExactForm):
            return NotImplemented
        out = {}
        for (p1, e1), c1 in self._terms.items():
            for (p2, e2), c2 in other._terms.items():
                if e1 and e2:
                    raise ValueError("product of two transcendental extras is not representable")
                key = (p1 + p2, e1 or e2)
                out[key] = out.get(key, 0) + c1 * c2
        return ExactForm(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, ExactForm) and len(other._terms) == 1:
            ((p, e), c), = other._terms.items()
            if e is None:
                return self * ExactForm.pi_power(-p, 1 / c)
        return NotImplemented

    def times_pi(self, p: int) -> "ExactForm":
        return self * ExactForm.pi_power(p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactForm.rational(other)
        if not isinstance(other, ExactForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def ival(self):
        """Interval value in the current ``iv`` precision."""
        total = iv.mpf(0)
        for (p, extra), c in self._terms.items():
            total += ival(c) * _basis(p, extra)
        return total

    def enclosure(self, prec: int) -> Enclosure:
        with workprec(prec):
            return Enclosure.from_iv(self.ival())

    def __repr__(self):
        return f"ExactForm({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        order = sorted(self._terms, key=lambda k: (EXTRAS.index(k[1]), k[0]))
        for p, extra in order:
            c = self._terms[(p, extra)]
            sym = []
            if p == 1:
                sym.append("pi")
            elif p:
                sym.append(f"pi^{p}")
            if extra:
                sym.append({"ln2": "ln2", "zeta3": "zeta(3)"}[extra])
            mag = abs(c)
            if sym:
                body = "*".join(sym)
                body = body if mag == 1 else f"{mag}*{body}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
