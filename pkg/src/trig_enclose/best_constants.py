"""Sharp constants of the Wilker/Huygens/sec-type inequalities and the rational bound functions.

Constants with a finite closed form carry an ExactForm; constants defined by a
series carry the enclosure of a certified summation plus its TailBound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import iv, mpf

from . import exact_numbers as en
from .errors import DomainError, RejectedInput
from .forms import ExactForm
from .intervals import GUARD_BITS, Enclosure, TailBound, hi, ival, lo, workprec
from .polygamma import polygamma, polygamma_form, tail_4k2_minus_1_sq_form
from .rational_series import RationalTerm, pmul, poly, ppow, sum_series
from .zeta_sums import even_zeta_form, odd_zeta_even_form, registry_entry

F = Fraction
PI = ExactForm.pi_power

EXACT_RATIONAL = "exact-rational"
PI_CLOSED = "pi-closed-form"
SERIES = "series-evaluated"


@dataclass(frozen=True)
class Constant:
    """A real constant: exact form when known, plus a certified enclosure."""

    enclosure: Enclosure
    form: ExactForm | None = None
    exactness: str = PI_CLOSED
    tail: TailBound | None = None

    @property
    def value(self) -> mpf:
        return self.enclosure.mid

    def __str__(self):
        return str(self.form) if self.form is not None else str(self.enclosure)


@dataclass(frozen=True)
class SharpConstantPair:
    inequality_id: str
    N: int
    lower_constant: Constant
    upper_constant: Constant
    exactness: str = field(default=PI_CLOSED)


def _exactness(*cs: Constant) -> str:
    order = [EXACT_RATIONAL, PI_CLOSED, SERIES]
    return max((c.exactness for c in cs), key=order.index)


def _from_form(form: ExactForm, precision: int) -> Constant:
    kind = EXACT_RATIONAL if form.is_rational() else PI_CLOSED
    return Constant(form.enclosure(precision), form, kind)


def _check(N, lo_):
    if not isinstance(N, int) or isinstance(N, bool) or N < lo_:
        raise RejectedInput(f"order N must be an integer >= {lo_}, got {N!r}")
    if N > 200:
        raise RejectedInput("order N above 200 is not supported")


def _absB(n: int) -> Fraction:
    return abs(en.bernoulli(n))


def _pair(eid, N, lower, upper) -> SharpConstantPair:
    return SharpConstantPair(eid, N, lower, upper, _exactness(lower, upper))


def _series(term: RationalTerm, start: int, precision: int):
    """Certified enclosure of a rational series as an iv interval in the current context."""
    return sum_series(term, start, precision + 8)


# ---------------------------------------------------------------- Wilker

def wilker_lambda(N: int) -> Fraction:
    _check(N, 1)
    return N * 2 ** (2 * N + 3) * _absB(2 * N + 2) / math.factorial(2 * N + 2)


def _F_form(a: int) -> ExactForm:
    """sum_{k>=1} 1/(k^(2a) (4k^2-1)^2), by partial fractions in u = k^2."""
    out = tail_4k2_minus_1_sq_form(0) * 4**a  # d2 = 4^a
    out = out + F(-a * 4**a, 2)               # d1 = -a 4^a, sum 1/(4k^2-1) = 1/2
    for n in range(a):
        out = out + even_zeta_form(a - n) * ((n + 1) * 4**n)
    return out


def wilker_mu_form(N: int) -> ExactForm:
    _check(N, 1)
    return (_F_form(N - 1) * (64 * N) - _F_form(N) * (16 * (N - 1))) / PI(2 * N + 2)


def _F_term(a: int) -> RationalTerm:
    return RationalTerm(poly(1), pmul(ppow(poly(0, 1), 2 * a), ppow(poly(-1, 0, 4), 2)))


def wilker_lambda_mu(N: int, precision: int = 256) -> SharpConstantPair:
    """(lambda_N, mu_N); mu_N is summed from its defining series."""
    _check(N, 1)
    lam = _from_form(ExactForm.rational(wilker_lambda(N)), precision)
    with workprec(precision + GUARD_BITS):
        s1, t1 = _series(_F_term(N - 1), 1, precision)
        s2, t2 = _series(_F_term(N), 1, precision)
        pw = (+iv.pi) ** (2 * N + 2)
        mu = (64 * N * s1 - 16 * (N - 1) * s2) / pw
        tail = TailBound(t1.terms + t2.terms, (64 * N * t1.bound + 16 * (N - 1) * t2.bound))
        enc = Enclosure.from_iv(mu)
    mu_c = Constant(enc, wilker_mu_form(N), SERIES, tail)
    return _pair("wilker", N, lam, mu_c)


def wilker_alpha_form(N: int) -> ExactForm:
    return polygamma_form(3, N + 1) * F(2, 3) / PI(4)


def wilker_beta_form(N: int) -> ExactForm:
    s = (2 * N + 1) ** 2
    return (polygamma_form(1, F(2 * N + 1, 2)) * s - 4 * (N + 1)) * F(8, s) / PI(4)


def wilker_alpha_beta(N: int, precision: int = 256) -> SharpConstantPair:
    """alpha_N = 2 psi'''(N+1)/(3 pi^4), beta_N = 8((2N+1)^2 psi'(N+1/2) - 4(N+1))/((2N+1)^2 pi^4)."""
    _check(N, 0)
    p3 = polygamma(3, N + 1, precision)
    p1 = polygamma(1, F(2 * N + 1, 2), precision)
    s = (2 * N + 1) ** 2
    with workprec(precision + GUARD_BITS):
        pi4 = (+iv.pi) ** 4
        a = 2 * p3.enclosure.to_iv() / (3 * pi4)
        b = 8 * (s * p1.enclosure.to_iv() - 4 * (N + 1)) / (s * pi4)
        ea, eb = Enclosure.from_iv(a), Enclosure.from_iv(b)
    return _pair("wilker-alphabeta", N,
                 Constant(ea, wilker_alpha_form(N), PI_CLOSED, p3.tail),
                 Constant(eb, wilker_beta_form(N), PI_CLOSED, p1.tail))


def wilker_q(N: int) -> tuple[Fraction, Fraction]:
    """(p_N, q_N) of the Wilker expansion bound; p_N = 0, q_N = lambda_N."""
    _check(N, 1)
    return Fraction(0), wilker_lambda(N)


# ---------------------------------------------------------------- Huygens

def huygens_a(N: int) -> Fraction:
    _check(N, 1)
    return (2 ** (2 * N + 2) - 4) * _absB(2 * N + 2) / math.factorial(2 * N + 2)


def _b_terms(N: int):
    k2n = ppow(poly(0, 1), 2 * N)
    return (RationalTerm(poly(1), pmul(k2n, poly(-1, 2)), True),
            RationalTerm(poly(1), pmul(k2n, poly(1, 2)), True),
            RationalTerm(poly(1), pmul(k2n, poly(-1, 2))),
            RationalTerm(poly(1), pmul(k2n, poly(1, 2))))


_B_REGISTRY = {1: ("S6", "S7", "S8", "S9"), 2: ("S10", "S11", "S12", "S13")}


def huygens_b_form(N: int) -> ExactForm | None:
    """Closed form of b_N where the four sums are in the registry (N = 1, 2)."""
    if N not in _B_REGISTRY:
        return None
    a1, a2, a3, a4 = (registry_entry(i).form for i in _B_REGISTRY[N])
    return ((a1 - a2) * 8 - (a3 - a4) * 4) / PI(2 * N + 2)


def huygens_a_b(N: int, precision: int = 256) -> SharpConstantPair:
    """(a_N, b_N); b_N is summed from its four defining series."""
    _check(N, 1)
    a = _from_form(ExactForm.rational(huygens_a(N)), precision)
    with workprec(precision + GUARD_BITS):
        vals, tails = zip(*(_series(t, 1, precision) for t in _b_terms(N)))
        s1, s2, s3, s4 = vals
        b = (8 * (s1 - s2) - 4 * (s3 - s4)) / (+iv.pi) ** (2 * N + 2)
        enc = Enclosure.from_iv(b)
    tail = TailBound(sum(t.terms for t in tails), 24 * max(t.bound for t in tails))
    return _pair("huygens", N, a, Constant(enc, huygens_b_form(N), SERIES, tail))


def huygens_varrho(N: int) -> tuple[Fraction, Fraction]:
    """(rho_N, varrho_N); rho_N = 0."""
    _check(N, 1)
    return Fraction(0), 4 * (2 ** (2 * N) - 1) * _absB(2 * N + 2) / math.factorial(2 * N + 2)


# ---------------------------------------------------------------- sec x tan x

def _t_arg(t, precision):
    with workprec(precision):
        x = mpf(t) if not isinstance(t, Fraction) else mpf(t.numerator) / t.denominator
    with workprec(64):
        if not (0 < x < lo(iv.pi / 2)):
            raise DomainError("argument must lie in (0, pi/2)")
    return x


def papenfuss_L_form_coeffs(N: int) -> tuple[ExactForm, ExactForm]:
    """Coefficients of t^(2N+1) and t^(2N+3) in L_N(t)."""
    _check(N, 1)
    c1 = (odd_zeta_even_form(N + 1) - 1) * (N * 2 ** (2 * N + 4)) / PI(2 * N + 2)
    c2 = (odd_zeta_even_form(N + 2) - 1) * 2 ** (2 * N + 6) / PI(2 * N + 4)
    return c1, c2


def _M_terms(N: int):
    c = ppow(poly(-1, 2), 2 * N)
    kk = pmul(poly(0, 1), poly(-1, 1))
    return RationalTerm(poly(1), pmul(c, kk)), RationalTerm(poly(1), pmul(c, kk, kk))


def papenfuss_L_M(N: int, t, precision: int = 256) -> tuple[Enclosure, Enclosure]:
    """(L_N(t), M_N(t)) bounding the remainder of x sec^2 x - tan x after its pole terms."""
    _check(N, 1)
    x = _t_arg(t, precision)
    c1, c2 = papenfuss_L_form_coeffs(N)
    with workprec(precision + GUARD_BITS):
        tv = iv.mpf(x)
        L = c1.ival() * tv ** (2 * N + 1) + c2.ival() * tv ** (2 * N + 3)
        m1, _ = _series(_M_terms(N)[0], 2, precision)
        m2, _ = _series(_M_terms(N)[1], 2, precision)
        pi = +iv.pi
        M = (N * iv.mpf(2) ** (2 * N + 2) * tv ** (2 * N + 1) / pi ** (2 * N + 2) * m1
             + iv.mpf(2) ** (2 * N + 2) * tv ** (2 * N + 3) / pi ** (2 * N + 4) * m2)
        return Enclosure.from_iv(L), Enclosure.from_iv(M)


# ---------------------------------------------------------------- bound polynomials

@dataclass(frozen=True)
class BoundPolynomial:
    """sum_i c_i x^(p_i) divided by (pi^2 + sign*4x^2)^e (no denominator when e = 0)."""

    terms: tuple  # ((power, ExactForm), ...)
    den_sign: int = -1
    den_power: int = 1

    def ival(self, x):
        num = iv.mpf(0)
        for p, c in self.terms:
            num += c.ival() * x**p
        if self.den_power == 0:
            return num
        den = (+iv.pi) ** 2 + self.den_sign * 4 * x * x
        return num / den**self.den_power

    def coefficient(self, p: int) -> ExactForm:
        return sum((c for q, c in self.terms if q == p), ExactForm())


def _bp(*terms, sign=-1, power=1) -> BoundPolynomial:
    return BoundPolynomial(tuple((p, ExactForm.coerce(c)) for p, c in terms), sign, power)


P_POLY = _bp((3, PI(4, F(2, 3))),
             (5, (PI(2) - 10) * PI(2, F(8, 15))),
             (7, (PI(8, 17) - PI(6, 672) + PI(4, 1680) + 322560) * F(2, 315) / PI(4)),
             (9, (168 - PI(2, 17)) * F(16, 315)),
             (11, (PI(8, 17) - 161280) * F(32, 315) / PI(8)), power=2)
Q_POLY = _bp((3, PI(4, F(2, 3))),
             (5, (156 - PI(2, 6) - PI(4)) * F(32, 3) / PI(2)),
             (7, (-657 + PI(2, 37) + PI(4, 3)) * F(64, 3) / PI(4)),
             (9, (285 - PI(2, 19) - PI(4)) * F(512, 3) / PI(6)),
             (11, (-354 + PI(2, 26) + PI(4)) * F(512, 3) / PI(8)), power=2)


def papenfuss_PQ(x, precision: int = 256) -> tuple[Enclosure, Enclosure]:
    """(P(x)/(pi^2-4x^2)^2, Q(x)/(pi^2-4x^2)^2), bounds for x sec^2 x - tan x."""
    x = _t_arg(x, precision)
    with workprec(precision + GUARD_BITS):
        xv = iv.mpf(x)
        return Enclosure.from_iv(P_POLY.ival(xv)), Enclosure.from_iv(Q_POLY.ival(xv))


# ---------------------------------------------------------------- sec remainder

def sec_remainder_constants(N: int, precision: int = 256) -> SharpConstantPair:
    """(|E_2N|/(2N)!, (2/pi)^(2N-1))."""
    _check(N, 0)
    lower = ExactForm.rational(F(abs(en.euler_number(2 * N)), math.factorial(2 * N)))
    upper = PI(1 - 2 * N, F(2) ** (2 * N - 1))
    return _pair("sec-remainder", N, _from_form(lower, precision), _from_form(upper, precision))


# ---------------------------------------------------------------- rational bounds

# tan x / x, tanh t / t, sec t, and x sec^2 x - tan x
RATIONAL_BOUNDS: dict[str, tuple[BoundPolynomial, str]] = {
    "becker-stark.lower": (_bp((0, 8)), "tan"),
    "becker-stark.upper": (_bp((0, PI(2))), "tan"),
    "banjac.lower": (_bp((0, PI(2)), (2, PI(2, F(1, 3)) - 4), (4, PI(2, F(1, 18)) - F(2, 3))), "tan"),
    "banjac.upper": (_bp((0, PI(2)), (2, PI(2, F(-1, 16))), (4, F(1, 2)), (6, PI(-2, -1))), "tan"),
    "chen.tan.N1.lower": (_bp((0, PI(2)), (2, (PI(2) - 12) * F(1, 3)),
                              (4, (384 - PI(4, 4)) * F(1, 3) / PI(4))), "tan"),
    "chen.tan.N1.upper": (_bp((0, PI(2)), (2, (72 - PI(2, 8)) / PI(2)),
                              (4, (PI(2, 16) - 160) / PI(4))), "tan"),
    "chen.tanh.N1N2.lower": (_bp((0, PI(2)), (2, 4 - PI(2, F(1, 3))),
                                 (4, PI(-4, 128) - F(4, 3)), sign=1), "tanh"),
    "chen.tanh.N1N2.upper": (_bp((0, PI(2)), (2, 4 - PI(2, F(1, 3))),
                                 (4, PI(2, F(2, 15)) - F(4, 3)),
                                 (6, F(8, 15) - PI(-6, 512)), sign=1), "tanh"),
    "chen-sandor.sec.lower": (_bp((0, PI(2))), "sec"),
    "chen-sandor.sec.upper": (_bp((0, PI(1, 4))), "sec"),
    "chen.sec.N1.lower": (_bp((0, PI(2)), (2, (28 - PI(1, 8)) / PI(1)),
                              (4, (-48 + PI(1, 16)) / PI(3))), "sec"),
    "chen.sec.N1.upper": (_bp((0, PI(2)), (2, (PI(2) - 8) * F(1, 2)),
                              (4, (128 - PI(3, 4)) * F(1, 2) / PI(3))), "sec"),
    "papenfuss.upper": (_bp((3, PI(2, 8)), power=2), "sectan"),
    "bach.upper": (_bp((3, PI(4, F(2, 3))), power=2), "sectan"),
    "ge.lower": (_bp((3, 64), power=2), "sectan"),
    "ge.upper": (_bp((3, PI(4, F(2, 3))), power=2), "sectan"),
    "sun-zhu.lower": (_bp((3, PI(4, F(2, 3))), (5, PI(4, F(8, 15)) - PI(2, F(16, 3))), power=2), "sectan"),
    "sun-zhu.upper": (_bp((3, PI(4, F(2, 3))), (5, PI(-2, F(256 * 513, 511)) - PI(2, F(8, 3))),
                          power=2), "sectan"),
    "sun-zhu.open.lower": (_bp((3, PI(4, F(2, 3))), (5, PI(4, F(8, 15)) - PI(2, F(16, 3))), power=2),
                           "sectan"),
    "sun-zhu.open.upper": (_bp((3, PI(4, F(2, 3))), (5, PI(-2, 256) - PI(2, F(8, 3))), power=2),
                           "sectan"),
    "chen.sectan.N2.lower": (P_POLY, "sectan"),
    "chen.sectan.N2.upper": (Q_POLY, "sectan"),
}


def normalize_bound_id(bound_id: str) -> str:
    return str(bound_id).strip().lower().replace("_", "-").replace("chen.tan.n1", "chen.tan.N1") \
        .replace("chen.tanh.n1n2", "chen.tanh.N1N2").replace("chen.sec.n1", "chen.sec.N1") \
        .replace("chen.sectan.n2", "chen.sectan.N2")


def bound_domain(bound_id: str) -> str:
    bid = normalize_bound_id(bound_id)
    if bid not in RATIONAL_BOUNDS:
        raise RejectedInput(f"unknown bound id {bound_id!r}")
    return RATIONAL_BOUNDS[bid][1]


def rational_bound_iv(bound_id: str, x):
    """Interval value of a registered bound at the interval x (current context)."""
    bid = normalize_bound_id(bound_id)
    if bid not in RATIONAL_BOUNDS:
        raise RejectedInput(f"unknown bound id {bound_id!r}")
    return RATIONAL_BOUNDS[bid][0].ival(x)


def rational_bound(bound_id: str, x, precision: int = 256) -> Enclosure:
    """Evaluate a registered bound function at x inside its domain."""
    bid = normalize_bound_id(bound_id)
    if bid not in RATIONAL_BOUNDS:
        raise RejectedInput(f"unknown bound id {bound_id!r}")
    kind = RATIONAL_BOUNDS[bid][1]
    with workprec(precision):
        xm = mpf(x) if not isinstance(x, Fraction) else mpf(x.numerator) / x.denominator
    with workprec(64):
        if kind == "tanh":
            if xm == 0:
                raise DomainError("tanh bounds are stated for t != 0")
        elif kind == "sec":
            if not (0 < abs(xm) < lo(iv.pi / 2)):
                raise DomainError("sec bounds are stated for 0 < |t| < pi/2")
        elif not (0 < xm < lo(iv.pi / 2)):
            raise DomainError("bound is stated for 0 < x < pi/2")
    with workprec(precision + GUARD_BITS):
        return Enclosure.from_iv(rational_bound_iv(bid, iv.mpf(xm)))


BOUND_IDS = tuple(RATIONAL_BOUNDS)


def constants(family: str, N: int | None = None, precision: int = 256) -> SharpConstantPair:
    """Dispatch used by the CLI: wilker, wilker-alphabeta, huygens, sec-remainder, wilker-q, huygens-varrho."""
    fam = family.strip().lower().replace("_", "-")
    if fam == "wilker":
        return wilker_lambda_mu(1 if N is None else N, precision)
    if fam in ("wilker-alphabeta", "alphabeta", "alpha-beta"):
        return wilker_alpha_beta(1 if N is None else N, precision)
    if fam == "huygens":
        return huygens_a_b(1 if N is None else N, precision)
    if fam == "sec-remainder":
        return sec_remainder_constants(1 if N is None else N, precision)
    if fam in ("wilker-q", "wilker-conjecture"):
        n = 1 if N is None else N
        p, q = wilker_q(n)
        return _pair("wilker-q", n, _from_form(ExactForm.rational(p), precision),
                     _from_form(ExactForm.rational(q), precision))
    if fam in ("huygens-varrho", "varrho"):
        n = 1 if N is None else N
        r, v = huygens_varrho(n)
        return _pair("huygens-varrho", n, _from_form(ExactForm.rational(r), precision),
                     _from_form(ExactForm.rational(v), precision))
    raise RejectedInput(f"unknown constant family {family!r}")


CONSTANT_FAMILIES = ("wilker", "wilker-alphabeta", "huygens", "sec-remainder", "wilker-q", "huygens-varrho")
