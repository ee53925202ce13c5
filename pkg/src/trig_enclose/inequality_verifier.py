"""Grid certification of the trigonometric inequalities, endpoint limits and bound comparison.

Every registry entry lists one or more margins (larger side minus smaller side).
An inequality is certified on a grid when the rigorous lower bound of every
margin is positive at every point.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from mpmath import iv, mp, mpf

from . import best_constants as bc
from . import exact_numbers as en
from . import remainder_series as rs
from .errors import RejectedInput
from .forms import ExactForm
from .intervals import GUARD_BITS, Enclosure, chebyshev_nodes, hi, lo, workprec

F = Fraction
PI = ExactForm.pi_power
GUARD_REL = mpf("1e-6")
PERTURB = Fraction(1, 10**6)

CERTIFIED, VIOLATED, INCONCLUSIVE = "certified", "violated", "inconclusive"


# ---------------------------------------------------------------- point values

class Point:
    """Lazy interval values of the usual trigonometric quantities at x."""

    def __init__(self, x: mpf):
        self.x = iv.mpf(x)
        self.pi = +iv.pi
        self._cs = None

    def _cos_sin(self):
        if self._cs is None:
            self._cs = iv.cos_sin(self.x)
        return self._cs

    @property
    def cos(self):
        return self._cos_sin()[0]

    @property
    def sin(self):
        return self._cos_sin()[1]

    @property
    def tan(self):
        c, s = self._cos_sin()
        return s / c

    @property
    def sec(self):
        return 1 / self.cos

    @property
    def S(self):  # sin x / x
        return self.sin / self.x

    @property
    def T(self):  # tan x / x
        return self.tan / self.x

    @property
    def W1(self):
        return self.S**2 + self.T

    @property
    def W2(self):
        return (self.x / self.sin) ** 2 + self.x * self.cos / self.sin

    @property
    def H1(self):
        return 2 * self.S + self.T

    @property
    def H2(self):
        return 2 * self.x / self.sin + self.x * self.cos / self.sin

    @property
    def sectan(self):
        c = self.cos
        return self.x / (c * c) - self.tan

    @property
    def D(self):  # pi^2 - 4x^2
        return self.pi**2 - 4 * self.x**2

    @property
    def tanh_over_t(self):
        e = iv.expm1(-2 * self.x)
        return -e / ((2 + e) * self.x)


def _cbrt(v):
    return iv.exp(iv.log(v) / 3)


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class ConstantSpec:
    form: Callable[[int], ExactForm]   # N -> exact constant
    side: str                          # "lower" or "upper"
    endpoint: str                      # where the constant is attained: "0" or "pi/2"


@dataclass(frozen=True)
class Inequality:
    inequality_id: str
    description: str
    margins: Callable  # (Point, constants dict of intervals, N) -> list[(label, interval)]
    constants: dict = field(default_factory=dict)
    upper: str = "pi/2"  # right end of the domain: "pi/2" or a decimal string
    has_order: bool = False


def _q(c) -> Callable[[int], ExactForm]:
    e = ExactForm.coerce(c) if not isinstance(c, ExactForm) else c
    return lambda N: e


def _rb(name):
    return lambda P: bc.rational_bound_iv(name, P.x)


def _two_sided(value, lower_name, upper_name):
    def margins(P, C, N):
        v = value(P)
        return [("lower", v - _rb(lower_name)(P)), ("upper", _rb(upper_name)(P) - v)]
    return margins


def _tanh_partial(P, m):
    t = P.x
    return sum((iv.mpf(en.series_coefficient("tanh", j).numerator) / en.series_coefficient("tanh", j).denominator)
               * t ** (2 * j - 2) for j in range(1, m + 1))


def _lam_sum(P, N):
    """sum_{k=1}^{N-1} lambda_k x^(2k+2)."""
    return sum((_fr(bc.wilker_lambda(k)) * P.x ** (2 * k + 2) for k in range(1, N)), iv.mpf(0))


def _a_sum(P, N):
    """sum_{j=2}^{N} (2^2j - 4)|B_2j|/(2j)! x^(2j) = sum a_{j-1} x^(2j)."""
    return sum((_fr(bc.huygens_a(j - 1)) * P.x ** (2 * j) for j in range(2, N + 1)), iv.mpf(0))


def _fr(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def _sec_partial(P, N):
    return sum((_fr(en.series_coefficient("sec", j)) * P.x ** (2 * j) for j in range(N)), iv.mpf(0))


def _m_becker(P, C, N):
    T = P.T
    return [("lower", T - C["lower"] / P.D), ("upper", C["upper"] / P.D - T)]


def _m_chen_sandor_sec(P, C, N):
    s = P.sec
    return [("lower", s - C["lower"] / P.D), ("upper", C["upper"] / P.D - s)]


def _m_tanh_corollary(m):
    def margins(P, C, N):
        v = P.tanh_over_t
        return [("lower", v - _tanh_partial(P, 2 * m)), ("upper", _tanh_partial(P, 2 * m - 1) - v)]
    return margins


def _m_wilker_tan(base_terms, power):
    """2 + base + lower x^p tan x < W1 < 2 + base + upper x^p tan x."""
    def margins(P, C, N):
        base = 2 + sum((_fr(c) * P.x**k for k, c in base_terms), iv.mpf(0))
        w = P.W1
        g = P.x**power * P.tan
        return [("lower", w - base - C["lower"] * g), ("upper", base + C["upper"] * g - w)]
    return margins


def _m_huygens_tan(base_terms, power):
    def margins(P, C, N):
        base = 3 + sum((_fr(c) * P.x**k for k, c in base_terms), iv.mpf(0))
        h = P.H1
        g = P.x**power * P.tan
        return [("lower", h - base - C["lower"] * g), ("upper", base + C["upper"] * g - h)]
    return margins


def _m_neuman_sandor(P, C, N):
    c, S = P.cos, P.S
    mid = (2 + c) / 3
    W2, H2 = P.W2, P.H2
    return [("sin x/x < (2+cos x)/3", mid - S),
            ("(2+cos x)/3 < (x/sin x + cos x)/2", (1 / S + c) / 2 - mid),
            ("W2/2 > H2/3", W2 / 2 - H2 / 3),
            ("H2/3 > 1", H2 / 3 - 1)]


def _m_chen_sandor_chain(P, C, N):
    S, T = P.S, P.T
    s2t = S * S * T
    g = _cbrt(s2t)
    W1, H1, W2, H2 = P.W1, P.H1, P.W2, P.H2
    return [("W1/2 > S^2 T", W1 / 2 - s2t),
            ("S^2 T > H1/3", s2t - H1 / 3),
            ("H1/3 > S^(2/3) T^(1/3)", H1 / 3 - g),
            ("S^(2/3) T^(1/3) > W2/2", g - W2 / 2),
            ("W2/2 > H2/3", W2 / 2 - H2 / 3),
            ("H2/3 > 1", H2 / 3 - 1)]


def _m_wilker_sharp(N0):
    def margins(P, C, N):
        base = 2 + _lam_sum(P, N0)
        w = P.W2
        g = P.x ** (2 * N0 + 2)
        return [("lower", w - base - C["lower"] * g), ("upper", base + C["upper"] * g - w)]
    return margins


def _m_wilker_alphabeta(N0):
    def margins(P, C, N):
        x = P.x
        base = 2 + 4 * x**4 * sum((1 / (P.pi**2 * k * k - x * x) ** 2 for k in range(1, N0 + 1)), iv.mpf(0))
        w = P.W2
        return [("lower", w - base - C["lower"] * x**4), ("upper", base + C["upper"] * x**4 - w)]
    return margins


def _m_wilker_conjecture(P, C, N):
    base = 2 + _lam_sum(P, N)
    w = P.W2
    g = P.x ** (2 * N + 1) * P.tan
    return [("lower", w - base - C["lower"] * g), ("upper", base + C["upper"] * g - w)]


def _m_huygens_sharp(N0):
    def margins(P, C, N):
        base = 3 + _a_sum(P, N0)
        h = P.H2
        g = P.x ** (2 * N0 + 2)
        return [("lower", h - base - C["lower"] * g), ("upper", base + C["upper"] * g - h)]
    return margins


def _m_huygens_varrho(P, C, N):
    base = 3 + _a_sum(P, N)
    h = P.H2
    g = P.x ** (2 * N + 1) * P.tan
    return [("lower", h - base - C["lower"] * g), ("upper", base + C["upper"] * g - h)]


def _m_sectan_single(side):
    def margins(P, C, N):
        bound = C[side] * P.x**3 / P.D**2
        f = P.sectan
        return [(side, f - bound if side == "lower" else bound - f)]
    return margins


def _m_ge(P, C, N):
    f, x3, D2 = P.sectan, P.x**3, P.D**2
    return [("lower", f - C["lower"] * x3 / D2), ("upper", C["upper"] * x3 / D2 - f)]


def _m_sun_zhu(P, C, N):
    x, D2, f = P.x, P.D**2, P.sectan
    lead = 2 * P.pi**4 / 3 * x**3
    return [("lower", f - (lead + C["lower"] * x**5) / D2), ("upper", (lead + C["upper"] * x**5) / D2 - f)]


def _m_sec_remainder(P, C, N):
    r = P.sec - _sec_partial(P, N)
    g = P.x ** (2 * N - 1) * P.tan
    return [("lower", r - C["lower"] * g), ("upper", C["upper"] * g - r)]


def _sz_lower(N):
    return PI(4, F(8, 15)) - PI(2, F(16, 3))


REGISTRY: dict[str, Inequality] = {e.inequality_id: e for e in [
    Inequality("becker-stark", "8/(pi^2-4x^2) < tan x/x < pi^2/(pi^2-4x^2)", _m_becker,
               {"lower": ConstantSpec(_q(8), "lower", "pi/2"), "upper": ConstantSpec(_q(PI(2)), "upper", "0")}),
    Inequality("banjac", "quartic/sextic rational bounds for tan x/x",
               _two_sided(lambda P: P.T, "banjac.lower", "banjac.upper")),
    Inequality("chen.tan.N1", "refined quartic rational bounds for tan x/x",
               _two_sided(lambda P: P.T, "chen.tan.N1.lower", "chen.tan.N1.upper")),
    Inequality("tanh.corollary.m1", "1 - t^2/3 < tanh t/t < 1", _m_tanh_corollary(1), upper="5"),
    Inequality("tanh.corollary.m2", "Taylor sums of order 4 and 3 bracket tanh t/t", _m_tanh_corollary(2), upper="5"),
    Inequality("chen.tanh.N1N2", "rational bounds for tanh t/t with denominator pi^2+4t^2",
               _two_sided(lambda P: P.tanh_over_t, "chen.tanh.N1N2.lower", "chen.tanh.N1N2.upper"), upper="5"),
    Inequality("chen-sandor.sec", "pi^2/(pi^2-4t^2) < sec t < 4pi/(pi^2-4t^2)", _m_chen_sandor_sec,
               {"lower": ConstantSpec(_q(PI(2)), "lower", "0"), "upper": ConstantSpec(_q(PI(1, 4)), "upper", "pi/2")}),
    Inequality("chen.sec.N1", "quartic rational bounds for sec t",
               _two_sided(lambda P: P.sec, "chen.sec.N1.lower", "chen.sec.N1.upper")),
    Inequality("wilker.classic", "(sin x/x)^2 + tan x/x > 2", lambda P, C, N: [("lower", P.W1 - 2)]),
    Inequality("wilker.sumner", "2 + (2/pi)^4 x^3 tan x < W1 < 2 + 8/45 x^3 tan x", _m_wilker_tan((), 3),
               {"lower": ConstantSpec(_q(PI(-4, 16)), "lower", "pi/2"),
                "upper": ConstantSpec(_q(F(8, 45)), "upper", "0")}),
    Inequality("chen-cheung.wilker.1", "2 + 8/45 x^4 + c x^5 tan x bounds for W1",
               _m_wilker_tan(((4, F(8, 45)),), 5),
               {"lower": ConstantSpec(_q(F(16, 315)), "lower", "0"),
                "upper": ConstantSpec(_q(PI(-6, 64)), "upper", "pi/2")}),
    Inequality("chen-cheung.wilker.2", "2 + 8/45 x^4 + 16/315 x^6 + c x^7 tan x bounds for W1",
               _m_wilker_tan(((4, F(8, 45)), (6, F(16, 315))), 7),
               {"lower": ConstantSpec(_q(F(104, 4725)), "lower", "0"),
                "upper": ConstantSpec(_q(PI(-8, 256)), "upper", "pi/2")}),
    Inequality("huygens.classic", "2 sin x/x + tan x/x > 3", lambda P, C, N: [("lower", P.H1 - 3)]),
    Inequality("chen-cheung.huygens.1", "3 + c x^3 tan x bounds for 2 sin x/x + tan x/x",
               _m_huygens_tan((), 3),
               {"lower": ConstantSpec(_q(F(3, 20)), "lower", "0"),
                "upper": ConstantSpec(_q(PI(-4, 16)), "upper", "pi/2")}),
    Inequality("chen-cheung.huygens.2", "3 + 3/20 x^4 + c x^5 tan x bounds for 2 sin x/x + tan x/x",
               _m_huygens_tan(((4, F(3, 20)),), 5),
               {"lower": ConstantSpec(_q(F(3, 56)), "lower", "0"),
                "upper": ConstantSpec(_q(PI(-6, 64)), "upper", "pi/2")}),
    Inequality("lazarevic", "(sin x/x)^2 tan x/x > 1", lambda P, C, N: [("lower", P.S**2 * P.T - 1)]),
    Inequality("wu-srivastava", "(x/sin x)^2 + x/tan x > 2", lambda P, C, N: [("lower", P.W2 - 2)]),
    Inequality("neuman-sandor.chain", "sin x/x < (2+cos x)/3 < (x/sin x + cos x)/2 and its reciprocal form",
               _m_neuman_sandor),
    Inequality("chen-sandor.chain", "six-link chain of Wilker/Huygens means", _m_chen_sandor_chain),
    Inequality("wilker.sharp.N1", "2 + lambda_1 t^4 < W2 < 2 + mu_1 t^4", _m_wilker_sharp(1),
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.wilker_lambda(1)), "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.wilker_mu_form(1), "upper", "pi/2")}),
    Inequality("wilker.sharp.N2", "2 + 2/45 t^4 + lambda_2 t^6 < W2 < 2 + 2/45 t^4 + mu_2 t^6", _m_wilker_sharp(2),
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.wilker_lambda(2)), "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.wilker_mu_form(2), "upper", "pi/2")}),
    Inequality("wilker.alphabeta.N1", "2 + 4x^4/(pi^2-x^2)^2 + alpha_1 x^4 < W2 < ... + beta_1 x^4",
               _m_wilker_alphabeta(1),
               {"lower": ConstantSpec(lambda N: bc.wilker_alpha_form(1), "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.wilker_beta_form(1), "upper", "pi/2")}),
    Inequality("wilker.conjecture2.N", "W2 between its Taylor sum plus p_N and q_N times x^(2N+1) tan x",
               _m_wilker_conjecture,
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.wilker_q(N)[0]), "lower", "pi/2"),
                "upper": ConstantSpec(lambda N: ExactForm.rational(bc.wilker_q(N)[1]), "upper", "0")},
               has_order=True),
    Inequality("huygens.sharp.N1", "3 + a_1 x^4 < H2 < 3 + b_1 x^4", _m_huygens_sharp(1),
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.huygens_a(1)), "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.huygens_b_form(1), "upper", "pi/2")}),
    Inequality("huygens.sharp.N2", "3 + x^4/60 + a_2 x^6 < H2 < 3 + x^4/60 + b_2 x^6", _m_huygens_sharp(2),
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.huygens_a(2)), "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.huygens_b_form(2), "upper", "pi/2")}),
    Inequality("huygens.varrho.N", "H2 between its Taylor sum plus rho_N and varrho_N times x^(2N+1) tan x",
               _m_huygens_varrho,
               {"lower": ConstantSpec(lambda N: ExactForm.rational(bc.huygens_varrho(N)[0]), "lower", "pi/2"),
                "upper": ConstantSpec(lambda N: ExactForm.rational(bc.huygens_varrho(N)[1]), "upper", "0")},
               has_order=True),
    Inequality("papenfuss", "x sec^2 x - tan x < 8 pi^2 x^3/(pi^2-4x^2)^2", _m_sectan_single("upper"),
               {"upper": ConstantSpec(_q(PI(2, 8)), "upper", "pi/2")}),
    Inequality("bach", "x sec^2 x - tan x < (2 pi^4/3) x^3/(pi^2-4x^2)^2", _m_sectan_single("upper"),
               {"upper": ConstantSpec(_q(PI(4, F(2, 3))), "upper", "0")}),
    Inequality("ge", "64 x^3/(pi^2-4x^2)^2 < x sec^2 x - tan x < (2 pi^4/3) x^3/(pi^2-4x^2)^2", _m_ge,
               {"lower": ConstantSpec(_q(64), "lower", "pi/2"),
                "upper": ConstantSpec(_q(PI(4, F(2, 3))), "upper", "0")}),
    Inequality("sun-zhu", "quintic bounds for x sec^2 x - tan x with factor 513/511", _m_sun_zhu,
               {"lower": ConstantSpec(_sz_lower, "lower", "0"),
                "upper": ConstantSpec(_q(PI(-2, F(256 * 513, 511)) - PI(2, F(8, 3))), "upper", "pi/2")}),
    Inequality("sun-zhu.open", "quintic bounds for x sec^2 x - tan x with the best constants", _m_sun_zhu,
               {"lower": ConstantSpec(_sz_lower, "lower", "0"),
                "upper": ConstantSpec(_q(PI(-2, 256) - PI(2, F(8, 3))), "upper", "pi/2")}),
    Inequality("chen.sectan.N2", "P(x)/(pi^2-4x^2)^2 < x sec^2 x - tan x < Q(x)/(pi^2-4x^2)^2",
               _two_sided(lambda P: P.sectan, "chen.sectan.N2.lower", "chen.sectan.N2.upper")),
    Inequality("sec.remainder.N", "c x^(2N-1) tan x bounds for sec x minus its Taylor sum", _m_sec_remainder,
               {"lower": ConstantSpec(lambda N: bc.sec_remainder_constants(N).lower_constant.form, "lower", "0"),
                "upper": ConstantSpec(lambda N: bc.sec_remainder_constants(N).upper_constant.form, "upper", "pi/2")},
               has_order=True),
]}

INEQUALITY_IDS = tuple(REGISTRY)


def normalize_id(inequality_id: str) -> str:
    key = str(inequality_id).strip()
    if key in REGISTRY:
        return key
    alt = key.replace("_", "-")
    for k in REGISTRY:
        if k.lower() == alt.lower():
            return k
    raise RejectedInput(f"unknown inequality id {inequality_id!r}")


# ---------------------------------------------------------------- verification

@dataclass
class InequalityReport:
    inequality_id: str
    domain: tuple          # (left, right, guard) as decimal strings
    grid_points: int
    min_margin: mpf
    argmin: mpf
    verdict: str
    precision_bits: int
    order: int | None = None
    links: dict = field(default_factory=dict)   # label -> (min margin lower bound, argmin)
    violation_at: mpf | None = None
    widest_interval: Enclosure | None = None


def _domain(entry: Inequality, prec: int):
    with workprec(prec + GUARD_BITS):
        b = mp.pi / 2 if entry.upper == "pi/2" else mpf(entry.upper)
        a = mpf(0)
        g = (b - a) * GUARD_REL
    return a, b, g


def _constant_ivals(entry: Inequality, N: int, overrides: dict | None):
    out = {}
    for name, spec in entry.constants.items():
        form = spec.form(N)
        if overrides and name in overrides:
            form = ExactForm.coerce(overrides[name]) if not isinstance(overrides[name], ExactForm) else overrides[name]
        out[name] = form.ival()
    return out


def _evaluate(args):
    """Worker: margins at a chunk of points; returns per-point list of (label, lo, hi)."""
    inequality_id, xs, N, prec, overrides = args
    entry = REGISTRY[inequality_id]
    out = []
    with workprec(prec + GUARD_BITS):
        C = _constant_ivals(entry, N, overrides)
        for x in xs:
            ms = entry.margins(Point(x), C, N)
            out.append([(label, lo(v), hi(v)) for label, v in ms])
    return out


def grid(inequality_id: str, grid_points: int = 2001, precision: int = 256) -> list:
    entry = REGISTRY[normalize_id(inequality_id)]
    a, b, g = _domain(entry, precision)
    with workprec(precision + GUARD_BITS):
        return chebyshev_nodes(a + g, b - g, grid_points)


def endpoint_probes(inequality_id: str, endpoint: str, precision: int = 256, count: int = 13) -> list:
    """Points at distances width*10^(-6-j/2) from an endpoint (inside the guard band)."""
    entry = REGISTRY[normalize_id(inequality_id)]
    a, b, _ = _domain(entry, precision)
    with workprec(precision + GUARD_BITS):
        w = b - a
        ds = [w * mpf(10) ** (-6 - mpf(j) / 2) for j in range(count)]
        return sorted(a + d for d in ds) if endpoint == "0" else sorted(b - d for d in ds)


def verify(inequality_id: str, grid_points: int = 2001, precision: int = 256, order: int | None = None,
           constants: dict | None = None, extra_points=None, jobs: int = 1) -> InequalityReport:
    """Certify an inequality at Chebyshev points of its guarded domain."""
    iid = normalize_id(inequality_id)
    entry = REGISTRY[iid]
    if not isinstance(grid_points, int) or grid_points < 3:
        raise RejectedInput("grid_points must be an integer >= 3")
    if precision < 64:
        raise RejectedInput("precision must be at least 64 bits")
    if entry.has_order:
        N = 1 if order is None else order
        if not isinstance(N, int) or isinstance(N, bool) or N < (0 if iid == "sec.remainder.N" else 1) or N > 60:
            raise RejectedInput(f"order {N!r} out of range for {iid}")
    else:
        N = None
    a, b, g = _domain(entry, precision)
    xs = grid(iid, grid_points, precision)
    if extra_points:
        xs = sorted(set(xs) | {p if isinstance(p, mpf) else mpf(p) for p in extra_points})
    if jobs and jobs > 1 and len(xs) > 64:
        size = math.ceil(len(xs) / jobs)
        chunks = [xs[i:i + size] for i in range(0, len(xs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_evaluate, [(iid, c, N, precision, constants) for c in chunks]))
        values = [row for part in parts for row in part]
    else:
        values = _evaluate((iid, xs, N, precision, constants))
    links: dict = {}
    best = None       # (margin lower bound, x)
    violation = None
    widest = None
    all_pos = True
    for x, row in zip(xs, values):
        for label, l, h in row:
            cur = links.get(label)
            if cur is None or l < cur[0] or (l == cur[0] and x < cur[1]):
                links[label] = (l, x)
            if best is None or l < best[0] or (l == best[0] and x < best[1]):
                best = (l, x)
            if not l > 0:
                all_pos = False
                if h < 0 and violation is None:
                    violation = x
                elif not h < 0 and (widest is None or h - l > widest.width):
                    widest = Enclosure(l, h)
    verdict = CERTIFIED if all_pos else (VIOLATED if violation is not None else INCONCLUSIVE)
    with workprec(64):
        dom = (mp.nstr(a, 17), mp.nstr(b, 17), mp.nstr(g, 6))
    return InequalityReport(iid, dom, len(xs), best[0], best[1], verdict, precision, N,
                            links, violation, widest)


def verify_all(grid_points: int = 2001, precision: int = 256, jobs: int = 1) -> list:
    return [verify(i, grid_points, precision, jobs=jobs) for i in INEQUALITY_IDS]


# ---------------------------------------------------------------- sharpness

@dataclass
class SharpnessCheck:
    inequality_id: str
    constant: str
    endpoint: str
    perturbed: ExactForm
    report: InequalityReport

    @property
    def falsified(self) -> bool:
        return self.report.verdict == VIOLATED


def falsify_sharpness(inequality_id: str, constant: str, grid_points: int = 2001, precision: int = 256,
                      order: int | None = None, relative=PERTURB) -> SharpnessCheck:
    """Tighten one constant by ``relative`` and re-verify, probing close to the sharp endpoint."""
    iid = normalize_id(inequality_id)
    entry = REGISTRY[iid]
    if constant not in entry.constants:
        raise RejectedInput(f"{iid} has no constant named {constant!r}")
    spec = entry.constants[constant]
    N = (1 if order is None else order) if entry.has_order else None
    form = spec.form(N)
    with workprec(64):
        sign = 1 if form.enclosure(64).mid >= 0 else -1
    rel = Fraction(relative)
    # lower constant up, upper constant down, by rel * |c|
    factor = 1 + sign * rel if spec.side == "lower" else 1 - sign * rel
    perturbed = form * factor
    probes = endpoint_probes(iid, spec.endpoint, precision)
    rep = verify(iid, grid_points, precision, order=order, constants={constant: perturbed}, extra_points=probes)
    return SharpnessCheck(iid, constant, spec.endpoint, perturbed, rep)


# ---------------------------------------------------------------- endpoint limits

@dataclass(frozen=True)
class LimitCheck:
    expression_id: str
    endpoint: str
    claimed_limit: ExactForm
    sample_points: list
    extrapolated: mpf
    discrepancy: mpf
    diverged: bool = False
    order: int | None = None

    @property
    def agrees(self) -> bool:
        return not self.diverged and self.discrepancy <= mpf("1e-6")


def _ratio_sun_zhu(P, N):
    x = P.x
    return (P.sectan * P.D**2 - 2 * P.pi**4 / 3 * x**3) / x**5


def _ratio_sec_remainder(P, N):
    return (P.sec - _sec_partial(P, N)) / (P.x ** (2 * N - 1) * P.tan)


def _ratio_wilker(P, N):
    return (P.W2 - 2 - _lam_sum(P, N)) / P.x ** (2 * N + 2)


def _ratio_huygens(P, N):
    return (P.H2 - 3 - _a_sum(P, N)) / P.x ** (2 * N + 2)


def _ratio_wilker_conj(P, N):
    return (P.W2 - 2 - _lam_sum(P, N)) / (P.x ** (2 * N + 1) * P.tan)


def _ratio_huygens_varrho(P, N):
    return (P.H2 - 3 - _a_sum(P, N)) / (P.x ** (2 * N + 1) * P.tan)


def _ratio_alphabeta(P, N):
    x = P.x
    s = sum((1 / (P.pi**2 * k * k - x * x) ** 2 for k in range(1, N + 1)), iv.mpf(0))
    return (P.W2 - 2 - 4 * x**4 * s) / x**4


# expression id -> (ratio, default N, claimed limit at 0, claimed limit at pi/2)
LIMITS: dict = {
    "sun-zhu.ratio": (_ratio_sun_zhu, None, lambda N: _sz_lower(N), lambda N: PI(-2, 256) - PI(2, F(8, 3))),
    "sec-remainder.ratio": (_ratio_sec_remainder, 1,
                            lambda N: bc.sec_remainder_constants(N).lower_constant.form,
                            lambda N: bc.sec_remainder_constants(N).upper_constant.form),
    "wilker.ratio": (_ratio_wilker, 1, lambda N: ExactForm.rational(bc.wilker_lambda(N)), bc.wilker_mu_form),
    "huygens.ratio": (_ratio_huygens, 1, lambda N: ExactForm.rational(bc.huygens_a(N)),
                      lambda N: bc.huygens_b_form(N)),
    "wilker-conjecture.ratio": (_ratio_wilker_conj, 1, lambda N: ExactForm.rational(bc.wilker_q(N)[1]),
                                lambda N: ExactForm.rational(0)),
    "huygens-varrho.ratio": (_ratio_huygens_varrho, 1, lambda N: ExactForm.rational(bc.huygens_varrho(N)[1]),
                             lambda N: ExactForm.rational(0)),
    "wilker-alphabeta.ratio": (_ratio_alphabeta, 1, bc.wilker_alpha_form, bc.wilker_beta_form),
}

LIMIT_IDS = tuple(LIMITS)


def _normalize_endpoint(endpoint) -> str:
    e = str(endpoint).strip().lower().replace(" ", "")
    if e in ("0", "0+", "0⁺", "zero", "left"):
        return "0"
    if e in ("pi/2", "pi/2-", "(pi/2)-", "π/2", "π/2-", "right"):
        return "pi/2"
    raise RejectedInput(f"unknown endpoint {endpoint!r}; use '0' or 'pi/2'")


def endpoint_limit(expression_id: str, endpoint, precision: int = 256, order: int | None = None,
                   h0: str = "0.2", points: int = 8) -> LimitCheck:
    """Extrapolate a ratio to an endpoint and compare with its claimed closed-form limit."""
    key = str(expression_id).strip().lower().replace("_", "-")
    if key not in LIMITS:
        raise RejectedInput(f"unknown limit expression {expression_id!r}")
    fn, default_N, lim0, lim1 = LIMITS[key]
    N = default_N if order is None else order
    if N is not None and (not isinstance(N, int) or N < (0 if key == "sec-remainder.ratio" else 1)):
        raise RejectedInput(f"order {N!r} out of range")
    ep = _normalize_endpoint(endpoint)
    claimed_form = (lim0 if ep == "0" else lim1)(N)
    step_power = 2 if ep == "0" else 1
    wp = precision + GUARD_BITS + 64
    with workprec(wp):
        h = [mpf(h0) / 2**i for i in range(points)]
        xs = h if ep == "0" else [mp.pi / 2 - d for d in h]
        vals = []
        for x in xs:
            v = fn(Point(x), N)
            vals.append(mp.mpf((lo(v) + hi(v)) / 2))
        # Richardson table, eliminating h^(p k) terms
        table = [vals[:]]
        for k in range(1, points):
            prev = table[-1]
            f = mpf(2) ** (step_power * k)
            table.append([prev[i] + (prev[i] - prev[i - 1]) / (f - 1) for i in range(1, len(prev))])
        est = table[-1][-1]
        prev_est = table[-2][-1]
        if claimed_form is None:
            # no closed form: compare against the certified series constant
            claimed = bc.huygens_a_b(N, precision).upper_constant.value
            claimed_form = ExactForm.rational(0)
            claimed_num = claimed
        else:
            claimed_num = claimed_form.enclosure(wp).mid
        scale = abs(claimed_num) if claimed_num != 0 else mpf(1)
        disc = abs(est - claimed_num) / scale
        spread = abs(est - prev_est) / scale
        diverged = not mp.isfinite(est) or spread > mpf("1e-3")
    return LimitCheck(key, "0+" if ep == "0" else "pi/2-", claimed_form, xs, +est, +disc, diverged, N)


# ---------------------------------------------------------------- bound comparison

def _bound_funcs() -> dict:
    out = {}
    for bid, (poly, kind) in bc.RATIONAL_BOUNDS.items():
        side = bid.rsplit(".", 1)[1]
        out[bid] = (lambda x, p=poly: p.ival(x), side, kind)

    def wsharp2(side):
        def f(x):
            c = bc.wilker_lambda(2) if side == "lower" else None
            base = 2 + iv.mpf(2) / 45 * x**4
            k = _fr(c) if c is not None else bc.wilker_mu_form(2).ival()
            return base + k * x**6
        return f

    def wab1(side):
        def f(x):
            pi = +iv.pi
            k = (bc.wilker_alpha_form(1) if side == "lower" else bc.wilker_beta_form(1)).ival()
            return 2 + 4 * x**4 / (pi**2 - x * x) ** 2 + k * x**4
        return f

    def hsharp1(side):
        def f(x):
            k = _fr(bc.huygens_a(1)) if side == "lower" else bc.huygens_b_form(1).ival()
            return 3 + k * x**4
        return f

    def hvarrho1(side):
        def f(x):
            k = bc.huygens_varrho(1)[0 if side == "lower" else 1]
            return 3 + _fr(k) * x**3 * iv.tan(x)
        return f

    for side in ("lower", "upper"):
        out[f"wilker.sharp.N2.{side}"] = (wsharp2(side), side, "wilker2")
        out[f"wilker.alphabeta.N1.{side}"] = (wab1(side), side, "wilker2")
        out[f"huygens.sharp.N1.{side}"] = (hsharp1(side), side, "huygens2")
        out[f"huygens.varrho.N1.{side}"] = (hvarrho1(side), side, "huygens2")
    return out


BOUND_FUNCS = _bound_funcs()


def _normalize_bound(bid: str) -> str:
    key = bc.normalize_bound_id(bid)
    for k in BOUND_FUNCS:
        if k.lower() == key.lower():
            return k
    raise RejectedInput(f"unknown bound id {bid!r}")


@dataclass
class DominanceReport:
    bound_a: str
    bound_b: str
    domain: tuple
    classification: str          # a-dominates, b-dominates, incomparable, equal, inconclusive
    a_sharper_at: list
    b_sharper_at: list
    unresolved_at: list
    grid_points: int
    precision_bits: int


def compare_bounds(bound_id_a: str, bound_id_b: str, domain=None, grid_points: int = 2001,
                   precision: int = 256) -> DominanceReport:
    """Classify which of two bounds of the same side is sharper on a grid."""
    a, b = _normalize_bound(bound_id_a), _normalize_bound(bound_id_b)
    fa, side_a, kind_a = BOUND_FUNCS[a]
    fb, side_b, kind_b = BOUND_FUNCS[b]
    if side_a != side_b or kind_a != kind_b:
        raise RejectedInput("bounds must bound the same function from the same side")
    if grid_points < 3:
        raise RejectedInput("grid_points must be >= 3")
    with workprec(precision + GUARD_BITS):
        if domain is None:
            left, right = mpf(0), (mpf(5) if kind_a == "tanh" else mp.pi / 2)
        else:
            left, right = (mp.pi / 2 if str(d).strip().lower() in ("pi/2", "π/2") else mpf(d) for d in domain)
        g = (right - left) * GUARD_REL
        xs = chebyshev_nodes(left + g, right - g, grid_points)
        a_at, b_at, unresolved = [], [], []
        for x in xs:
            X = iv.mpf(x)
            d = fa(X) - fb(X)           # positive: a larger
            if side_a == "upper":
                d = -d                  # positive: a smaller
            if lo(d) > 0:
                a_at.append(x)
            elif hi(d) < 0:
                b_at.append(x)
            else:
                unresolved.append(x)
    if a_at and b_at:
        cls = "incomparable"
    elif a_at and not unresolved:
        cls = "a-dominates"
    elif b_at and not unresolved:
        cls = "b-dominates"
    elif a_at:
        cls = "a-dominates" if len(unresolved) < len(xs) else "inconclusive"
    elif b_at:
        cls = "b-dominates"
    else:
        cls = "inconclusive"
    with workprec(64):
        dom = (mp.nstr(left, 17), mp.nstr(right, 17))
    return DominanceReport(a, b, dom, cls, a_at, b_at, unresolved, len(xs), precision)


# ---------------------------------------------------------------- monotonicity lemmas

MONOTONE = {
    "wilker-V": (rs.wilker_V, "increasing", "pi/2"),
    "tanh-g": (rs.tanh_g, "decreasing", "5"),
    "huygens-U": (rs.huygens_U, "increasing", "pi/2"),
    "sec-H": (rs.sec_H, "decreasing", "pi/2"),
}


@dataclass
class MonotonicityReport:
    function_id: str
    N: int
    direction: str
    points: int
    strict: bool
    worst_gap: mpf


def check_monotonicity(function_id: str, N: int, points: int = 41, precision: int = 256) -> MonotonicityReport:
    """Strict ordering of enclosures at adjacent points of an ascending grid."""
    if function_id not in MONOTONE:
        raise RejectedInput(f"unknown auxiliary series {function_id!r}")
    fn, direction, right = MONOTONE[function_id]
    with workprec(precision + GUARD_BITS):
        b = mp.pi / 2 if right == "pi/2" else mpf(right)
        g = b * GUARD_REL
        xs = chebyshev_nodes(g, b - g, points)
    vals = [fn(N, x, precision) for x in xs]
    worst = None
    strict = True
    with workprec(precision + GUARD_BITS):
        for u, v in zip(vals, vals[1:]):
            # gap between enclosures in the claimed direction
            gap = v.lo - u.hi if direction == "increasing" else u.lo - v.hi
            if worst is None or gap < worst:
                worst = gap
            if not gap > 0:
                strict = False
    return MonotonicityReport(function_id, N, direction, points, strict, worst)
