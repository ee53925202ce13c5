"""End-to-end acceptance checks, one per criterion.

Run with pytest (one PASS/FAIL line is printed per criterion) or directly:
``python tests/test_acceptance.py``.
"""
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
from mpmath import iv, mp, mpf

sys.path.insert(0, str(Path(__file__).parent))

from trig_enclose import best_constants as bc
from trig_enclose import inequality_verifier as iv_
from trig_enclose import remainder_series as rs
from trig_enclose.forms import ExactForm
from trig_enclose.intervals import Enclosure, chebyshev_nodes, workprec
from trig_enclose.polygamma import tail_4k2_minus_1_sq, tail_4k2_minus_1_sq_form
from trig_enclose.rational_series import RationalTerm, poly, ppow
from trig_enclose.zeta_sums import REGISTRY, brute_sum, registry_constant

from conftest import oracle

F = Fraction
PI = ExactForm.pi_power
TOL = mpf(10) ** -30


def _gap(a, b):
    """Distance between two enclosures (0 when they overlap)."""
    return max(mpf(0), a.lo - b.hi, b.lo - a.hi)


def _spread(a, b):
    """Rigorous bound on |x - y| for x in a, y in b."""
    with oracle():
        return max(abs(a.hi - b.lo), abs(b.hi - a.lo))


def _closeness(enc, form):
    # series enclosure vs closed form evaluated far more finely
    ref = form.enclosure(600)
    with oracle():
        return max(abs(enc.hi - ref.lo), abs(ref.hi - enc.lo))


# ---------------------------------------------------------------- 1

def check_1():
    t0 = time.perf_counter()
    w1, w2 = bc.wilker_lambda_mu(1), bc.wilker_lambda_mu(2)
    h1, h2 = bc.huygens_a_b(1), bc.huygens_a_b(2)
    ab1 = bc.wilker_alpha_beta(1)
    exact = (w1.lower_constant.form == F(2, 45) and w2.lower_constant.form == F(8, 945)
             and h1.lower_constant.form == F(1, 60) and h2.lower_constant.form == F(1, 504))
    closed = {
        "mu1": (w1.upper_constant.enclosure, (PI(2, 4) - 32) / PI(4)),
        "mu2": (w2.upper_constant.enclosure, (PI(2, 720) - 5760 - PI(4, 8)) * F(1, 45) / PI(6)),
        "b1": (h1.upper_constant.enclosure, (PI(1, 16) - 48) / PI(4)),
        "b2": (h2.upper_constant.enclosure, (PI(1, 960) - PI(4) - 2880) * F(1, 15) / PI(6)),
        "alpha1": (ab1.lower_constant.enclosure, (PI(4, 2) - 180) * F(1, 45) / PI(4)),
        "beta1": (ab1.upper_constant.enclosure, (PI(2, 36) - 352) * F(1, 9) / PI(4)),
    }
    errs = {k: _closeness(e, f) for k, (e, f) in closed.items()}
    elapsed = time.perf_counter() - t0
    worst = max(errs.values())
    ok = exact and worst <= TOL and elapsed <= 10
    return ok, f"exact rationals {'ok' if exact else 'MISMATCH'}, worst |series - closed| {mp.nstr(worst, 3)}, {elapsed:.1f}s"


# ---------------------------------------------------------------- 2

REFERENCE = {
    "tan": mp.tan,
    "tanh": mp.tanh,
    "sec": mp.sec,
    "cot": mp.cot,
    "csc": mp.csc,
    "sec2tan": lambda t: t * mp.sec(t) ** 2 - mp.tan(t),
}


def _domain(fid):
    right = {"tanh": mpf(5), "cot": mp.pi, "csc": mp.pi}.get(fid, mp.pi / 2)
    guard = right * mpf("1e-6")
    return guard, right - guard


def check_2():
    t0 = time.perf_counter()
    points = bad = 0
    worst_width = mpf(0)
    for fid in rs.FUNCTIONS:
        with workprec(256):
            a, b = _domain(fid)
            ts = chebyshev_nodes(a, b, 41)
        for N in range(0 if fid != "sec2tan" else 1, 7):
            for t in ts:
                r = rs.eval_with_enclosure(fid, N, t, precision=256)
                with oracle():
                    if not r.value.contains(REFERENCE[fid](t)):
                        bad += 1
                worst_width = max(worst_width, r.value.width)
                points += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and worst_width <= TOL and elapsed <= 60
    return ok, f"{points} evaluations, {bad} misses, widest {mp.nstr(worst_width, 3)}, {elapsed:.1f}s"


# ---------------------------------------------------------------- 3

def check_3():
    term = RationalTerm(poly(1), ppow(poly(-1, 0, 4), 2))
    worst = mpf(0)
    for N in range(21):
        direct, _ = brute_sum(term, N + 1, precision=256)
        worst = max(worst, _spread(direct, tail_4k2_minus_1_sq(N)),
                    _closeness(direct, tail_4k2_minus_1_sq_form(N)))
    base = tail_4k2_minus_1_sq_form(0) == (PI(2) - 8) * F(1, 16)
    return base and worst <= TOL, f"N=0 exact form {'ok' if base else 'MISMATCH'}, worst discrepancy {mp.nstr(worst, 3)}"


# ---------------------------------------------------------------- 4

def check_4():
    disjoint = []
    for eid, entry in REGISTRY.items():
        c = registry_constant(eid, precision=256)
        direct, _ = brute_sum(entry.term, entry.start, precision=256)
        if _gap(c.numeric, direct) > 0:
            disjoint.append(eid)
    return not disjoint, f"{len(REGISTRY) - len(disjoint)}/{len(REGISTRY)} registry sums match direct sums"


# ---------------------------------------------------------------- 5

def check_5():
    t0 = time.perf_counter()
    reports = iv_.verify_all(grid_points=2001, precision=256)
    elapsed = time.perf_counter() - t0
    failed = [r.inequality_id for r in reports if r.verdict != iv_.CERTIFIED or not r.min_margin > 0]
    ok = len(reports) == 33 and not failed and elapsed <= 300
    return ok, f"{len(reports) - len(failed)}/{len(reports)} certified, {elapsed:.1f}s" + (f", failed: {failed}" if failed else "")


# ---------------------------------------------------------------- 6

SHARP = [("wilker.sharp.N1", None), ("huygens.sharp.N1", None), ("sun-zhu.open", None), ("sec.remainder.N", 1)]


def check_6():
    missed = []
    for iid, order in SHARP:
        for name in iv_.REGISTRY[iid].constants:
            chk = iv_.falsify_sharpness(iid, name, grid_points=2001, precision=256, order=order)
            if not chk.falsified:
                missed.append(f"{iid}:{name}")
    total = sum(len(iv_.REGISTRY[i].constants) for i, _ in SHARP)
    return not missed, f"{total - len(missed)}/{total} perturbed constants violated" + (f", missed: {missed}" if missed else "")


# ---------------------------------------------------------------- 7

def check_7():
    c0 = iv_.endpoint_limit("sun-zhu.ratio", "0")
    c1 = iv_.endpoint_limit("sun-zhu.ratio", "pi/2")
    with oracle():
        e0 = 8 * mp.pi**4 / 15 - 16 * mp.pi**2 / 3
        e1 = 256 / mp.pi**2 - 8 * mp.pi**2 / 3
        d0 = abs(c0.extrapolated - e0) / abs(e0)
        d1 = abs(c1.extrapolated - e1) / abs(e1)
    ok = d0 <= mpf("1e-6") and d1 <= mpf("1e-6") and not (c0.diverged or c1.diverged)
    return ok, f"relative discrepancy {mp.nstr(d0, 3)} at 0+, {mp.nstr(d1, 3)} at pi/2-"


# ---------------------------------------------------------------- 8

def check_8():
    exact = all(bc.wilker_q(N)[1] == bc.wilker_lambda(N) and bc.huygens_varrho(N)[1] == bc.huygens_a(N)
                for N in range(1, 7))
    exact = exact and bc.wilker_alpha_form(0) == F(2, 45) == bc.wilker_lambda(1)
    exact = exact and bc.wilker_beta_form(0) == bc.wilker_mu_form(1)
    worst = mpf(0)
    for N in range(11):
        beta = bc.wilker_alpha_beta(N).upper_constant.enclosure
        with workprec(280):
            scaled = Enclosure.from_iv(tail_4k2_minus_1_sq(N).to_iv() * 64 / (+iv.pi) ** 4)
        form_gap = bc.wilker_beta_form(N) - tail_4k2_minus_1_sq_form(N) * 64 / PI(4)
        if form_gap != 0:
            worst = mpf("inf")
        worst = max(worst, _spread(beta, scaled))
    return exact and worst <= TOL, f"exact identities {'ok' if exact else 'MISMATCH'}, beta forms identical, worst enclosure spread {mp.nstr(worst, 3)}"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8]
TITLES = ["constant reproduction", "remainder identity suite", "tail identity", "closed-form sum registry",
          "inequality certification", "sharpness falsification", "endpoint limits", "cross-formula identities"]


def _line(i, ok, detail):
    return f"criterion {i} ({TITLES[i - 1]}): {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("i", range(1, 9))
def test_criterion(i, capsys):
    ok, detail = CHECKS[i - 1]()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, check in enumerate(CHECKS, 1):
        ok, detail = check()
        print(_line(i, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
