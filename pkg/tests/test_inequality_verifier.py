from fractions import Fraction

import pytest
from mpmath import mp, mpf

from trig_enclose import inequality_verifier as iv_
from trig_enclose.errors import RejectedInput
from trig_enclose.forms import ExactForm


def test_registry_has_all_ids():
    assert len(iv_.INEQUALITY_IDS) == 33
    assert iv_.normalize_id("Sun_Zhu.Open") == "sun-zhu.open"
    with pytest.raises(RejectedInput):
        iv_.normalize_id("cauchy-schwarz")


@pytest.mark.parametrize("iid", iv_.INEQUALITY_IDS)
def test_every_inequality_certifies_on_small_grid(iid):
    rep = iv_.verify(iid, grid_points=31, precision=128)
    assert rep.verdict == iv_.CERTIFIED, (iid, rep.min_margin, rep.argmin)
    assert rep.min_margin > 0
    assert rep.grid_points == 31


def test_becker_stark_min_margin_interior():
    rep = iv_.verify("becker-stark", grid_points=11)
    a, b = mpf(rep.domain[0]), mpf(rep.domain[1])
    assert a < rep.argmin < b
    assert set(rep.links) == {"lower", "upper"}


def test_chain_reports_each_link():
    rep = iv_.verify("chen-sandor.chain", grid_points=11)
    assert len(rep.links) == 6
    assert all(v[0] > 0 for v in rep.links.values())


@pytest.mark.parametrize("N", [1, 2, 4])
def test_ordered_families(N):
    for iid in ("wilker.conjecture2.N", "huygens.varrho.N", "sec.remainder.N"):
        assert iv_.verify(iid, grid_points=21, order=N).verdict == iv_.CERTIFIED


def test_sec_remainder_order_zero():
    assert iv_.verify("sec.remainder.N", grid_points=21, order=0).verdict == iv_.CERTIFIED


def test_wrong_constant_is_violated():
    # doubling the lower Wilker constant breaks the inequality well inside the domain
    rep = iv_.verify("wilker.sharp.N1", grid_points=21,
                     constants={"lower": ExactForm.rational(Fraction(4, 45))})
    assert rep.verdict == iv_.VIOLATED
    assert rep.violation_at is not None


def test_low_precision_inconclusive_or_certified():
    rep = iv_.verify("sun-zhu.open", grid_points=11, precision=64)
    assert rep.verdict in (iv_.CERTIFIED, iv_.INCONCLUSIVE)
    if rep.verdict == iv_.INCONCLUSIVE:
        assert rep.widest_interval is not None


def test_bad_arguments():
    with pytest.raises(RejectedInput):
        iv_.verify("wilker.classic", grid_points=2)
    with pytest.raises(RejectedInput):
        iv_.verify("wilker.classic", precision=32)
    with pytest.raises(RejectedInput):
        iv_.verify("wilker.conjecture2.N", order=0)


def test_parallel_matches_serial():
    a = iv_.verify("huygens.sharp.N2", grid_points=201, precision=128)
    b = iv_.verify("huygens.sharp.N2", grid_points=201, precision=128, jobs=2)
    assert (a.min_margin, a.argmin, a.verdict) == (b.min_margin, b.argmin, b.verdict)


@pytest.mark.parametrize("iid,const", [("wilker.sharp.N2", "upper"), ("huygens.sharp.N2", "lower"),
                                       ("ge", "lower"), ("chen-cheung.wilker.1", "upper")])
def test_sharpness_falsified(iid, const):
    chk = iv_.falsify_sharpness(iid, const, grid_points=101)
    assert chk.falsified, (iid, const, chk.report.min_margin)


def test_sharpness_unknown_constant():
    with pytest.raises(RejectedInput):
        iv_.falsify_sharpness("wilker.classic", "lower")


@pytest.mark.parametrize("eid,ep,expected", [
    ("sun-zhu.ratio", "0", 8 * mp.pi**4 / 15 - 16 * mp.pi**2 / 3),
    ("sun-zhu.ratio", "pi/2", 256 / mp.pi**2 - 8 * mp.pi**2 / 3),
    ("wilker.ratio", "0", mpf(2) / 45),
    ("huygens.ratio", "pi/2", 16 * (mp.pi - 3) / mp.pi**4),
])
def test_endpoint_limits(eid, ep, expected):
    chk = iv_.endpoint_limit(eid, ep)
    assert chk.agrees and not chk.diverged
    assert abs(chk.extrapolated - expected) <= mpf("1e-6") * abs(expected)
    assert len(chk.sample_points) == 8


def test_sec_remainder_limit_N2():
    chk = iv_.endpoint_limit("sec-remainder.ratio", "0+", order=2)
    assert chk.claimed_limit == Fraction(5, 24)
    assert chk.agrees


def test_limit_bad_inputs():
    with pytest.raises(RejectedInput):
        iv_.endpoint_limit("sun-zhu.ratio", "1")
    with pytest.raises(RejectedInput):
        iv_.endpoint_limit("nope", "0")


@pytest.mark.parametrize("a,b", [("becker-stark.lower", "banjac.lower"),
                                 ("wilker.sharp.N2.upper", "wilker.alphabeta.N1.upper"),
                                 ("huygens.sharp.N1.upper", "huygens.varrho.N1.upper")])
def test_no_strict_comparison_pairs(a, b):
    rep = iv_.compare_bounds(a, b, grid_points=101)
    assert rep.classification == "incomparable"
    assert rep.a_sharper_at and rep.b_sharper_at


@pytest.mark.parametrize("a,b", [("banjac.upper", "becker-stark.upper"), ("chen.tan.N1.upper", "banjac.upper")])
def test_dominance(a, b):
    assert iv_.compare_bounds(a, b, grid_points=101).classification == "a-dominates"
    assert iv_.compare_bounds(b, a, grid_points=101).classification == "b-dominates"


def test_compare_requires_same_side():
    with pytest.raises(RejectedInput):
        iv_.compare_bounds("banjac.lower", "banjac.upper")


@pytest.mark.parametrize("fid,N", [("wilker-V", 1), ("wilker-V", 3), ("tanh-g", 1), ("huygens-U", 2), ("sec-H", 1)])
def test_monotonicity(fid, N):
    rep = iv_.check_monotonicity(fid, N, points=21)
    assert rep.strict and rep.worst_gap > 0
