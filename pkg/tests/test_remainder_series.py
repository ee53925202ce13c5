import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from trig_enclose.errors import DomainError, RejectedInput
from trig_enclose.intervals import chebyshev_nodes
from trig_enclose import remainder_series as rs

from conftest import oracle

REFERENCE = {
    "tan": mp.tan,
    "tanh": mp.tanh,
    "sec": mp.sec,
    "cot": mp.cot,
    "csc": mp.csc,
    "sec2tan": lambda t: t * mp.sec(t) ** 2 - mp.tan(t),
}
DOMAIN = {"tan": (0, mp.pi / 2), "sec": (0, mp.pi / 2), "sec2tan": (0, mp.pi / 2),
          "tanh": (0, 5), "cot": (0, mp.pi), "csc": (0, mp.pi)}


def grid(fid, n):
    a, b = DOMAIN[fid]
    guard = (b - a) * mpf("1e-5")
    return chebyshev_nodes(a + guard, b - guard, n)


@pytest.mark.parametrize("fid", rs.FUNCTIONS)
@pytest.mark.parametrize("N", [0, 1, 3, 6])
def test_value_enclosures_contain_reference(fid, N):
    if fid == "sec2tan" and N == 0:
        pytest.skip("sec2tan starts at N=1")
    for t in grid(fid, 9):
        r = rs.eval_with_enclosure(fid, N, t, precision=256)
        with oracle():
            assert r.value.contains(REFERENCE[fid](r.t)), (fid, N, t)
        assert r.value.width < mpf(10) ** -30


def test_tan_order_zero_at_zero_is_exact():
    r = rs.eval_with_enclosure("tan", 0, 0)
    assert r.value.lo == r.value.hi == 0


@pytest.mark.parametrize("t", ["0.1", "0.9", "1.5"])
def test_sign_laws(t):
    t = mpf(t)
    for N in range(0, 5):
        assert rs.remainder_tan(N, t).is_positive()
        assert rs.remainder_cot(N, t).is_negative()
        tau = rs.remainder_tanh(N, t)
        assert tau.is_positive() if N % 2 == 0 else tau.is_negative()
    for N in range(1, 5):
        assert rs.remainder_sec2tan(N, t).is_positive()


@given(st.integers(0, 6), st.floats(0.01, 40))
@settings(max_examples=25, deadline=None)
def test_xi_in_unit_interval(N, t):
    xi = rs.xi_factor(N, t, precision=128)
    assert xi.lo > 0 and xi.hi <= 1


@pytest.mark.parametrize("call", [
    lambda: rs.remainder_tan(1, mpf("1.5707960")),
    lambda: rs.remainder_sec(1, -2),
    lambda: rs.remainder_cot(1, 0),
    lambda: rs.remainder_csc(2, mpf("3.1415925")),
    lambda: rs.remainder_sec2tan(1, 1.58),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_bad_inputs():
    with pytest.raises(RejectedInput):
        rs.remainder_tan(-1, 0.5)
    with pytest.raises(RejectedInput):
        rs.remainder_sec2tan(0, 0.5)
    with pytest.raises(RejectedInput):
        rs.eval_with_enclosure("sin", 1, 0.5)


def test_relative_tolerance_loosens_width():
    tight = rs.remainder_tan(2, 1.2, precision=256)
    loose = rs.remainder_tan(2, 1.2, precision=256, tolerance=mpf(2) ** -40)
    assert loose.width > tight.width
    assert loose.lo <= tight.lo and tight.hi <= loose.hi


def test_terms_used_grows_near_pole():
    near = rs.eval_with_enclosure("tan", 2, mpf("1.5707"))
    far = rs.eval_with_enclosure("tan", 2, mpf("0.3"))
    assert near.terms_used >= far.terms_used
    assert near.tail.bound >= 0


def _strictly_ordered(values, increasing):
    for a, b in zip(values, values[1:]):
        if increasing:
            assert a.hi < b.lo
        else:
            assert b.hi < a.lo


@pytest.mark.parametrize("N", [1, 2, 3])
def test_wilker_V_increases(N):
    pts = chebyshev_nodes(mpf("0.01"), mp.pi / 2 - mpf("0.01"), 25)
    _strictly_ordered([rs.wilker_V(N, t) for t in pts], True)


def test_tanh_g_decreases():
    pts = chebyshev_nodes(mpf("0.01"), 10, 25)
    _strictly_ordered([rs.tanh_g(2, t) for t in pts], False)


def test_huygens_U_increases_and_sec_H_decreases():
    pts = chebyshev_nodes(mpf("0.01"), mp.pi / 2 - mpf("0.01"), 25)
    _strictly_ordered([rs.huygens_U(1, x) for x in pts], True)
    _strictly_ordered([rs.sec_H(1, t) for t in pts], False)


@pytest.mark.parametrize("fid", rs.FUNCTIONS)
def test_wide_arguments_not_rounded_by_ambient_context(fid):
    # a 200-bit argument evaluated from the default 53-bit context
    with oracle():
        t = mp.mpf(1) / 3 + mp.mpf(2) ** -150
    r = rs.eval_with_enclosure(fid, 2, t, precision=256)
    with oracle():
        assert r.value.contains(REFERENCE[fid](t))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_tanh_partial_sums_alternate(m):
    # even-order Taylor sums of tanh t/t lie below it, odd-order ones above
    ts = list(chebyshev_nodes(mpf("0.001"), 5, 15)) + [mpf(5)]
    for t in ts:
        assert rs.remainder_tanh(2 * m, t).is_positive()
        assert rs.remainder_tanh(2 * m - 1, t).is_negative()
