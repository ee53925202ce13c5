from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import iv, mp, nsum, inf

from trig_enclose.errors import RejectedInput
from trig_enclose.intervals import Enclosure, workprec
from trig_enclose.rational_series import RationalTerm, pmul, poly, ppow, sum_series

from conftest import oracle


def _sum(term, start, bits=200):
    with workprec(bits + 24):
        v, tail = sum_series(term, start, bits)
        return Enclosure.from_iv(v), tail


def test_basel():
    e, tail = _sum(RationalTerm(poly(1), ppow(poly(0, 1), 2)), 1)
    with oracle():
        assert e.contains(mp.pi**2 / 6)
    assert e.width < mp.mpf(2) ** -190
    assert tail.bound < mp.mpf(2) ** -200


def test_alternating():
    e, _ = _sum(RationalTerm(poly(1), ppow(poly(0, 1), 2), alternating=True), 1)
    with oracle():
        assert e.contains(mp.pi**2 / 12)


def test_alternating_from_even_start():
    # sum_{k>=2} (-1)^(k+1)/k^2 = pi^2/12 - 1
    e, _ = _sum(RationalTerm(poly(1), ppow(poly(0, 1), 2), alternating=True), 2)
    with oracle():
        assert e.contains(mp.pi**2 / 12 - 1)


@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 3), st.booleans())
@settings(max_examples=25, deadline=None)
def test_random_rational_terms(a, b, extra, alt):
    # 1/((k+a)(k+b)^(1+extra)) with optional alternation, against mpmath nsum
    den = pmul(poly(a, 1), ppow(poly(b, 1), 1 + extra))
    term = RationalTerm(poly(1), den, alternating=alt)
    e, _ = _sum(term, 1, 120)
    with oracle(80):
        ref = nsum(lambda k: (-1) ** (k + 1) / ((k + a) * (k + b) ** (1 + extra)) if alt
                   else 1 / ((k + a) * (k + b) ** (1 + extra)), [1, inf])
        assert abs(ref - e.mid) <= e.width / 2 + mp.mpf(10) ** -70
    assert e.width < mp.mpf(2) ** -118


def test_divergent_rejected():
    with pytest.raises(RejectedInput):
        _sum(RationalTerm(poly(1), poly(0, 1)), 1)


def test_pole_rejected():
    with pytest.raises(RejectedInput):
        _sum(RationalTerm(poly(1), pmul(poly(-3, 1), poly(0, 1))), 1)


def test_call_and_decay():
    t = RationalTerm(poly(1), ppow(poly(0, 1), 3), alternating=True)
    assert t(2) == Fraction(-1, 8)
    assert t.decay == 3
