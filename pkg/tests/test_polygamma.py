from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, psi, pi

from trig_enclose.errors import RejectedInput
from trig_enclose.forms import ExactForm
from trig_enclose.polygamma import (polygamma, polygamma_form, tail_4k2_minus_1_sq,
                                    tail_4k2_minus_1_sq_form, tail_inverse_quartic,
                                    tail_inverse_quartic_form)

from conftest import oracle


@given(st.sampled_from([1, 3]), st.integers(1, 80), st.booleans())
@settings(max_examples=30, deadline=None)
def test_polygamma_against_mpmath(m, n, half):
    z = Fraction(2 * n - 1, 2) if half else Fraction(n)
    v = polygamma(m, z)
    with oracle():
        ref = psi(m, mpf(z.numerator) / z.denominator)
        assert v.enclosure.contains(ref)
        assert v.enclosure.width < mpf(2) ** -230 * abs(ref)
        assert polygamma_form(m, z).enclosure(400).contains(ref)


def test_known_values():
    assert polygamma_form(1, 1) == ExactForm.pi_power(2, Fraction(1, 6))
    assert polygamma_form(1, Fraction(1, 2)) == ExactForm.pi_power(2, Fraction(1, 2))
    assert polygamma_form(3, 1) == ExactForm.pi_power(4, Fraction(1, 15))


@pytest.mark.parametrize("m,z", [(2, 1), (1, 0), (1, Fraction(1, 3)), (3, -2), (1, "x")])
def test_rejected(m, z):
    with pytest.raises(RejectedInput):
        polygamma(m, z)


def test_tail_4k2_base_case():
    assert tail_4k2_minus_1_sq_form(0) == ExactForm.pi_power(2, Fraction(1, 16)) - Fraction(1, 2)


@pytest.mark.parametrize("N", [0, 1, 5, 20])
def test_tails_against_direct_sums(N):
    with oracle():
        a = mp.nsum(lambda k: 1 / (4 * k * k - 1) ** 2, [N + 1, mp.inf])
        b = mp.nsum(lambda k: 1 / k**4, [N + 1, mp.inf])
    assert tail_4k2_minus_1_sq(N).contains(a)
    assert tail_inverse_quartic(N).contains(b)
    with oracle():
        assert abs(tail_4k2_minus_1_sq_form(N).enclosure(600).mid - a) < mpf(10) ** -100
        assert abs(tail_inverse_quartic_form(N).enclosure(600).mid - b) < mpf(10) ** -100


def test_tail_bad_N():
    with pytest.raises(RejectedInput):
        tail_inverse_quartic(-1)
