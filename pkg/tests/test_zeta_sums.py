from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, zeta, altzeta, pi

from trig_enclose.errors import BudgetExceeded, RejectedInput
from trig_enclose.forms import ExactForm
from trig_enclose.rational_series import RationalTerm, poly, ppow
from trig_enclose.zeta_sums import (REGISTRY, alt_even_zeta, alt_odd_sum, brute_sum, even_zeta,
                                    odd_zeta_even, registry_constant, registry_entry)

from conftest import oracle
from frozen import FROZEN


@given(st.integers(1, 12))
@settings(max_examples=12, deadline=None)
def test_zeta_families_against_mpmath(n):
    with oracle():
        z = zeta(2 * n)
        assert even_zeta(n).numeric.contains(z)
        assert odd_zeta_even(n).numeric.contains((1 - mpf(2) ** (-2 * n)) * z)
        assert alt_even_zeta(n).numeric.contains(altzeta(2 * n))
        # Dirichlet beta at odd arguments
        beta = (zeta(2 * n + 1, 0.25) - zeta(2 * n + 1, 0.75)) / 4 ** (2 * n + 1)
        assert alt_odd_sum(n).numeric.contains(beta)


def test_small_cases_exact():
    assert even_zeta(1).form == ExactForm.pi_power(2, Fraction(1, 6))
    assert odd_zeta_even(2).form == ExactForm.pi_power(4, Fraction(1, 96))
    assert alt_even_zeta(1).form == ExactForm.pi_power(2, Fraction(1, 12))
    assert alt_odd_sum(0).form == ExactForm.pi_power(1, Fraction(1, 4))
    assert alt_odd_sum(1).form == ExactForm.pi_power(3, Fraction(1, 32))


def test_widths_at_256_bits():
    c = even_zeta(5, precision=256)
    assert c.numeric.width < mpf(2) ** -240
    assert c.precision == 256


@pytest.mark.parametrize("bad", [0, -1, 1.5, True])
def test_bad_orders(bad):
    with pytest.raises(RejectedInput):
        even_zeta(bad)


def test_alt_odd_sum_accepts_zero():
    with pytest.raises(RejectedInput):
        alt_odd_sum(-1)


@pytest.mark.parametrize("eid", sorted(REGISTRY, key=lambda s: int(s[1:])))
def test_registry_matches_frozen_and_brute(eid):
    c = registry_constant(eid)
    with oracle():
        assert abs(c.value - mpf(FROZEN[eid])) < mpf(10) ** -55
    brute, tail = brute_sum(registry_entry(eid).term, registry_entry(eid).start, precision=256)
    lo = max(brute.lo, c.numeric.lo)
    hi = min(brute.hi, c.numeric.hi)
    assert lo <= hi, f"{eid}: closed form and direct sum disjoint"
    assert tail.bound < mpf(2) ** -128


def test_registry_ids_case_insensitive():
    assert registry_constant("s3").form == registry_constant("S3").form
    with pytest.raises(RejectedInput):
        registry_constant("S16")


def test_exact_terms_labels():
    labels = dict((lab, c) for c, lab in registry_constant("S10").exact_terms)
    assert labels["zeta(3)"] == Fraction(-3, 2)
    assert labels["pi"] == 4
    assert registry_constant("S3").exact_terms == [(-1, "1"), (Fraction(1, 96), "pi^4")]


def test_brute_sum_callable_with_envelope():
    enc, tail = brute_sum(lambda k: Fraction(1, k**3), 1, tolerance=mpf(10) ** -8, envelope=(1, 3))
    with oracle():
        assert enc.contains(zeta(3))
    assert tail.bound <= mpf(10) ** -8


def test_brute_sum_needs_envelope():
    with pytest.raises(RejectedInput):
        brute_sum(lambda k: Fraction(1, k**2), 1)
    with pytest.raises(RejectedInput):
        brute_sum(lambda k: Fraction(1, k**2), 1, envelope=(1, 1))


def test_brute_sum_budget():
    with pytest.raises(BudgetExceeded) as info:
        brute_sum(lambda k: Fraction(1, k**2), 1, tolerance=mpf(10) ** -30, envelope=(1, 2))
    assert info.value.best_bound > 0


def test_brute_sum_rational_term_tight():
    enc, _ = brute_sum(RationalTerm(poly(1), ppow(poly(0, 1), 4)), 1)
    with oracle():
        assert enc.contains(pi**4 / 90)
    assert enc.width < mpf(2) ** -120
