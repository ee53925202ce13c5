from fractions import Fraction

import pytest
from mpmath import mp

from trig_enclose.forms import ExactForm

from conftest import oracle

PI = ExactForm.pi_power


def test_arithmetic_and_printing():
    f = ExactForm.rational(5) - PI(2, Fraction(1, 2))
    assert str(f) == "5 - 1/2*pi^2"
    assert f + PI(2, Fraction(1, 2)) == 5
    assert (PI(2) * PI(-2)).is_rational()
    assert (PI(4, 3) / PI(2)) == PI(2, 3)
    assert -f == PI(2, Fraction(1, 2)) - 5
    assert hash(PI(1)) == hash(ExactForm.pi_power(1, 1))


def test_extras_do_not_multiply():
    with pytest.raises(ValueError):
        ExactForm.ln2() * ExactForm.zeta3()


def test_as_fraction():
    assert ExactForm.rational(Fraction(3, 7)).as_fraction() == Fraction(3, 7)
    with pytest.raises(ValueError):
        PI(1).as_fraction()


def test_enclosures_contain_reference():
    f = PI(1, 4) - ExactForm.ln2(8) - PI(2, Fraction(1, 3)) - ExactForm.zeta3(Fraction(3, 2))
    e = f.enclosure(256)
    with oracle():
        r = 4 * mp.pi - 8 * mp.log(2) - mp.pi**2 / 3 - mp.zeta(3) * 3 / 2
        assert e.lo <= r <= e.hi
    assert e.width < mp.mpf(2) ** -240
