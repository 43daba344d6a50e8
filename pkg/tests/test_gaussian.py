"""Gaussian rationals and evaluation of Laurent polynomials at A = i."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinmod.gaussian import GaussRat, laurent_at_i
from skeinmod.laurent import LaurentPoly

from conftest import laurent_polys, small_fractions


def gauss_rats():
    return st.builds(GaussRat, small_fractions(), small_fractions())


def test_anchors():
    i = GaussRat.i()
    assert i * i == -1
    assert i ** 4 == 1
    assert str(GaussRat(Fraction(1, 2), -1)) == "1/2 - i"
    assert GaussRat(3, 4).norm() == 25


@given(gauss_rats(), gauss_rats(), gauss_rats())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(gauss_rats())
def test_inverse(x):
    if x.is_zero:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1
        assert x.conj() * x == x.norm()


@given(laurent_polys(), laurent_polys())
def test_laurent_at_i_is_a_homomorphism(p, q):
    assert laurent_at_i(p * q) == laurent_at_i(p) * laurent_at_i(q)
    assert laurent_at_i(p + q) == laurent_at_i(p) + laurent_at_i(q)


@given(laurent_polys())
def test_laurent_at_i_matches_generic_eval(p):
    # same value through the generic substitution path
    i = GaussRat.i()
    assert laurent_at_i(p) == p.eval_at(i, -i, GaussRat.one())


def test_laurent_at_i_anchor():
    # A^2 + A^-2 evaluates to -2, the loop value at a 4th root of unity
    p = LaurentPoly.A(2) + LaurentPoly.A(-2)
    assert laurent_at_i(p) == -2
