"""Cyclotomic number field arithmetic.

Two independent oracles: sympy's minimal polynomials for the field
definitions, and numeric embedding into the complex plane for the ring
operations (exact results must land within float error of the numeric
ones; the converse direction is what the exact code is for).
"""

import cmath
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinmod.cyclotomic import (
    CycNum,
    cyclotomic_poly,
    laurent_eval,
    rational_sqrt_cyclotomic,
    root_of_unity,
    root_of_unity_with_trace,
    totient,
)
from skeinmod.laurent import LaurentPoly

from conftest import cyc_numbers, laurent_polys


@pytest.mark.parametrize("n", list(range(1, 61)))
def test_cyclotomic_poly_against_sympy(n):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    ours = cyclotomic_poly(n)
    # ours is ascending, sympy descending
    assert list(reversed(expected)) == ours


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12, 20, 30])
def test_totient(n):
    assert totient(n) == int(sympy.totient(n))


def _embed(x):
    """Numeric value of a CycNum under zeta_n -> exp(2*pi*i/n)."""
    z = cmath.exp(2j * math.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coords))


@given(cyc_numbers(), cyc_numbers())
@settings(max_examples=80)
def test_arithmetic_matches_numeric_embedding(x, y):
    assert abs(_embed(x + y) - (_embed(x) + _embed(y))) < 1e-8
    assert abs(_embed(x * y) - _embed(x) * _embed(y)) < 1e-7


@given(cyc_numbers())
def test_inverse(x):
    if x.is_zero:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == CycNum.one()


@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
@settings(max_examples=60)
def test_ring_axioms_across_mixed_orders(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24])
def test_root_of_unity_has_exact_order(n):
    z = root_of_unity(n)
    power = CycNum.one()
    for k in range(1, n):
        power = power * z
        assert power != CycNum.one(), f"zeta_{n}^{k} collapsed early"
    assert power * z == CycNum.one()


def test_lift_preserves_value():
    z = root_of_unity(3)
    assert z.lift(12) == z
    assert z.lift(12).order == 12
    with pytest.raises(ValueError):
        z.lift(8)  # 8 is not a multiple of 3


def test_pow_negative():
    z = root_of_unity(5)
    assert z ** -1 == z ** 4
    assert z ** -7 == z ** 3


def test_rational_recognition():
    x = CycNum.rational(Fraction(7, 3))
    assert x.is_rational
    assert x.as_fraction() == Fraction(7, 3)
    z = root_of_unity(8)
    assert not (z + z.inverse()).is_rational
    # zeta_6 + zeta_6^-1 = 1 is rational even though the order is 6
    w = root_of_unity(6)
    assert (w + w.inverse()).as_fraction() == 1


@pytest.mark.parametrize("q", [2, 3, 5, 6, 7, 15, Fraction(1, 2), Fraction(9, 4), -1, -3, -Fraction(2, 5)])
def test_rational_sqrt(q):
    s = rational_sqrt_cyclotomic(q)
    assert s * s == CycNum.rational(Fraction(q))


def test_rational_sqrt_known_forms():
    assert rational_sqrt_cyclotomic(2) == root_of_unity(8, 1) + root_of_unity(8, 7)
    assert rational_sqrt_cyclotomic(4) == CycNum.rational(2)


@pytest.mark.parametrize("n,k", [(1, 0), (4, 1), (5, 2), (6, 1), (8, 3), (12, 1)])
def test_trace_recognition(n, k):
    tr = root_of_unity(n, k) + root_of_unity(n, (n - k) % n)
    hit = root_of_unity_with_trace(tr)
    assert hit is not None
    m, j = hit
    assert root_of_unity(m, j) + root_of_unity(m, (m - j) % m) == tr


def test_trace_recognition_rejects_non_traces():
    assert root_of_unity_with_trace(CycNum.rational(3)) is None
    assert root_of_unity_with_trace(CycNum.rational(Fraction(1, 2))) is None


@given(laurent_polys(), st.sampled_from([(4, 1), (3, 1), (8, 3), (12, 5)]))
@settings(max_examples=60)
def test_laurent_eval_is_a_homomorphism(p, nk):
    n, k = nk
    q = LaurentPoly.A(2) - 3
    assert laurent_eval(p * q, n, k) == laurent_eval(p, n, k) * laurent_eval(q, n, k)


def test_laurent_eval_at_i_anchor():
    p = LaurentPoly.A(2) + LaurentPoly.A(-2)
    assert laurent_eval(p, 4, 1) == CycNum.rational(-2)


@given(cyc_numbers(orders=(3, 4, 8)))
def test_serialization_round_trip(x):
    rebuilt = CycNum(x.order, list(x.coords))
    assert rebuilt == x
