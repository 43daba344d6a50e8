"""Shared hypothesis strategies for exact-arithmetic objects."""

from fractions import Fraction

from hypothesis import strategies as st

from skeinmod.cyclotomic import CycNum, totient
from skeinmod.laurent import LaurentPoly
from skeinmod.mat2 import Mat2


@st.composite
def laurent_polys(draw, max_terms=5, max_exp=6, max_coeff=9):
    n = draw(st.integers(0, max_terms))
    coeffs = {}
    for _ in range(n):
        e = draw(st.integers(-max_exp, max_exp))
        c = draw(st.integers(-max_coeff, max_coeff))
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)


@st.composite
def small_fractions(draw, max_num=9, max_den=5):
    num = draw(st.integers(-max_num, max_num))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)


@st.composite
def cyc_numbers(draw, orders=(1, 3, 4, 5, 8, 12)):
    order = draw(st.sampled_from(orders))
    coords = [draw(small_fractions()) for _ in range(totient(order))]
    return CycNum(order, coords)


@st.composite
def rational_mat2(draw, bound=4):
    ints = st.integers(-bound, bound)
    return Mat2(draw(ints), draw(ints), draw(ints), draw(ints))
