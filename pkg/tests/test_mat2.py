"""2x2 matrices over cyclotomic-rational entries and their subalgebras."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import rational_mat2
from skeinmod.cyclotomic import CycNum, root_of_unity
from skeinmod.mat2 import (
    Mat2,
    algebra_closure,
    is_irreducible,
    separating_witness,
    sl2_sqrt,
    sqrt_of_trace_plus_two,
    standardize_pair,
    trace_triple_realize,
)

E11 = Mat2(1, 0, 0, 0)
E12 = Mat2(0, 1, 0, 0)
E21 = Mat2(0, 0, 1, 0)
E22 = Mat2(0, 0, 0, 1)


def _elementary(kind, t):
    if kind == "u":
        return Mat2(1, t, 0, 1)
    if kind == "l":
        return Mat2(1, 0, t, 1)
    return Mat2(Fraction(t), 0, 0, Fraction(1, t))


@st.composite
def sl2_rationals(draw, factors=3):
    m = Mat2.identity()
    for _ in range(draw(st.integers(1, factors))):
        kind = draw(st.sampled_from(("u", "l", "d")))
        t = draw(st.integers(1, 3)) if kind == "d" else draw(st.integers(-3, 3))
        m = m * _elementary(kind, t)
    return m


# ---------------------------------------------------------------------------
# arithmetic


def test_entry_coercion():
    m = Mat2(1, Fraction(1, 2), 0, CycNum.rational(3))
    assert m.a == 1 and m.b == Fraction(1, 2)
    with pytest.raises(TypeError):
        Mat2(1.0, 0, 0, 1)


def test_matrix_anchors():
    m = Mat2(1, 2, 3, 4)
    assert m.det() == -2
    assert m.trace() == 5
    assert m * m.inverse() == Mat2.identity()
    assert m ** 3 == m * m * m
    assert m ** -2 == (m.inverse()) ** 2
    assert str(m) == "[[1, 2], [3, 4]]"
    with pytest.raises(ZeroDivisionError):
        Mat2(1, 2, 2, 4).inverse()


@given(rational_mat2(), rational_mat2())
@settings(max_examples=60)
def test_det_and_trace_identities(m, n):
    assert (m * n).det() == m.det() * n.det()
    assert (m * n).trace() == (n * m).trace()
    assert (m + n).trace() == m.trace() + n.trace()


@given(rational_mat2(), sl2_rationals())
@settings(max_examples=40)
def test_conjugation(m, p):
    conj = m.conjugate_by(p)
    assert conj == p.inverse() * m * p
    assert conj.trace() == m.trace()
    assert conj.det() == m.det()


def test_order_of_cyclotomic_entries():
    z8 = root_of_unity(8, 1)
    m = Mat2(z8, 0, 0, root_of_unity(3, 1))
    assert m.order == 24
    assert Mat2.identity().order == 1


def test_scalar_predicates():
    assert Mat2.diagonal(2, 2).is_scalar()
    assert not Mat2.diagonal(2, 3).is_scalar()
    assert (-Mat2.identity()).is_central_sl2()
    assert not Mat2.diagonal(2, 2).is_central_sl2()


# ---------------------------------------------------------------------------
# subalgebra closures


def test_closure_named_tags():
    assert algebra_closure([Mat2.diagonal(1, 2)]).tag == "D"
    assert algebra_closure([Mat2.diagonal(1, 2), E12]).tag == "U"
    assert algebra_closure([Mat2.diagonal(1, 2), E21]).tag == "L"
    assert algebra_closure([Mat2(1, 1, 0, 1)]).tag == "J"
    assert algebra_closure([Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1)]).tag == "M2"


def test_closure_dims():
    assert algebra_closure([Mat2.diagonal(1, 2)]).dim == 2
    assert algebra_closure([Mat2.diagonal(1, 2), E12]).dim == 3
    assert algebra_closure([E12, E21]).dim == 4
    assert algebra_closure([Mat2.identity()]).dim == 1


def test_closure_other_tags():
    # scalars only
    assert algebra_closure([Mat2.identity()]).tag == "OTHER"
    # symmetric involution: dim 2 but neither triangular nor equal-diagonal
    swap = Mat2(0, 1, 1, 0)
    cls = algebra_closure([swap])
    assert cls.tag == "OTHER" and cls.dim == 2
    # a conjugate of the upper triangulars is still 3-dimensional
    p = Mat2(1, 0, 1, 1)
    gens = [m.conjugate_by(p) for m in (Mat2.diagonal(1, 2), E12)]
    cls = algebra_closure(gens)
    assert cls.tag == "OTHER" and cls.dim == 3


def test_closure_canonical_bases():
    cls = algebra_closure([Mat2(1, 5, 0, 1)])
    assert cls.basis == [Mat2.identity(), E12]
    assert algebra_closure([Mat2.diagonal(3, 7)]).basis == [E11, E22]


def test_closure_requires_generators():
    with pytest.raises(ValueError):
        algebra_closure([])


@given(st.lists(rational_mat2(bound=2), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_closure_is_multiplicatively_closed(gens):
    cls = algebra_closure(gens)
    again = algebra_closure(cls.basis)
    assert again.dim == cls.dim
    assert again.tag == cls.tag


# ---------------------------------------------------------------------------
# trace separation


def test_witness_for_diagonal_torus():
    u = algebra_closure([Mat2.diagonal(1, 2), E12])
    low = algebra_closure([Mat2.diagonal(1, 2), E21])
    d = algebra_closure([Mat2.diagonal(1, 2)])
    wit = separating_witness(u, low, d)
    assert wit is not None
    assert (wit.trace_fwd, wit.trace_swapped) == (CycNum.one(), CycNum.zero())


def test_witness_for_jordan_torus():
    u = algebra_closure([Mat2.diagonal(1, 2), E12])
    low = algebra_closure([Mat2.diagonal(1, 2), E21])
    j = algebra_closure([Mat2(1, 1, 0, 1)])
    wit = separating_witness(u, low, j)
    assert wit is not None
    assert (wit.trace_fwd, wit.trace_swapped) == (CycNum.zero(), CycNum.one())


def test_no_witness_inside_commutative_data():
    d = algebra_closure([Mat2.diagonal(1, 2)])
    assert separating_witness(d, d, d) is None


# ---------------------------------------------------------------------------
# square roots in SL2


def test_sqrt_of_trace_plus_two():
    s = sqrt_of_trace_plus_two(CycNum.rational(2))
    assert s * s == 4
    one = root_of_unity(6, 1) + root_of_unity(6, 5)
    s = sqrt_of_trace_plus_two(one)
    assert s * s == one + CycNum.rational(2)


def test_sl2_sqrt_anchors():
    r = sl2_sqrt(Mat2.diagonal(4, Fraction(1, 4)))
    assert r == Mat2.diagonal(2, Fraction(1, 2))
    r = sl2_sqrt(-Mat2.identity())
    assert r == Mat2.diagonal(root_of_unity(4, 1), root_of_unity(4, 3))
    assert r * r == -Mat2.identity()


def test_sl2_sqrt_rejections():
    with pytest.raises(ValueError):
        sl2_sqrt(Mat2.diagonal(2, 2))  # det 4
    with pytest.raises(ValueError):
        sl2_sqrt(Mat2(-1, -1, 0, -1))  # negated unipotent


def test_sl2_sqrt_of_finite_order_element():
    zeta = root_of_unity(6, 1)
    m = Mat2(zeta, 1, 0, root_of_unity(6, 5))
    r = sl2_sqrt(m)
    assert r * r == m
    assert r.det() == 1


def _squarefree_part(n):
    n = abs(n)
    p, out = 2, 1
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return out * n


@given(sl2_rationals())
@settings(max_examples=50, deadline=None)
def test_sl2_sqrt_squares_back(m):
    if m.trace() == -2 and not m.is_central_sl2():
        with pytest.raises(ValueError):
            sl2_sqrt(m)
        return
    f = (m.trace() + CycNum.rational(2)).as_fraction()
    # sqrt(f) lives in an order-4|f| field; keep that small enough to be fast
    assume(_squarefree_part(f.numerator * f.denominator) <= 35)
    r = sl2_sqrt(m)
    assert r * r == m
    assert r.det() == 1


# ---------------------------------------------------------------------------
# irreducibility and trace realization


def test_irreducibility_anchors():
    assert not is_irreducible(Mat2(1, 1, 0, 1), Mat2(2, 3, 0, Fraction(1, 2)))
    assert is_irreducible(Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1))


@given(sl2_rationals(), sl2_rationals())
@settings(max_examples=40)
def test_irreducibility_matches_commutator_trace(a, b):
    comm = a * b * a.inverse() * b.inverse()
    assert is_irreducible(a, b) == (not comm.trace() == 2)


def test_trace_triple_realize_anchor():
    q1, q2 = trace_triple_realize(1, 1, CycNum.zero())
    assert q1.trace() == 1 and q2.trace() == 1
    assert q1.det() == 1 and q2.det() == 1
    assert (q1 * q2).trace() == -1

    # the off-diagonal slot shifts the product trace by exactly s
    q1, q2 = trace_triple_realize(0, 1, CycNum.one())
    assert q1.trace() == 0 and q2.trace() == 1
    q1b, q2b = trace_triple_realize(0, 1, CycNum.zero())
    assert (q1 * q2).trace() == (q1b * q2b).trace() + CycNum.one()


def test_trace_triple_realize_rejects_large_traces():
    with pytest.raises(ValueError):
        trace_triple_realize(3, 1, CycNum.zero())


# ---------------------------------------------------------------------------
# standard position


def test_standardize_scalar_is_identity():
    assert standardize_pair(-Mat2.identity()) == Mat2.identity()


def test_standardize_semisimple():
    t = Mat2(2, 1, 0, Fraction(1, 2))
    p = standardize_pair(t)
    conj = t.conjugate_by(p)
    assert conj.b.is_zero and conj.c.is_zero


def test_standardize_finite_order():
    t = Mat2(0, -1, 1, 1)  # trace 1, det 1, order 6
    p = standardize_pair(t)
    conj = t.conjugate_by(p)
    assert conj.b.is_zero and conj.c.is_zero
    z, zbar = root_of_unity(6, 1), root_of_unity(6, 5)
    assert (conj.a == z and conj.d == zbar) or (conj.a == zbar and conj.d == z)


def test_standardize_defective():
    t = Mat2(1, 0, 3, 1)
    p = standardize_pair(t)
    conj = t.conjugate_by(p)
    assert conj.c.is_zero
    assert conj.a == conj.d


@given(sl2_rationals())
@settings(max_examples=50, deadline=None)
def test_standardize_triangularizes(m):
    p = standardize_pair(m)
    assert not p.det().is_zero
    conj = m.conjugate_by(p)
    assert conj.c.is_zero
