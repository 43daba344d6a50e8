"""Integer and field linear algebra, checked against sympy."""

import math
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinmod.linalg import bareiss_rank, field_nullspace, field_rank, smith_normal_form


def int_matrices(max_dim=5, bound=9):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )


def test_snf_anchors():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[4]]) == [4]
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == [2, 2, 156]


@given(int_matrices())
@settings(max_examples=100)
def test_snf_against_sympy(m):
    ours = smith_normal_form(m)
    sm = sympy_snf(sympy.Matrix(m))
    theirs = [abs(int(sm[i, i])) for i in range(min(sm.shape))]
    # sympy may or may not keep trailing zero columns; compare nonzero parts
    # plus the shared length contract min(rows, cols)
    assert len(ours) == min(len(m), len(m[0]))
    nz_ours = [d for d in ours if d]
    nz_theirs = [d for d in theirs if d]
    assert nz_ours == nz_theirs


@given(int_matrices())
@settings(max_examples=100)
def test_snf_divisibility_chain(m):
    d = smith_normal_form(m)
    for a, b in zip(d, d[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0


@given(int_matrices(max_dim=4, bound=6))
@settings(max_examples=60)
def test_first_factor_is_gcd_of_entries(m):
    d = smith_normal_form(m)
    g = 0
    for row in m:
        for v in row:
            g = math.gcd(g, v)
    assert d[0] == g


@given(int_matrices())
@settings(max_examples=100)
def test_rank_against_sympy(m):
    expected = sympy.Matrix(m).rank()
    assert bareiss_rank(m) == expected
    assert field_rank([[Fraction(v) for v in row] for row in m]) == expected


@given(int_matrices())
@settings(max_examples=60)
def test_rank_equals_transpose_rank(m):
    t = [list(col) for col in zip(*m)]
    assert bareiss_rank(m) == bareiss_rank(t)


@given(int_matrices(max_dim=4))
@settings(max_examples=60)
def test_nullspace_vectors_annihilate(m):
    rows = [[Fraction(v) for v in row] for row in m]
    basis = field_nullspace(rows)
    ncols = len(m[0])
    assert len(basis) == ncols - field_rank(rows)
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_snf_count_matches_smaller_dimension():
    assert len(smith_normal_form([[1, 2, 3]])) == 1
    assert len(smith_normal_form([[1], [2], [3]])) == 1
