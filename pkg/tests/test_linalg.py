"""Fraction-free elimination: rank, nullspace and exact inversion."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from perpetuants import linalg


def test_rank_examples():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([]) == 0


def test_rank_with_fractions():
    assert linalg.rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def test_nullspace_simple():
    # x + 2y = 0: primitive vector with first nonzero entry positive
    vecs = linalg.nullspace([[1, 2]])
    assert vecs == [[2, -1]]


def test_nullspace_full_rank_is_empty():
    assert linalg.nullspace([[1, 0], [0, 1]]) == []


def test_nullspace_empty_matrix_gives_identity():
    vecs = linalg.nullspace([], ncols=3)
    assert vecs == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_nullspace_vectors_are_primitive_kernel_elements():
    m = [[2, 4, 6], [1, 2, 3]]
    vecs = linalg.nullspace(m)
    assert len(vecs) == 2
    for v in vecs:
        for row in m:
            assert sum(x * y for x, y in zip(row, v)) == 0
        from math import gcd

        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1


def test_invert_known_matrix():
    inv = linalg.invert([[1, 0, 0], [3, 1, 0], [6, 3, 1]])
    assert inv == [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(-3), Fraction(1), Fraction(0)],
        [Fraction(3), Fraction(-3), Fraction(1)],
    ]


def test_invert_two_by_two():
    inv = linalg.invert([[1, 0], [2, 1]])
    assert inv == [[Fraction(1), Fraction(0)], [Fraction(-2), Fraction(1)]]


def test_matmul():
    m = [[1, 2], [3, 4]]
    ident = [[1, 0], [0, 1]]
    assert linalg.matmul(m, ident) == [
        [Fraction(1), Fraction(2)],
        [Fraction(3), Fraction(4)],
    ]


@st.composite
def unimodular(draw):
    # product of a lower and an upper unitriangular integer matrix:
    # always invertible with integer inverse
    n = draw(st.integers(1, 4))
    entry = st.integers(-4, 4)
    lo = [[1 if i == j else (draw(entry) if i > j else 0) for j in range(n)] for i in range(n)]
    up = [[1 if i == j else (draw(entry) if i < j else 0) for j in range(n)] for i in range(n)]
    return linalg.matmul(lo, up)


@given(unimodular())
@settings(max_examples=40, deadline=None)
def test_invert_times_original_is_identity(m):
    n = len(m)
    inv = linalg.invert(m)
    prod = linalg.matmul(inv, m)
    ident = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    assert prod == ident


@given(unimodular())
@settings(max_examples=40, deadline=None)
def test_rank_of_invertible_is_full(m):
    assert linalg.rank(m) == len(m)
    # duplicating rows never raises the rank
    assert linalg.rank(m + m) == len(m)
