"""Symmetric-function side: partitions, transition matrices, the bar
reduction, p_h / q_n and leading exponents."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perpetuants import (
    ExponentVector,
    Partition,
    Poly,
    bar_reduce,
    e_monomial,
    leading_exponent,
    leading_monomial,
    monomial_sum,
    p_h,
    partitions,
    partitions_at_most,
    q_n,
    transition_alpha,
    transition_beta,
)
from perpetuants import linalg
from perpetuants.symfunc import e_indices, elementary


def L(i):
    return Poly.variable("L", i)


# ---------------------------------------------------------------- partitions


def test_partition_validation():
    assert Partition((4, 2)).weight() == 6
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((1, 0))


def test_partition_printing():
    assert str(Partition((4, 2))) == "4+2"
    assert Partition((4, 2)).to_string(3) == "4+2+0"
    assert str(Partition(())) == "0"


def test_partitions_with_part_bounds():
    got = [p.parts for p in partitions(6, 4, 2)]
    assert got == [(4, 2), (3, 3), (2, 2, 2)]


def test_partitions_of_zero():
    assert [p.parts for p in partitions(0, 5, 1)] == [()]


def test_partitions_none_fit():
    assert partitions(1, 3, 2) == []


def test_partitions_reverse_lex():
    got = [p.parts for p in partitions(5, 5, 1)]
    assert got == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_partitions_at_most_counts():
    # partitions of 6 with at most 3 parts
    got = [p.parts for p in partitions_at_most(6, 3)]
    assert got == [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (2, 2, 2)]


# ------------------------------------------------------------ monomial sums


def test_monomial_sum_210():
    m = monomial_sum((2, 1, 0), 3)
    expected = (
        L(1) ** 2 * L(2) + L(1) ** 2 * L(3) + L(2) ** 2 * L(1)
        + L(2) ** 2 * L(3) + L(3) ** 2 * L(1) + L(3) ** 2 * L(2)
    )
    assert m == expected


def test_monomial_sum_111():
    assert monomial_sum((1, 1, 1), 3) == L(1) * L(2) * L(3)


def test_monomial_sum_single_part_two_vars():
    assert monomial_sum((3,), 2) == L(1) ** 3 + L(2) ** 3


def test_monomial_sum_too_many_parts():
    with pytest.raises(ValueError):
        monomial_sum((1, 1, 1), 2)


def test_elementary():
    assert elementary(3, 3) == L(1) * L(2) * L(3)
    assert elementary(0, 3) == Poly.constant("L", 1)
    assert elementary(4, 3).is_zero()


def test_e_monomial_expansions():
    assert e_monomial((0, 0, 1), 3) == L(1) * L(2) * L(3)
    # e1*e2 = m_{2,1} + 3 m_{1,1,1}
    assert e_monomial((1, 1, 0), 3) == monomial_sum((2, 1), 3) + monomial_sum(
        (1, 1, 1), 3
    ).scale(3)
    # e1^3 = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
    assert e_monomial((3, 0, 0), 3) == monomial_sum((3,), 3) + monomial_sum(
        (2, 1), 3
    ).scale(3) + monomial_sum((1, 1, 1), 3).scale(6)


# ------------------------------------------------------ transition matrices


def test_beta_3_3():
    beta = transition_beta(3, 3)
    assert [p.parts for p in beta.rows] == [(3,), (2, 1), (1, 1, 1)]
    assert beta.cols == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert beta.entries == [[1, 0, 0], [3, 1, 0], [6, 3, 1]]


def test_beta_1_2():
    assert transition_beta(1, 2).entries == [[1]]


def test_beta_2_2():
    beta = transition_beta(2, 2)
    assert [p.parts for p in beta.rows] == [(2,), (1, 1)]
    assert beta.entries == [[1, 0], [2, 1]]


def test_alpha_3_3():
    alpha = transition_alpha(3, 3)
    assert alpha.entries == [[1, 0, 0], [-3, 1, 0], [3, -3, 1]]
    # column h of alpha expands m_h: m_3 = e1^3 - 3 e1e2 + 3 e3
    m3 = Poly.zero("L")
    for j, k in enumerate(alpha.cols):
        m3 = m3 + e_monomial(k, 3).scale(alpha.entries[j][0])
    assert m3 == monomial_sum((3,), 3)


def test_alpha_2_2():
    alpha = transition_alpha(2, 2)
    # m_2 = e1^2 - 2 e2 ; m_{1,1} = e2
    assert alpha.entries == [[1, 0], [-2, 1]]


@pytest.mark.parametrize("n,g", [(n, g) for n in range(1, 6) for g in range(0, 9)])
def test_alpha_beta_identity(n, g):
    beta = transition_beta(n, g)
    alpha = transition_alpha(n, g)
    size = len(beta.rows)
    prod = linalg.matmul(alpha.entries, beta.entries)
    assert prod == [[int(i == j) for j in range(size)] for i in range(size)]


@pytest.mark.parametrize("n,g", [(3, 5), (4, 6), (5, 7)])
def test_beta_triangularity_recorded(n, g):
    # empirical observation under the reverse-lexicographic pairing:
    # beta is LOWER unitriangular with nonnegative entries.  Recorded as
    # data; nothing downstream relies on it (inversion is general).
    beta = transition_beta(n, g)
    size = len(beta.rows)
    for i in range(size):
        assert beta.entries[i][i] == 1
        for j in range(i + 1, size):
            assert beta.entries[i][j] == 0
        for j in range(size):
            assert beta.entries[i][j] >= 0


def test_matrix_json_schema():
    import json

    data = json.loads(transition_beta(2, 2).to_json())
    assert data["direction"] == "beta"
    assert data["rows"] == [[2], [1, 1]]
    assert data["cols"] == [[2, 0], [0, 1]]
    assert data["entries"] == [["1", "0"], ["2", "1"]]


# -------------------------------------------------------------- bar reduction


def test_bar_reduce_e1_vanishes():
    assert bar_reduce(elementary(1, 3), 3).is_zero()


def test_bar_reduce_e2_two_vars():
    assert bar_reduce(elementary(2, 2), 2) == -(L(1) ** 2)


def test_bar_reduce_product():
    assert bar_reduce(L(1) * L(2) * L(3), 3) == -(L(1) ** 2) * L(2) - L(1) * L(2) ** 2


# ----------------------------------------------------------------- p_h, q_n


def test_p1_three_vars():
    assert p_h(3, 1) == bar_reduce(L(1) * L(2) * L(3), 3)


def test_p_h_degrees():
    assert p_h(4, 2).total_degree() == 3  # half of binom(4,2)
    assert p_h(5, 2).total_degree() == 10  # binom(5,2)


def test_p_h_range_errors():
    with pytest.raises(ValueError):
        p_h(3, 2)
    with pytest.raises(ValueError):
        p_h(4, 0)


def test_p2_for_four_vars_symmetric_up_to_sign():
    # the half-product at n = 2h stays symmetric in the reduced variables,
    # up to the sign left free by the factor ordering
    p = p_h(4, 2)
    for i, j in [(1, 2), (1, 3), (2, 3)]:
        swapped = _swap(p, i, j)
        assert swapped == p or swapped == -p


def _swap(p, i, j):
    spare = 99
    return p.substitute(i, L(spare)).substitute(j, L(i)).substitute(spare, L(j))


def test_q3():
    assert q_n(3) == -(L(1) ** 2) * L(2) - L(1) * L(2) ** 2
    assert q_n(3).total_degree() == 3


def test_q_degrees():
    assert q_n(4).total_degree() == 7
    assert q_n(5).total_degree() == 15


def test_q_n_needs_three():
    with pytest.raises(ValueError):
        q_n(2)


# ----------------------------------------------------------- leading exponents


def test_leading_exponent_errors_on_zero():
    with pytest.raises(ValueError):
        leading_exponent(Poly.zero("L"))


def test_leading_exponent_of_reduced_e2():
    for n in (3, 4, 5):
        lead = leading_exponent(bar_reduce(elementary(2, n), n))
        assert lead.as_tuple(n - 1, first_index=1) == (2,) + (0,) * (n - 2)


def test_leading_exponents_of_q():
    assert leading_exponent(q_n(3)).as_tuple(2, first_index=1) == (2, 1)
    assert leading_exponent(q_n(4)).as_tuple(3, first_index=1) == (4, 2, 1)
    assert leading_exponent(q_n(5)).as_tuple(4, first_index=1) == (8, 4, 2, 1)


@pytest.mark.slow
def test_leading_exponent_of_q6():
    q = q_n(6)
    assert q.total_degree() == 31
    assert leading_exponent(q).as_tuple(5, first_index=1) == (16, 8, 4, 2, 1)


def test_leading_monomial_returns_coefficient():
    c, ev = leading_monomial(q_n(3))
    assert ev == ExponentVector({1: 2, 2: 1})
    assert c == -1


@given(
    st.integers(3, 5),
    st.lists(st.integers(0, 2), min_size=2, max_size=4),
)
@settings(max_examples=40, deadline=None)
def test_reduced_e_monomial_leading_exponent_formula(n, tail):
    # for k = (0, h2, ..., hn): leading exponent of the bar-reduced
    # e-monomial is (2*sum h_i, h3+...+hn, ..., hn)
    tail = (tail + [0, 0, 0])[: n - 1]
    if sum(tail) == 0 or sum(tail) > 4:
        return
    k = (0,) + tuple(tail)
    reduced = bar_reduce(e_monomial(k, n), n)
    expected = (2 * sum(tail),) + tuple(
        sum(tail[j:]) for j in range(1, len(tail))
    )
    assert leading_exponent(reduced).as_tuple(n - 1, first_index=1) == expected


@pytest.mark.parametrize("n,g", [(3, 6), (4, 7), (5, 8)])
def test_reduced_e_monomials_have_distinct_leading_exponents(n, g):
    leads = set()
    for k in e_indices(n, g):
        if k[0] != 0:
            continue
        reduced = bar_reduce(e_monomial(k, n), n)
        leads.add(leading_exponent(reduced))
    count = len([k for k in e_indices(n, g) if k[0] == 0])
    assert len(leads) == count


@st.composite
def l_polys(draw):
    nterms = draw(st.integers(1, 3))
    terms = []
    for _ in range(nterms):
        exps = draw(st.dictionaries(st.integers(1, 3), st.integers(1, 3), min_size=1, max_size=3))
        c = draw(st.integers(-5, 5).filter(bool))
        terms.append((ExponentVector(exps), c))
    return Poly("L", terms)


@given(l_polys(), l_polys())
@settings(max_examples=60, deadline=None)
def test_leading_exponent_additive_on_products(p, q):
    if p.is_zero() or q.is_zero():
        return
    lp = leading_exponent(p)
    lq = leading_exponent(q)
    assert leading_exponent(p * q) == lp * lq
