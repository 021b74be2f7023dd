from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nca.errors import DegenerateFactorError, DimensionError, MissingAssignmentError
from nca.exactmath import (
    Poly,
    difference_product,
    express,
    linear_combination,
    mat_vec,
    poly_rank,
    rank,
    rational_str,
    solve,
    to_rational,
)

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monomials = st.dictionaries(st.integers(1, 3), st.integers(1, 2), max_size=2).map(
    lambda d: tuple(sorted(d.items()))
)
polys = st.dictionaries(monomials, coeffs, max_size=4).map(Poly)


def naive_rank(rows):
    """Textbook row reduction over Fraction: the oracle for ``rank``."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def test_to_rational_normalizes():
    assert to_rational(Fraction(4, 2)) == 2 and isinstance(to_rational(Fraction(4, 2)), int)
    assert to_rational("3/6") == Fraction(1, 2)
    assert rational_str(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_difference_product_and_degenerate():
    x1, x2 = Poly.var(1), Poly.var(2)
    assert difference_product([(1, 2)]) == x1 - x2
    with pytest.raises(DegenerateFactorError):
        difference_product([(3, 3)])


def test_evaluate_requires_all_variables():
    p = Poly.var(1) * Poly.var(2) + 3
    assert p.evaluate({1: 2, 2: Fraction(1, 2)}) == 4
    assert p.evaluate({1: 2}, partial=True) == Poly.var(2) * 2 + 3
    with pytest.raises(MissingAssignmentError):
        p.evaluate({1: 1})


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == Poly.zero() and p * Poly.one() == p


@given(polys)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


@given(polys, st.dictionaries(st.integers(1, 3), coeffs, min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(p, values):
    q = p * p + p
    assert q.evaluate(values) == p.evaluate(values) ** 2 + p.evaluate(values)


matrices = st.integers(1, 8).flatmap(
    lambda rows: st.integers(1, 8).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=rows, max_size=rows
        )
    )
)


@given(matrices)
def test_rank_matches_naive_elimination(m):
    assert rank(m) == naive_rank(m)


@given(matrices, st.data())
def test_solve_is_exact_when_consistent(m, data):
    b = data.draw(st.lists(st.integers(-4, 4), min_size=len(m), max_size=len(m)))
    c = solve(m, b)
    augmented = [row + [v] for row, v in zip(m, b)]
    if c is None:
        assert naive_rank(augmented) > naive_rank(m)
    else:
        assert mat_vec(m, c) == b


def test_rank_with_fractions_and_dimension_check():
    assert rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    with pytest.raises(DimensionError):
        rank([[1, 2], [3]])


def test_poly_rank_and_express():
    x1, x2, x3 = (Poly.var(i) for i in (1, 2, 3))
    a, b = x1 - x2, x2 - x3
    assert poly_rank([a, b, x1 - x3]) == 2
    coeffs_ = express([a, b], x1 - x3)
    assert coeffs_ == [1, 1]
    assert linear_combination(zip(coeffs_, [a, b])) == x1 - x3
    assert express([a], x3) is None
