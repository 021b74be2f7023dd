import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nca import tlalg
from nca.combinat import Partition, Tableau, all_tableaux
from nca.errors import RankMismatchError, UnsupportedShapeError, WiringDiagramError
from nca.exactmath import linear_combination
from nca.specht import decompose_into_nct, specht_poly
from nca.tlalg import (
    TLElement,
    catalan_dimension,
    catalan_number,
    compose,
    generator,
    identity_diagram,
    is_planar,
    matching_permutation,
    noncrossing_matchings,
    reduced_word,
    resolve_crossings,
    resolve_iteratively,
    smoothings,
    theta,
    theta_word,
    tl_coefficient_check,
    tl_multiply,
    wiring_matching,
    word_to_perm,
)


def T(l, i):
    return TLElement.diagram(generator(l, i))


def one(l):
    return TLElement.diagram(identity_diagram(l))


def all_planar(l):
    return list(noncrossing_matchings(2 * l))


# -- the algebra ----------------------------------------------------------------------


def test_generator_relations():
    assert T(3, 1) * T(3, 1) == TLElement({generator(3, 1): -2})
    assert T(3, 1) * T(3, 2) * T(3, 1) == T(3, 1)
    assert T(3, 2) * T(3, 1) * T(3, 2) == T(3, 2)
    assert T(4, 1) * T(4, 3) == T(4, 3) * T(4, 1)
    assert T(4, 1) * T(4, 3) != T(4, 1)


def test_generic_loop_value():
    d = generator(2, 1)
    assert tl_multiply(d, d, xi=5).terms == {d: 5}


def test_compose_counts_loops_and_checks_rank():
    d, loops = compose(generator(2, 1), generator(2, 1))
    assert (d, loops) == (generator(2, 1), 1)
    assert compose(identity_diagram(3), generator(3, 2)) == (generator(3, 2), 0)
    with pytest.raises(RankMismatchError):
        compose(identity_diagram(2), identity_diagram(3))


@given(st.integers(1, 4).flatmap(lambda l: st.tuples(st.just(l), st.lists(st.integers(0, 10 ** 6), min_size=3, max_size=3))))
def test_compose_associative_and_planar(data):
    l, seeds = data
    basis = all_planar(l)
    a, b, c = (basis[s % len(basis)] for s in seeds)
    ab, n1 = compose(a, b)
    abc, n2 = compose(ab, c)
    bc, m1 = compose(b, c)
    a_bc, m2 = compose(a, bc)
    assert abc == a_bc and n1 + n2 == m1 + m2
    assert is_planar(abc)


@pytest.mark.parametrize("l,expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_catalan(l, expected):
    assert catalan_dimension(l) == catalan_number(l) == expected


def test_products_of_generators_span_catalan_many_diagrams():
    for l in range(1, 5):
        seen = {identity_diagram(l)}
        frontier = list(seen)
        while frontier:
            d = frontier.pop()
            for i in range(1, l):
                e, _ = compose(d, generator(l, i))
                if e not in seen:
                    seen.add(e)
                    frontier.append(e)
        assert len(seen) == catalan_number(l) == len(all_planar(l))


# -- theta ------------------------------------------------------------------------------


def test_theta_examples():
    assert theta((1, 2, 3)) == one(3)
    assert theta((2, 1)) == T(2, 1) + one(2)
    s1s2 = (T(3, 1) + one(3)) * (T(3, 2) + one(3))
    assert s1s2 == T(3, 1) * T(3, 2) + T(3, 1) + T(3, 2) + one(3)
    assert theta(word_to_perm([1, 2], 3)) == s1s2


@pytest.mark.parametrize("l", [3, 4])
def test_theta_multiplicative_on_reduced_products(l):
    # theta(u v) = theta(u) theta(v) whenever lengths add
    for u in itertools.permutations(range(1, l + 1)):
        for v in itertools.permutations(range(1, l + 1)):
            wu, wv = reduced_word(u), reduced_word(v)
            element, reduced = theta_word(wu + wv, l)
            if reduced:
                assert element == theta(u) * theta(v)
                assert element == theta(word_to_perm(wu + wv, l))


def test_non_reduced_word_is_flagged():
    element, reduced = theta_word([1, 1], 2)
    assert not reduced
    assert element == (T(2, 1) + one(2)) * (T(2, 1) + one(2))
    # at xi = -2 the square of t_1 + 1 collapses to the unit
    assert element == one(2)


@pytest.mark.parametrize("l", range(1, 6))
def test_reduced_word_round_trip(l):
    for perm in itertools.permutations(range(1, l + 1)):
        w = reduced_word(perm)
        assert word_to_perm(w, l) == perm
        assert len(w) == sum(a > b for a, b in itertools.combinations(perm, 2))


def test_321_avoiding_count():
    perms = list(itertools.permutations(range(1, 5)))
    assert sum(tlalg.is_321_avoiding(p) for p in perms) == 14
    diagrams = {tlalg.t_w(p) for p in perms if tlalg.is_321_avoiding(p)}
    assert diagrams == set(all_planar(4))


# -- uncrossing ---------------------------------------------------------------------------


def test_resolution_examples():
    nc = ((1, 4), (2, 3))
    assert resolve_crossings(nc) == {nc: 1}
    assert resolve_crossings(((1, 3), (2, 4))) == {((1, 2), (3, 4)): 1, ((1, 4), (2, 3)): 1}


def test_triple_crossing_has_a_cycle():
    arcs = ((1, 4), (2, 5), (3, 6))
    with_cycle = [(m, k) for _, m, k in smoothings(arcs) if k]
    assert with_cycle == [(((1, 2), (3, 4), (5, 6)), 1)]
    # the -2 from the cycle cancels against three plain smoothings
    plain = sum(1 for _, m, k in smoothings(arcs) if m == ((1, 2), (3, 4), (5, 6)) and not k)
    assert plain == 3
    assert resolve_crossings(arcs)[((1, 2), (3, 4), (5, 6))] == 1


def _realize(coeffs):
    return linear_combination((c, specht_poly(Tableau(d))) for d, c in coeffs.items())


@pytest.mark.parametrize("l", range(1, 5))
def test_resolution_realizes_specht_polynomial(l):
    for t in all_tableaux(Partition((l, l))):
        arcs = tlalg.matching_of(t)
        coeffs = resolve_crossings(arcs)
        assert all(is_planar(d) for d in coeffs)
        assert _realize(coeffs) == specht_poly(t)
        assert coeffs == resolve_iteratively(arcs, random.Random(l))


@pytest.mark.parametrize("l", range(1, 5))
def test_three_computations_agree(l):
    for perm in itertools.permutations(range(1, l + 1)):
        arcs = wiring_matching(perm)
        assert matching_permutation(arcs) == perm
        assert tl_coefficient_check(arcs)
        solved = {tlalg.canonical_diagram(t.columns): c for t, c in decompose_into_nct(tlalg.tableau_of(arcs)).terms.items()}
        assert solved == theta(perm).terms


def test_transposition_example():
    arcs = wiring_matching((2, 1))
    assert resolve_crossings(arcs) == theta((2, 1)).terms == {((1, 2), (3, 4)): 1, ((1, 4), (2, 3)): 1}


def test_errors():
    with pytest.raises(UnsupportedShapeError):
        tlalg.matching_of(Tableau(((1, 2, 3), (4, 5, 6))))
    with pytest.raises(WiringDiagramError):
        matching_permutation(((1, 2), (3, 4)))
