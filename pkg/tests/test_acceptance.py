"""The ten acceptance criteria, each with exact equality and a runtime budget.

Every test prints one ``PASS``/``FAIL`` line (also repeated in the terminal summary).
"""

import itertools
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES

from nca import bidet, grass, specht, tlalg
from nca.combinat import Partition, Tableau, compositions, count_snct, count_ssyt, enumerate_nct, enumerate_syt, partitions
from nca.exactmath import Poly, express_many, linear_combination, poly_rank


@contextmanager
def criterion(number, title, budget_s):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_s, f"took {elapsed:.1f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:2d} {status}: {title} ({elapsed:.2f}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_01_display_identity():
    with criterion(1, "(2,2,2) display decomposes into 3 NCT with coefficients 1,-1,1", 1):
        x, y, z, t, u, w = (Poly.var(i) for i in range(1, 7))
        lhs = (y - u) * (t - u) * (y - t) * (x - w) * (z - w) * (x - z)
        tab = Tableau(((2, 4, 5), (1, 3, 6)))
        assert specht.specht_poly(tab) == lhs
        result = specht.decompose_into_nct(tab)
        assert len(result) == 3
        assert sorted(result.terms.values()) == [-1, 1, 1]
        assert result.realize() == lhs


def test_criterion_02_nct_count():
    with criterion(2, "#NCT = #SYT for all shapes of size <= 8", 60):
        for n in range(1, 9):
            for lam in partitions(n):
                assert len(enumerate_nct(lam)) == len(enumerate_syt(lam)) == lam.hook_length_count()


def test_criterion_03_basis():
    with criterion(3, "rank of NCT Specht polynomials = #SYT for size <= 6", 300):
        for n in range(1, 7):
            for lam in partitions(n):
                polys = [specht.specht_poly(t) for t in specht.free_family(lam, "nct")]
                syt = [specht.specht_poly(t) for t in specht.free_family(lam, "syt")]
                f = lam.hook_length_count()
                assert poly_rank(polys) == f == len(syt)
                assert poly_rank(polys + syt) == f


def test_criterion_04_snct():
    with criterion(4, "#SNCT = #SSYT for all shapes of size <= 6 and all weights", 60):
        for n in range(1, 7):
            for lam in partitions(n):
                for w in compositions(n):
                    assert count_snct(lam, w) == count_ssyt(lam, w)


def test_criterion_05_temperley_lieb():
    with criterion(5, "crossing resolution = theta expansion = solve for l <= 4; Catalan counts", 60):
        for l in range(0, 5):
            assert len(list(tlalg.noncrossing_matchings(2 * l))) == tlalg.catalan_number(l)
        for l in range(1, 5):
            for perm in itertools.permutations(range(1, l + 1)):
                arcs = tlalg.wiring_matching(perm)
                resolved = tlalg.resolve_crossings(arcs)
                expanded = tlalg.theta(perm).terms
                solved = {
                    tlalg.canonical_diagram(t.columns): c
                    for t, c in specht.decompose_into_nct(tlalg.tableau_of(arcs)).terms.items()
                }
                assert resolved == expanded == solved


def test_criterion_06_bitableaux():
    with criterion(6, "x12 x21 example; NC/standard counts and exact decompositions, entries <= 4, size <= 4", 300):
        B = bidet.Bitableau.from_columns
        example = bidet.decompose_bideterminant(B([(1,), (2,)], [(2,), (1,)]))
        assert example.terms == {B([(1,), (2,)], [(1,), (2,)]): 1, B([(1, 2)], [(1, 2)]): -1}
        contents = {s: list(itertools.combinations_with_replacement(range(1, 5), s)) for s in range(1, 5)}
        for size, cs in contents.items():
            for alpha in cs:
                for beta in cs:
                    for lam in partitions(size):
                        assert bidet.count_bitableaux(alpha, beta, lam, "standard") == bidet.count_bitableaux(alpha, beta, lam, "noncrossing")
                    x = bidet.GenericMatrix(max(alpha), max(beta))
                    basis = bidet.content_family(alpha, beta, "noncrossing")
                    polys = [bidet.bideterminant(b, x) for b in basis]
                    assert poly_rank(polys) == len(basis) == bidet.content_dimension(alpha, beta)
                    targets = [bidet.bideterminant(b, x) for b in bidet.content_family(alpha, beta, "standard")]
                    for sol, target in zip(express_many(polys, targets), targets):
                        assert sol is not None and linear_combination(zip(sol, polys)) == target


def test_criterion_07_grassmannian():
    with criterion(7, "G(2,n), n <= 4, degree <= 3: #SM = #NCM = rank; relations vanish", 300):
        for n in range(1, 5):
            for d in range(1, 4):
                r = grass.graded_dimension(2, n, d)
                assert r.standard == r.noncrossing == r.rank
            for _, _, _, rel in grass.all_relations(2, n):
                assert grass.realize(rel, 2, n).is_zero()


def test_criterion_08_groebner():
    with criterion(8, "crossing monomial is initial for n <= 8; straightening = solve for n <= 6", 120):
        for n in range(2, 9):
            for p, q in itertools.combinations(itertools.combinations(range(1, n + 3), 2), 2):
                if p[0] < q[0] < p[1] < q[1]:
                    assert grass.initial_term(grass.three_term_relation(p, q)) == (p, q)
        for n in range(1, 7):
            monos = [m for d in range(1, 4) for m in grass.monomials(2, n, d)]
            for mono, solved in zip(monos, grass.decompose_in_basis(monos, 2, n)):
                assert grass.straighten_g2n(mono, n).element.terms == solved.terms


def test_criterion_09_schubert():
    # k counts the columns of the rectangle; k <= 5 covers both n = m + k <= 5 and k <= 5
    with criterion(9, "relevant #NCM = #SM and independence in R_lambda, all lambda in 2 x k, k <= 5, degree <= 2", 120):
        for k in range(1, 6):
            for a in range(k + 1):
                for b in range(a + 1):
                    lam = Partition(tuple(v for v in (a, b) if v))
                    for d in (1, 2):
                        r = grass.schubert_check(lam, 2, k, d)
                        assert r.standard == r.noncrossing == r.independent_rank


def test_criterion_10_gl():
    with criterion(10, "GL_3: rank of non-crossing M_T = #SSYT = SSYT rank, size <= 4", 300):
        for size in range(1, 5):
            for lam in partitions(size):
                if len(lam) > 3:
                    continue
                r = bidet.gl_module_basis(lam, 3, 3)
                assert r.rank_noncrossing == r.expected == r.rank_standard == r.count_noncrossing
