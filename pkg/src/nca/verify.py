"""Verification suites behind ``nca verify``.

Each suite returns a :class:`SuiteReport`; failures carry a small
counterexample dump. Bounds are explicit keyword arguments.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import bidet, combinat, grass, specht, tlalg
from .combinat import Partition, Tableau, partitions
from .exactmath import express_many, linear_combination, poly_rank

MAX_FAILURES = 5


@dataclass
class SuiteReport:
    suite: str
    provenance: str
    bounds: Dict[str, int]
    checked: int = 0
    failures: List[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **details) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(details)
        else:
            self.failures[-1]["more"] = True

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checked": self.checked,
            "bounds": self.bounds,
            "provenance": self.provenance,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


# the tableau of the (2,2,2) display: variables x,y,z,t,u,w are x1..x6
DISPLAY_TABLEAU = Tableau(((2, 4, 5), (1, 3, 6)))


def suite_display() -> SuiteReport:
    rep = SuiteReport("display", "NCT decomposition of the (2,2,2) example", {})
    rep.checked = 1
    result = specht.decompose_into_nct(DISPLAY_TABLEAU)
    coeffs = sorted(result.terms.values())
    if len(result) != 3 or coeffs != [-1, 1, 1]:
        rep.fail(coefficients=[str(c) for c in coeffs])
    if result.realize() != specht.specht_poly(DISPLAY_TABLEAU):
        rep.fail(reason="realized polynomial differs")
    return rep


def suite_nct_count(max_n: int = 8) -> SuiteReport:
    rep = SuiteReport("nct-count", "#NCT = #SYT for every shape", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for shape in partitions(n):
            rep.checked += 1
            counts = (len(combinat.enumerate_nct(shape)), len(combinat.enumerate_syt(shape)), shape.hook_length_count())
            if len(set(counts)) != 1:
                rep.fail(shape=list(shape.parts), nct=counts[0], syt=counts[1], hook=counts[2])
    return rep


def suite_basis(max_n: int = 6) -> SuiteReport:
    rep = SuiteReport("basis", "NCT Specht polynomials form a basis", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for shape in partitions(n):
            rep.checked += 1
            nct = [specht.specht_poly(t) for t in specht.free_family(shape, "nct")]
            syt = [specht.specht_poly(t) for t in specht.free_family(shape, "syt")]
            f = shape.hook_length_count()
            r_nct, r_both = poly_rank(nct), poly_rank(nct + syt)
            if not (len(nct) == r_nct == r_both == f):
                rep.fail(shape=list(shape.parts), size=len(nct), rank=r_nct, joint_rank=r_both, expected=f)
    return rep


def suite_snct(max_n: int = 6) -> SuiteReport:
    rep = SuiteReport("snct", "#SNCT = #SSYT for every shape and weight", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for shape in partitions(n):
            for weight in combinat.compositions(n):
                rep.checked += 1
                a = combinat.count_ssyt(shape, weight)
                b = combinat.count_snct(shape, weight, method="classes")
                c = combinat.count_snct(shape, weight, method="words")
                if not a == b == c:
                    rep.fail(shape=list(shape.parts), weight=list(weight), ssyt=a, snct=b, words=c)
    return rep


def suite_tl(max_l: int = 4) -> SuiteReport:
    rep = SuiteReport("tl", "crossing resolution = theta expansion = exact solve", {"max_l": max_l})
    for l in range(1, max_l + 1):
        rep.checked += 1
        if tlalg.catalan_dimension(l) != tlalg.catalan_number(l):
            rep.fail(l=l, reason="Catalan count")
        for perm in itertools.permutations(range(1, l + 1)):
            rep.checked += 1
            arcs = tlalg.wiring_matching(perm)
            resolved = tlalg.resolve_crossings(arcs)
            expanded = tlalg.theta(perm).terms
            solved = {
                tlalg.canonical_diagram(t.columns): c
                for t, c in specht.decompose_into_nct(tlalg.tableau_of(arcs)).terms.items()
            }
            if not resolved == expanded == solved:
                rep.fail(permutation=list(perm))
    return rep


def _contents(size: int, top: int):
    return list(itertools.combinations_with_replacement(range(1, top + 1), size))


def suite_bitableau(max_size: int = 4, max_entry: int = 4) -> SuiteReport:
    rep = SuiteReport("bitableau", "non-crossing bitableaux: counts, spanning, exact decompositions",
                      {"max_size": max_size, "max_entry": max_entry})
    example = bidet.decompose_bideterminant(bidet.Bitableau.from_columns([(1,), (2,)], [(2,), (1,)]))
    expected = {
        bidet.Bitableau.from_columns([(1,), (2,)], [(1,), (2,)]): 1,
        bidet.Bitableau.from_columns([(1, 2)], [(1, 2)]): -1,
    }
    rep.checked += 1
    if example.terms != expected:
        rep.fail(reason="x12 x21 example", got=example.to_json())
    for size in range(1, max_size + 1):
        for alpha in _contents(size, max_entry):
            for beta in _contents(size, max_entry):
                for shape in partitions(size):
                    rep.checked += 1
                    s = bidet.count_bitableaux(alpha, beta, shape, "standard")
                    nc = bidet.count_bitableaux(alpha, beta, shape, "noncrossing")
                    if s != nc:
                        rep.fail(alpha=list(alpha), beta=list(beta), shape=list(shape.parts), standard=s, noncrossing=nc)
                x = bidet.GenericMatrix(max(alpha), max(beta))
                basis = bidet.content_family(alpha, beta, "noncrossing")
                polys = [bidet.bideterminant(b, x) for b in basis]
                targets = [bidet.bideterminant(b, x) for b in bidet.content_family(alpha, beta, "standard")]
                rep.checked += 1
                if len(basis) != bidet.content_dimension(alpha, beta) or poly_rank(polys) != len(basis):
                    rep.fail(alpha=list(alpha), beta=list(beta), reason="basis size or rank")
                for sol, target in zip(express_many(polys, targets), targets):
                    rep.checked += 1
                    if sol is None or linear_combination(zip(sol, polys)) != target:
                        rep.fail(alpha=list(alpha), beta=list(beta), reason="decomposition")
    return rep


def suite_grassmannian(max_n: int = 4, max_d: int = 3) -> SuiteReport:
    rep = SuiteReport("grassmannian", "#SM = #NCM = rank; Plücker relations vanish", {"max_n": max_n, "max_d": max_d})
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            rep.checked += 1
            r = grass.graded_dimension(2, n, d)
            if not r.ok:
                rep.fail(**r.to_json())
        for i, j, l, rel in grass.all_relations(2, n):
            rep.checked += 1
            if not grass.realize(rel, 2, n).is_zero():
                rep.fail(i=list(i), j=list(j), l=l)
    return rep


def suite_groebner(max_n_pairs: int = 8, max_n: int = 6, max_d: int = 3) -> SuiteReport:
    rep = SuiteReport("groebner", "crossing products are initial; straightening = exact solve",
                      {"max_n_pairs": max_n_pairs, "max_n": max_n, "max_d": max_d})
    for n in range(2, max_n_pairs + 1):
        for p, q in itertools.combinations(itertools.combinations(range(1, n + 3), 2), 2):
            if not (p[0] < q[0] < p[1] < q[1]):
                continue
            rep.checked += 1
            rel = grass.three_term_relation(p, q)
            if grass.initial_term(rel) != (p, q):
                rep.fail(n=n, pair=[list(p), list(q)], initial=[list(f) for f in grass.initial_term(rel)])
    for n in range(1, max_n + 1):
        monos = [x for d in range(1, max_d + 1) for x in grass.monomials(2, n, d)]
        for mono, solved in zip(monos, grass.decompose_in_basis(monos, 2, n)):
            rep.checked += 1
            if grass.straighten_g2n(mono).element.terms != solved.terms:
                rep.fail(n=n, monomial=[list(f) for f in mono])
    return rep


def suite_schubert(max_k: int = 5, max_d: int = 2) -> SuiteReport:
    rep = SuiteReport("schubert", "relevant NCM: counts and independence in R_lambda", {"max_k": max_k, "max_d": max_d})
    for k in range(1, max_k + 1):
        for a in range(k + 1):
            for b in range(a + 1):
                shape = Partition(tuple(x for x in (a, b) if x))
                for d in range(1, max_d + 1):
                    rep.checked += 1
                    r = grass.schubert_check(shape, 2, k, d)
                    if not r.ok:
                        rep.fail(**r.to_json())
    return rep


def suite_gl(max_size: int = 4, n: int = 3, r: int = 3) -> SuiteReport:
    rep = SuiteReport("gl", "non-crossing M_T form a basis of D_lambda", {"max_size": max_size, "n": n, "r": r})
    for size in range(1, max_size + 1):
        for shape in partitions(size):
            if len(shape) > n:
                continue
            rep.checked += 1
            report = bidet.gl_module_basis(shape, n, r)
            if not report.ok:
                rep.fail(**report.to_json())
    return rep


def run_suite(name: str, max_n: int = 6) -> List[SuiteReport]:
    """Run one suite (or ``all``) with bounds scaled from ``max_n``."""
    table: Dict[str, Callable[[], SuiteReport]] = {
        "display": suite_display,
        "nct-count": lambda: suite_nct_count(max_n),
        "basis": lambda: suite_basis(max_n),
        "snct": lambda: suite_snct(max_n),
        "tl": lambda: suite_tl(min(4, max_n)),
        "bitableau": lambda: suite_bitableau(min(4, max_n), min(4, max_n)),
        "grassmannian": lambda: suite_grassmannian(min(4, max_n)),
        "groebner": lambda: suite_groebner(min(8, max_n + 2), max_n),
        "schubert": lambda: suite_schubert(min(5, max_n)),
        "gl": lambda: suite_gl(min(4, max_n)),
    }
    names = list(table) if name == "all" else [name]
    out = []
    for suite in names:
        if suite not in table:
            raise KeyError(suite)
        start = time.perf_counter()
        report = table[suite]()
        report.elapsed_ms = (time.perf_counter() - start) * 1000
        out.append(report)
    return out


SUITES = ("display", "nct-count", "basis", "snct", "tl", "bitableau", "grassmannian", "groebner", "schubert", "gl", "all")
