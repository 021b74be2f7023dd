"""Plücker coordinates of ``G_{m,n}``: relations, standard and non-crossing monomials.

Coordinates are indexed by ``m``-subsets ``J`` of ``1..m+n``; ``P_J`` is the
minor on columns ``J`` of a generic ``m x (m+n)`` matrix. A monomial is a
sorted tuple of index tuples.

For ``m = 2`` monomials carry the weight ``w(J) = j_2 - j_1`` (multiplied over
factors), and ``M1 < M2`` in the weight order when ``w(M1) > w(M2)``, ties
broken lexicographically. The initial term of an element is its *smallest*
monomial in that order, so crossing products are initial.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .bidet import GenericMatrix, minor
from .combinat import Partition, snct_classes
from .errors import (
    InconsistentSystemError,
    NonTerminationError,
    OutOfRangeError,
    ShapeError,
    UnsupportedShapeError,
    ZeroElementError,
)
from .exactmath import Poly, express_many, linear_combination, poly_rank, rank, rational_str, to_rational
from .specht import sort_with_sign

Index = Tuple[int, ...]
Monomial = Tuple[Index, ...]

STRAIGHTEN_STEP_LIMIT = 100_000


def check_index(j: Sequence[int], m: int, n: int) -> Index:
    j = tuple(int(x) for x in j)
    if len(j) != m:
        raise OutOfRangeError(f"{j} should have {m} entries")
    if any(b <= a for a, b in zip(j, j[1:])):
        raise OutOfRangeError(f"{j} is not strictly increasing")
    if j and (j[0] < 1 or j[-1] > m + n):
        raise OutOfRangeError(f"{j} leaves 1..{m + n}")
    return j


def monomial(factors: Iterable[Sequence[int]], m: Optional[int] = None, n: Optional[int] = None) -> Monomial:
    factors = [tuple(int(x) for x in f) for f in factors]
    if m is not None and n is not None:
        factors = [check_index(f, m, n) for f in factors]
    return tuple(sorted(factors))


def monomial_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    if all(x < 10 for f in mono for x in f):
        return "".join("P" + "".join(map(str, f)) for f in mono)
    return "".join("P(" + ",".join(map(str, f)) + ")" for f in mono)


@dataclass
class GrassElement:
    """Rational combination of Plücker monomials."""

    terms: Dict[Monomial, object] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Monomial, object]]) -> "GrassElement":
        acc: Dict[Monomial, object] = {}
        for mono, c in pairs:
            mono = tuple(sorted(mono))
            acc[mono] = acc.get(mono, 0) + to_rational(c)
        return cls({k: v for k, v in acc.items() if v != 0})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Monomial, object]]:
        return sorted(self.terms.items())

    def to_json(self, m: int) -> list:
        return [{"coeff": rational_str(c), "monomial": {"m": m, "factors": [list(f) for f in mono]}} for mono, c in self.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{rational_str(mag)}*"
            parts.append(f"{sign} {coeff}{monomial_str(mono)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -- realization -------------------------------------------------------------


@lru_cache(maxsize=None)
def _minor_poly(m: int, n: int, j: Index) -> Poly:
    return minor(GenericMatrix(m, m + n), range(1, m + 1), j)


def realize_monomial(mono: Monomial, m: int, n: int) -> Poly:
    result = Poly.one()
    for f in mono:
        result = result * _minor_poly(m, n, f)
    return result


def realize(element: GrassElement, m: int, n: int) -> Poly:
    return linear_combination((c, realize_monomial(mono, m, n)) for mono, c in element.terms.items())


# -- Plücker relations -------------------------------------------------------


def pluecker_relation(i: Sequence[int], j: Sequence[int], l: int, m: Optional[int] = None, n: Optional[int] = None) -> GrassElement:
    """Signed sum over coset representatives exchanging ``i_l..i_m`` with ``j_1..j_l``.

    Terms whose index repeats an entry vanish; the rest are sorted with sign.
    """
    i, j = tuple(i), tuple(j)
    m = len(i) if m is None else m
    if len(i) != m or len(j) != m:
        raise OutOfRangeError("both tuples need m entries")
    if not 1 <= l <= m:
        raise OutOfRangeError(f"l = {l} outside 1..{m}")
    if n is not None:
        for t in (i, j):
            if any(not 1 <= x <= m + n for x in t):
                raise OutOfRangeError(f"{t} leaves 1..{m + n}")
    pool = i[l - 1 :] + j[:l]
    k = len(i) - (l - 1)
    pairs = []
    for chosen_pos in itertools.combinations(range(len(pool)), k):
        rest_pos = tuple(p for p in range(len(pool)) if p not in chosen_pos)
        order = chosen_pos + rest_pos
        u_sign = sort_with_sign(order)[1]
        first, s1 = sort_with_sign(i[: l - 1] + tuple(pool[p] for p in chosen_pos))
        second, s2 = sort_with_sign(tuple(pool[p] for p in rest_pos) + j[l:])
        sign = u_sign * s1 * s2
        if sign:
            pairs.append(((first, second), sign))
    return GrassElement.from_pairs(pairs)


def all_relations(m: int, n: int) -> Iterator[Tuple[Index, Index, int, GrassElement]]:
    subsets = list(itertools.combinations(range(1, m + n + 1), m))
    for i in subsets:
        for j in subsets:
            for l in range(1, m + 1):
                yield i, j, l, pluecker_relation(i, j, l, m, n)


# -- standard and non-crossing monomials -------------------------------------


def is_standard_monomial(mono: Sequence[Sequence[int]]) -> bool:
    """Rows sorted lexicographically; every column of the array weakly increases."""
    rows = sorted(tuple(f) for f in mono)
    return all(a <= b for r1, r2 in zip(rows, rows[1:]) for a, b in zip(r1, r2))


def _pattern(p: Index, q: Index) -> bool:
    return any(p[k] < q[k] < p[k + 1] < q[k + 1] for k in range(len(p) - 1))


def has_crossing_pattern(mono: Sequence[Sequence[int]]) -> bool:
    """Some pair of factors has ``j_k^p < j_k^q < j_{k+1}^p < j_{k+1}^q``."""
    rows = [tuple(f) for f in mono]
    return any(_pattern(p, q) or _pattern(q, p) for p, q in itertools.combinations(rows, 2))


def is_noncrossing_monomial(mono: Sequence[Sequence[int]]) -> bool:
    """The factors, as columns of an ``m``-row tableau, form a semi-non-crossing tableau.

    Without shared indices this is the absence of the crossing pattern. When
    factors share an index the copies are separated first, which can create a
    crossing the pattern misses: ``P135 P234`` is crossing.
    """
    rows = [tuple(f) for f in mono]
    if has_crossing_pattern(rows):
        return False
    counts = Counter(x for f in rows for x in f)
    if len(rows) < 2 or max(counts.values()) == 1:
        return True
    shape = Partition((len(rows),) * len(rows[0]))
    weight = tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))
    return tuple(sorted(rows)) in _snct_sets(shape, weight)


@lru_cache(maxsize=None)
def _snct_sets(shape: Partition, weight: Tuple[int, ...]) -> frozenset:
    return frozenset(tuple(sorted(t.columns)) for t in snct_classes(shape, weight))


def crossing_factor_pairs(mono: Monomial) -> List[Tuple[int, int]]:
    return [
        (a, b)
        for a, b in itertools.combinations(range(len(mono)), 2)
        if not is_noncrossing_monomial((mono[a], mono[b]))
    ]


def monomials(m: int, n: int, d: int) -> List[Monomial]:
    coords = list(itertools.combinations(range(1, m + n + 1), m))
    return [tuple(c) for c in itertools.combinations_with_replacement(coords, d)]


def standard_monomials(m: int, n: int, d: int) -> List[Monomial]:
    return [x for x in monomials(m, n, d) if is_standard_monomial(x)]


def noncrossing_monomials(m: int, n: int, d: int) -> List[Monomial]:
    return [x for x in monomials(m, n, d) if is_noncrossing_monomial(x)]


def column_content(mono: Monomial) -> Tuple[int, ...]:
    return tuple(sorted(x for f in mono for x in f))


def _blocks(monos: Iterable[Monomial]) -> Dict[Tuple[int, ...], List[Monomial]]:
    out: Dict[Tuple[int, ...], List[Monomial]] = {}
    for x in monos:
        out.setdefault(column_content(x), []).append(x)
    return out


@dataclass(frozen=True)
class DimensionReport:
    m: int
    n: int
    d: int
    standard: int
    noncrossing: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.standard == self.noncrossing == self.rank

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "d": self.d, "standard": self.standard,
                "noncrossing": self.noncrossing, "rank": self.rank, "ok": self.ok}


def graded_dimension(m: int, n: int, d: int) -> DimensionReport:
    """Degree-``d`` dimension three ways: #SM, #NCM and the exact rank of all monomials.

    The rank is computed block by block: monomials with different column
    content have disjoint supports.
    """
    total = 0
    for block in _blocks(monomials(m, n, d)).values():
        total += poly_rank([realize_monomial(x, m, n) for x in block])
    return DimensionReport(m, n, d, len(standard_monomials(m, n, d)), len(noncrossing_monomials(m, n, d)), total)


# -- solve-based decomposition ------------------------------------------------


def _block_monomials(m: int, n: int, content: Tuple[int, ...]) -> List[Monomial]:
    d = len(content) // m
    counts = Counter(content)
    out = []
    coords = sorted({c for c in itertools.combinations(sorted(counts), m)})
    for combo in itertools.combinations_with_replacement(coords, d):
        if Counter(x for f in combo for x in f) == counts:
            out.append(tuple(combo))
    return out


def decompose_in_basis(monos: Sequence[Monomial], m: int, n: int, basis_kind: str = "noncrossing") -> List[GrassElement]:
    """Unique coordinates of each monomial over the NCM (or SM) of its column content."""
    test = is_noncrossing_monomial if basis_kind == "noncrossing" else is_standard_monomial
    out: List[Optional[GrassElement]] = [None] * len(monos)
    grouped: Dict[Tuple[int, ...], List[int]] = {}
    for k, x in enumerate(monos):
        grouped.setdefault(column_content(tuple(sorted(x))), []).append(k)
    for content, idxs in grouped.items():
        basis = [b for b in _block_monomials(m, n, content) if test(b)]
        polys = [realize_monomial(b, m, n) for b in basis]
        targets = [realize_monomial(tuple(sorted(monos[k])), m, n) for k in idxs]
        sols = express_many(polys, targets)
        for k, sol, target in zip(idxs, sols, targets):
            if sol is None or linear_combination(zip(sol, polys)) != target:
                raise InconsistentSystemError(f"{monos[k]} is outside the span of the {basis_kind} monomials")
            out[k] = GrassElement({b: c for b, c in zip(basis, sol) if c != 0})
    return out  # type: ignore[return-value]


def decompose_ncm(mono: Sequence[Sequence[int]], m: int, n: int) -> GrassElement:
    return decompose_in_basis([monomial(mono, m, n)], m, n)[0]


# -- the weight order for m = 2 ----------------------------------------------


def _require_pairs(mono: Iterable[Sequence[int]]):
    for f in mono:
        if len(f) != 2:
            raise UnsupportedShapeError("the weight order is defined for m = 2 only")


def weight(j: Sequence[int]) -> int:
    if len(j) != 2:
        raise UnsupportedShapeError("the weight order is defined for m = 2 only")
    return j[1] - j[0]


def monomial_weight(mono: Sequence[Sequence[int]]) -> int:
    _require_pairs(mono)
    w = 1
    for f in mono:
        w *= weight(f)
    return w


def order_key(mono: Sequence[Sequence[int]]):
    """Sort key for the weight order: larger weight first, then lexicographic."""
    return (-monomial_weight(mono), tuple(sorted(tuple(f) for f in mono)))


def precedes(m1, m2) -> bool:
    """``m1`` strictly before ``m2`` in the weight order."""
    return order_key(m1) < order_key(m2)


def initial_term(f: GrassElement) -> Monomial:
    """The smallest supported monomial (largest weight)."""
    if f.is_zero():
        raise ZeroElementError("the zero element has no initial term")
    return min(f.terms, key=order_key)


def three_term_relation(p: Index, q: Index) -> GrassElement:
    """``P(a,b)P(c,d) - P(a,c)P(b,d) - P(a,d)P(b,c)`` for the crossing pair, ``a<b<c<d`` sorted."""
    a, b, c, d = sorted(p + q)
    return GrassElement.from_pairs([(((a, c), (b, d)), 1), (((a, b), (c, d)), -1), (((a, d), (b, c)), -1)])


@dataclass
class StraightenResult:
    element: GrassElement
    steps: int


def straighten_g2n(mono: Sequence[Sequence[int]], n: Optional[int] = None) -> StraightenResult:
    """Rewrite crossing pairs until only non-crossing monomials remain.

    ``P(a,c)P(b,d) -> P(a,b)P(c,d) + P(a,d)P(b,c)`` for ``a<b<c<d``. Each move
    strictly lowers the weight, so the loop ends.
    """
    start = monomial(mono, 2, n) if n is not None else monomial(mono)
    _require_pairs(start)
    pending: Dict[Monomial, object] = {start: 1}
    result: Dict[Monomial, object] = {}
    steps = 0
    while pending:
        # heaviest first: rewrites only produce lighter monomials, so each is visited once
        current = min(pending, key=order_key)
        coeff = pending.pop(current)
        if coeff == 0:
            continue
        pairs = crossing_factor_pairs(current)
        if not pairs:
            result[current] = result.get(current, 0) + coeff
            continue
        steps += 1
        if steps > STRAIGHTEN_STEP_LIMIT:
            raise NonTerminationError("straightening exceeded its step limit")
        s, t = min(pairs, key=lambda st: order_key((current[st[0]], current[st[1]])))
        a, b, c, d = sorted(current[s] + current[t])
        rest = tuple(f for k, f in enumerate(current) if k not in (s, t))
        for new in (((a, b), (c, d)), ((a, d), (b, c))):
            key = tuple(sorted(rest + new))
            pending[key] = pending.get(key, 0) + coeff
    return StraightenResult(GrassElement({k: v for k, v in result.items() if v != 0}), steps)


# -- Schubert varieties ---------------------------------------------------------


def _check_shape(shape: Partition, m: int, n: int) -> Tuple[int, ...]:
    if len(shape) > m or (shape.parts and shape.parts[0] > n):
        raise ShapeError(f"{shape} does not fit in a {m}x{n} rectangle")
    return shape.parts + (0,) * (m - len(shape))


def relevant_to(j: Sequence[int], shape: Partition, m: int, n: int) -> bool:
    lam = _check_shape(shape, m, n)
    return all(j[k - 1] <= n + k - lam[k - 1] for k in range(1, m + 1))


def monomial_relevant_to(mono: Sequence[Sequence[int]], shape: Partition, m: int, n: int) -> bool:
    return all(relevant_to(f, shape, m, n) for f in mono)


def schubert_index(shape: Partition, m: int, n: int) -> Index:
    """``I`` with ``i_k = n + k - lambda_k``."""
    lam = _check_shape(shape, m, n)
    return tuple(n + k - lam[k - 1] for k in range(1, m + 1))


@dataclass(frozen=True)
class SchubertReport:
    shape: Partition
    m: int
    n: int
    d: int
    standard: int
    noncrossing: int
    independent_rank: int

    @property
    def ok(self) -> bool:
        return self.standard == self.noncrossing == self.independent_rank

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "m": self.m, "n": self.n, "d": self.d,
                "standard": self.standard, "noncrossing": self.noncrossing,
                "independent_rank": self.independent_rank, "ok": self.ok}


def schubert_counts(shape: Partition, m: int, n: int, d: int) -> Tuple[int, int]:
    sm = sum(1 for x in standard_monomials(m, n, d) if monomial_relevant_to(x, shape, m, n))
    ncm = sum(1 for x in noncrossing_monomials(m, n, d) if monomial_relevant_to(x, shape, m, n))
    return sm, ncm


def schubert_check(shape: Partition, m: int, n: int, d: int) -> SchubertReport:
    """Counts, plus the rank of relevant NCM written in relevant-SM coordinates.

    Non-relevant standard monomials span the degree-``d`` part of the ideal of
    the Schubert variety, so dropping those coordinates is the projection to
    ``R_lambda``.
    """
    sm, ncm = schubert_counts(shape, m, n, d)
    relevant_ncm = [x for x in noncrossing_monomials(m, n, d) if monomial_relevant_to(x, shape, m, n)]
    relevant_sm = [x for x in standard_monomials(m, n, d) if monomial_relevant_to(x, shape, m, n)]
    column = {x: k for k, x in enumerate(relevant_sm)}
    rows = []
    for expansion in decompose_in_basis(relevant_ncm, m, n, basis_kind="standard"):
        row = [0] * len(relevant_sm)
        for mono, c in expansion.terms.items():
            if mono in column:
                row[column[mono]] = c
        rows.append(row)
    r = rank(rows) if rows and relevant_sm else 0
    return SchubertReport(shape, m, n, d, sm, ncm, r)


# -- exploratory pair rewriting (any m) ----------------------------------------


@dataclass
class RewriteLog:
    element: GrassElement
    steps: List[dict]
    finished: bool


def rewrite_pairs(mono: Sequence[Sequence[int]], m: int, n: int, max_steps: int = 200) -> RewriteLog:
    """Replace one crossing pair of factors at a time by its degree-2 NCM expansion.

    For ``m = 3`` the factors are the "seagulls". Crossings elsewhere in the
    monomial may increase, so there is no termination guarantee; the run stops
    after ``max_steps`` moves and reports whether it finished.
    """
    start = monomial(mono, m, n)
    pending: Dict[Monomial, object] = {start: 1}
    done: Dict[Monomial, object] = {}
    log: List[dict] = []
    while pending and len(log) < max_steps:
        current = min(pending)
        coeff = pending.pop(current)
        if coeff == 0:
            continue
        pairs = crossing_factor_pairs(current)
        if not pairs:
            done[current] = done.get(current, 0) + coeff
            continue
        s, t = pairs[0]
        pair = (current[s], current[t])
        expansion = decompose_ncm(pair, m, n)
        rest = tuple(f for k, f in enumerate(current) if k not in (s, t))
        for new, c in expansion.terms.items():
            key = tuple(sorted(rest + new))
            pending[key] = pending.get(key, 0) + coeff * c
        log.append({
            "step": len(log) + 1,
            "monomial": [list(f) for f in current],
            "pair": [list(f) for f in pair],
            "replacement_terms": len(expansion.terms),
            "crossings_before": len(pairs),
            "crossings_after": [len(crossing_factor_pairs(tuple(sorted(rest + new)))) for new in sorted(expansion.terms)],
        })
    finished = not pending
    merged = dict(done)
    for k, v in pending.items():
        merged[k] = merged.get(k, 0) + v
    return RewriteLog(GrassElement({k: v for k, v in merged.items() if v != 0}), log, finished)
