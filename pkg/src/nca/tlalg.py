"""Temperley-Lieb diagrams, the map s_i -> t_i + 1, and crossing resolution.

A diagram on ``2l`` boundary points is stored as a perfect matching of
``1..2l`` read counterclockwise: bottom points ``1..l`` left to right, then
top points right to left (top point ``k`` is ``2l + 1 - k``). Planar diagrams
are exactly the non-crossing matchings of ``1..2l``, and the same matchings
are the two-row non-crossing tableaux (each arc is a column).

``tl_multiply(d1, d2)`` stacks ``d1`` below ``d2``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .combinat import Tableau
from .errors import RankMismatchError, UnsupportedShapeError, WiringDiagramError
from .exactmath import to_rational

Arc = Tuple[int, int]
Diagram = Tuple[Arc, ...]

LOOP_VALUE = -2


def canonical_diagram(arcs) -> Diagram:
    out = []
    for a, b in arcs:
        a, b = int(a), int(b)
        out.append((a, b) if a < b else (b, a))
    return tuple(sorted(out))


def check_matching(arcs: Diagram, size: Optional[int] = None) -> int:
    points = sorted(x for arc in arcs for x in arc)
    if size is None:
        size = len(points)
    if points != list(range(1, size + 1)):
        raise ValueError(f"arcs {arcs} are not a perfect matching of 1..{size}")
    return size


def arcs_cross(p: Arc, q: Arc) -> bool:
    (a, b), (c, d) = sorted([p, q])
    return a < c < b < d


def is_planar(arcs: Diagram) -> bool:
    return not any(arcs_cross(p, q) for p, q in itertools.combinations(arcs, 2))


def crossing_pairs(arcs: Diagram) -> List[Tuple[Arc, Arc]]:
    return [(p, q) for p, q in itertools.combinations(sorted(arcs), 2) if arcs_cross(p, q)]


def noncrossing_matchings(points: int) -> Iterator[Diagram]:
    """All non-crossing perfect matchings of ``1..points``."""
    if points % 2:
        return

    def rec(lo: int, hi: int) -> Iterator[Tuple[Arc, ...]]:
        if lo > hi:
            yield ()
            return
        for partner in range(lo + 1, hi + 1, 2):
            for inner in rec(lo + 1, partner - 1):
                for outer in rec(partner + 1, hi):
                    yield ((lo, partner),) + inner + outer

    for m in rec(1, points):
        yield canonical_diagram(m)


def catalan_dimension(l: int) -> int:
    """Number of planar diagrams on ``2l`` points, by enumeration."""
    return sum(1 for _ in noncrossing_matchings(2 * l))


def catalan_number(l: int) -> int:
    from math import comb

    return comb(2 * l, l) // (l + 1)


# -- diagrams as TL_l elements ----------------------------------------------


def bottom(l: int, k: int) -> int:
    return k


def top(l: int, k: int) -> int:
    return 2 * l + 1 - k


def identity_diagram(l: int) -> Diagram:
    return canonical_diagram((bottom(l, k), top(l, k)) for k in range(1, l + 1))


def generator(l: int, i: int) -> Diagram:
    """The diagram of ``t_i``: cup on bottom ``i, i+1``, cap on top ``i, i+1``."""
    if not 1 <= i < l:
        raise ValueError(f"t_{i} is not a generator of TL_{l}")
    arcs = [(bottom(l, i), bottom(l, i + 1)), (top(l, i), top(l, i + 1))]
    arcs += [(bottom(l, k), top(l, k)) for k in range(1, l + 1) if k not in (i, i + 1)]
    return canonical_diagram(arcs)


def diagram_rank(d: Diagram) -> int:
    size = check_matching(d)
    if size % 2:
        raise ValueError("odd number of boundary points")
    return size // 2


class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def compose(d1: Diagram, d2: Diagram) -> Tuple[Diagram, int]:
    """Stack ``d1`` below ``d2``; returns the resulting diagram and the number of closed loops."""
    l1, l2 = diagram_rank(d1), diagram_rank(d2)
    if l1 != l2:
        raise RankMismatchError(f"cannot compose TL_{l1} with TL_{l2}")
    l = l1
    uf = _UnionFind()
    for a, b in d1:
        uf.union(("1", a), ("1", b))
    for a, b in d2:
        uf.union(("2", a), ("2", b))
    for k in range(1, l + 1):
        uf.union(("1", top(l, k)), ("2", bottom(l, k)))
    groups: Dict = {}
    for k in range(1, 2 * l + 1):
        for layer in ("1", "2"):
            node = (layer, k)
            groups.setdefault(uf.find(node), []).append(node)
    arcs = []
    loops = 0
    for nodes in groups.values():
        outer = []
        for layer, k in nodes:
            if layer == "1" and k <= l:
                outer.append(bottom(l, k))
            elif layer == "2" and k > l:
                outer.append(k)
        if not outer:
            loops += 1
        elif len(outer) == 2:
            arcs.append(tuple(outer))
        else:
            raise AssertionError("diagram composition produced a non-matching")
    return canonical_diagram(arcs), loops


class TLElement:
    """A rational combination of diagrams of ``TL_l(xi)``."""

    def __init__(self, terms: Optional[Dict[Diagram, object]] = None, xi=LOOP_VALUE):
        self.xi = to_rational(xi)
        self.terms: Dict[Diagram, object] = {}
        for d, c in (terms or {}).items():
            c = to_rational(c)
            if c != 0:
                self.terms[canonical_diagram(d)] = c

    @classmethod
    def diagram(cls, d: Diagram, xi=LOOP_VALUE, coeff=1) -> "TLElement":
        return cls({d: coeff}, xi)

    def __add__(self, other: "TLElement") -> "TLElement":
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return TLElement(out, self.xi)

    def __mul__(self, other: "TLElement") -> "TLElement":
        if self.xi != other.xi:
            raise ValueError("elements use different loop values")
        out: Dict[Diagram, object] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2)
                out[d] = out.get(d, 0) + c1 * c2 * self.xi ** loops
        return TLElement(out, self.xi)

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and self.terms == other.terms

    def coefficient(self, d: Diagram):
        return self.terms.get(canonical_diagram(d), 0)

    def to_json(self) -> list:
        from .exactmath import rational_str

        return [
            {"coeff": rational_str(c), "arcs": [list(a) for a in d]}
            for d, c in sorted(self.terms.items())
        ]

    def __repr__(self) -> str:
        return f"TLElement({self.terms!r}, xi={self.xi})"


def tl_multiply(d1: Diagram, d2: Diagram, xi=LOOP_VALUE) -> TLElement:
    d, loops = compose(d1, d2)
    return TLElement({d: to_rational(xi) ** loops}, xi)


# -- permutations and theta --------------------------------------------------


def reduced_word(perm: Sequence[int]) -> List[int]:
    """Indices ``i_1..i_k`` with ``s_{i_1}`` applied first (bottom of the wiring diagram).

    ``perm`` is one-line: strand starting at bottom position ``p`` ends at top
    position ``perm[p-1]``.
    """
    # bubble sort on destinations; every swap is one crossing
    dest_at = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(dest_at)):
            if dest_at[i - 1] > dest_at[i]:
                dest_at[i - 1], dest_at[i] = dest_at[i], dest_at[i - 1]
                word.append(i)
                changed = True
    return word


def word_to_perm(word: Sequence[int], l: int) -> Tuple[int, ...]:
    """Inverse of :func:`reduced_word`: apply the crossings bottom to top."""
    strand_at = list(range(1, l + 1))  # strand_at[p-1] = bottom position of the strand now at p
    for i in word:
        strand_at[i - 1], strand_at[i] = strand_at[i], strand_at[i - 1]
    perm = [0] * l
    for p, s in enumerate(strand_at, start=1):
        perm[s - 1] = p
    return tuple(perm)


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def is_reduced(word: Sequence[int], l: int) -> bool:
    return len(word) == inversions(word_to_perm(word, l))


def theta_word(word: Sequence[int], l: int, xi=LOOP_VALUE) -> Tuple[TLElement, bool]:
    """Expand ``prod (t_i + 1)`` over the word; also report whether the word is reduced."""
    result = TLElement.diagram(identity_diagram(l), xi)
    for i in word:
        factor = TLElement({generator(l, i): 1, identity_diagram(l): 1}, xi)
        result = result * factor
    return result, is_reduced(word, l)


def theta(perm: Sequence[int], xi=LOOP_VALUE) -> TLElement:
    """``theta(w)`` for a permutation, through a reduced word."""
    l = len(perm)
    if sorted(perm) != list(range(1, l + 1)):
        raise ValueError(f"{perm} is not a permutation")
    element, _ = theta_word(reduced_word(perm), l, xi)
    return element


def t_w(perm: Sequence[int]) -> Diagram:
    """The diagram ``t_{i_1} ... t_{i_k}`` for a reduced word of ``perm`` (a basis element when 321-avoiding)."""
    l = len(perm)
    d = identity_diagram(l)
    for i in reduced_word(perm):
        d, _ = compose(d, generator(l, i))
    return d


def is_321_avoiding(perm: Sequence[int]) -> bool:
    return not any(
        perm[i] > perm[j] > perm[k] for i, j, k in itertools.combinations(range(len(perm)), 3)
    )


def wiring_matching(perm: Sequence[int]) -> Diagram:
    """Two-row tableau (matching of ``1..2l``) drawn by the wiring diagram of ``perm``."""
    l = len(perm)
    return canonical_diagram((bottom(l, p), top(l, perm[p - 1])) for p in range(1, l + 1))


def matching_permutation(arcs: Diagram) -> Tuple[int, ...]:
    """``omega(T)`` for a matching joining ``1..l`` to ``l+1..2l``."""
    size = check_matching(arcs)
    l = size // 2
    perm = [0] * l
    for a, b in arcs:
        if not (a <= l < b):
            raise WiringDiagramError(f"arc {(a, b)} does not join the two halves")
        perm[a - 1] = 2 * l + 1 - b
    return tuple(perm)


# -- crossing resolution -----------------------------------------------------


def matching_of(t: Tableau) -> Diagram:
    if any(len(c) != 2 for c in t.columns):
        raise UnsupportedShapeError("crossing resolution needs every part of size 2")
    arcs = canonical_diagram(t.columns)
    check_matching(arcs)
    return arcs


def tableau_of(arcs: Diagram) -> Tableau:
    return Tableau(tuple(arcs)).canonical()


def _positions(size: int, seed: int) -> List[Fraction]:
    rng = random.Random(seed)
    return [Fraction(0)] + [Fraction(k) + Fraction(rng.randrange(1, 1000), 4000) for k in range(1, size + 1)]


def _crossing_x(pos, p: Arc, q: Arc) -> Fraction:
    # intersection of the upper semicircles over [p0, p1] and [q0, q1]
    c1 = (pos[p[0]] + pos[p[1]]) / 2
    r1 = (pos[p[1]] - pos[p[0]]) / 2
    c2 = (pos[q[0]] + pos[q[1]]) / 2
    r2 = (pos[q[1]] - pos[q[0]]) / 2
    return (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1))


def _drawing(arcs: Diagram):
    """Crossing points of the semicircle drawing, ordered along every arc.

    Endpoints are perturbed so that no three arcs meet in a point; this does
    not change which pairs cross.
    """
    size = check_matching(arcs)
    pairs = crossing_pairs(arcs)
    for seed in range(100):
        pos = _positions(size, seed)
        xs = {pq: _crossing_x(pos, *pq) for pq in pairs}
        along: Dict[Arc, List[Tuple[Fraction, int]]] = {a: [] for a in arcs}
        for idx, (p, q) in enumerate(pairs):
            along[p].append((xs[(p, q)], idx))
            along[q].append((xs[(p, q)], idx))
        ok = all(len({x for x, _ in v}) == len(v) for v in along.values())
        if ok:
            return pairs, {a: [idx for _, idx in sorted(v)] for a, v in along.items()}
    raise AssertionError("could not find a generic drawing")


def smoothings(arcs: Diagram) -> Iterator[Tuple[Tuple[int, ...], Diagram, int]]:
    """Every way of smoothing all crossings.

    Yields ``(choices, matching, cycles)``; choice ``0`` at a crossing joins the
    left ends of the two arcs (and the right ends), choice ``1`` joins the left
    end of the outer-starting arc to the right end of the other.
    """
    pairs, along = _drawing(arcs)
    # fragment (arc, k) runs from the k-th crossing point to the (k+1)-th along the arc
    # (k = 0 starts at the left endpoint, k = len(along[arc]) ends at the right endpoint)
    where: Dict[Tuple[Arc, int], int] = {}
    for arc, idxs in along.items():
        for k, idx in enumerate(idxs):
            where[(arc, idx)] = k
    for choices in itertools.product((0, 1), repeat=len(pairs)):
        uf = _UnionFind()
        for arc, idxs in along.items():
            for k in range(len(idxs) + 1):
                uf.find((arc, k))
        for idx, ((p, q), choice) in enumerate(zip(pairs, choices)):
            kp, kq = where[(p, idx)], where[(q, idx)]
            p_left, p_right = (p, kp), (p, kp + 1)
            q_left, q_right = (q, kq), (q, kq + 1)
            if choice == 0:
                uf.union(p_left, q_left)
                uf.union(p_right, q_right)
            else:
                uf.union(p_left, q_right)
                uf.union(p_right, q_left)
        ends: Dict = {}
        for arc, idxs in along.items():
            ends.setdefault(uf.find((arc, 0)), []).append(arc[0])
            ends.setdefault(uf.find((arc, len(idxs))), []).append(arc[1])
        roots = {uf.find(node) for node in list(uf.parent)}
        cycles = sum(1 for r in roots if r not in ends)
        matching = canonical_diagram(tuple(v) for v in ends.values())
        yield choices, matching, cycles


def resolve_crossings(t, xi=LOOP_VALUE) -> Dict[Diagram, object]:
    """Coefficients of the NCT obtained by uncrossing every crossing at once.

    Each smoothing contributes ``xi ** cycles`` to its underlying matching.
    Accepts a two-row :class:`Tableau` or a matching.
    """
    arcs = matching_of(t) if isinstance(t, Tableau) else canonical_diagram(t)
    out: Dict[Diagram, object] = {}
    for _, matching, cycles in smoothings(arcs):
        out[matching] = out.get(matching, 0) + to_rational(xi) ** cycles
    return {d: c for d, c in out.items() if c != 0}


def resolve_iteratively(t, rng: Optional[random.Random] = None) -> Dict[Diagram, object]:
    """Apply the three-term rule to one crossing pair at a time until nothing crosses.

    With ``rng`` the crossing to resolve is picked at random; otherwise the first one.
    """
    arcs = matching_of(t) if isinstance(t, Tableau) else canonical_diagram(t)
    pending: Dict[Diagram, object] = {arcs: 1}
    out: Dict[Diagram, object] = {}
    while pending:
        d, c = pending.popitem()
        pairs = crossing_pairs(d)
        if not pairs:
            out[d] = out.get(d, 0) + c
            continue
        (a1, a2), (b1, b2) = rng.choice(pairs) if rng else pairs[0]
        rest = [arc for arc in d if arc not in ((a1, a2), (b1, b2))]
        for new in (((a1, b1), (a2, b2)), ((a1, b2), (b1, a2))):
            key = canonical_diagram(rest + list(new))
            pending[key] = pending.get(key, 0) + c
    return {d: c for d, c in out.items() if c != 0}


def tl_coefficient_check(t) -> bool:
    """Crossing-resolution coefficients agree with the diagram coefficients of ``theta(omega(T))``."""
    arcs = matching_of(t) if isinstance(t, Tableau) else canonical_diagram(t)
    perm = matching_permutation(arcs)
    resolved = resolve_crossings(arcs)
    expanded = theta(perm)
    return resolved == expanded.terms
