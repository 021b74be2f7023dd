"""Specht polynomials, Garnir straightening and the non-crossing basis.

The module ``S^lambda`` is realized inside ``Q[x_1..x_n]``. Completed tableaux
(living on ``1..N`` and agreeing with a filling ``F``) are accepted everywhere
and mapped to their restriction to ``1..n``; results are reported on the same
side the input came from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combinat import (
    Column,
    Filling,
    Partition,
    Tableau,
    agrees_with,
    all_tableaux,
    canonical_filling,
    column_order_key,
    enumerate_nct,
    enumerate_syt,
    is_syt,
    reading_of,
)
from .errors import (
    ActionDomainError,
    ClassificationError,
    InconsistentSystemError,
    NonTerminationError,
)
from .exactmath import Poly, difference_product, express, linear_combination, poly_rank, rational_str, to_rational

GARNIR_STEP_LIMIT = 1_000_000


def specht_poly(t: Tableau) -> Poly:
    """``prod (x_i - x_j)`` over pairs with ``i`` above ``j`` in a column."""
    return difference_product(
        (col[i], col[j]) for col in t.columns for i in range(len(col)) for j in range(i + 1, len(col))
    )


def sort_with_sign(seq: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Sorted copy and the sign of the sorting permutation (0 if there is a repeat)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return tuple(sorted(seq)), 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return tuple(sorted(seq)), sign


def permutation_sign(perm: Sequence[int]) -> int:
    return sort_with_sign(perm)[1]


@dataclass
class SpechtElement:
    """A rational combination of tableaux; keys are canonical tableaux."""

    terms: Dict[Tableau, object] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Tableau, object]]) -> "SpechtElement":
        acc: Dict[Tableau, object] = {}
        for t, c in pairs:
            t = t.canonical()
            acc[t] = acc.get(t, 0) + c
        return cls({t: to_rational(c) for t, c in acc.items() if c != 0})

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, t: Tableau):
        return self.terms.get(t.canonical(), 0)

    def items(self) -> List[Tuple[Tableau, object]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(reading_of(kv[0]).labels) if kv[0].is_absolute() else kv[0].columns)

    def realize(self) -> Poly:
        return linear_combination((c, specht_poly(t)) for t, c in self.terms.items())

    def to_json(self) -> list:
        return [{"coeff": rational_str(c), "tableau": tableau_json(t)} for t, c in self.items()]


def tableau_json(t: Tableau) -> dict:
    return {"shape": list(t.shape.parts), "columns": [list(c) for c in t.columns]}


# -- the S_n action --------------------------------------------------------


def _as_mapping(perm) -> Dict[int, int]:
    if isinstance(perm, Mapping):
        return {int(k): int(v) for k, v in perm.items()}
    return {i: int(v) for i, v in enumerate(perm, start=1)}


def permute_tableau(perm, t: Tableau, filling: Optional[Filling] = None) -> Tuple[Tableau, int]:
    """Relabel entries by ``perm`` and re-sort columns.

    ``perm`` is a one-line tuple (``perm[i-1]`` is the image of ``i``) or a dict.
    Returns the canonical image and the sign picked up by re-sorting, so that
    ``perm . P_T = sign * P_image``. With a filling, ``perm`` must fix ``n+1..N``.
    """
    mapping = _as_mapping(perm)
    values = sorted(mapping.values())
    if values != sorted(mapping):
        raise ActionDomainError("permutation is not a bijection")
    if filling is not None:
        moved = [k for k, v in mapping.items() if k > filling.n and k != v]
        if moved:
            raise ActionDomainError(f"permutation moves filling entries {moved}")
    sign = 1
    cols = []
    for col in t.columns:
        new, s = sort_with_sign([mapping.get(x, x) for x in col])
        sign *= s
        cols.append(new)
    return Tableau(tuple(cols)).canonical(), sign


# -- free / completed bookkeeping -------------------------------------------


def _free_and_filling(t: Tableau, shape: Optional[Partition], filling: Optional[Filling]):
    """Map an input tableau to (free tableau, shape, filling-or-None)."""
    if filling is not None:
        if not agrees_with(t, filling):
            raise ClassificationError(f"{t} does not agree with the filling")
        return t.restrict(filling.n), filling.shape, filling
    if shape is None:
        shape = t.shape
    if t.size == shape.size:
        return t.canonical(), shape, None
    filling = canonical_filling(shape)
    if not agrees_with(t, filling):
        raise ClassificationError(f"{t} does not agree with the canonical filling of {shape}")
    return t.restrict(filling.n), shape, filling


# -- Garnir straightening ---------------------------------------------------


def _first_row_descent(cols: Tuple[Column, ...]):
    for j in range(len(cols) - 1):
        a, b = cols[j], cols[j + 1]
        for r in range(len(b)):
            if a[r] > b[r]:
                return j, r
    return None


def garnir_relation(cols: Tuple[Column, ...]) -> Tuple[Tuple[int, int], List[Tuple[Tuple[Column, ...], int]]]:
    """Garnir identity at the first row descent.

    Returns ``((j, r), terms)`` with ``P_T = sum(c * P_S for S, c in terms)``;
    each ``S`` has sorted columns in the same column order as ``T``.
    """
    found = _first_row_descent(cols)
    if found is None:
        raise ValueError("tableau has no row descent")
    j, r = found
    a, b = cols[j], cols[j + 1]
    slots = a[r:] + b[: r + 1]
    k = len(a) - r
    terms = []
    for chosen in itertools.combinations(sorted(slots), k):
        if set(chosen) == set(a[r:]):
            continue
        rest = tuple(x for x in sorted(slots) if x not in chosen)
        new_slots = chosen + rest
        # sign of u: the permutation of slot positions carrying ``slots`` to ``new_slots``
        pos = {v: i for i, v in enumerate(slots)}
        u_sign = permutation_sign([pos[v] for v in new_slots])
        new_a, sa = sort_with_sign(a[:r] + chosen)
        new_b, sb = sort_with_sign(rest + b[r + 1:])
        new_cols = cols[:j] + (new_a, new_b) + cols[j + 2:]
        terms.append((new_cols, -u_sign * sa * sb))
    return (j, r), terms


def _order_cols(cols) -> Tuple[Column, ...]:
    return tuple(sorted(cols, key=column_order_key))


def straighten_to_syt(t: Tableau) -> Dict[Tuple[Column, ...], object]:
    """Expand ``P_T`` over SYT by repeated Garnir relations (iterative, memo-free)."""
    start = _order_cols(t.columns)
    pending: Dict[Tuple[Column, ...], object] = {start: 1}
    result: Dict[Tuple[Column, ...], object] = {}
    steps = 0
    while pending:
        # process the tableau that is smallest in the column-word order; Garnir terms are larger
        cols = min(pending, key=lambda c: [x for col in c for x in col])
        coeff = pending.pop(cols)
        if coeff == 0:
            continue
        if _first_row_descent(cols) is None:
            result[cols] = result.get(cols, 0) + coeff
            continue
        steps += 1
        if steps > GARNIR_STEP_LIMIT:
            raise NonTerminationError("Garnir straightening exceeded its step limit")
        _, terms = garnir_relation(cols)
        for new_cols, c in terms:
            key = _order_cols(new_cols)
            pending[key] = pending.get(key, 0) + coeff * c
    return {k: v for k, v in result.items() if v != 0}


def garnir_expand(t: Tableau, filling: Optional[Filling] = None, shape: Optional[Partition] = None) -> SpechtElement:
    """Write ``P_T`` over the SYT basis; the identity is checked polynomially before returning."""
    free, shape, filling = _free_and_filling(t, shape, filling)
    expansion = straighten_to_syt(free)
    target = specht_poly(free)
    realized = linear_combination((c, specht_poly(Tableau(cols))) for cols, c in expansion.items())
    if realized != target:
        # last resort: exact solve over the SYT basis
        basis = enumerate_syt(shape, complete=False)
        coeffs = express([specht_poly(s) for s in basis], target)
        if coeffs is None:
            raise InconsistentSystemError("P_T is not in the span of the SYT polynomials")
        expansion = {s.columns: c for s, c in zip(basis, coeffs) if c != 0}
    pairs = []
    for cols, c in expansion.items():
        s = Tableau(cols)
        pairs.append((filling.complete(s) if filling else s, c))
    return SpechtElement.from_pairs(pairs)


# -- the non-crossing basis -------------------------------------------------


@lru_cache(maxsize=None)
def _nct_basis(shape: Partition) -> Tuple[Tuple[Tableau, ...], Tuple[Poly, ...]]:
    basis = tuple(enumerate_nct(shape, complete=False))
    return basis, tuple(specht_poly(b) for b in basis)


def decompose_into_nct(t: Tableau, filling: Optional[Filling] = None, shape: Optional[Partition] = None) -> SpechtElement:
    """Unique coefficients writing ``P_T`` over the NCT of its shape (exact solve)."""
    free, shape, filling = _free_and_filling(t, shape, filling)
    basis, polys = _nct_basis(shape)
    target = specht_poly(free)
    coeffs = express(polys, target)
    if coeffs is None:
        raise InconsistentSystemError(f"P_T for {free} is outside the span of the NCT polynomials")
    if linear_combination(zip(coeffs, polys)) != target:
        raise InconsistentSystemError("NCT decomposition does not reproduce P_T")
    pairs = []
    completed = {}
    if filling is not None:
        completed = {s.restrict(filling.n): s for s in enumerate_nct(shape, filling)}
    for b, c in zip(basis, coeffs):
        if c != 0:
            pairs.append((completed.get(b, b), c))
    return SpechtElement.from_pairs(pairs)


def reading_evaluation(t: Tableau) -> Dict[int, int]:
    """Assignment ``x_i := l(i)`` from the reading of ``t``."""
    return {i: label for i, label in enumerate(reading_of(t).labels, start=1)}


def module_rank(shape: Partition, filling: Optional[Filling] = None, complete: bool = False) -> int:
    """Rank of ``{P_T}`` over all tableaux of the shape.

    With ``complete=True`` the tableaux are completed literally by ``F`` before
    taking Specht polynomials; equal-length columns then sit over different
    columns of ``F``, so every ordering of them is included.
    """
    tabs = list(all_tableaux(shape))
    if not complete:
        return poly_rank([specht_poly(t) for t in tabs])
    if filling is None:
        filling = canonical_filling(shape)
    polys = []
    seen = set()
    for t in tabs:
        for order in itertools.permutations(t.columns):
            if tuple(len(c) for c in order) != tuple(len(c) for c in t.columns):
                continue
            if order in seen:
                continue
            seen.add(order)
            polys.append(specht_poly(filling.complete(Tableau(order))))
    return poly_rank(polys)


def completed_family_rank(shape: Partition, kind: str, filling: Optional[Filling] = None) -> int:
    """Rank of the literal Specht polynomials of the completed SYT or NCT family."""
    family = enumerate_nct(shape, filling) if kind == "nct" else enumerate_syt(shape, filling)
    return poly_rank([specht_poly(t) for t in family])


def free_family(shape: Partition, kind: str) -> List[Tableau]:
    if kind == "nct":
        return enumerate_nct(shape, complete=False)
    if kind == "syt":
        return enumerate_syt(shape, complete=False)
    raise ValueError(f"unknown family {kind!r}")


def is_standard(t: Tableau) -> bool:
    return is_syt(t.canonical())
