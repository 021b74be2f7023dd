"""Bideterminants of a generic matrix and their non-crossing basis.

A bitableau pairs column ``k`` of ``T`` (row indices) with column ``k`` of
``T'`` (column indices); its bideterminant is the product of those minors.
Semistandard tableaux are kept in their natural column order (left to right);
semi-non-crossing ones keep the column order of the NCT they are projected
from. That order does not depend on the chosen NCT, so the pairing of columns
is well defined in both families.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combinat import (
    Partition,
    Tableau,
    compositions,
    count_snct,
    count_ssyt,
    enumerate_ssyt,
    is_noncrossing_semistandard,
    is_ssyt,
    partitions,
    snct_classes,
)
from .errors import DimensionError, InconsistentSystemError, OutOfRangeError, ShapeError
from .exactmath import Poly, express, linear_combination, poly_rank, rational_str, to_rational

Content = Dict[int, int]


@dataclass(frozen=True)
class GenericMatrix:
    """The ``rows x cols`` matrix of independent symbols; ``x_ij`` is variable ``(i-1)*cols + j``."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix dimensions must be positive")

    def var(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise OutOfRangeError(f"entry ({i},{j}) outside a {self.rows}x{self.cols} matrix")
        return (i - 1) * self.cols + j

    def position(self, v: int) -> Tuple[int, int]:
        return (v - 1) // self.cols + 1, (v - 1) % self.cols + 1

    def name(self, v: int) -> str:
        i, j = self.position(v)
        return f"x{i}{j}" if self.rows < 10 and self.cols < 10 else f"x{i}_{j}"

    def entry(self, i: int, j: int) -> Poly:
        return Poly.var(self.var(i, j))


def minor(x: GenericMatrix, rows: Sequence[int], cols: Sequence[int]) -> Poly:
    """Leibniz expansion of the minor on the given (sorted) rows and columns."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise DimensionError(f"minor needs |I| = |J|, got {len(rows)} and {len(cols)}")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return Poly.zero()
    result = Poly.zero()
    for perm in itertools.permutations(range(len(cols))):
        sign = 1
        for a, b in itertools.combinations(range(len(perm)), 2):
            if perm[a] > perm[b]:
                sign = -sign
        term = Poly.const(sign)
        for r, c in zip(rows, perm):
            term = term * x.entry(r, cols[c])
        result = result + term
    return result


@dataclass(frozen=True)
class Bitableau:
    """Row-index tableau ``T`` and column-index tableau ``Tprime`` with matching column lengths."""

    T: Tableau
    Tprime: Tableau

    def __post_init__(self):
        if self.T.column_lengths() != self.Tprime.column_lengths():
            raise ShapeError("T and T' must have the same column lengths, in order")
        if not self.T.has_partition_shape():
            raise ShapeError("bitableau columns must be ordered by weakly decreasing length")

    @classmethod
    def from_columns(cls, t, tp) -> "Bitableau":
        return cls(Tableau(tuple(tuple(c) for c in t)), Tableau(tuple(tuple(c) for c in tp)))

    @property
    def shape(self) -> Partition:
        return self.T.shape

    @property
    def content(self) -> Tuple[Content, Content]:
        return dict(self.T.content()), dict(self.Tprime.content())

    def key(self):
        return (self.T.columns, self.Tprime.columns)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "T": [list(c) for c in self.T.columns],
            "Tprime": [list(c) for c in self.Tprime.columns],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Bitableau":
        return cls.from_columns(data["T"], data["Tprime"])


def bideterminant(b: Bitableau, x: Optional[GenericMatrix] = None) -> Poly:
    if x is None:
        x = GenericMatrix(max(b.T.entries(), default=1), max(b.Tprime.entries(), default=1))
    for v in b.T.entries():
        if not 1 <= v <= x.rows:
            raise OutOfRangeError(f"row index {v} outside 1..{x.rows}")
    for v in b.Tprime.entries():
        if not 1 <= v <= x.cols:
            raise OutOfRangeError(f"column index {v} outside 1..{x.cols}")
    result = Poly.one()
    for rows, cols in zip(b.T.columns, b.Tprime.columns):
        result = result * minor(x, rows, cols)
    return result


def is_standard_bitableau(b: Bitableau) -> bool:
    return is_ssyt(b.T) and is_ssyt(b.Tprime)


def is_noncrossing_bitableau(b: Bitableau) -> bool:
    return is_noncrossing_semistandard(b.T) and is_noncrossing_semistandard(b.Tprime)


# -- contents and enumeration ---------------------------------------------


def as_content(values) -> Content:
    """Multiset given as a list of values or a value -> multiplicity map."""
    if isinstance(values, Mapping):
        return {int(k): int(v) for k, v in values.items() if int(v)}
    return dict(Counter(int(v) for v in values))


def weight_of(content: Content, top: Optional[int] = None) -> Tuple[int, ...]:
    if any(v < 1 for v in content):
        raise OutOfRangeError("content values must be positive")
    top = max(content, default=0) if top is None else top
    return tuple(content.get(v, 0) for v in range(1, top + 1))


def _family(shape: Partition, weight: Tuple[int, ...], kind: str) -> List[Tableau]:
    if kind == "standard":
        return enumerate_ssyt(shape, weight)
    if kind == "noncrossing":
        return snct_classes(shape, weight)
    raise ValueError(f"unknown bitableau family {kind!r}")


def enumerate_bitableaux(alpha, beta, shape: Partition, kind: str) -> List[Bitableau]:
    alpha, beta = as_content(alpha), as_content(beta)
    if sum(alpha.values()) != shape.size or sum(beta.values()) != shape.size:
        return []
    left = _family(shape, weight_of(alpha), kind)
    right = _family(shape, weight_of(beta), kind)
    return [Bitableau(t, tp) for t in left for tp in right]


def count_bitableaux(alpha, beta, shape: Partition, kind: str) -> int:
    """Count by the product formula (both sides are independent choices)."""
    alpha, beta = as_content(alpha), as_content(beta)
    if sum(alpha.values()) != shape.size or sum(beta.values()) != shape.size:
        return 0
    wa, wb = weight_of(alpha), weight_of(beta)
    if kind == "standard":
        return count_ssyt(shape, wa) * count_ssyt(shape, wb)
    if kind == "noncrossing":
        return count_snct(shape, wa) * count_snct(shape, wb)
    raise ValueError(f"unknown bitableau family {kind!r}")


def content_dimension(alpha, beta) -> int:
    """``dim V(alpha, beta)``: nonnegative integer matrices with row sums alpha and column sums beta."""
    wa, wb = weight_of(as_content(alpha)), weight_of(as_content(beta))
    if sum(wa) != sum(wb):
        return 0

    def rec(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(wa):
            return 1 if not any(remaining) else 0
        total = 0
        for row in _bounded_compositions(wa[i], remaining):
            total += rec(i + 1, tuple(r - x for r, x in zip(remaining, row)))
        return total

    return rec(0, wb)


def _bounded_compositions(total: int, caps: Sequence[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _bounded_compositions(total - first, caps[1:]):
            yield (first,) + rest


def content_family(alpha, beta, kind: str) -> List[Bitableau]:
    """All bitableaux of the family with the given content, over every shape."""
    alpha = as_content(alpha)
    size = sum(alpha.values())
    out: List[Bitableau] = []
    for shape in partitions(size):
        out.extend(enumerate_bitableaux(alpha, beta, shape, kind))
    return out


# -- decomposition -----------------------------------------------------------


@dataclass
class BideterminantElement:
    terms: Dict[Bitableau, object] = field(default_factory=dict)

    def realize(self, x: Optional[GenericMatrix] = None) -> Poly:
        return linear_combination((c, bideterminant(b, x)) for b, c in self.terms.items())

    def items(self) -> List[Tuple[Bitableau, object]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].shape.parts, kv[0].key()))

    def to_json(self) -> list:
        return [{"coeff": rational_str(c), "bitableau": b.to_json()} for b, c in self.items()]


def matrix_for(alpha: Content, beta: Content) -> GenericMatrix:
    return GenericMatrix(max(alpha, default=1), max(beta, default=1))


def decompose_bideterminant(b: Bitableau) -> BideterminantElement:
    """Unique coefficients over the non-crossing bitableaux of the same content (exact solve)."""
    alpha, beta = b.content
    x = matrix_for(alpha, beta)
    if is_noncrossing_bitableau(b):
        return BideterminantElement({b: 1})
    basis = content_family(alpha, beta, "noncrossing")
    polys = [bideterminant(c, x) for c in basis]
    target = bideterminant(b, x)
    coeffs = express(polys, target)
    if coeffs is None:
        raise InconsistentSystemError("bideterminant outside the span of non-crossing bitableaux")
    if linear_combination(zip(coeffs, polys)) != target:
        raise InconsistentSystemError("decomposition does not reproduce the bideterminant")
    return BideterminantElement({c: k for c, k in zip(basis, coeffs) if k != 0})


def family_rank(alpha, beta, kind: str) -> int:
    alpha, beta = as_content(alpha), as_content(beta)
    x = matrix_for(alpha, beta)
    return poly_rank([bideterminant(c, x) for c in content_family(alpha, beta, kind)])


# -- cloning ------------------------------------------------------------------


@dataclass(frozen=True)
class Clone:
    """A cloned matrix: clone row ``k`` copies original row ``row_origin[k-1]`` (same for columns)."""

    original: GenericMatrix
    matrix: GenericMatrix
    row_origin: Tuple[int, ...]
    col_origin: Tuple[int, ...]

    def specialize(self, p: Poly) -> Poly:
        """Identify cloned symbols with the symbols they copy."""
        mapping = {}
        for v in p.variables():
            i, j = self.matrix.position(v)
            mapping[v] = self.original.var(self.row_origin[i - 1], self.col_origin[j - 1])
        return p.rename(mapping)

    def specialize_bitableau(self, b: Bitableau) -> Optional[Bitableau]:
        """Map a clone bitableau back; ``None`` if a minor would repeat a row or column."""
        t = tuple(tuple(self.row_origin[v - 1] for v in c) for c in b.T.columns)
        tp = tuple(tuple(self.col_origin[v - 1] for v in c) for c in b.Tprime.columns)
        if any(len(set(c)) != len(c) for c in t + tp):
            return None
        # cloned copies of one row keep their relative order, so columns stay sorted
        return Bitableau(Tableau(t), Tableau(tp))


def clone(x: GenericMatrix, alpha, beta) -> Clone:
    """Repeat row ``i`` ``alpha[i]`` times and column ``j`` ``beta[j]`` times (at least once each)."""
    alpha, beta = as_content(alpha), as_content(beta)
    rows = tuple(i for i in range(1, x.rows + 1) for _ in range(max(alpha.get(i, 0), 1)))
    cols = tuple(j for j in range(1, x.cols + 1) for _ in range(max(beta.get(j, 0), 1)))
    return Clone(x, GenericMatrix(len(rows), len(cols)), rows, cols)


def _spread(t: Tableau, origin: Tuple[int, ...]) -> Tableau:
    # occurrences of each value are sent to its copies left to right
    firsts: Dict[int, int] = {}
    for k, v in enumerate(origin, start=1):
        firsts.setdefault(v, k)
    used: Dict[int, int] = {}
    cols = []
    for col in t.columns:
        new = []
        for v in col:
            new.append(firsts[v] + used.get(v, 0))
            used[v] = used.get(v, 0) + 1
        cols.append(tuple(new))
    return Tableau(tuple(cols))


def clone_bitableau(b: Bitableau, c: Clone) -> Bitableau:
    """The multiplicity-free bitableau on the clone that specializes to ``b``."""
    return Bitableau(_spread(b.T, c.row_origin), _spread(b.Tprime, c.col_origin))


def decompose_via_clone(b: Bitableau) -> BideterminantElement:
    """Decompose on the clone, drop terms with a repeated row or column, specialize back."""
    alpha, beta = b.content
    x = matrix_for(alpha, beta)
    c = clone(x, alpha, beta)
    lifted = clone_bitableau(b, c)
    if c.specialize(bideterminant(lifted, c.matrix)) != bideterminant(b, x):
        raise InconsistentSystemError("clone does not specialize back to the bideterminant")
    expanded = decompose_bideterminant(lifted)
    out: Dict[Bitableau, object] = {}
    for term, k in expanded.terms.items():
        down = c.specialize_bitableau(term)
        if down is None:
            continue
        out[down] = out.get(down, 0) + k
    return BideterminantElement({t: k for t, k in out.items() if k != 0})


# -- GL_n modules -------------------------------------------------------------


def row_tableau(shape: Partition) -> Tableau:
    """``T_lambda``: row ``i`` filled with ``i``."""
    return Tableau(tuple(tuple(range(1, h + 1)) for h in shape.conjugate().parts))


@dataclass(frozen=True)
class GLReport:
    shape: Partition
    n: int
    r: int
    expected: int
    rank_standard: int
    rank_noncrossing: int
    count_noncrossing: int

    @property
    def ok(self) -> bool:
        return self.rank_standard == self.rank_noncrossing == self.count_noncrossing == self.expected

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "n": self.n,
            "r": self.r,
            "expected": self.expected,
            "rank_standard": self.rank_standard,
            "rank_noncrossing": self.rank_noncrossing,
            "count_noncrossing": self.count_noncrossing,
            "ok": self.ok,
        }


def gl_family(shape: Partition, r: int, kind: str) -> List[Tableau]:
    out: List[Tableau] = []
    for weight in compositions(shape.size, r, allow_zero=True):
        out.extend(_family(shape, tuple(weight), kind))
    return out


def gl_module_basis(shape: Partition, n: int, r: int) -> GLReport:
    """Ranks of ``{M_T}`` for semistandard and semi-non-crossing ``T`` with entries ``<= r``."""
    if len(shape) > n:
        raise ShapeError(f"{shape} has more than {n} rows")
    x = GenericMatrix(n, r)
    top = row_tableau(shape)
    ranks = {}
    counts = {}
    for kind in ("standard", "noncrossing"):
        family = gl_family(shape, r, kind)
        counts[kind] = len(family)
        ranks[kind] = _graded_rank((bideterminant(Bitableau(top, t), x) for t in family), x)
    return GLReport(shape, n, r, counts["standard"], ranks["standard"], ranks["noncrossing"], counts["noncrossing"])


def _graded_rank(polys: Iterable[Poly], x: GenericMatrix) -> int:
    """Rank computed per block of equal column content (each bideterminant is homogeneous in it)."""
    blocks: Dict = {}
    for p in polys:
        if p.is_zero():
            continue
        mono = next(iter(p.terms))
        key = tuple(sorted(x.position(v)[1] for v, e in mono for _ in range(e)))
        blocks.setdefault(key, []).append(p)
    return sum(poly_rank(b) for b in blocks.values())
