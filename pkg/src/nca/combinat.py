"""Shapes, fillings, readings and the standard / non-crossing tableau families.

A tableau is stored column-major: a tuple of columns, each a strictly
increasing tuple of integers. Absolute tableaux have pairwise disjoint columns
covering ``{1..N}``; semistandard ("value") tableaux may repeat values across
columns.

Two ways of handling the rectangle completion coexist:

* *completed* tableaux live on ``{1..N}``, ``N = |mu|``, and agree with a fixed
  filling ``F`` of ``mu/lambda`` (their reading ends with the labels of ``F``);
* *free* tableaux have shape ``lambda`` on ``{1..n}`` and use the pairwise
  column rules for columns of unequal length.

Restricting a completed tableau to ``{1..n}`` gives the free one.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ClassificationError,
    InvalidReadingError,
    MalformedPartError,
    ShapeError,
    WeightMismatchError,
)

Column = Tuple[int, ...]


# -- partitions ------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise ShapeError(f"cannot parse shape {text!r}") from None
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(len(other)))

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def rectangle(self) -> "Partition":
        """Smallest rectangle containing this shape."""
        if not self.parts:
            return Partition(())
        return Partition((self.parts[0],) * len(self.parts))

    def cells(self) -> List[Tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def hook_length_count(self) -> int:
        """Number of SYT by the hook-length formula."""
        from math import factorial

        conj = self.conjugate()
        prod = 1
        for r, c in self.cells():
            prod *= (self.parts[r] - c - 1) + (conj[c] - r - 1) + 1
        return factorial(self.size) // prod


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def compositions(n: int, k: Optional[int] = None, allow_zero: bool = False) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``n``; with ``k`` given, exactly ``k`` parts."""
    lo = 0 if allow_zero else 1
    if k is None:
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for tail in compositions(n - first):
                yield (first,) + tail
        return
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(lo, n + 1):
        for tail in compositions(n - first, k - 1, allow_zero):
            yield (first,) + tail


# -- fillings of mu / lambda ----------------------------------------------


@dataclass(frozen=True)
class Filling:
    """A standard filling of the skew shape ``rect / shape`` by ``n+1..|rect|``."""

    shape: Partition
    rect: Partition
    entries: Tuple[Tuple[Tuple[int, int], int], ...]

    def __post_init__(self):
        if not self.rect.is_rectangle():
            raise ShapeError(f"enclosing shape {self.rect.parts} is not a rectangle")
        if not self.rect.contains(self.shape):
            raise ShapeError(f"{self.shape.parts} is not contained in {self.rect.parts}")
        skew = {(r, c) for r, c in self.rect.cells() if c >= self.shape[r]}
        cells = dict(self.entries)
        if set(cells) != skew or len(cells) != len(self.entries):
            raise ShapeError("filling does not cover the skew cells exactly once")
        n, total = self.shape.size, self.rect.size
        if sorted(cells.values()) != list(range(n + 1, total + 1)):
            raise ShapeError(f"filling entries must be exactly {n + 1}..{total}")
        for (r, c), v in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] <= v:
                raise ShapeError("filling does not increase along rows")
            if (r + 1, c) in cells and cells[(r + 1, c)] <= v:
                raise ShapeError("filling does not increase along columns")

    @property
    def n(self) -> int:
        return self.shape.size

    @property
    def total(self) -> int:
        return self.rect.size

    @property
    def rows(self) -> int:
        return len(self.rect)

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.entries)

    def labels(self) -> Tuple[int, ...]:
        """Row labels (1-based) of ``n+1..N`` in order: the fixed tail of every reading."""
        by_value = {v: r + 1 for (r, _), v in self.entries}
        return tuple(by_value[v] for v in range(self.n + 1, self.total + 1))

    def columns(self) -> List[Column]:
        width = self.rect[0] if len(self.rect) else 0
        cells = self.as_dict()
        return [
            tuple(cells[(r, c)] for r in range(self.rows) if (r, c) in cells) for c in range(width)
        ]

    def complete(self, tableau: "Tableau") -> "Tableau":
        """Append ``F`` below the columns of a shape-``lambda`` tableau."""
        fcols = self.columns()
        cols = list(tableau.columns) + [()] * (len(fcols) - len(tableau.columns))
        if len(cols) != len(fcols):
            raise ShapeError("tableau has more columns than the enclosing rectangle")
        return Tableau(tuple(tuple(a) + tuple(b) for a, b in zip(cols, fcols)))


def canonical_filling(shape: Partition, rect: Optional[Partition] = None, order: str = "column") -> Filling:
    """Standard filling of ``rect/shape`` by ``n+1..|rect|``.

    ``order="column"`` (the default) fills column by column, top to bottom;
    every column of ``F`` is then a run of consecutive values, so ``F`` is
    itself non-crossing. ``order="row"`` fills row by row, left to right.
    """
    if rect is None:
        rect = shape.rectangle()
    if not rect.is_rectangle():
        raise ShapeError(f"enclosing shape {rect.parts} is not a rectangle")
    if not rect.contains(shape):
        raise ShapeError(f"{shape.parts} is not contained in {rect.parts}")
    if order == "row":
        cells = rect.cells()
    elif order == "column":
        width = rect[0] if len(rect) else 0
        cells = [(r, c) for c in range(width) for r in range(len(rect))]
    else:
        raise ValueError(f"unknown order {order!r}")
    value = shape.size
    entries = []
    for r, c in cells:
        if c >= shape[r]:
            value += 1
            entries.append(((r, c), value))
    return Filling(shape, rect, tuple(entries))


def is_noncrossing_filling(filling: Filling) -> bool:
    """Whether NCT can agree with ``F``: bracket matching on ``F``'s labels keeps its columns.

    Matching inside the tail of a reading does not depend on the prefix (all
    brackets left open by a Yamanouchi prefix precede the tail), so a single
    reading decides it.
    """
    prefix = next(yamanouchi_words(filling.shape))
    t = reading_to_nct(Reading(prefix + filling.labels()))
    return agrees_with(t, filling)


# -- tableaux --------------------------------------------------------------


def _check_part(part: Sequence[int]) -> Column:
    part = tuple(int(x) for x in part)
    if any(part[i] >= part[i + 1] for i in range(len(part) - 1)):
        raise MalformedPartError(f"part {part} is not strictly increasing")
    return part


def column_order_key(col: Column):
    """Longer columns first; equal lengths ordered by the last differing entry."""
    return (-len(col), tuple(reversed(col)))


@dataclass(frozen=True)
class Tableau:
    columns: Tuple[Column, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(_check_part(c) for c in self.columns if len(c)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        width = len(rows[0]) if rows else 0
        return cls(tuple(tuple(row[c] for row in rows if c < len(row)) for c in range(width)))

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def entries(self) -> List[int]:
        return [x for c in self.columns for x in c]

    def content(self) -> Counter:
        return Counter(self.entries())

    def column_lengths(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    def has_partition_shape(self) -> bool:
        lengths = self.column_lengths()
        return all(lengths[i] >= lengths[i + 1] for i in range(len(lengths) - 1))

    @property
    def shape(self) -> Partition:
        """Row lengths, read off the column lengths (sorted)."""
        lengths = sorted(self.column_lengths(), reverse=True)
        return Partition(tuple(lengths)).conjugate() if lengths else Partition(())

    def is_absolute(self) -> bool:
        e = self.entries()
        return sorted(e) == list(range(1, len(e) + 1))

    def canonical(self) -> "Tableau":
        return Tableau(tuple(sorted(self.columns, key=column_order_key)))

    def key(self) -> Tuple[Column, ...]:
        """Order-free identity of the underlying set partition."""
        return tuple(sorted(self.columns, key=column_order_key))

    def restrict(self, n: int) -> "Tableau":
        return Tableau(tuple(tuple(x for x in c if x <= n) for c in self.columns)).canonical()

    def rows(self) -> List[List[int]]:
        depth = max(self.column_lengths(), default=0)
        return [[c[r] for c in self.columns if len(c) > r] for r in range(depth)]

    def render(self) -> str:
        rows = self.rows()
        width = max((len(str(x)) for x in self.entries()), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows)

    def __str__(self) -> str:
        return "{" + ",".join("(" + ",".join(map(str, c)) + ")" for c in self.columns) + "}"


# -- pairwise column predicates ------------------------------------------


def segments_cross(x: int, y: int, z: int, t: int) -> bool:
    return x < z < y < t or z < x < t < y


def segments_nest(x: int, y: int, z: int, t: int) -> bool:
    return x < z < t < y or z < x < y < t


def _pair_args(a, b):
    a, b = _check_part(a), _check_part(b)
    if len(a) < len(b):
        raise MalformedPartError(f"left part {a} is shorter than right part {b}")
    return a, b


def _last_difference_ok(a: Column, b: Column) -> bool:
    for s in range(len(a) - 1, -1, -1):
        if a[s] != b[s]:
            return a[s] < b[s]
    return True


def is_noncrossing_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    """Non-crossing rule for a left column ``a`` and right column ``b``, ``|a| >= |b|``."""
    a, b = _pair_args(a, b)
    q = len(b)
    for i in range(q - 1):
        if segments_cross(a[i], a[i + 1], b[i], b[i + 1]):
            return False
    if len(a) > q:
        if q and a[q - 1] < b[q - 1] < a[q]:
            return False
    elif not _last_difference_ok(a, b):
        return False
    return True


def is_nonnesting_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    """Non-nesting rule for a left column ``a`` and right column ``b``, ``|a| >= |b|``."""
    a, b = _pair_args(a, b)
    q = len(b)
    for i in range(q - 1):
        if segments_nest(a[i], a[i + 1], b[i], b[i + 1]):
            return False
    if len(a) > q:
        if q and not a[q - 1] < b[q - 1]:
            return False
    elif not _last_difference_ok(a, b):
        return False
    return True


def _pairwise(t: Tableau, pred) -> bool:
    if not t.has_partition_shape():
        return False
    cols = t.columns
    return all(pred(cols[i], cols[j]) for i in range(len(cols)) for j in range(i + 1, len(cols)))


def is_noncrossing_tableau(t: Tableau) -> bool:
    """NCT test on the given column order (condition on equal columns included)."""
    return _pairwise(t, is_noncrossing_pair)


def is_nonnesting_tableau(t: Tableau) -> bool:
    return _pairwise(t, is_nonnesting_pair)


def is_syt(t: Tableau) -> bool:
    """Rows and columns strictly increasing, partition shape, entries ``1..N``."""
    if not t.is_absolute() or not t.has_partition_shape():
        return False
    return all(
        t.columns[j][r] < t.columns[j + 1][r]
        for j in range(len(t.columns) - 1)
        for r in range(len(t.columns[j + 1]))
    )


def is_ssyt(t: Tableau) -> bool:
    """Columns strict (by construction), rows weakly increasing, partition shape."""
    if not t.has_partition_shape():
        return False
    return all(
        t.columns[j][r] <= t.columns[j + 1][r]
        for j in range(len(t.columns) - 1)
        for r in range(len(t.columns[j + 1]))
    )


def is_nct(t: Tableau) -> bool:
    """Set-partition level NCT test: some column order makes the tableau non-crossing."""
    return is_noncrossing_tableau(t.canonical())


# -- readings --------------------------------------------------------------


@dataclass(frozen=True)
class Reading:
    labels: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if any(x < 1 for x in labels):
            raise InvalidReadingError(f"labels must be positive: {labels}")

    def __len__(self) -> int:
        return len(self.labels)

    def is_yamanouchi(self) -> bool:
        return is_yamanouchi(self.labels)

    def content(self) -> Partition:
        counts = Counter(self.labels)
        top = max(self.labels, default=0)
        parts = tuple(counts.get(k, 0) for k in range(1, top + 1))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or 0 in parts:
            raise InvalidReadingError(f"label counts {parts} do not form a partition")
        return Partition(parts)


def is_yamanouchi(labels: Sequence[int]) -> bool:
    counts = Counter()
    for x in labels:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def reading_of(t: Tableau) -> Reading:
    """Label each point by its position within its part."""
    if not t.is_absolute():
        raise MalformedPartError("reading requires columns partitioning 1..N")
    labels = [0] * t.size
    for col in t.columns:
        for pos, x in enumerate(col, start=1):
            labels[x - 1] = pos
    return Reading(tuple(labels))


def _positions(r: Reading) -> Dict[int, List[int]]:
    if not r.is_yamanouchi():
        raise InvalidReadingError(f"reading {r.labels} is not Yamanouchi")
    pos: Dict[int, List[int]] = {}
    for i, x in enumerate(r.labels, start=1):
        pos.setdefault(x, []).append(i)
    return pos


def _chains(successor: Dict[int, int], starts: List[int]) -> Tableau:
    cols = []
    for s in starts:
        col = [s]
        while col[-1] in successor:
            col.append(successor[col[-1]])
        cols.append(tuple(col))
    return Tableau(tuple(cols)).canonical()


def reading_to_syt(r: Reading) -> Tableau:
    """The unique non-nesting tableau with reading ``r``: first with first, second with second..."""
    pos = _positions(r)
    succ = {}
    for k in range(1, len(pos)):
        for a, b in zip(pos[k], pos[k + 1]):
            succ[a] = b
    return _chains(succ, pos.get(1, []))


def reading_to_nct(r: Reading) -> Tableau:
    """The unique non-crossing tableau with reading ``r``, by bracket matching."""
    pos = _positions(r)
    succ = {}
    for k in range(1, len(pos)):
        stack: List[int] = []
        for i, x in enumerate(r.labels, start=1):
            if x == k:
                stack.append(i)
            elif x == k + 1:
                succ[stack.pop()] = i
    return _chains(succ, pos.get(1, []))


def syt_to_nct(t: Tableau) -> Tableau:
    t = t.canonical()
    if not is_syt(t):
        raise ClassificationError(f"{t} is not a standard Young tableau")
    return reading_to_nct(reading_of(t))


def nct_to_syt(t: Tableau) -> Tableau:
    t = t.canonical()
    if not t.is_absolute() or not is_noncrossing_tableau(t):
        raise ClassificationError(f"{t} is not a non-crossing tableau")
    return reading_to_syt(reading_of(t))


# -- enumeration -----------------------------------------------------------


def yamanouchi_words(content: Partition) -> Iterator[Tuple[int, ...]]:
    """Yamanouchi words with ``content[k-1]`` copies of ``k``, lexicographically."""
    target = content.parts
    p = len(target)
    n = content.size
    counts = [0] * (p + 1)
    word: List[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for k in range(1, p + 1):
            if counts[k] < target[k - 1] and (k == 1 or counts[k] < counts[k - 1]):
                counts[k] += 1
                word.append(k)
                yield from rec()
                word.pop()
                counts[k] -= 1

    yield from rec()


def _resolve_filling(shape: Partition, filling: Optional[Filling]) -> Filling:
    if filling is None:
        return canonical_filling(shape)
    if filling.shape != shape:
        raise ShapeError(f"filling is for {filling.shape.parts}, not {shape.parts}")
    return filling


def readings_agreeing(shape: Partition, filling: Optional[Filling] = None) -> Iterator[Reading]:
    """Readings over ``1..N`` whose tail is fixed by ``F``, in lexicographic order."""
    tail = _resolve_filling(shape, filling).labels()
    for w in yamanouchi_words(shape):
        yield Reading(w + tail)


def enumerate_syt(shape: Partition, filling: Optional[Filling] = None, complete: bool = True) -> List[Tableau]:
    """The set of SYT completed by ``F`` (or, with ``complete=False``, SYT of shape lambda)."""
    if not complete:
        return [reading_to_syt(Reading(w)) for w in yamanouchi_words(shape)]
    return [reading_to_syt(r) for r in readings_agreeing(shape, filling)]


def enumerate_nct(shape: Partition, filling: Optional[Filling] = None, complete: bool = True) -> List[Tableau]:
    """The set of NCT agreeing with ``F`` (or, with ``complete=False``, free NCT of shape lambda).

    Only a non-crossing ``F`` admits a full family; for a crossing ``F`` the
    NCT of the candidate readings that split ``F``'s columns are dropped.
    """
    if not complete:
        return [reading_to_nct(Reading(w)) for w in yamanouchi_words(shape)]
    filling = _resolve_filling(shape, filling)
    out = []
    for r in readings_agreeing(shape, filling):
        t = reading_to_nct(r)
        if agrees_with(t, filling):
            out.append(t)
    return out


def agrees_with(t: Tableau, filling: Filling) -> bool:
    """True if ``t`` lives on ``1..N`` and every column of ``F`` sits at the foot of one part."""
    if t.size != filling.total or not t.is_absolute():
        return False
    n = filling.n
    tails = sorted(tuple(x for x in c if x > n) for c in t.columns)
    tails = [c for c in tails if c]
    return tails == sorted(c for c in filling.columns() if c)


def all_tableaux(shape: Partition, ground: Optional[Sequence[int]] = None) -> Iterator[Tableau]:
    """Every set partition of the ground set into columns of the shape's column lengths.

    Columns of equal length are unordered, so each set partition appears once.
    Brute force; meant for small oracles.
    """
    lengths = list(shape.conjugate().parts)
    if ground is None:
        ground = range(1, shape.size + 1)
    ground = tuple(ground)

    def rec(remaining: Tuple[int, ...], idx: int, prev_min: int):
        if idx == len(lengths):
            yield ()
            return
        k = lengths[idx]
        same_as_prev = idx > 0 and lengths[idx - 1] == k
        for combo in itertools.combinations(remaining, k):
            # break symmetry among equal-length columns by their smallest entry
            if same_as_prev and combo[0] < prev_min:
                continue
            rest = tuple(x for x in remaining if x not in combo)
            for tail in rec(rest, idx + 1, combo[0]):
                yield (combo,) + tail

    for cols in rec(ground, 0, 0):
        yield Tableau(cols).canonical()


# -- semistandard families -------------------------------------------------


def _segments(weight: Sequence[int]) -> List[int]:
    """value_of[i] for i = 1..n: the index of the weight segment containing i."""
    value_of = [0]
    for v, w in enumerate(weight, start=1):
        value_of.extend([v] * w)
    return value_of


def _project(t: Tableau, value_of: List[int]) -> Optional[Tuple[Column, ...]]:
    """Replace entries by segment indices, keeping the column order of ``t``.

    ``None`` when some column meets a segment twice.
    """
    cols = []
    for col in t.columns:
        vals = tuple(value_of[x] for x in col)
        if len(set(vals)) != len(vals):
            return None
        cols.append(vals)
    return tuple(cols)


def _check_weight(shape: Partition, weight: Sequence[int]) -> Tuple[int, ...]:
    weight = tuple(int(w) for w in weight)
    if any(w < 0 for w in weight):
        raise WeightMismatchError(f"weight has negative parts: {weight}")
    if sum(weight) != shape.size:
        raise WeightMismatchError(f"weight {weight} has size {sum(weight)}, shape has size {shape.size}")
    return weight


@lru_cache(maxsize=None)
def _snct_classes(shape: Partition, weight: Tuple[int, ...]) -> Tuple[Tuple[Column, ...], ...]:
    value_of = _segments(weight)
    seen = set()
    out = []
    for t in enumerate_nct(shape, complete=False):
        proj = _project(t, value_of)
        # every class has one inherited column order; dedupe on the unordered class
        if proj is not None and tuple(sorted(proj)) not in seen:
            seen.add(tuple(sorted(proj)))
            out.append(proj)
    return tuple(out)


def snct_classes(shape: Partition, weight: Sequence[int]) -> List[Tableau]:
    """Semi-non-crossing tableaux: images of NCT under the Young-subgroup quotient."""
    weight = _check_weight(shape, weight)
    return [Tableau(c) for c in _snct_classes(shape, weight)]


def ssyt_classes(shape: Partition, weight: Sequence[int]) -> List[Tableau]:
    """SSYT obtained as Young-subgroup classes of SYT (same quotient as for SNCT)."""
    weight = _check_weight(shape, weight)
    value_of = _segments(weight)
    seen = set()
    out = []
    for t in enumerate_syt(shape, complete=False):
        proj = _project(t, value_of)
        if proj is not None and proj not in seen:
            seen.add(proj)
            out.append(Tableau(proj))
    return out


def enumerate_ssyt(shape: Partition, weight: Sequence[int]) -> List[Tableau]:
    """SSYT of given shape and weight, by stacking horizontal strips."""
    weight = _check_weight(shape, weight)
    target = shape.parts
    out = []

    def strips(nu: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
        # shapes kappa with kappa/nu a horizontal strip of the given size, kappa inside target
        rows = len(target)
        nu = nu + (0,) * (rows - len(nu))

        def rec(r, left, acc):
            if r == rows:
                if left == 0:
                    yield tuple(acc)
                return
            upper = target[r] if r == 0 else min(target[r], nu[r - 1])
            for add in range(0, min(left, upper - nu[r]) + 1):
                acc.append(nu[r] + add)
                yield from rec(r + 1, left - add, acc)
                acc.pop()

        yield from rec(0, size, [])

    def rec(v: int, nu: Tuple[int, ...], cells: Dict[Tuple[int, int], int]):
        if v == len(weight):
            if tuple(p for p in nu if p) == target:
                rows = [[cells[(r, c)] for c in range(target[r])] for r in range(len(target))]
                out.append(Tableau.from_rows(rows))
            return
        for kappa in strips(nu, weight[v]):
            new = dict(cells)
            padded = nu + (0,) * (len(kappa) - len(nu))
            for r in range(len(kappa)):
                for c in range(padded[r], kappa[r]):
                    new[(r, c)] = v + 1
            rec(v + 1, kappa, new)

    rec(0, (0,) * len(target), {})
    return out


def count_ssyt(shape: Partition, weight: Sequence[int]) -> int:
    return len(enumerate_ssyt(shape, weight))


def count_snct(shape: Partition, weight: Sequence[int], method: str = "words") -> int:
    """Number of SNCT of the given shape and weight.

    ``method="words"`` counts the Yamanouchi words that are weakly decreasing on
    every weight segment (the lexicographically largest representative of each
    class); ``method="classes"`` counts the quotient classes of actual NCT.
    """
    weight = _check_weight(shape, weight)
    if method == "classes":
        return len(_snct_classes(shape, weight))
    if method != "words":
        raise ValueError(f"unknown method {method!r}")
    bounds = []
    start = 0
    for w in weight:
        bounds.append((start, start + w))
        start += w
    count = 0
    for word in yamanouchi_words(shape):
        if all(
            all(word[i] >= word[i + 1] for i in range(lo, hi - 1)) for lo, hi in bounds
        ):
            count += 1
    return count


def is_noncrossing_semistandard(t: Tableau) -> bool:
    """Whether a value tableau, in its given column order, is a semi-non-crossing tableau.

    The column order has to be the one inherited from the NCT it comes from.
    """
    if not t.columns:
        return True
    top = max(t.entries())
    counts = t.content()
    weight = tuple(counts.get(v, 0) for v in range(1, top + 1))
    shape = t.shape
    return t.columns in set(_snct_classes(shape, weight))
