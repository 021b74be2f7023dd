"""Exact arithmetic: rationals, sparse multivariate polynomials, fraction-free linear algebra.

Rationals are :class:`fractions.Fraction`; integral values are kept as ``int``
for speed (``Fraction(2) == 2`` and both hash alike, so mixing is harmless).

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
exponents positive. Variables are positive integers; modules that work with
matrix entries encode ``x_{ij}`` as an integer (see ``bidet.GenericMatrix``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DegenerateFactorError, DimensionError, MissingAssignmentError

Monomial = Tuple[Tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


def to_rational(value) -> Rational:
    """Normalize an int / Fraction / "p/q" string to int when integral, else Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value)
    elif isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    else:
        value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def rational_str(value) -> str:
    return str(Fraction(value))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial):
    # graded lex on variable index: higher degree first, then lex on the dense exponent vector
    return (-_mono_degree(m), tuple((-v, -e) for v, e in m))


class Poly:
    """Sparse polynomial with exact rational coefficients. Treat as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Rational] = {}
        if terms:
            for mono, c in terms.items():
                c = to_rational(c)
                if c != 0:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Rational]) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        if i < 1:
            raise ValueError(f"variable index must be positive, got {i}")
        return cls._raw({((i, 1),): 1})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({ONE_MONOMIAL: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=-1)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = to_rational(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = to_rational(c)
        if c == 0:
            return Poly.zero()
        out = {}
        for m, v in self.terms.items():
            s = v * c
            out[m] = to_rational(s) if isinstance(s, Fraction) else s
        return Poly._raw(out)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        out: Dict[Monomial, Rational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        for m, c in out.items():
            if isinstance(c, Fraction):
                out[m] = to_rational(c)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> List[Tuple[Monomial, Rational]]:
        """Terms in graded lexicographic order on variable index."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def evaluate(self, assignment: Mapping[int, object], partial: bool = False):
        """Substitute values for variables.

        With ``partial=False`` every variable must be assigned and a rational is
        returned; otherwise the unassigned variables survive and a Poly is returned.
        """
        values = {k: to_rational(v) for k, v in assignment.items()}
        if not partial:
            missing = self.variables() - values.keys()
            if missing:
                raise MissingAssignmentError(f"no value for variables {sorted(missing)}")
            total = 0
            for m, c in self.terms.items():
                t = c
                for v, e in m:
                    t *= values[v] ** e
                total += t
            return to_rational(total)
        out: Dict[Monomial, Rational] = {}
        for m, c in self.terms.items():
            t = c
            rest = []
            for v, e in m:
                if v in values:
                    t *= values[v] ** e
                else:
                    rest.append((v, e))
            if t:
                key = tuple(rest)
                out[key] = out.get(key, 0) + t
        return Poly(out)

    def rename(self, mapping: Mapping[int, int]) -> "Poly":
        """Substitute variables by variables (not necessarily injectively)."""
        out: Dict[Monomial, Rational] = {}
        for m, c in self.terms.items():
            acc: Dict[int, int] = {}
            for v, e in m:
                w = mapping.get(v, v)
                acc[w] = acc.get(w, 0) + e
            key = tuple(sorted(acc.items()))
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Poly(out)

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    def to_str(self, name=lambda v: f"x{v}") -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": rational_str(c), "exps": {str(v): e for v, e in m}}
                for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        terms: Dict[Monomial, Rational] = {}
        for t in data["terms"]:
            mono = tuple(sorted((int(v), int(e)) for v, e in t["exps"].items() if int(e)))
            terms[mono] = terms.get(mono, 0) + to_rational(t["coeff"])
        return cls(terms)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, assignment: Mapping[int, object], partial: bool = False):
    return p.evaluate(assignment, partial=partial)


def difference_product(pairs: Iterable[Tuple[int, int]]) -> Poly:
    """Expanded product of ``(x_i - x_j)`` over the given pairs."""
    terms: Dict[Monomial, int] = {ONE_MONOMIAL: 1}
    for i, j in pairs:
        if i == j:
            raise DegenerateFactorError(f"factor x{i} - x{j} is identically zero")
        xi = ((i, 1),)
        xj = ((j, 1),)
        out: Dict[Monomial, int] = {}
        for m, c in terms.items():
            a = _mono_mul(m, xi)
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                del out[a]
            b = _mono_mul(m, xj)
            s = out.get(b, 0) - c
            if s:
                out[b] = s
            else:
                del out[b]
        terms = out
    return Poly._raw(terms)


def linear_combination(pairs: Iterable[Tuple[object, Poly]]) -> Poly:
    """Sum of ``coeff * poly``."""
    out: Dict[Monomial, Rational] = {}
    for c, p in pairs:
        c = to_rational(c)
        if c == 0:
            continue
        for m, v in p.terms.items():
            s = out.get(m, 0) + c * v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Poly(out)


# -- linear algebra -------------------------------------------------------


def _check_rect(matrix: Sequence[Sequence]) -> Tuple[int, int]:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for r in matrix:
        if len(r) != cols:
            raise DimensionError("ragged matrix")
    return rows, cols


def _integer_rows(matrix: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in matrix:
        row = [Fraction(x) if not isinstance(x, int) else x for x in row]
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Rows with rational entries are first scaled to integers, which leaves the
    rank unchanged.
    """
    rows, cols = _check_rect(matrix)
    if rows == 0 or cols == 0:
        return 0
    m = _integer_rows(matrix)
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[piv], m[r] = m[r], m[piv]
        p = m[r][c]
        pr = m[r]
        for i in range(r + 1, rows):
            row = m[i]
            f = row[c]
            if f == 0:
                for j in range(c + 1, cols):
                    row[j] = (p * row[j]) // prev
            else:
                for j in range(c + 1, cols):
                    row[j] = (p * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def solve_many(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> List[Optional[List[Rational]]]:
    """Solve ``matrix @ c = b`` for each right-hand side ``b`` in ``rhs``.

    Returns one entry per right-hand side: the exact solution (free variables
    set to 0) or ``None`` when that system is inconsistent.
    """
    rows, cols = _check_rect(matrix)
    for b in rhs:
        if len(b) != rows:
            raise DimensionError(f"rhs has length {len(b)}, expected {rows}")
    k = len(rhs)
    aug = [
        [Fraction(x) for x in matrix[i]] + [Fraction(b[i]) for b in rhs]
        for i in range(rows)
    ]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[piv], aug[r] = aug[r], aug[piv]
        pr = aug[r]
        inv = 1 / pr[c]
        for j in range(c, cols + k):
            pr[j] *= inv
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                row = aug[i]
                for j in range(c, cols + k):
                    if pr[j]:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    results: List[Optional[List[Rational]]] = []
    for t in range(k):
        if any(aug[i][cols + t] != 0 for i in range(r, rows)):
            results.append(None)
            continue
        sol: List[Rational] = [0] * cols
        for i, c in enumerate(pivots):
            sol[c] = to_rational(aug[i][cols + t])
        results.append(sol)
    return results


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[List[Rational]]:
    """Exact solution of ``matrix @ c = rhs`` or ``None`` if inconsistent."""
    return solve_many(matrix, [rhs])[0]


def mat_vec(matrix: Sequence[Sequence], vec: Sequence) -> List[Rational]:
    rows, cols = _check_rect(matrix)
    if len(vec) != cols:
        raise DimensionError(f"vector has length {len(vec)}, expected {cols}")
    return [to_rational(sum(Fraction(a) * b for a, b in zip(row, vec))) for row in matrix]


# -- polynomial families ---------------------------------------------------


def coefficient_matrix(polys: Sequence[Poly]) -> Tuple[List[List[Rational]], List[Monomial]]:
    """Rows = polynomials, columns = the union of their monomials (sorted)."""
    monos = sorted({m for p in polys for m in p.terms}, key=_grlex_key)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        row = [0] * len(monos)
        for m, c in p.terms.items():
            row[index[m]] = c
        rows.append(row)
    return rows, monos


def poly_rank(polys: Sequence[Poly]) -> int:
    """Dimension of the rational span of ``polys``."""
    if not polys:
        return 0
    rows, _ = coefficient_matrix(polys)
    return rank(rows)


def express_many(basis: Sequence[Poly], targets: Sequence[Poly]) -> List[Optional[List[Rational]]]:
    """Coefficients writing each target in terms of ``basis`` (None if outside the span)."""
    rows, monos = coefficient_matrix(list(basis) + list(targets))
    nb = len(basis)
    # transpose: equations indexed by monomial, unknowns by basis element
    a = [[rows[j][i] for j in range(nb)] for i in range(len(monos))]
    rhs = [[rows[nb + t][i] for i in range(len(monos))] for t in range(len(targets))]
    if not monos:
        return [[0] * nb for _ in targets]
    return solve_many(a, rhs)


def express(basis: Sequence[Poly], target: Poly) -> Optional[List[Rational]]:
    return express_many(basis, [target])[0]
