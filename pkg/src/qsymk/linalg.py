"""Exact sparse linear algebra over the rationals.

Vectors live in the F-coordinate space of a fixed degree n: entries are
keyed by composition index in [0, 2^(n-1)) and every stored coefficient
is a nonzero `fractions.Fraction`.  All checks are exact equalities of
rationals; there is no tolerance anywhere in this module.

Internally, elimination is fraction-free: rows are primitive integer
vectors (content 1) combined by cross-multiplication, and divisions by
the pivot happen only once, when producing the reduced row-echelon rows
of a `RowBasis`.  Pivots are chosen as the smallest column index.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .compositions import from_index
from .errors import DegreeMismatchError

Rational = Fraction

# Trigger a content reduction when coefficients pass this size; purely a
# performance guard, exactness does not depend on it.
_GROWTH_LIMIT = 1 << 256


class SparseVector:
    """A sparse vector of Fractions keyed by composition index.

    Immutable by convention: nothing in this package mutates `entries`
    after construction.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[int, Fraction | int]):
        self.n = n
        limit = 1 << max(n - 1, 0)
        clean: dict[int, Fraction] = {}
        for col, value in entries.items():
            if not 0 <= col < limit:
                raise ValueError(f"column {col} out of range for degree {n}")
            value = Fraction(value)
            if value:
                clean[col] = value
        self.entries = clean

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SparseVector)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        terms = ", ".join(f"{c}: {v}" for c, v in sorted(self.entries.items()))
        return f"SparseVector(n={self.n}, {{{terms}}})"


class RowBasis:
    """Rows in reduced row-echelon form with recorded pivot columns.

    Invariants: pivot columns strictly increase, each pivot entry is 1,
    and a pivot column is zero in every other row.
    """

    __slots__ = ("n", "rows", "pivots", "_int_rows")

    def __init__(self, n: int, rows: Sequence[SparseVector], pivots: Sequence[int],
                 _int_rows: dict[int, dict[int, int]] | None = None):
        self.n = n
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        if _int_rows is None:
            _int_rows = {p: _to_int_vec(r) for p, r in zip(self.pivots, self.rows)}
        self._int_rows = _int_rows

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"RowBasis(n={self.n}, rank={self.rank}, pivots={self.pivots})"


def _to_int_vec(v: SparseVector) -> dict[int, int]:
    denom = 1
    for value in v.entries.values():
        denom = denom * value.denominator // gcd(denom, value.denominator)
    vec = {col: int(value * denom) for col, value in v.entries.items()}
    return _normalized(vec)


def _normalized(vec: dict[int, int]) -> dict[int, int]:
    """Divide by the content and make the leading coefficient positive."""
    if not vec:
        return vec
    g = 0
    for value in vec.values():
        g = gcd(g, value)
    if vec[min(vec)] < 0:
        g = -g
    if g != 1:
        for col in vec:
            vec[col] //= g
    return vec


def _eliminate(vec: dict[int, int], row: dict[int, int], col: int) -> None:
    """vec <- (row[col]/g) * vec - (vec[col]/g) * row, in place."""
    a, b = vec[col], row[col]
    g = gcd(a, b)
    scale_vec, scale_row = b // g, a // g
    if scale_vec != 1:
        for c in vec:
            vec[c] *= scale_vec
    big = False
    for c, value in row.items():
        nv = vec.get(c, 0) - scale_row * value
        if nv:
            vec[c] = nv
            if nv > _GROWTH_LIMIT or -nv > _GROWTH_LIMIT:
                big = True
        else:
            vec.pop(c, None)
    if big:
        _normalized(vec)


class _Echelon:
    """Incremental integer row-echelon accumulator (not back-substituted)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, dict[int, int]] = {}

    def copy(self) -> "_Echelon":
        other = _Echelon(self.n)
        other.rows = dict(self.rows)  # row dicts are never mutated once stored
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: dict[int, int]) -> bool:
        """Reduce vec against the current rows; insert the remainder as a
        new pivot row.  Returns True iff the rank grew."""
        vec = dict(vec)
        while vec:
            col = min(vec)
            row = self.rows.get(col)
            if row is None:
                self.rows[col] = _normalized(vec)
                return True
            _eliminate(vec, row, col)
        return False

    def reduces_to_zero(self, vec: dict[int, int]) -> bool:
        vec = dict(vec)
        while vec:
            col = min(vec)
            row = self.rows.get(col)
            if row is None:
                return False
            _eliminate(vec, row, col)
        return True

    def to_row_basis(self) -> RowBasis:
        """Back-substitute and rescale pivots to 1."""
        pivots = sorted(self.rows)
        pivot_set = set(pivots)
        reduced: dict[int, dict[int, int]] = {}
        for p in reversed(pivots):
            row = dict(self.rows[p])
            # Later rows are already fully reduced, so eliminating their
            # pivot columns cannot reintroduce other pivot columns.
            for q in sorted(c for c in row if c != p and c in pivot_set):
                if q in row:
                    _eliminate(row, reduced[q], q)
            reduced[p] = _normalized(row)
        rows = []
        int_rows = {}
        for p in pivots:
            row = reduced[p]
            lead = row[p]
            rows.append(SparseVector(self.n, {c: Fraction(v, lead) for c, v in row.items()}))
            int_rows[p] = row
        return RowBasis(self.n, rows, pivots, _int_rows=int_rows)


def _common_degree(vectors: Sequence[SparseVector], n: int | None) -> int:
    for v in vectors:
        if n is None:
            n = v.n
        elif v.n != n:
            raise DegreeMismatchError(f"mixed degrees {n} and {v.n}")
    if n is None:
        raise ValueError("degree required when no vectors are given")
    return n


def _echelon_of(vectors: Sequence[SparseVector], n: int) -> _Echelon:
    ech = _Echelon(n)
    for v in vectors:
        ech.add(_to_int_vec(v))
    return ech


def reduce(vectors: Iterable[SparseVector], n: int | None = None) -> RowBasis:
    """Row-reduce a family of vectors; the row space is preserved and the
    number of rows equals the rank."""
    vecs = list(vectors)
    n = _common_degree(vecs, n)
    return _echelon_of(vecs, n).to_row_basis()


def in_span(v: SparseVector, basis: RowBasis) -> bool:
    """True iff v reduces to zero against the basis rows."""
    if v.n != basis.n:
        raise DegreeMismatchError(f"vector degree {v.n} vs basis degree {basis.n}")
    ech = _Echelon(basis.n)
    ech.rows = basis._int_rows
    return ech.reduces_to_zero(_to_int_vec(v))


def spans_equal(
    a: Iterable[SparseVector], b: Iterable[SparseVector], n: int | None = None
) -> bool:
    """True iff rank(A) = rank(B) = rank(A u B)."""
    avecs = list(a)
    bvecs = list(b)
    n = _common_degree(avecs + bvecs, n)
    ech_a = _echelon_of(avecs, n)
    ech_b = _echelon_of(bvecs, n)
    if ech_a.rank != ech_b.rank:
        return False
    joint = ech_a.copy()
    for v in bvecs:
        if joint.add(_to_int_vec(v)):
            return False
    return True


def is_independent(vectors: Iterable[SparseVector], n: int | None = None) -> bool:
    """True iff the rank equals the number of vectors given."""
    vecs = list(vectors)
    if not vecs and n is None:
        return True
    n = _common_degree(vecs, n)
    return _echelon_of(vecs, n).rank == len(vecs)


def to_csv(rows: Sequence[SparseVector] | RowBasis) -> str:
    """Export rows as CSV `row_id,composition,coefficient` with exact
    fraction strings."""
    if isinstance(rows, RowBasis):
        n, seq = rows.n, rows.rows
    else:
        seq = list(rows)
        n = seq[0].n if seq else 0
    lines = ["row_id,composition,coefficient"]
    for i, row in enumerate(seq):
        for col in sorted(row.entries):
            lines.append(f"{i},{from_index(n, col)},{row.entries[col]}")
    return "\n".join(lines) + "\n"
