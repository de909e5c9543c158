"""Degree-n quasisymmetric functions in the monomial and fundamental bases.

An element is a sparse rational combination of basis elements indexed
by compositions of a fixed degree n, tagged with the basis it is
written in ("M" or "F").  The change of basis uses

    F_{n,C} = sum over B with C <= B <= [n-1] of M_{n,B}
    M_{n,C} = sum over B with C <= B <= [n-1] of (-1)^{|B \\ C|} F_{n,B}

and the product of two fundamentals expands as a sum of fundamentals
over the shuffles of any two disjoint words realizing the two index
compositions.

The involutions psi and rho relabel the fundamental basis by the
complement and reverse of the index composition respectively; both are
algebra automorphisms.  On the monomial basis psi acts by the signed
coarsening sum (-1)^{n - l(L)} * sum of M_K over coarsenings K of L.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping

from .compositions import (
    Composition,
    complement_mask,
    from_index,
    full_mask,
    index_of,
    reverse_mask,
)
from .config import check_degree
from .errors import BasisTagError, DegreeMismatchError
from .linalg import SparseVector
from .statistics import realize_permutation


class QSymElement:
    """A sparse element of the degree-n component, in basis "M" or "F"."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs: Mapping[int, Fraction | int]):
        if basis not in ("M", "F"):
            raise BasisTagError(f"basis must be 'M' or 'F', got {basis!r}")
        self.n = n
        self.basis = basis
        limit = 1 << max(n - 1, 0)
        clean: dict[int, Fraction] = {}
        for mask, value in coeffs.items():
            if not 0 <= mask < limit:
                raise ValueError(f"index {mask} out of range for degree {n}")
            value = Fraction(value)
            if value:
                clean[mask] = value
        self.coeffs = clean

    def terms(self) -> Iterator[tuple[Composition, Fraction]]:
        """(composition, coefficient) pairs in ascending index order."""
        for mask in sorted(self.coeffs):
            yield from_index(self.n, mask), self.coeffs[mask]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QSymElement)
            and self.n == other.n
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis, frozenset(self.coeffs.items())))

    def __add__(self, other: "QSymElement") -> "QSymElement":
        if not isinstance(other, QSymElement):
            return NotImplemented
        if self.n != other.n:
            raise DegreeMismatchError(f"degrees {self.n} and {other.n}")
        a, b = self, other
        if a.basis != b.basis:
            # mixed-basis sums normalize to the fundamental basis
            a, b = to_f(a), to_f(b)
        out = dict(a.coeffs)
        for mask, value in b.coeffs.items():
            out[mask] = out.get(mask, Fraction(0)) + value
        return QSymElement(a.n, a.basis, out)

    def __neg__(self) -> "QSymElement":
        return QSymElement(self.n, self.basis, {m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar) -> "QSymElement":
        scalar = Fraction(scalar)
        return QSymElement(self.n, self.basis, {m: scalar * v for m, v in self.coeffs.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{self.basis}{from_index(self.n, m)}" for m, v in sorted(self.coeffs.items()))
        return body if body else f"0[{self.basis}, n={self.n}]"


def fundamental(comp: Composition) -> QSymElement:
    """The basis element F_L."""
    return QSymElement(comp.n, "F", {index_of(comp): 1})


def monomial(comp: Composition) -> QSymElement:
    """The basis element M_L."""
    return QSymElement(comp.n, "M", {index_of(comp): 1})


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def f_to_m(elem: QSymElement) -> QSymElement:
    """Rewrite an F-basis element in the monomial basis: each F_{n,C}
    expands as the sum of M_{n,B} over supersets B of C."""
    if elem.basis != "F":
        raise BasisTagError(f"f_to_m needs an F-basis element, got {elem.basis}")
    full = full_mask(elem.n)
    out: dict[int, Fraction] = defaultdict(Fraction)
    for mask, value in elem.coeffs.items():
        free = full & ~mask
        for extra in _submasks(free):
            out[mask | extra] += value
    return QSymElement(elem.n, "M", out)


def m_to_f(elem: QSymElement) -> QSymElement:
    """Inverse of :func:`f_to_m`, by inclusion-exclusion over supersets."""
    if elem.basis != "M":
        raise BasisTagError(f"m_to_f needs an M-basis element, got {elem.basis}")
    full = full_mask(elem.n)
    out: dict[int, Fraction] = defaultdict(Fraction)
    for mask, value in elem.coeffs.items():
        free = full & ~mask
        for extra in _submasks(free):
            out[mask | extra] += -value if extra.bit_count() & 1 else value
    return QSymElement(elem.n, "F", out)


def to_f(elem: QSymElement) -> QSymElement:
    return elem if elem.basis == "F" else m_to_f(elem)


def to_m(elem: QSymElement) -> QSymElement:
    return elem if elem.basis == "M" else f_to_m(elem)


def f_sparse(elem: QSymElement) -> SparseVector:
    """The element as F-coordinates for the linear algebra layer."""
    return SparseVector(elem.n, to_f(elem).coeffs)


@lru_cache(maxsize=None)
def _f_basis_product(na: int, mask_a: int, nb: int, mask_b: int) -> tuple[tuple[int, int], ...]:
    """Multiplicity of each descent composition over the shuffles of two
    disjoint words realizing the two index compositions."""
    wa = realize_permutation(from_index(na, mask_a)).letters
    wb = realize_permutation(from_index(nb, mask_b), offset=na).letters
    total = na + nb
    counts: dict[int, int] = {}
    for spots in combinations(range(total), na):
        word = [0] * total
        chosen = set(spots)
        ia = ib = 0
        for i in range(total):
            if i in chosen:
                word[i] = wa[ia]
                ia += 1
            else:
                word[i] = wb[ib]
                ib += 1
        mask = 0
        for i in range(1, total):
            if word[i - 1] > word[i]:
                mask |= 1 << (i - 1)
        counts[mask] = counts.get(mask, 0) + 1
    return tuple(sorted(counts.items()))


def multiply_f(a: QSymElement, b: QSymElement) -> QSymElement:
    """Product of two F-basis elements, of degree deg(a) + deg(b)."""
    if a.basis != "F" or b.basis != "F":
        raise BasisTagError("multiply_f needs both factors in the F basis")
    n = a.n + b.n
    check_degree(n)
    out: dict[int, Fraction] = defaultdict(Fraction)
    for mask_a, ca in a.coeffs.items():
        for mask_b, cb in b.coeffs.items():
            c = ca * cb
            for mask, mult in _f_basis_product(a.n, mask_a, b.n, mask_b):
                out[mask] += c * mult
    return QSymElement(n, "F", out)


def multiply_f_via_shuffles(
    a_comp: Composition, b_comp: Composition, offset_a: int = 0, offset_b: int | None = None
) -> QSymElement:
    """Oracle route for the basis product: materialize two disjoint words
    and sum F over the descent compositions of their shuffles.  The
    offsets pick which letters realize each composition; the result must
    not depend on them."""
    from .statistics import perm_descent_composition, shuffles

    if offset_b is None:
        offset_b = offset_a + a_comp.n
    p = realize_permutation(a_comp, offset_a)
    q = realize_permutation(b_comp, offset_b)
    out: dict[int, Fraction] = defaultdict(Fraction)
    for t in shuffles(p, q):
        out[index_of(perm_descent_composition(t))] += 1
    return QSymElement(a_comp.n + b_comp.n, "F", out)


def ehrenborg_psi_m(comp: Composition) -> QSymElement:
    """Image of M_L under psi: (-1)^(n - number of parts) times the sum
    of M_K over all coarsenings K of L."""
    n = comp.n
    mask = index_of(comp)
    parts = comp.num_parts
    sign = -1 if (n - parts) & 1 else 1
    return QSymElement(n, "M", {sub: sign for sub in _submasks(mask)})


def psi(elem: QSymElement) -> QSymElement:
    """The complement involution.  On the F basis it relabels each index
    by its complement; on the M basis it applies the signed coarsening
    sum per index and re-collects, staying in the M basis."""
    n = elem.n
    if elem.basis == "F":
        return QSymElement(n, "F", {complement_mask(n, m): v for m, v in elem.coeffs.items()})
    out: dict[int, Fraction] = defaultdict(Fraction)
    for mask, value in elem.coeffs.items():
        image = ehrenborg_psi_m(from_index(n, mask))
        for sub, sign in image.coeffs.items():
            out[sub] += value * sign
    return QSymElement(n, "M", out)


def rho(elem: QSymElement) -> QSymElement:
    """The reverse involution: relabels F indices by the reverse
    composition.  M-basis input is routed through the F basis and
    converted back, so the basis tag is preserved."""
    n = elem.n
    if elem.basis == "F":
        return QSymElement(n, "F", {reverse_mask(n, m): v for m, v in elem.coeffs.items()})
    return f_to_m(rho(m_to_f(elem)))


def _validate_ck(n: int, c_mask: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [{n - 1}], got {k}")
    if (c_mask >> (k - 1)) & 1:
        raise ValueError(f"k = {k} must not be in C")


def lemma22b_combination(n: int, c: frozenset[int] | set[int], k: int) -> QSymElement:
    """The F-combination equal to M_{n,C} + M_{n,C u {k}} for k not in C:
    sum over B with C <= B <= [n-1], k not in B, of (-1)^{|B \\ C|} F_{n,B}."""
    from .compositions import set_to_mask

    c_mask = set_to_mask(c)
    _validate_ck(n, c_mask, k)
    free = full_mask(n) & ~c_mask & ~(1 << (k - 1))
    out: dict[int, Fraction] = {}
    for extra in _submasks(free):
        out[c_mask | extra] = Fraction(-1 if extra.bit_count() & 1 else 1)
    return QSymElement(n, "F", out)


def lemma22c_combination(n: int, c: frozenset[int] | set[int], k: int) -> QSymElement:
    """The paired-difference form of the same sum, valid when additionally
    k >= 2 and k-1 is not in C:
    sum over B with C <= B, k and k-1 not in B, of
    (-1)^{|B \\ C|} (F_{n,B} - F_{n,B u {k-1}})."""
    from .compositions import set_to_mask

    c_mask = set_to_mask(c)
    _validate_ck(n, c_mask, k)
    if k - 1 < 1:
        raise ValueError("k - 1 must be a position, so k >= 2")
    if (c_mask >> (k - 2)) & 1:
        raise ValueError(f"k - 1 = {k - 1} must not be in C")
    free = full_mask(n) & ~c_mask & ~(1 << (k - 1)) & ~(1 << (k - 2))
    out: dict[int, Fraction] = defaultdict(Fraction)
    for extra in _submasks(free):
        sign = Fraction(-1 if extra.bit_count() & 1 else 1)
        b = c_mask | extra
        out[b] += sign
        out[b | (1 << (k - 2))] -= sign
    return QSymElement(n, "F", out)


# -- serialization ----------------------------------------------------------

def element_to_json_dict(elem: QSymElement) -> dict:
    return {
        "degree": elem.n,
        "basis": elem.basis,
        "terms": [
            {"composition": str(comp), "coeff": str(value)}
            for comp, value in elem.terms()
        ],
    }


def element_from_json_dict(data: dict) -> QSymElement:
    from .compositions import parse_composition

    coeffs = {
        index_of(parse_composition(term["composition"])): Fraction(term["coeff"])
        for term in data["terms"]
    }
    return QSymElement(data["degree"], data["basis"], coeffs)
