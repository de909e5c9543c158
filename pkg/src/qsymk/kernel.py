"""Rewrite relations on compositions, kernel subspaces, and their checks.

For a descent statistic st, the degree-n kernel K^st_n is the span of
all differences F_J - F_K over st-equivalent pairs of compositions of
n.  A set S of equivalent pairs spans K^st_n exactly when the connected
components of the directed graph with edge set S are the equivalence
classes, and the difference set is linearly independent exactly when
the graph is a forest; both criteria are checked here against direct
exact rank computations in every verification routine.

Binary relation families (parts written 1-based; all preserve degree):

  arrow1   split some part j_l > 2 into (1, j_l - 1)
  arrow2   replace a final part 2 by (1, 1)
  arrow3   all parts <= 2 and last part 1: swap an adjacent (1, 2) pair
  tri1     split some part j_l > 2 into (2, j_l - 2)
  tri2     final part 2 and some earlier part j_l = 2: replace j_l by
           (1, 1), keeping the final 2
  val1     merge a part j_l >= 2 with a following part 1 into j_l + 1
  val2     replace a leading (1, 1) by 2
  val3     all parts after the first >= 2: move a unit from part j_l to
           part j_{l+1}, allowed at l = 1 when j_1 >= 2 and at l > 1
           only when j_l > 2
  epkarrow / epktri   the arrow1 / tri1 moves restricted to l >= 2
  pkbasis  the arrow1/arrow2 move applied at the least eligible l
  pknumbasis  pkbasis, or the leftmost arrow3 swap when no split exists

The unary marker ctilde holds the compositions (1, ..., 1, 2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .compositions import (
    Composition,
    complement,
    complement_mask,
    compositions_of,
    from_index,
    full_mask,
    index_of,
    mask_to_set,
    reverse_mask,
    set_to_mask,
)
from .config import check_degree
from .errors import RelationUnsoundError
from .linalg import RowBasis, SparseVector, in_span, is_independent, reduce, spans_equal
from .qsym import QSymElement, f_sparse, _f_basis_product
from .statistics import (
    DescentStatistic,
    StatisticId,
    comp_stat_value,
    equivalence_classes,
    stat_name,
)


class RelationId(enum.Enum):
    Arrow1 = "arrow1"
    Arrow2 = "arrow2"
    Arrow3 = "arrow3"
    Tri1 = "tri1"
    Tri2 = "tri2"
    CTilde = "ctilde"
    PkBasisArrow = "pkbasis"
    PkNumBasisArrow = "pknumbasis"
    ValArrow1 = "val1"
    ValArrow2 = "val2"
    ValArrow3 = "val3"
    EpkArrow = "epkarrow"
    EpkTri = "epktri"


def _split(parts: tuple[int, ...], i: int, head: int) -> Composition:
    """Replace parts[i] by (head, parts[i] - head)."""
    return Composition(parts[:i] + (head, parts[i] - head) + parts[i + 1:])


def _swap(parts: tuple[int, ...], i: int) -> Composition:
    return Composition(parts[:i] + (parts[i + 1], parts[i]) + parts[i + 2:])


def _pk_basis_position(parts: tuple[int, ...]) -> int | None:
    """0-based index of the least part > 2, falling back to the final
    part when it equals 2; None when neither exists."""
    m = len(parts)
    for i, p in enumerate(parts):
        if p > 2:
            return i
    if m >= 1 and parts[-1] == 2:
        return m - 1
    return None


def labeled_successors(rel: RelationId, comp: Composition) -> list[tuple[Composition, str]]:
    """Successors of a composition under one relation, with edge labels
    1/2/3 naming the underlying move."""
    parts = comp.parts
    m = len(parts)
    out: list[tuple[Composition, str]] = []
    if rel is RelationId.Arrow1:
        for i in range(m):
            if parts[i] > 2:
                out.append((_split(parts, i, 1), "1"))
    elif rel is RelationId.Arrow2:
        if m >= 1 and parts[-1] == 2:
            out.append((Composition(parts[:-1] + (1, 1)), "2"))
    elif rel is RelationId.Arrow3:
        if m >= 1 and parts[-1] == 1 and all(p <= 2 for p in parts):
            for i in range(m - 2):
                if parts[i] == 1 and parts[i + 1] == 2:
                    out.append((_swap(parts, i), "3"))
    elif rel is RelationId.Tri1:
        for i in range(m):
            if parts[i] > 2:
                out.append((_split(parts, i, 2), "1"))
    elif rel is RelationId.Tri2:
        if m >= 1 and parts[-1] == 2:
            for i in range(m - 1):
                if parts[i] == 2:
                    out.append(
                        (Composition(parts[:i] + (1, 1) + parts[i + 1:m - 1] + (2,)), "2")
                    )
    elif rel is RelationId.PkBasisArrow:
        i = _pk_basis_position(parts)
        if i is not None:
            label = "1" if parts[i] > 2 else "2"
            out.append((_split(parts, i, 1), label))
    elif rel is RelationId.PkNumBasisArrow:
        i = _pk_basis_position(parts)
        if i is not None:
            label = "1" if parts[i] > 2 else "2"
            out.append((_split(parts, i, 1), label))
        else:
            for i in range(m - 1):
                if parts[i] == 1 and parts[i + 1] == 2:
                    out.append((_swap(parts, i), "3"))
                    break
    elif rel is RelationId.ValArrow1:
        for i in range(m - 1):
            if parts[i] >= 2 and parts[i + 1] == 1:
                out.append((Composition(parts[:i] + (parts[i] + 1,) + parts[i + 2:]), "1"))
    elif rel is RelationId.ValArrow2:
        if m >= 2 and parts[0] == 1 and parts[1] == 1:
            out.append((Composition((2,) + parts[2:]), "2"))
    elif rel is RelationId.ValArrow3:
        if all(p >= 2 for p in parts[1:]):
            for i in range(m - 1):
                if parts[i] >= 2 and (i == 0 or parts[i] > 2):
                    out.append(
                        (Composition(parts[:i] + (parts[i] - 1, parts[i + 1] + 1) + parts[i + 2:]), "3")
                    )
    elif rel is RelationId.EpkArrow:
        for i in range(1, m):
            if parts[i] > 2:
                out.append((_split(parts, i, 1), "1"))
    elif rel is RelationId.EpkTri:
        for i in range(1, m):
            if parts[i] > 2:
                out.append((_split(parts, i, 2), "1"))
    else:
        raise ValueError(f"{rel} is a unary marker, not a binary relation")
    return out


def successors(rel: RelationId, comp: Composition) -> set[Composition]:
    """The set of compositions reachable from `comp` in one step."""
    return {k for k, _ in labeled_successors(rel, comp)}


def is_ctilde(comp: Composition) -> bool:
    """True for the compositions (1, ..., 1, 2), including (2) itself."""
    parts = comp.parts
    return len(parts) >= 1 and parts[-1] == 2 and all(p == 1 for p in parts[:-1])


def ctilde_member(n: int) -> Composition | None:
    """The unique ctilde composition of n, if any (needs n >= 2)."""
    if n < 2:
        return None
    return Composition((1,) * (n - 2) + (2,))


@dataclass(frozen=True)
class RelationGraph:
    """Directed graph on the compositions of n with labeled edges and an
    optional set of ctilde-marked vertices."""

    n: int
    edges: tuple[tuple[Composition, Composition, str], ...]
    marks: tuple[Composition, ...] = ()

    @property
    def vertices(self) -> tuple[Composition, ...]:
        return compositions_of(self.n)


_ORDERED_RELATIONS = list(RelationId)


def relation_edges(rels: Iterable[RelationId], n: int) -> RelationGraph:
    """All edges (J, K) with K a successor of J under some relation in
    `rels`; duplicate (J, K) pairs arising from several relations are
    kept once.  CTilde contributes vertex marks instead of edges."""
    check_degree(n)
    rels = set(rels)
    marks: tuple[Composition, ...] = ()
    if RelationId.CTilde in rels:
        member = ctilde_member(n)
        marks = (member,) if member is not None else ()
        rels.discard(RelationId.CTilde)
    ordered = [r for r in _ORDERED_RELATIONS if r in rels]
    edges: list[tuple[Composition, Composition, str]] = []
    seen: set[tuple[int, int]] = set()
    for j in compositions_of(n):
        for rel in ordered:
            for k, label in labeled_successors(rel, j):
                key = (index_of(j), index_of(k))
                if key not in seen:
                    seen.add(key)
                    edges.append((j, k, label))
    edges.sort(key=lambda e: (index_of(e[0]), index_of(e[1])))
    return RelationGraph(n, tuple(edges), marks)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge; returns False when a and b were already connected."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def connected_components(graph: RelationGraph) -> list[list[Composition]]:
    """Partition of the compositions of n by undirected reachability,
    blocks and members in ascending index order."""
    uf = _UnionFind()
    for comp in graph.vertices:
        uf.find(index_of(comp))
    for j, k, _ in graph.edges:
        uf.union(index_of(j), index_of(k))
    blocks: dict[int, list[Composition]] = {}
    for comp in graph.vertices:
        blocks.setdefault(uf.find(index_of(comp)), []).append(comp)
    return sorted(blocks.values(), key=lambda block: index_of(block[0]))


def is_forest(graph: RelationGraph) -> bool:
    """True iff the underlying undirected multigraph is acyclic; parallel
    and antiparallel edge pairs count as cycles."""
    uf = _UnionFind()
    for j, k, _ in graph.edges:
        if not uf.union(index_of(j), index_of(k)):
            return False
    return True


# -- kernel spaces -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KernelSpace:
    stat: DescentStatistic
    n: int
    basis: RowBasis

    @property
    def dim(self) -> int:
        return self.basis.rank


def _difference_vector(n: int, j: Composition, k: Composition) -> SparseVector:
    a, b = index_of(j), index_of(k)
    if a == b:
        return SparseVector(n, {})
    return SparseVector(n, {a: 1, b: -1})


def kernel_space(stat: DescentStatistic, n: int) -> KernelSpace:
    """Row-reduced basis of K^st_n, generated per equivalence class as
    differences against the least-index class representative."""
    check_degree(n)
    return _kernel_space(stat, n)


@lru_cache(maxsize=None)
def _kernel_space(stat: DescentStatistic, n: int) -> KernelSpace:
    generators: list[SparseVector] = []
    for block in equivalence_classes(stat, n):
        rep = block[0]
        for other in block[1:]:
            generators.append(_difference_vector(n, rep, other))
    return KernelSpace(stat, n, reduce(generators, n))


def quotient_dimension(stat: DescentStatistic, n: int) -> int:
    """Number of equivalence classes = dim of the degree-n quotient."""
    return len(equivalence_classes(stat, n))


def _partition_key(blocks: Iterable[Iterable[Composition]]) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(index_of(c) for c in block) for block in blocks)


def _check_sound(stat: DescentStatistic, graph: RelationGraph) -> None:
    for j, k, _ in graph.edges:
        if comp_stat_value(stat, j) != comp_stat_value(stat, k):
            raise RelationUnsoundError(
                f"edge {j} -> {k} joins non-{stat_name(stat)}-equivalent compositions"
            )


def edge_vectors(graph: RelationGraph) -> list[SparseVector]:
    return [_difference_vector(graph.n, j, k) for j, k, _ in graph.edges]


def check_spanning_F(stat: DescentStatistic, n: int, rels: Iterable[RelationId]) -> bool:
    """Do the F-differences along the relation edges span K^st_n?

    Verdict is computed two independent ways: connected components of
    the relation graph versus the equivalence classes, and a direct
    exact rank comparison against the kernel basis.  The two must agree
    (that equivalence is itself a theorem); disagreement raises.
    """
    graph = relation_edges(rels, n)
    _check_sound(stat, graph)
    graph_verdict = (
        _partition_key(connected_components(graph))
        == _partition_key(equivalence_classes(stat, n))
    )
    rank_verdict = spans_equal(edge_vectors(graph), kernel_space(stat, n).basis.rows, n)
    if graph_verdict != rank_verdict:
        raise AssertionError(
            f"graph criterion ({graph_verdict}) and rank comparison ({rank_verdict}) "
            f"disagree for {stat_name(stat)} at degree {n}"
        )
    return graph_verdict


def check_basis_F(stat: DescentStatistic, n: int, rels: Iterable[RelationId]) -> bool:
    """Do the F-differences along the relation edges form a basis of
    K^st_n?  Requires spanning, the forest property, and edge count
    equal to the kernel dimension; the forest verdict is cross-checked
    against a direct linear-independence computation."""
    graph = relation_edges(rels, n)
    spanning = check_spanning_F(stat, n, rels)
    forest = is_forest(graph)
    independent = is_independent(edge_vectors(graph), n)
    if forest != independent:
        raise AssertionError(
            f"forest criterion ({forest}) and independence ({independent}) disagree "
            f"for {stat_name(stat)} at degree {n}"
        )
    return spanning and forest and len(graph.edges) == kernel_space(stat, n).dim


# -- monomial spanning sets ---------------------------------------------------

def _m_combination(n: int, terms: dict[int, int]) -> SparseVector:
    return f_sparse(QSymElement(n, "M", terms))


def monomial_span_vectors(stat: StatisticId, n: int) -> list[SparseVector]:
    """The M-basis combinations whose span is claimed to be K^st_n,
    expressed in F coordinates.

    Pk:  M_J + M_K over tri1/tri2 edges, plus M over the ctilde member.
    pk:  the Pk set, plus M_J - M_K over arrow3 edges.
    Epk: M_J + M_K over epktri edges.
    """
    if stat is StatisticId.Epk:
        graph = relation_edges({RelationId.EpkTri}, n)
        return [
            _m_combination(n, {index_of(j): 1, index_of(k): 1}) for j, k, _ in graph.edges
        ]
    if stat not in (StatisticId.Pk, StatisticId.pk):
        raise ValueError(f"no monomial spanning set implemented for {stat_name(stat)}")
    graph = relation_edges({RelationId.Tri1, RelationId.Tri2}, n)
    vectors = [
        _m_combination(n, {index_of(j): 1, index_of(k): 1}) for j, k, _ in graph.edges
    ]
    member = ctilde_member(n)
    if member is not None:
        vectors.append(_m_combination(n, {index_of(member): 1}))
    if stat is StatisticId.pk:
        swap_graph = relation_edges({RelationId.Arrow3}, n)
        vectors.extend(
            _m_combination(n, {index_of(j): 1, index_of(k): -1})
            for j, k, _ in swap_graph.edges
        )
    return vectors


def check_spanning_M(stat: StatisticId, n: int) -> bool:
    """Exact span equality of the monomial combinations with K^st_n."""
    return spans_equal(monomial_span_vectors(stat, n), kernel_space(stat, n).basis.rows, n)


# -- the indexed families over subsets ---------------------------------------

@dataclass(frozen=True)
class OmegaSets:
    """The four disjoint index regions inside 2^[n-1] x [n-1] together
    indexing the subset-level spanning families."""

    n: int
    om1: tuple[tuple[frozenset[int], int], ...]
    om2: tuple[tuple[frozenset[int], int], ...]
    om3: tuple[tuple[frozenset[int], int], ...]
    om4: tuple[tuple[frozenset[int], int], ...]

    def region(self, which: int) -> tuple[tuple[frozenset[int], int], ...]:
        return (self.om1, self.om2, self.om3, self.om4)[which - 1]

    def omega(self) -> list[tuple[int, frozenset[int], int]]:
        """Regions 1-3 flattened as (region, C, k), in region order."""
        return [(r, c, k) for r in (1, 2, 3) for c, k in self.region(r)]

    def theta(self) -> list[tuple[int, frozenset[int], int]]:
        """All four regions flattened as (region, C, k)."""
        return self.omega() + [(4, c, k) for c, k in self.om4]


def _sorted_pairs(pairs: Iterable[tuple[frozenset[int], int]]):
    return tuple(sorted(pairs, key=lambda ck: (set_to_mask(ck[0]), ck[1])))


def omega_sets(n: int) -> OmegaSets:
    """Enumerate the four regions by their literal membership predicates."""
    check_degree(n)
    return _omega_sets(n)


@lru_cache(maxsize=None)
def _omega_sets(n: int) -> OmegaSets:
    om1, om2, om3, om4 = [], [], [], []
    size = 1 << max(n - 1, 0)
    fullm = full_mask(n)
    for c_mask in range(size):
        has = lambda j: 1 <= j <= n - 1 and (c_mask >> (j - 1)) & 1
        c_set = mask_to_set(c_mask)
        for k in range(1, n):
            in_c = has(k)
            # region 1: C proper, k and k-1 outside C, k-2 in C u {0}
            if c_mask != fullm and not in_c and not has(k - 1) and (k - 2 == 0 or has(k - 2)):
                om1.append((c_set, k))
            # region 2: C proper inside [n-2] containing n-2, k outside C,
            # k+1 in C, k-1 in C u {0}
            if (
                n >= 2
                and not has(n - 1)
                and c_mask != fullm >> 1
                and has(n - 2)
                and not in_c
                and has(k + 1)
                and (k - 1 == 0 or has(k - 1))
            ):
                om2.append((c_set, k))
            # region 4: n-1 in C; k in C with k-1 in C u {0}, k+1 outside,
            # k+2 in C; and every member of C u {0} except n-1 is followed
            # by another member within two steps
            if (
                has(n - 1)
                and in_c
                and (k - 1 == 0 or has(k - 1))
                and not has(k + 1)
                and has(k + 2)
            ):
                members = [0] + sorted(c_set)
                if all(
                    has(j + 1) or has(j + 2) for j in members if j != n - 1
                ):
                    om4.append((c_set, k))
    if n >= 2:
        om3.append((mask_to_set(fullm >> 1), n - 1))
    return OmegaSets(
        n, _sorted_pairs(om1), _sorted_pairs(om2), _sorted_pairs(om3), _sorted_pairs(om4)
    )


def f_family(region: int, c: frozenset[int], k: int, n: int) -> QSymElement:
    """The F-side family member indexed by (C, k) in the given region."""
    _require_member(region, c, k, n)
    c_mask = set_to_mask(c)
    if region == 1:
        other = c_mask | (1 << (k - 2))
    elif region in (2, 3):
        other = c_mask | (1 << (n - 2))
    else:
        other = (c_mask | (1 << k)) & ~(1 << (k - 1))
    return QSymElement(n, "F", {c_mask: 1, other: -1})


def m_family(region: int, c: frozenset[int], k: int, n: int) -> QSymElement:
    """The M-side family member indexed by (C, k) in the given region."""
    _require_member(region, c, k, n)
    c_mask = set_to_mask(c)
    if region in (1, 2):
        return QSymElement(n, "M", {c_mask: 1, c_mask | (1 << (k - 1)): 1})
    if region == 3:
        return QSymElement(n, "M", {c_mask: 1})
    other = (c_mask | (1 << k)) & ~(1 << (k - 1))
    return QSymElement(n, "M", {c_mask: 1, other: -1})


def _require_member(region: int, c: frozenset[int], k: int, n: int) -> None:
    if region not in (1, 2, 3, 4):
        raise ValueError(f"region must be 1..4, got {region}")
    if (frozenset(c), k) not in omega_sets(n).region(region):
        raise ValueError(f"({set(c)}, {k}) is not in region {region} at degree {n}")


def check_section4_props(n: int) -> dict:
    """Verify the six span equalities linking the subset-indexed families
    to the relation spanning sets, plus the region-4 characterization of
    the arrow3 edges."""
    check_degree(n)
    om = omega_sets(n)
    f_omega = [f_sparse(f_family(r, c, k, n)) for r, c, k in om.omega()]
    m_omega = [f_sparse(m_family(r, c, k, n)) for r, c, k in om.omega()]
    f_theta = f_omega + [f_sparse(f_family(4, c, k, n)) for c, k in om.om4]
    m_theta = m_omega + [f_sparse(m_family(4, c, k, n)) for c, k in om.om4]

    pk_graph = relation_edges({RelationId.Arrow1, RelationId.Arrow2}, n)
    pknum_graph = relation_edges(
        {RelationId.Arrow1, RelationId.Arrow2, RelationId.Arrow3}, n
    )
    fn_pk = edge_vectors(pk_graph)
    fn_pknum = edge_vectors(pknum_graph)
    mn_pk = monomial_span_vectors(StatisticId.Pk, n)
    mn_pknum = monomial_span_vectors(StatisticId.pk, n)

    arrow3_edges = {
        (index_of(j), index_of(k))
        for j, k, _ in relation_edges({RelationId.Arrow3}, n).edges
    }
    om4_pairs = {
        (set_to_mask(c), (set_to_mask(c) | (1 << k)) & ~(1 << (k - 1)))
        for c, k in om.om4
    }

    results = {
        "prop41_f_family_spans_FPk": spans_equal(f_omega, fn_pk, n),
        "prop42_m_family_spans_MPk": spans_equal(m_omega, mn_pk, n),
        "prop43_f_equals_m_on_omega": spans_equal(f_omega, m_omega, n),
        "prop44_f_family_spans_Fpk": spans_equal(f_theta, fn_pknum, n),
        "prop45_m_family_spans_Mpk": spans_equal(m_theta, mn_pknum, n),
        "prop46_f_equals_m_on_theta": spans_equal(f_theta, m_theta, n),
        "lemma_om4_matches_arrow3": arrow3_edges == om4_pairs,
    }
    return {"degree": n, "pass": all(results.values()), "results": results}


# -- ideal property -----------------------------------------------------------

def _row_times_basis(row: SparseVector, a: int, b: int, k_mask: int) -> SparseVector:
    """Product of an F-coordinate vector of degree a with the degree-b
    basis element indexed by k_mask, in F coordinates of degree a+b."""
    out: dict[int, Fraction] = {}
    for mask, coeff in row.entries.items():
        for prod_mask, mult in _f_basis_product(a, mask, b, k_mask):
            out[prod_mask] = out.get(prod_mask, Fraction(0)) + coeff * mult
    return SparseVector(a + b, out)


def is_ideal_upto(stat: DescentStatistic, total_degree: int, max_witnesses: int = 3) -> dict:
    """Check that products of kernel basis rows with fundamental basis
    elements stay inside the kernel, for all bidegrees (a, b) with
    a + b <= total_degree."""
    check_degree(total_degree)
    violations: list[dict] = []
    for s in range(2, total_degree + 1):
        target = kernel_space(stat, s)
        for a in range(1, s):
            b = s - a
            source = kernel_space(stat, a)
            if source.dim == 0:
                continue
            for row in source.basis.rows:
                for k_comp in compositions_of(b):
                    product = _row_times_basis(row, a, b, index_of(k_comp))
                    if not in_span(product, target.basis):
                        if len(violations) < max_witnesses:
                            violations.append(
                                {
                                    "row_degree": a,
                                    "factor": str(k_comp),
                                    "row": {str(from_index(a, m)): str(v)
                                            for m, v in sorted(row.entries.items())},
                                }
                            )
    return {
        "stat": stat_name(stat),
        "total_degree": total_degree,
        "ideal": not violations,
        "violations": violations,
    }


# -- symmetry bridges ----------------------------------------------------------

def _relabeled(v: SparseVector, transform) -> SparseVector:
    return SparseVector(v.n, {transform(v.n, m): c for m, c in v.entries.items()})


def psi_vector(v: SparseVector) -> SparseVector:
    """The complement involution on F coordinates."""
    return _relabeled(v, complement_mask)


def rho_vector(v: SparseVector) -> SparseVector:
    """The reverse involution on F coordinates."""
    return _relabeled(v, reverse_mask)


def check_symmetry_bridges(n: int) -> dict:
    """Verify the complement/reverse symmetries at degree n:

    1. the complement of every arrow1/arrow2 edge is a val1 or val2
       edge, and the complement of every arrow3 edge is a val3 edge;
    2. the epk and val kernels coincide as row spaces;
    3. psi carries K^Pk_n onto K^Val_n and K^pk_n onto K^val_n;
    4. rho carries K^Lpk_n onto K^Rpk_n and K^lpk_n onto K^rpk_n.
    """
    check_degree(n)

    def comp_edge_ok(j: Composition, k: Composition, rels: set[RelationId]) -> bool:
        jc, kc = complement(j), complement(k)
        return any(kc in successors(rel, jc) for rel in rels)

    pk_edges_ok = all(
        comp_edge_ok(j, k, {RelationId.ValArrow1, RelationId.ValArrow2})
        for j, k, _ in relation_edges({RelationId.Arrow1, RelationId.Arrow2}, n).edges
    )
    swap_edges_ok = all(
        comp_edge_ok(j, k, {RelationId.ValArrow1, RelationId.ValArrow2, RelationId.ValArrow3})
        for j, k, _ in relation_edges({RelationId.Arrow3}, n).edges
    )

    epk_rows = kernel_space(StatisticId.epk, n).basis.rows
    val_rows = kernel_space(StatisticId.val, n).basis.rows
    epk_equals_val = list(epk_rows) == list(val_rows)

    def maps_onto(src: StatisticId, dst: StatisticId, transform) -> bool:
        image = [transform(row) for row in kernel_space(src, n).basis.rows]
        return spans_equal(image, kernel_space(dst, n).basis.rows, n)

    results = {
        "complement_of_pk_edges": pk_edges_ok,
        "complement_of_swap_edges": swap_edges_ok,
        "epk_kernel_equals_val_kernel": epk_equals_val,
        "psi_Pk_onto_Val": maps_onto(StatisticId.Pk, StatisticId.Val, psi_vector),
        "psi_pk_onto_val": maps_onto(StatisticId.pk, StatisticId.val, psi_vector),
        "rho_Lpk_onto_Rpk": maps_onto(StatisticId.Lpk, StatisticId.Rpk, rho_vector),
        "rho_lpk_onto_rpk": maps_onto(StatisticId.lpk, StatisticId.rpk, rho_vector),
    }
    return {"degree": n, "pass": all(results.values()), "results": results}


# -- graph export --------------------------------------------------------------

def graphs_to_dot(graphs: Sequence[RelationGraph]) -> str:
    """DOT export: vertices labeled with composition text, edges labeled
    1/2/3, ctilde-marked vertices drawn with doubled borders."""
    lines = ["digraph relations {"]
    for graph in graphs:
        marked = set(graph.marks)
        for comp in graph.vertices:
            attr = " [peripheries=2]" if comp in marked else ""
            lines.append(f'  "{comp}"{attr};')
        for j, k, label in graph.edges:
            lines.append(f'  "{j}" -> "{k}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graphs_to_json_dict(graphs: Sequence[RelationGraph]) -> dict:
    return {
        "degrees": [g.n for g in graphs],
        "vertices": [str(c) for g in graphs for c in g.vertices],
        "ctilde": [str(c) for g in graphs for c in g.marks],
        "edges": [
            {"from": str(j), "to": str(k), "label": label}
            for g in graphs
            for j, k, label in g.edges
        ],
    }


def graphs_to_csv(graphs: Sequence[RelationGraph]) -> str:
    # composition text contains commas, so those fields are quoted
    lines = ["from,to,label"]
    for g in graphs:
        for j, k, label in g.edges:
            lines.append(f'"{j}","{k}",{label}')
    return "\n".join(lines) + "\n"
