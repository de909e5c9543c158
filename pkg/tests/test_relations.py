from __future__ import annotations

import pytest

import figure_data
from qsymk.compositions import Composition, compositions_of, complement, inversions
from qsymk.kernel import (
    RelationGraph,
    RelationId,
    connected_components,
    ctilde_member,
    is_ctilde,
    is_forest,
    labeled_successors,
    relation_edges,
    successors,
)
from qsymk.statistics import StatisticId, eval_on_composition

C = Composition
R = RelationId


def names(comps):
    return sorted(str(c) for c in comps)


def test_arrow1_successors():
    assert names(successors(R.Arrow1, C((3, 2, 4, 1)))) == ["(1,2,2,4,1)", "(3,2,1,3,1)"]
    # chain from the split-normalization argument
    assert C((1, 2, 2, 4, 1)) in successors(R.Arrow1, C((3, 2, 4, 1)))
    assert C((1, 2, 2, 1, 3, 1)) in successors(R.Arrow1, C((1, 2, 2, 4, 1)))
    assert successors(R.Arrow1, C((2, 2))) == set()


def test_arrow2_successors():
    assert successors(R.Arrow2, C((1, 2, 2))) == {C((1, 2, 1, 1))}
    assert successors(R.Arrow2, C((2,))) == {C((1, 1))}
    assert successors(R.Arrow2, C((2, 1))) == set()


def test_arrow3_successors():
    assert successors(R.Arrow3, C((1, 2, 2, 1, 1))) == {C((2, 1, 2, 1, 1))}
    assert successors(R.Arrow3, C((2, 2, 1))) == set()  # no 1 before a 2
    assert successors(R.Arrow3, C((1, 2))) == set()  # last part not 1
    assert successors(R.Arrow3, C((1, 3, 1))) == set()  # part exceeding 2
    assert successors(R.Arrow3, C((1, 2, 1))) == {C((2, 1, 1))}


def test_tri_successors():
    assert successors(R.Tri1, C((4,))) == {C((2, 2))}
    assert successors(R.Tri1, C((2, 3))) == {C((2, 2, 1))}
    assert successors(R.Tri2, C((2, 1, 2))) == {C((1, 1, 1, 2))}
    assert successors(R.Tri2, C((2,))) == set()  # needs an earlier part 2
    assert successors(R.Tri2, C((2, 2))) == {C((1, 1, 2))}


def test_pk_basis_successor_is_leftmost_split():
    assert successors(R.PkBasisArrow, C((3, 2))) == {C((1, 2, 2))}
    assert successors(R.PkBasisArrow, C((2, 2))) == {C((2, 1, 1))}
    assert successors(R.PkBasisArrow, C((2, 2, 1))) == set()
    assert successors(R.PkBasisArrow, C((1, 1, 1))) == set()


def test_pknum_basis_successor():
    assert successors(R.PkNumBasisArrow, C((3, 2))) == {C((1, 2, 2))}
    # no split available: leftmost (1,2) swap
    assert successors(R.PkNumBasisArrow, C((1, 2, 2, 1, 1))) == {C((2, 1, 2, 1, 1))}
    assert successors(R.PkNumBasisArrow, C((2, 2, 1))) == set()


def test_basis_relations_have_out_degree_at_most_one():
    for n in range(0, 11):
        for comp in compositions_of(n):
            assert len(successors(R.PkBasisArrow, comp)) <= 1
            assert len(successors(R.PkNumBasisArrow, comp)) <= 1


def test_val_successors():
    assert successors(R.ValArrow1, C((2, 1, 2))) == {C((3, 2))}
    assert successors(R.ValArrow2, C((1, 1, 2))) == {C((2, 2))}
    assert successors(R.ValArrow2, C((2, 1, 1))) == set()
    # unit moves right: first part may be exactly 2, later parts need > 2
    assert successors(R.ValArrow3, C((2, 2))) == {C((1, 3))}
    assert successors(R.ValArrow3, C((3, 2))) == {C((2, 3))}
    assert successors(R.ValArrow3, C((2, 2, 2))) == {C((1, 3, 2))}
    assert successors(R.ValArrow3, C((1, 2))) == set()
    assert successors(R.ValArrow3, C((2, 1, 2))) == set()  # interior part 1


def test_epk_relations_skip_the_first_part():
    assert successors(R.EpkArrow, C((4,))) == set()
    assert successors(R.EpkArrow, C((1, 3))) == {C((1, 1, 2))}
    assert successors(R.EpkTri, C((4,))) == set()
    assert successors(R.EpkTri, C((1, 4))) == {C((1, 2, 2))}
    assert successors(R.Arrow1, C((4,))) == {C((1, 3))}


def test_ctilde():
    assert is_ctilde(C((1, 1, 2)))
    assert is_ctilde(C((2,)))
    assert not is_ctilde(C((2, 1)))
    assert not is_ctilde(C(()))
    assert ctilde_member(5) == C((1, 1, 1, 2))
    assert ctilde_member(1) is None


def test_successors_rejects_unary_marker():
    with pytest.raises(ValueError):
        successors(R.CTilde, C((2,)))


def _edge_names(graph):
    return [(str(j), str(k), label) for j, k, label in graph.edges]


def test_figure1_golden():
    for n, expected in figure_data.FIGURE1_EDGES.items():
        graph = relation_edges({R.Arrow1, R.Arrow2, R.Arrow3}, n)
        assert sorted(_edge_names(graph)) == sorted(expected), n


def test_figure2_golden():
    for n, expected in figure_data.FIGURE2_EDGES.items():
        graph = relation_edges({R.Tri1, R.Tri2, R.CTilde}, n)
        assert sorted(_edge_names(graph)) == sorted(expected), n
        assert [str(c) for c in graph.marks] == figure_data.FIGURE2_CTILDE[n]


def test_relation_edges_trivial_degrees():
    for rels in ({R.Arrow1, R.Arrow2}, {R.Tri1, R.Tri2}):
        assert relation_edges(rels, 0).edges == ()
        assert relation_edges(rels, 1).edges == ()


def test_connected_components_counts():
    assert len(connected_components(relation_edges({R.Arrow1, R.Arrow2}, 4))) == 3
    assert len(connected_components(relation_edges({R.Arrow1, R.Arrow2, R.Arrow3}, 4))) == 2
    comps5 = connected_components(relation_edges({R.Arrow1, R.Arrow2}, 5))
    assert len(comps5) == 5
    assert [C((2, 2, 1))] in comps5  # isolated vertex
    empty = relation_edges(set(), 4)
    assert all(len(block) == 1 for block in connected_components(empty))


def test_is_forest():
    # the split relations contain a four-edge cycle at degree 5
    assert not is_forest(relation_edges({R.Arrow1, R.Arrow2}, 5))
    for n in range(0, 10):
        assert is_forest(relation_edges({R.PkBasisArrow}, n))
        assert is_forest(relation_edges({R.PkNumBasisArrow}, n))
    assert is_forest(relation_edges(set(), 5))
    # antiparallel edges count as a cycle
    j, k = C((2,)), C((1, 1))
    loop = RelationGraph(2, ((j, k, "x"), (k, j, "x")))
    assert not is_forest(loop)


_SOUNDNESS_CASES = [
    ({R.Arrow1, R.Arrow2}, StatisticId.Pk),
    ({R.Arrow1, R.Arrow2, R.Arrow3}, StatisticId.pk),
    ({R.PkBasisArrow}, StatisticId.Pk),
    ({R.PkNumBasisArrow}, StatisticId.pk),
    ({R.ValArrow1, R.ValArrow2}, StatisticId.Val),
    ({R.ValArrow1, R.ValArrow2, R.ValArrow3}, StatisticId.val),
    ({R.EpkArrow}, StatisticId.Epk),
]


def test_relation_soundness_exhaustive():
    for rels, stat in _SOUNDNESS_CASES:
        for n in range(0, 11):
            for j, k, _ in relation_edges(rels, n).edges:
                assert eval_on_composition(stat, j) == eval_on_composition(stat, k), (
                    rels, stat, str(j), str(k),
                )


def test_swap_relation_increments_inversions():
    for n in range(0, 10):
        for j in compositions_of(n):
            for k in successors(R.Arrow3, j):
                assert inversions(k) == inversions(j) + 1


def test_complement_carries_split_edges_to_merge_edges():
    # spot check on a long composition
    j, k = C((3, 2, 4, 1)), C((1, 2, 2, 4, 1))
    assert k in successors(R.Arrow1, j)
    jc, kc = complement(j), complement(k)
    assert kc in successors(R.ValArrow1, jc) | successors(R.ValArrow2, jc)
    # exhaustively at small degrees
    for n in range(0, 9):
        for j, k, _ in relation_edges({R.Arrow1, R.Arrow2}, n).edges:
            jc, kc = complement(j), complement(k)
            assert kc in successors(R.ValArrow1, jc) | successors(R.ValArrow2, jc)
        for j, k, _ in relation_edges({R.Arrow3}, n).edges:
            assert complement(k) in successors(R.ValArrow3, complement(j))


def test_labeled_successors_labels():
    assert labeled_successors(R.PkBasisArrow, C((2, 2))) == [(C((2, 1, 1)), "2")]
    assert labeled_successors(R.PkBasisArrow, C((3, 2))) == [(C((1, 2, 2)), "1")]
    assert labeled_successors(R.PkNumBasisArrow, C((1, 2, 1))) == [(C((2, 1, 1)), "3")]
