import itertools

import numpy as np
import pytest

from twoeig import (
    Graph,
    SignedGraph,
    SignedMatrix,
    count_switching_classes,
    disjoint_union,
    enumerate_switching_classes,
    ground,
    is_orthogonal,
    is_regular,
    resign,
    star,
    switching_canonical,
    switching_equivalent,
)
from twoeig.core import _bfs_forest

from conftest import petersen, random_signed_graph


def test_signed_matrix_validates_entries():
    with pytest.raises(ValueError, match="entries must be"):
        SignedMatrix([[0, 2], [1, 0]])
    with pytest.raises(ValueError, match="2-dimensional"):
        SignedMatrix([1, 0, -1])
    with pytest.raises(ValueError, match="at least 1x1"):
        SignedMatrix(np.zeros((0, 3)))


def test_signed_matrix_is_read_only():
    m = SignedMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        m.data[0, 0] = 1


def test_signed_matrix_basics():
    m = SignedMatrix([[1, -1, 0], [0, 1, 1]])
    assert (m.rows, m.cols) == (2, 3)
    assert not m.is_square
    assert m.transpose().data.shape == (3, 2)
    assert m.wide().dtype == np.int64
    assert SignedMatrix.identity(3) == SignedMatrix(np.eye(3))
    assert hash(m) == hash(SignedMatrix(m.data))
    assert m != SignedMatrix([[1, -1], [0, 1]])


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError, match="loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph(3, [(0, 3)])


def test_graph_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors() == [[1], [0, 2], [1, 3], [2]]
    assert g.adjacency().sum() == 6
    assert g.components() == [[0, 1, 2, 3]]
    assert g.sorted_edges() == [(0, 1), (1, 2), (2, 3)]


def test_graph_generators():
    assert Graph.complete(4).m == 6
    assert Graph.cycle(5).degrees() == [2] * 5
    assert Graph.path(4).m == 3
    assert Graph.complete_bipartite(2, 3).m == 6
    with pytest.raises(ValueError, match="at least 3"):
        Graph.cycle(2)


def test_components_and_union():
    g = disjoint_union(Graph.complete(3), Graph.cycle(4))
    assert g.n == 7
    assert g.components() == [[0, 1, 2], [3, 4, 5, 6]]


def test_bipartition():
    assert Graph.cycle(4).bipartition() == ([0, 2], [1, 3])
    assert Graph.cycle(5).bipartition() is None
    x, y = Graph.complete_bipartite(3, 3).bipartition()
    assert (len(x), len(y)) == (3, 3)
    # isolated vertices are balanced across sides
    x, y = Graph(4, [(0, 1)]).bipartition()
    assert len(x) == len(y) == 2


def test_signed_graph_validation():
    with pytest.raises(ValueError, match="square"):
        SignedGraph(SignedMatrix([[0, 1, 0], [1, 0, 1]]))
    with pytest.raises(ValueError, match="symmetric"):
        SignedGraph([[0, 1], [-1, 0]])
    with pytest.raises(ValueError, match="diagonal"):
        SignedGraph([[1, 1], [1, 0]])


def test_signed_graph_from_edges():
    sg = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, -1)])
    assert sg.edge_signs() == {(0, 1): 1, (1, 2): -1}
    with pytest.raises(ValueError, match="sign"):
        SignedGraph.from_edges(3, [(0, 1, 2)])
    with pytest.raises(ValueError, match="duplicate"):
        SignedGraph.from_edges(3, [(0, 1, 1), (1, 0, 1)])


def test_ground_and_all_positive():
    sg = SignedGraph.from_edges(4, [(0, 1, -1), (2, 3, 1)])
    g = ground(sg)
    assert g.sorted_edges() == [(0, 1), (2, 3)]
    assert ground(SignedGraph.all_positive(g)) == g


def test_star_layout():
    c = SignedMatrix([[1, -1], [0, 1]])
    sg = star(c)
    assert sg.n == 4
    a = sg.matrix.data
    assert np.array_equal(a[:2, 2:], c.data)
    assert np.array_equal(a[2:, :2], c.data.T)
    assert not a[:2, :2].any() and not a[2:, 2:].any()
    with pytest.raises(ValueError, match="square"):
        star(SignedMatrix([[1, 0, 1], [0, 1, 1]]))


def test_is_orthogonal():
    assert is_orthogonal(SignedMatrix([[1, 1], [1, -1]])).alpha == 2
    assert is_orthogonal(SignedMatrix([[0, 1], [-1, 0]])).alpha == 1
    assert is_orthogonal(SignedMatrix([[1, 1], [1, 1]])) is None
    assert is_orthogonal(SignedMatrix([[0, 0], [0, 0]])) is None
    # rows orthonormal but a zero first row is not certifiable
    assert is_orthogonal(SignedMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])).alpha == 1
    with pytest.raises(ValueError, match="square"):
        is_orthogonal(SignedMatrix([[1, 0]]))


def test_is_orthogonal_rejects_oblique_rows():
    # constant row norms are not enough: rows 1 and 4 overlap
    m = SignedMatrix([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 1, 0, -1]])
    assert is_orthogonal(m) is None


def test_resign_flips_one_vertex(k6_signing):
    flipped = resign(k6_signing, 2)
    a, b = k6_signing.matrix.data, flipped.matrix.data
    for u in range(6):
        for v in range(6):
            want = -a[u, v] if (u == 2) != (v == 2) else a[u, v]
            assert b[u, v] == want
    assert resign(flipped, 2) == k6_signing
    with pytest.raises(ValueError, match="out of range"):
        resign(k6_signing, 6)


def test_switching_canonical_normalizes_forest(rng):
    for _ in range(25):
        sg = random_signed_graph(rng, int(rng.integers(2, 9)))
        canon = switching_canonical(sg)
        a = canon.matrix.data
        assert all(a[u, v] == 1 for u, v in _bfs_forest(ground(sg)))
        assert switching_canonical(canon) == canon


def test_switching_canonical_is_class_invariant(rng):
    for _ in range(25):
        sg = random_signed_graph(rng, int(rng.integers(2, 9)))
        resigned = sg
        for _ in range(8):
            resigned = resign(resigned, int(rng.integers(sg.n)))
        assert switching_canonical(resigned) == switching_canonical(sg)
        assert switching_equivalent(sg, resigned)


def test_switching_equivalent_distinguishes_classes():
    c4 = Graph.cycle(4)
    plus = SignedGraph.all_positive(c4)
    minus = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    assert not switching_equivalent(plus, minus)
    with pytest.raises(ValueError, match="mismatch"):
        switching_equivalent(plus, SignedGraph.all_positive(Graph.cycle(5)))


def test_count_switching_classes_formula():
    assert count_switching_classes(Graph.path(3)) == 1
    assert count_switching_classes(Graph.cycle(4)) == 2
    assert count_switching_classes(Graph.complete(4)) == 8
    two_triangles = disjoint_union(Graph.complete(3), Graph.complete(3))
    assert count_switching_classes(two_triangles) == 4


def test_enumerate_switching_classes_matches_formula():
    for g in [
        Graph.path(3),
        Graph.cycle(4),
        Graph.complete(4),
        Graph.complete_bipartite(2, 3),
        disjoint_union(Graph.complete(3), Graph.complete(3)),
    ]:
        reps = enumerate_switching_classes(g)
        assert len(reps) == count_switching_classes(g)
        # representatives are canonical and pairwise inequivalent
        for r in reps:
            assert switching_canonical(r) == r
        for a, b in itertools.combinations(reps, 2):
            assert not switching_equivalent(a, b)


def test_enumerate_switching_classes_guard():
    with pytest.raises(ValueError, match="too many edges"):
        enumerate_switching_classes(Graph.complete(7))


def test_is_regular():
    assert is_regular(Graph.complete(4)) == 3
    assert is_regular(petersen()) == 3
    assert is_regular(Graph.path(3)) is None
    assert is_regular(Graph(3)) == 0
    assert is_regular(Graph(0)) is None
