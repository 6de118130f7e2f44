from __future__ import unicode_literals

import pytest

from hiddensym.graphs.graph import Graph, GraphError, Permutation, is_connected


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_edges_are_normalized():
    g = Graph(3, [(1, 0), (2, 1)])
    assert g.edge_list() == [(0, 1), (1, 2)]
    assert g.has_edge(1, 0) and g.has_edge(0, 1)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.degree(1) == 2


@pytest.mark.parametrize('n, edges', [
    (0, []),
    (17, []),
    (3, [(0, 0)]),
    (3, [(0, 3)]),
    (3, [(0, 1), (1, 0)]),
])
def test_invalid_graphs(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


def test_adjacency():
    g = path(4)
    m = g.adjacency_matrix()
    assert (m == m.T).all()
    assert m.sum() == 2 * 3
    assert Graph.from_adjacency_bits(4, g.adjacency_bits) == g


def test_connectivity():
    assert is_connected(Graph(1))
    assert is_connected(path(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(Graph(2))


def test_relabel_and_automorphism():
    g = path(4)
    flip = Permutation([3, 2, 1, 0])
    assert g.relabel(flip) == g
    assert g.is_automorphism(flip)

    shift = Permutation([1, 2, 3, 0])
    assert not g.is_automorphism(shift)
    assert g.relabel(shift).edge_list() == [(0, 3), (1, 2), (2, 3)]

    with pytest.raises(GraphError):
        g.relabel(Permutation([0, 1, 2]))


def test_permutation_composition():
    s = Permutation([1, 2, 0])
    t = Permutation.transposition(3, 0, 1)
    assert [(s * t)(i) for i in range(3)] == [s(t(i)) for i in range(3)]
    assert (s * s.inverse()).is_identity()
    assert s.cycle_count() == 1
    assert t.cycle_count() == 2
    assert Permutation.identity(4).cycle_count() == 4

    with pytest.raises(GraphError):
        Permutation([0, 0, 1])


def test_graphs_are_hashable():
    assert len(set([path(3), Graph(3, [(2, 1), (1, 0)]), Graph(3, [(0, 2)])])) == 2


def test_graphs_beyond_matrix_sizes():
    g = Graph(13, [(k, k + 1) for k in range(12)])
    assert g.n == 13
    assert g.degree(12) == 1
